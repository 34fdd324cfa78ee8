import pytest
from hypothesis import given, strategies as st

from clique_immersion.generators import (
    MASK64,
    XorShift64Star,
    blowup_of_gamma,
    gen_blowup_complement,
    gen_random_alpha2,
    splitmix64,
)
from clique_immersion.graph import Graph, complement, components
from clique_immersion.oracles import find_triangle, independence_number, independent_triple


def reference_xorshift64star(seed, count):
    """Straight transcription of the published recurrences."""
    z = (seed + 0x9E3779B97F4A7C15) % 2**64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) % 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) % 2**64
    x = z ^ (z >> 31)
    out = []
    for _ in range(count):
        x ^= x >> 12
        x ^= (x << 25) % 2**64
        x ^= x >> 27
        out.append((x * 0x2545F4914F6CDD1D) % 2**64)
    return out


def test_splitmix64_known_value():
    # first output of splitmix64 seeded with 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF


@given(st.integers(1, 2**64 - 1))
def test_xorshift_matches_reference(seed):
    rng = XorShift64Star(seed)
    if splitmix64(seed) == 0:
        return
    assert [rng.next_u64() for _ in range(5)] == reference_xorshift64star(seed, 5)


def test_rng_ranges():
    rng = XorShift64Star(42)
    assert all(0 <= rng.randbelow(7) < 7 for _ in range(200))
    assert all(0.0 <= rng.random() < 1.0 for _ in range(200))
    assert all(3 <= rng.randint(3, 5) <= 5 for _ in range(200))
    assert all(rng.next_u64() <= MASK64 for _ in range(10))
    with pytest.raises(ValueError):
        rng.randbelow(0)


def test_shuffle_is_permutation_and_seeded():
    a, b = list(range(20)), list(range(20))
    XorShift64Star(5).shuffle(a)
    XorShift64Star(5).shuffle(b)
    assert a == b and sorted(a) == list(range(20)) and a != list(range(20))


def test_blowup_examples():
    # complement of C5 is again a 5-cycle
    g = gen_blowup_complement(2, [1] * 5)
    assert g.num_edges() == 5 and g.max_degree() == g.min_degree() == 2
    assert len(components(g)) == 1
    assert gen_blowup_complement(2, [2, 0, 0, 0, 0]) == Graph.complete(2)
    g = gen_blowup_complement(3, [2] * 8)
    assert g.n == 16 and independence_number(g) == 2


def test_blowup_classes():
    g, h = blowup_of_gamma(2, [2, 1, 0, 1, 1])
    assert h.map == (0, 0, 1, 3, 4)
    assert h.classes()[2] == frozenset()
    with pytest.raises(ValueError):
        blowup_of_gamma(2, [1, 1])
    with pytest.raises(ValueError):
        blowup_of_gamma(2, [1, 1, 1, 1, -1])


def test_random_alpha2_extremes():
    assert gen_random_alpha2(6, 0.0, 1) == Graph.complete(6)
    g = gen_random_alpha2(12, 1.0, 1)
    assert independence_number(g) == 2
    # maximal triangle-free: adding any complement edge closes a triangle
    tf = complement(g)
    for u, v in g.edges():
        assert tf.adj[u] & tf.adj[v]
    with pytest.raises(ValueError):
        gen_random_alpha2(3, 1.5, 0)


def test_random_alpha2_seeded():
    a = gen_random_alpha2(20, 0.5, 7)
    assert a == gen_random_alpha2(20, 0.5, 7)
    assert independent_triple(a) is None
    assert a != gen_random_alpha2(20, 0.5, 8)


@given(st.integers(0, 40), st.floats(0, 1), st.integers(0, 2**64 - 1))
def test_random_alpha2_always_alpha_le_2(n, p, seed):
    assert find_triangle(complement(gen_random_alpha2(n, p, seed))) is None

"""Strong K_chi immersions for alpha <= 2 graphs whose complement maps into
an Andrasfai graph.

The driver follows the minimal-counterexample argument as a recursion:
shrink to a vertex-critical subgraph with the same chromatic number, split
along complement components (a join needs only the parts' immersions plus
the cross edges), and on a complement-connected part colour the blow-up
completion of the complement so that the clique-colouring construction
applies.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any

from .andrasfai import Homomorphism, blowup_coloring, blowup_completion, default_d_max, search_gamma_target
from .errors import ConstructionError, GammaTargetNotFound
from .graph import Graph, bits, complement, components, induced_subgraph
from .immersion import (
    Immersion,
    branch_restrict,
    clique_immersion,
    construct_from_clique_coloring,
    join_immersions,
    verify_immersion,
)
from .oracles import augment_from, chromatic_number_alpha2, matching_array, max_clique, require_alpha_le_2

__all__ = [
    "PipelineTrace",
    "branch_restrict",
    "construct_chi_immersion",
    "critical_reduction",
    "join_decomposition",
    "replay_trace",
]


class GallaiViolation(ConstructionError):
    """A complement-connected critical graph had fewer than 2k - 1 vertices."""


@dataclass
class PipelineTrace:
    """Preorder log of the recursion; enough to rebuild the certificate
    without repeating any search (see :func:`replay_trace`)."""

    d_max: int | None
    steps: list[dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {"method": "vergara", "d_max": self.d_max, "steps": self.steps}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> PipelineTrace:
        return cls(data.get("d_max"), list(data["steps"]))


def critical_reduction(g: Graph) -> tuple[Graph, frozenset[int]]:
    """Delete vertices while the chromatic number stays put.

    Scans ascending and restarts after each deletion.  Returns the reduced
    graph (relabelled in ascending order) and the deleted vertices.

    Since chi = n - nu(complement), deleting ``u`` keeps chi exactly when
    the complement's matching number drops, i.e. when ``u`` is matched in a
    maximum matching ``M`` and its mate has no augmenting path once ``u``
    is gone.  That is one blossom search per test instead of a fresh
    matching.
    """
    require_alpha_le_2(g)
    comp = complement(g)
    alive = g.full_mask
    match = matching_array(comp)
    removed: list[int] = []
    progress = True
    while progress:
        progress = False
        for u in bits(alive):
            mate = match[u]
            if mate == -1:
                continue
            trial = list(match)
            trial[u] = trial[mate] = -1
            if augment_from(comp.adj, trial, mate, alive & ~(1 << u)):
                continue
            alive &= ~(1 << u)
            match = trial
            removed.append(u)
            progress = True
            break
    reduced, _ = induced_subgraph(g, bits(alive))
    return reduced, frozenset(removed)


def join_decomposition(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the complement's components, by least vertex.  Every
    two distinct parts are completely joined in ``g``."""
    return components(complement(g))


def _kept(vertices: list[int], removed: frozenset[int]) -> list[int]:
    return [v for v in vertices if v not in removed]


def _solve(g: Graph, vertices: list[int], d_max: int | None, steps: list[dict[str, Any]]) -> Immersion:
    sub, members = induced_subgraph(g, vertices)
    k = chromatic_number_alpha2(sub)
    reduced, removed_local = critical_reduction(sub)
    removed = frozenset(members[i] for i in removed_local)
    kept = _kept(list(members), removed)
    steps.append({"op": "reduce", "vertices": list(members), "k": k, "removed": sorted(removed)})

    parts_local = join_decomposition(reduced)
    if len(parts_local) > 1:
        parts = [sorted(kept[i] for i in part) for part in parts_local]
        steps.append({"op": "join", "parts": parts})
        im = Immersion(frozenset(), {})
        for part in parts:
            im = join_immersions(g, im, _solve(g, part, d_max, steps))
        if im.size != k:
            raise ConstructionError(f"join produced {im.size} branch vertices, expected {k}")
        return im

    if reduced.n < 2 * k - 1:
        raise GallaiViolation(f"critical part on {reduced.n} vertices with chi = {k}")
    comp = complement(reduced)
    found = search_gamma_target(comp, d_max)
    if found is None:
        raise GammaTargetNotFound(d_max if d_max is not None else default_d_max(comp.n))
    d, h = found
    blowup = blowup_completion(comp, h)
    first = max_clique(complement(blowup))
    leaf: dict[str, Any] = {
        "op": "leaf",
        "vertices": kept,
        "k": k,
        "d": d,
        "hom": list(h.map),
        "I1": sorted(kept[i] for i in first),
    }
    local = _leaf_immersion(reduced, blowup, h, first, k, leaf)
    steps.append(leaf)
    return local.relabel(tuple(kept))


def _leaf_immersion(
    reduced: Graph, blowup: Graph, h: Homomorphism, first: frozenset[int], k: int, leaf: dict[str, Any]
) -> Immersion:
    kept = leaf["vertices"]
    if len(first) >= k:
        leaf["mode"] = "clique"
        im = clique_immersion(reduced, sorted(first)[:k])
    else:
        coloring = blowup_coloring(blowup, h, first)
        leaf["mode"] = "coloring"
        leaf["coloring"] = [sorted(kept[i] for i in part) for part in coloring]
        # the complement of the blow-up is a spanning subgraph of the part
        full = construct_from_clique_coloring(complement(blowup), coloring)
        if full.size < k:
            raise GallaiViolation(f"only {full.size} branch vertices for chi = {k}")
        im = branch_restrict(full, sorted(full.branch)[:k])
    leaf["branch"] = sorted(kept[i] for i in im.branch)
    return im


def construct_chi_immersion(g: Graph, d_max: int | None = None) -> tuple[Immersion, PipelineTrace]:
    """Strong, totally odd immersion of K_chi(g) in ``g``.

    ``d_max`` caps the Andrasfai index searched on each complement-connected
    part (default ``ceil((m + 1) / 3)`` for a part on ``m`` vertices).
    Raises :class:`~clique_immersion.errors.GammaTargetNotFound` when no
    target turns up; the construction is then not guaranteed and nothing
    is guessed.
    """
    require_alpha_le_2(g)
    trace = PipelineTrace(d_max)
    im = _solve(g, list(range(g.n)), d_max, trace.steps)
    _final_check(g, im)
    return im, trace


def _final_check(g: Graph, im: Immersion) -> None:
    k = chromatic_number_alpha2(g)
    if im.size != k:
        raise ConstructionError(f"{im.size} branch vertices but chi = {k}")
    report = verify_immersion(g, im, require_strong=True, require_totally_odd=True)
    if not report.valid:
        raise ConstructionError(f"certificate rejected: {report.violations[0].message}")


def replay_trace(g: Graph, trace: PipelineTrace) -> Immersion:
    """Rebuild the certificate from a trace using only its recorded choices
    (removed vertices, parts, homomorphisms, first colour classes)."""
    steps: Iterator[dict[str, Any]] = iter(trace.steps)
    im = _replay(g, steps)
    if next(steps, None) is not None:
        raise ValueError("trace has trailing steps")
    _final_check(g, im)
    return im


def _replay(g: Graph, steps: Iterator[dict[str, Any]]) -> Immersion:
    reduce_step = next(steps)
    if reduce_step["op"] != "reduce":
        raise ValueError(f"expected a reduce step, got {reduce_step['op']!r}")
    step = next(steps)
    if step["op"] == "join":
        im = Immersion(frozenset(), {})
        for _ in step["parts"]:
            im = join_immersions(g, im, _replay(g, steps))
        return im
    if step["op"] != "leaf":
        raise ValueError(f"unexpected step {step['op']!r}")
    kept = step["vertices"]
    reduced, _ = induced_subgraph(g, kept)
    h = Homomorphism(step["d"], tuple(step["hom"]))
    blowup = blowup_completion(complement(reduced), h)
    index = {v: i for i, v in enumerate(kept)}
    first = frozenset(index[v] for v in step["I1"])
    scratch: dict[str, Any] = {"vertices": kept}
    local = _leaf_immersion(reduced, blowup, h, first, step["k"], scratch)
    if scratch["branch"] != step["branch"]:
        raise ValueError("replayed branch set differs from the trace")
    return local.relabel(tuple(kept))

"""Exception types shared across the package."""

from __future__ import annotations


class GraphParseError(ValueError):
    """Edge-list document could not be parsed."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class MalformedLineError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


class SelfLoopError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class PreconditionError(Exception):
    """An input does not meet the hypotheses a construction relies on."""


class AlphaTooLarge(PreconditionError):
    """The graph has an independent set of size 3."""

    def __init__(self, triple: tuple[int, int, int]) -> None:
        super().__init__(f"independent triple {triple}: alpha(G) > 2")
        self.triple = triple


class AlphaMismatch(PreconditionError):
    pass


class NotCliquePartition(PreconditionError):
    pass


class D1NotMaximum(PreconditionError):
    pass


class InducedC4Present(PreconditionError):
    def __init__(self, witness: tuple[int, int, int, int]) -> None:
        super().__init__(f"induced C4 on {witness}")
        self.witness = witness


class HallViolation(PreconditionError):
    """No matching saturates the side; ``witness`` has too few co-neighbours."""

    def __init__(self, witness: frozenset[int], co_neighbours: frozenset[int]) -> None:
        super().__init__(
            f"Hall condition fails for {sorted(witness)}: "
            f"only {sorted(co_neighbours)} available"
        )
        self.witness = witness
        self.co_neighbours = co_neighbours


class TriangleInSource(PreconditionError):
    def __init__(self, triangle: tuple[int, int, int]) -> None:
        super().__init__(f"source graph contains triangle {triangle}")
        self.triangle = triangle


class GammaTargetNotFound(Exception):
    """No homomorphism into an Andrasfai graph was found up to ``d_max``."""

    def __init__(self, d_max: int) -> None:
        super().__init__(f"no homomorphism into Gamma_d found for d <= {d_max}")
        self.d_max = d_max


class NotMinimal(PreconditionError):
    pass


class CompleteGraph(PreconditionError):
    pass


class Claim1Violation(PreconditionError):
    def __init__(self, vertex: int) -> None:
        super().__init__(f"vertex {vertex} has no three consecutive neighbours on the C5")
        self.vertex = vertex


class ConstructionError(AssertionError):
    """An internal invariant of a construction failed; indicates a bug."""


class WitnessInconsistency(ConstructionError):
    pass


class SelectionInfeasible(ConstructionError):
    pass

"""Exception types raised across the package."""


class SpectralGateError(Exception):
    """Base class for all errors raised by spectral_gate."""


class LoopEdge(SpectralGateError):
    """An edge (u, u) was supplied; loops are not representable."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"loop edge at vertex {vertex}")


class VertexOutOfRange(SpectralGateError):
    """A vertex index falls outside 0..n-1."""


class OverlappingSets(SpectralGateError):
    """Two vertex sets required to be disjoint intersect."""


class InvalidPartition(SpectralGateError):
    """Blocks are empty, overlap, or do not cover the vertex set."""


class EdgeNotPresent(SpectralGateError):
    """An edge multiset exceeds the multiplicities stored in the graph."""


class NoConvergence(SpectralGateError):
    """The rotation eigensolver failed to reach tolerance within the sweep cap."""


class LengthMismatch(SpectralGateError):
    """Inner eigenvalue sequence is longer than the outer one."""


class OrderMismatch(SpectralGateError):
    """Two matrices required to share an order do not."""


class SingleVertex(SpectralGateError):
    """Edge connectivity is undefined on fewer than two vertices."""


class TooLarge(SpectralGateError):
    """Input exceeds the hard cap of an exhaustive procedure."""


class TooSmall(SpectralGateError):
    """Input is below the minimum size the operation is defined for."""


class Disconnected(SpectralGateError):
    """Operation requires a connected graph."""


class Infeasible(SpectralGateError):
    """A random generator exhausted its retry budget (or parity forbids)."""


class MalformedEncoding(SpectralGateError):
    """A graph6/sparse6 line does not follow the standard encoding."""

    def __init__(self, message: str, offset: int = 0):
        self.offset = offset
        super().__init__(f"{message} (byte offset {offset})")


class DomainError(SpectralGateError):
    """Arguments violate a formula's stated domain."""


class UndecidedMembership(SpectralGateError):
    """Class membership could not be decided at this size (n > 24, no fast path)."""

"""Exception hierarchy.

MaprefError is the base for everything the library raises on bad input or
bad data.  InternalError marks conditions that can only come from a bug in
the library itself (violated postconditions), never from user data.
"""


class MaprefError(Exception):
    """Base class for all library errors."""


class InternalError(MaprefError):
    """A library postcondition failed; this is a bug, not a data error."""


class DegreeMismatch(MaprefError):
    """Permutations of different degrees were combined."""


class CapExceeded(MaprefError):
    """Group closure grew past the element cap.

    Signals the caller to switch to algebraic (cycle-type) reasoning
    instead of explicit element lists.
    """

    def __init__(self, cap: int):
        super().__init__(f"group closure exceeded cap of {cap} elements")
        self.cap = cap


class NotInvolution(MaprefError):
    """A generator that must be an involution is not one."""

    def __init__(self, index: int):
        super().__init__(f"generator r{index} is not an involution")
        self.index = index


class EdgeRelationViolated(MaprefError):
    """(r0*r2) squared is not the identity."""

    def __init__(self) -> None:
        super().__init__("(r0*r2)^2 != identity")


class Disconnected(MaprefError):
    """The flag graph is not connected."""

    def __init__(self) -> None:
        super().__init__("flag graph is not connected")


class NotEdgeTransitive(MaprefError):
    """Classification was requested for a map that is not edge-transitive."""


class UnclassifiableQuotient(InternalError):
    """An edge-transitive map produced a quotient outside the taxonomy."""


class EdgeOrbitBranching(MaprefError):
    """A voltage assignment has nonzero sum around an edge orbit.

    Such an assignment does not lift the edge relation, so no derived
    map exists for it.
    """


class NonPrime(MaprefError):
    """A path family was requested with composite n = 4m + 1."""

    def __init__(self, n: int):
        super().__init__(f"n = {n} is not prime")
        self.n = n


class PartEmpty(MaprefError):
    """A path-family partition has an empty part."""


class BuildError(MaprefError):
    """A builder's preconditions failed (bad parameters, generation failure)."""


class ClassCollision(BuildError):
    """Two marked involutions fell into the same conjugacy class."""

"""Structured errors raised by the package.

Every validation or precondition failure raises a subclass of
:class:`Level1Error` carrying enough context to name the first violated
requirement.
"""

from __future__ import annotations


class Level1Error(Exception):
    """Base class for all errors raised by level1kit."""


class MalformedGraph(Level1Error):
    """Input graph collections are unusable (empty, unknown endpoints)."""


class NotAcyclic(Level1Error):
    """The directed graph contains a directed cycle (or self-loop)."""


class MultipleRoots(Level1Error):
    def __init__(self, roots):
        self.roots = tuple(roots)
        super().__init__(f"expected a unique in-degree-0 vertex, found {len(self.roots)}")


class DegreeViolation(Level1Error):
    def __init__(self, vertex, indeg, outdeg):
        self.vertex = vertex
        self.indeg = indeg
        self.outdeg = outdeg
        super().__init__(f"vertex {vertex!r} has in-degree {indeg}, out-degree {outdeg}")


class LevelExceeded(Level1Error):
    def __init__(self, component):
        self.component = tuple(component)
        super().__init__(f"biconnected component with >1 hybrid vertex: {self.component}")


class ShortCycle(Level1Error):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"cycle on fewer than 4 vertices: {self.cycle}")


class DuplicateLabel(Level1Error):
    def __init__(self, name):
        self.name = name
        super().__init__(f"leaf label {name!r} used more than once")


class LabelingError(Level1Error):
    """Leaf labels do not form a bijection with the out-degree-0 vertices."""


class LabelSetMismatch(Level1Error):
    """Two networks were compared that do not share the same taxon set."""


class NotProper(Level1Error):
    """Operation requires at least one gall but the network is a tree."""


class TooFewLeaves(Level1Error):
    """Operation requires more leaves than the network has."""


class UnknownTaxon(Level1Error):
    def __init__(self, taxon):
        self.taxon = taxon
        super().__init__(f"taxon {taxon!r} is not a leaf label of the network")


class TooFewTaxa(Level1Error):
    """Restriction or enumeration needs at least two taxa."""


class TooManyTaxa(Level1Error):
    """Exhaustive enumeration is capped at 7 taxa."""


class DuplicateTaxon(Level1Error):
    def __init__(self, taxon):
        self.taxon = taxon
        super().__init__(f"taxon {taxon!r} appears more than once")


class NotAPartition(Level1Error):
    """The maximal non-trivial SN-sets of the system do not partition the taxa."""


class BadRepresentative(Level1Error):
    def __init__(self, block, taxon):
        self.block = frozenset(block)
        self.taxon = taxon
        super().__init__(f"representative {taxon!r} is not a member of block {sorted(block)}")


class NotSimple(Level1Error):
    """Operation is only defined for simple networks."""


class UniverseTooLarge(Level1Error):
    """Full-universe brute force is capped at 6 taxa."""


class NotFound(Level1Error):
    """A search guaranteed to succeed failed; the claimed witness does not exist."""


class UnknownSuite(Level1Error):
    def __init__(self, suite):
        self.suite = suite
        super().__init__(f"unknown verification suite {suite!r}")


class EnewickSyntaxError(Level1Error):
    def __init__(self, position, message="syntax error"):
        self.position = position
        super().__init__(f"{message} at position {position}")


class HybridTagMismatch(Level1Error):
    def __init__(self, tag, message="hybrid tag must occur exactly twice"):
        self.tag = tag
        super().__init__(f"#{tag}: {message}")

"""Exception hierarchy for fatcob.

Every structural or semantic failure raises a subclass of
:class:`FatcobError`, so callers can catch the whole family at once.
The CLI maps these to exit code 1 (domain failure) while
:class:`ParseError` is mapped to exit code 2.
"""


class FatcobError(Exception):
    """Base class of all fatcob errors."""


# -- graph construction ------------------------------------------------------

class DuplicateName(FatcobError):
    """A vertex or edge name was used twice."""


class DanglingHalfEdge(FatcobError):
    """A half-edge is missing from the cyclic order of its source vertex."""


class WrongVertexOrder(FatcobError):
    """A half-edge is listed in the cyclic order of a vertex that is not
    its source."""


class FixedPointInvolution(FatcobError):
    """The half-edge pairing has a fixed point or an orbit of size != 2."""


class UnknownEdge(FatcobError):
    """An operation referenced an edge that does not exist."""


class NonIntegerGenus(FatcobError):
    """`2 - chi - b` came out odd; the graph data is corrupted."""


# -- decorations -------------------------------------------------------------

class NotALeaf(FatcobError):
    """A decorated vertex is not a valence-1 vertex."""


class InOutOverlap(FatcobError):
    """The ordered incoming and outgoing leaf lists intersect."""


class ClosedNotSpecial(FatcobError):
    """A closed leaf is not listed as incoming or outgoing."""


class ClosedSharesCycle(FatcobError):
    """A closed leaf shares its boundary cycle with another special leaf."""


class NotAdmissible(FatcobError):
    """An operation requiring embedded incoming circles was handed a
    non-admissible graph."""


# -- morphisms ---------------------------------------------------------------

class InvalidMorphism(FatcobError):
    """A cell map violates one of the morphism conditions."""


class ForestContainsCycle(FatcobError):
    """The edge set chosen for collapsing contains a cycle."""


class DecorationDestroyed(FatcobError):
    """Collapsing would remove or merge a decorated leaf."""


class Mismatch(FatcobError):
    """Tried to compose morphisms whose middle graphs differ."""


class BoundExceeded(FatcobError):
    """Enumeration was asked to exceed the configured edge bound."""


# -- gluing ------------------------------------------------------------------

class SignatureMismatch(FatcobError):
    """The outgoing boundary of the first graph does not match the incoming
    boundary of the second as ordered 1-manifolds."""


class EdgeCountMismatch(FatcobError):
    """A matched pair of boundary cycles carries different edge counts."""

    def __init__(self, pair_index, k_out, k_in):
        super().__init__(
            "matched cycles of pair %d carry %d vs %d circle edges"
            % (pair_index, k_out, k_in))
        self.pair_index = pair_index
        self.k_out = k_out
        self.k_in = k_in


class InvalidMatch(FatcobError):
    """A gluing match does not fit the graphs it was applied to."""


class ResultInvalid(FatcobError):
    """Gluing produced an invalid graph (internal invariant violation)."""


class NotGluable(FatcobError):
    """The pair of graphs cannot be glued."""


class NotGluablePairMorphism(FatcobError):
    """A pair of morphisms collapses a circle edge on one side of a matched
    cycle but not the corresponding edge on the other side."""


# -- file format -------------------------------------------------------------

class ParseError(FatcobError):
    """Syntax error in a .fg document."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = "line %d" % line
            if column is not None:
                loc += ", column %d" % column
            loc = " (" + loc + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class SemanticError(FatcobError):
    """The document parsed but the described graph is invalid."""

"""Leaf decorations: open-closed structure on a fat graph.

A valence-1 vertex is a leaf.  Marking ordered lists of incoming and
outgoing leaves, and flagging some of them as *closed*, turns the
thickened surface of a fat graph into an open-closed cobordism: a
closed special leaf marks a whole boundary circle as incoming or
outgoing, an open special leaf marks an interval on its boundary
component.  The graph is *admissible* when every closed incoming leaf
sits on a boundary cycle of the form ``(h hbar A1 ... Ak)`` whose
``A``-part traces an embedded circle, and these circles are pairwise
disjoint.  Admissibility is what makes gluing and the relative chain
complex work.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ClosedNotSpecial,
    ClosedSharesCycle,
    InOutOverlap,
    NotAdmissible,
    NotALeaf,
)


class OpenClosedFatGraph:
    """A fat graph with ordered In/Out leaf lists and a Closed subset."""

    __slots__ = ("_base", "_in", "_out", "_closed")

    def __init__(self, base, in_leaves, out_leaves, closed=()):
        self._base = base
        self._in = tuple(in_leaves)
        self._out = tuple(out_leaves)
        self._closed = frozenset(closed)
        self._validate()

    def _validate(self):
        g = self._base
        special = list(self._in) + list(self._out)
        if len(set(self._in)) != len(self._in) or \
           len(set(self._out)) != len(self._out):
            raise InOutOverlap("a leaf is listed twice")
        if set(self._in) & set(self._out):
            raise InOutOverlap(
                "leaves %s are both incoming and outgoing"
                % sorted(set(self._in) & set(self._out)))
        for v in special:
            if v not in g.vertices or not g.is_leaf(v):
                raise NotALeaf("%r is not a valence-1 vertex" % v)
        if not self._closed <= set(special):
            raise ClosedNotSpecial(
                "closed leaves %s are not special"
                % sorted(self._closed - set(special)))
        # each closed leaf must own its boundary cycle
        cyc_of = {v: self.leaf_cycle_index(v) for v in special}
        for v in sorted(self._closed):
            mine = cyc_of[v]
            others = [w for w in special if w != v and cyc_of[w] == mine]
            if others:
                raise ClosedSharesCycle(
                    "closed leaf %r shares its boundary cycle with %s"
                    % (v, sorted(others)))

    # -- accessors ---------------------------------------------------------

    @property
    def base(self):
        return self._base

    @property
    def in_leaves(self):
        return self._in

    @property
    def out_leaves(self):
        return self._out

    @property
    def closed(self):
        return self._closed

    @property
    def special(self):
        return tuple(self._in) + tuple(self._out)

    @property
    def open_leaves(self):
        return tuple(v for v in self.special if v not in self._closed)

    def is_closed(self, v):
        return v in self._closed

    def leaf_cycle_index(self, v):
        """Index of the boundary cycle the leaf ``v`` sits on."""
        h = self._base.leaf_half(v)
        return self._base.boundary_cycles().half_edge_to_cycle[h]

    def leaf_cycle_normal_form(self, v):
        """The cycle of the leaf ``v`` rotated to ``(h, hbar, A1..Ak)``.

        ``h`` is the half of the leaf edge at the attachment vertex and
        ``hbar`` the half at the leaf itself; the boundary walk always
        traverses them consecutively.
        """
        g = self._base
        alpha = g.leaf_half(v)           # at the leaf
        beta = g.partner(alpha)          # at the attachment vertex
        cyc = g.boundary_cycles().cycle_of(beta)
        i = cyc.index(beta)
        rot = cyc[i:] + cyc[:i]
        assert rot[1] == alpha
        return rot

    def circle_edges(self, v):
        """Edge sequence ``A1..Ak`` of the cycle of the closed leaf ``v``
        (as half-edges, in walk order)."""
        return self.leaf_cycle_normal_form(v)[2:]

    def __eq__(self, other):
        if not isinstance(other, OpenClosedFatGraph):
            return NotImplemented
        return (self._base == other._base and self._in == other._in
                and self._out == other._out and self._closed == other._closed)

    def __hash__(self):
        return hash((self._base, self._in, self._out, self._closed))

    def __repr__(self):
        return "OpenClosedFatGraph(%r, in=%s, out=%s, closed=%s)" % (
            self._base, list(self._in), list(self._out), sorted(self._closed))

    # -- convenience passthroughs ------------------------------------------

    def boundary_cycles(self):
        return self._base.boundary_cycles()

    def surface_invariants(self):
        return self._base.surface_invariants()

    def with_base(self, base):
        """Same decoration on a different underlying graph."""
        return OpenClosedFatGraph(base, self._in, self._out, self._closed)

    def reorder_inputs(self, order):
        """Permute the incoming list; ``order`` gives the new sequence."""
        if sorted(order) != sorted(self._in):
            raise InOutOverlap("reordering must permute the incoming leaves")
        return OpenClosedFatGraph(self._base, order, self._out, self._closed)


def decorate(g, in_leaves, out_leaves, closed=()):
    """Attach validated In/Out/Closed decorations to ``g``."""
    return OpenClosedFatGraph(g, in_leaves, out_leaves, closed)


@dataclass(frozen=True)
class AdmissibilityWitness:
    """Why a graph failed the embedded-circle test."""
    leaf: str
    reason: str
    cell: str

    def __str__(self):
        return "leaf %s: %s (%s)" % (self.leaf, self.reason, self.cell)


def is_admissible(g):
    """Check that the incoming boundary cycles are embedded circles.

    Returns ``(True, None)`` or ``(False, witness)``.  For each closed
    incoming leaf, the non-leaf part ``A1..Ak`` of its cycle must
    traverse ``k`` distinct edges through ``k`` distinct vertices, and
    the circles of distinct closed incoming leaves must be disjoint in
    vertices and edges.  The leaf edge itself is exempt: the walk
    always crosses it twice.
    """
    base = g.base
    circles = {}
    for v in g.in_leaves:
        if v not in g.closed:
            continue
        walk = g.circle_edges(v)
        if not walk:
            return False, AdmissibilityWitness(
                v, "incoming cycle has no circle part", g.base.leaf_half(v))
        edges = [base.edge_of(h) for h in walk]
        if len(set(edges)) != len(edges):
            dup = sorted(e for e in edges if edges.count(e) > 1)[0]
            return False, AdmissibilityWitness(
                v, "incoming cycle repeats an edge", dup)
        verts = [base.source(h) for h in walk]
        if len(set(verts)) != len(verts):
            dup = sorted(w for w in verts if verts.count(w) > 1)[0]
            return False, AdmissibilityWitness(
                v, "incoming cycle repeats a vertex", dup)
        circles[v] = (set(verts), set(edges))
    leaves = sorted(circles)
    for i, v in enumerate(leaves):
        for w in leaves[i + 1:]:
            shared = (circles[v][0] & circles[w][0]) \
                | (circles[v][1] & circles[w][1])
            if shared:
                return False, AdmissibilityWitness(
                    v, "incoming circles of %s and %s intersect" % (v, w),
                    sorted(shared)[0])
    return True, None


def require_admissible(g):
    ok, witness = is_admissible(g)
    if not ok:
        raise NotAdmissible(str(witness))


@dataclass(frozen=True)
class IncomingPartition:
    """Cells on the incoming boundary versus the extra cells.

    The incoming part of a closed incoming leaf is its embedded circle
    together with the leaf edge and the leaf vertex; for an open
    incoming leaf it is the leaf vertex alone.  With this choice the
    count ``|eV| - |eE|`` equals the Euler characteristic of the
    surface relative to its incoming boundary, which is what the
    degree bookkeeping needs.
    """
    v_in: tuple
    e_in: tuple
    h_in: tuple
    e_v: tuple
    e_e: tuple
    e_h: tuple

    @property
    def euler_difference(self):
        return len(self.e_v) - len(self.e_e)


def incoming_partition(g):
    """Classify every cell of ``g`` as incoming or extra."""
    require_admissible(g)
    base = g.base
    v_in, e_in = set(), set()
    for v in g.in_leaves:
        v_in.add(v)
        if v in g.closed:
            e_in.add(base.edge_of(base.leaf_half(v)))
            for h in g.circle_edges(v):
                e_in.add(base.edge_of(h))
                v_in.add(base.source(h))
    h_in = set()
    for e in e_in:
        h_in.update(base.edge_halves(e))
    part = IncomingPartition(
        v_in=tuple(sorted(v_in)),
        e_in=tuple(sorted(e_in)),
        h_in=tuple(sorted(h_in)),
        e_v=tuple(sorted(set(base.vertices) - v_in)),
        e_e=tuple(sorted(set(base.edges()) - e_in)),
        e_h=tuple(sorted(set(base.half_edges) - h_in)),
    )
    n_open_in = sum(1 for v in g.in_leaves if v not in g.closed)
    assert part.euler_difference == base.euler_characteristic() - n_open_in, \
        "incoming partition out of balance"
    return part


CIRCLE = "circle"
INTERVAL = "interval"


@dataclass(frozen=True)
class BoundaryCycleClass:
    """How one boundary cycle of the surface decomposes."""
    index: int
    kind: str              # 'incoming_circle' | 'outgoing_circle' | 'open' | 'free'
    closed_leaf: str = None
    open_in: tuple = ()
    open_out: tuple = ()


@dataclass(frozen=True)
class ComponentCobordism:
    genus: int
    euler_characteristic: int
    incoming_circles: int
    incoming_intervals: int
    outgoing_circles: int
    outgoing_intervals: int
    free_cycles: int
    boundary_count: int


@dataclass(frozen=True)
class CobordismSignature:
    """The cobordism type of a decorated graph.

    ``source`` and ``target`` list one entry (``'circle'`` or
    ``'interval'``) per special leaf, in the In/Out orderings; the
    per-component data records genus and boundary classification.
    """
    components: tuple
    source: tuple
    target: tuple
    cycle_classes: tuple

    @property
    def total_euler_characteristic(self):
        return sum(c.euler_characteristic for c in self.components)


def cobordism_signature(g):
    """Classify every boundary cycle and assemble the cobordism type."""
    base = g.base
    bc = base.boundary_cycles()
    surf = base.surface_invariants()
    leaf_cycle = {v: g.leaf_cycle_index(v) for v in g.special}
    classes = []
    for i, cyc in enumerate(bc.cycles):
        closed_here = [v for v in g.closed if leaf_cycle[v] == i]
        open_in = tuple(v for v in g.in_leaves
                        if v not in g.closed and leaf_cycle[v] == i)
        open_out = tuple(v for v in g.out_leaves
                         if v not in g.closed and leaf_cycle[v] == i)
        if closed_here:
            v = closed_here[0]
            kind = ("incoming_circle" if v in g.in_leaves
                    else "outgoing_circle")
            classes.append(BoundaryCycleClass(i, kind, closed_leaf=v))
        elif open_in or open_out:
            classes.append(BoundaryCycleClass(
                i, "open", open_in=open_in, open_out=open_out))
        else:
            classes.append(BoundaryCycleClass(i, "free"))
    comps = []
    for comp in surf.components:
        vset = set(comp.vertices)
        local = [c for c in classes
                 if base.source(bc.cycles[c.index][0]) in vset]
        n_in_c = sum(1 for c in local if c.kind == "incoming_circle")
        n_out_c = sum(1 for c in local if c.kind == "outgoing_circle")
        n_in_i = sum(len(c.open_in) for c in local)
        n_out_i = sum(len(c.open_out) for c in local)
        n_free = sum(1 for c in local if c.kind == "free")
        assert len(local) == comp.boundary_count
        comps.append(ComponentCobordism(
            genus=comp.genus,
            euler_characteristic=comp.euler_characteristic,
            incoming_circles=n_in_c,
            incoming_intervals=n_in_i,
            outgoing_circles=n_out_c,
            outgoing_intervals=n_out_i,
            free_cycles=n_free,
            boundary_count=comp.boundary_count,
        ))
    source = tuple(CIRCLE if v in g.closed else INTERVAL for v in g.in_leaves)
    target = tuple(CIRCLE if v in g.closed else INTERVAL for v in g.out_leaves)
    return CobordismSignature(
        components=tuple(comps), source=source, target=target,
        cycle_classes=tuple(classes))


def smooth_undecorated_bivalent(g):
    """Smooth the bivalent vertices of a decorated graph.

    Decorations sit on valence-1 leaves, which smoothing never touches,
    so every bivalent vertex is undecorated; embedded incoming circles
    just lose subdivision points.  Returns ``(graph, correspondence)``
    and the result is revalidated.
    """
    base, corr = g.base.smooth_bivalent()
    out = OpenClosedFatGraph(base, g.in_leaves, g.out_leaves, g.closed)
    return out, corr


def check_positive_boundary(g):
    """No component's boundary may lie entirely on the incoming side.

    A boundary cycle is completely incoming when it is an incoming
    circle, or when every edge it traverses joins two open incoming
    leaves (the boundary of an interval whose endpoints are both
    inputs).  Each component needs at least one cycle that is not of
    this kind.
    """
    base = g.base
    bc = base.boundary_cycles()
    sig = cobordism_signature(g)
    open_in = {v for v in g.in_leaves if v not in g.closed}

    def completely_incoming(cls):
        if cls.kind == "incoming_circle":
            return True
        cyc = bc.cycles[cls.index]
        return all(base.source(h) in open_in
                   and base.source(base.partner(h)) in open_in
                   for h in cyc)

    for comp in base.connected_components():
        vset = set(comp[0])
        local = [c for c in sig.cycle_classes
                 if base.source(bc.cycles[c.index][0]) in vset]
        if all(completely_incoming(c) for c in local):
            return False
    return True

"""Gluing admissible fat graphs along outgoing/incoming boundary.

Composition of the underlying cobordisms is modelled cell by cell.  A
matched *closed* pair identifies an outgoing boundary cycle
``(m mbar A1 ... Ak)`` of the first graph with an incoming embedded
circle ``(l lbar B1 ... Bk)`` of the second: the circles are traversed
with opposite orientations, so edge ``B_i`` is identified with the
reversal of ``A_{k+1-i}`` (indices mod ``k``), both leaf edges and leaf
vertices disappear, and the cells of the second graph that hung on the
circle are reattached through ``s(B_i) -> s(reversal of A_{k+1-i})``.
A matched *open* pair simply merges the two leaf vertices into one
bivalent junction.

The boundary walk of the glued graph is assembled directly: the cycles
of the first graph survive except the matched outgoing ones, and the
cycles of the second survive except the matched incoming ones, with
each ``reversal of B_i`` replaced by ``A_{k+1-i}``; the vertex fans are
recovered from the walk.  Matching is partial: unmatched outgoing
leaves of the first graph and unmatched incoming leaves of the second
stay boundary of the composite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EdgeCountMismatch,
    InvalidMatch,
    NotGluablePairMorphism,
    ResultInvalid,
    SignatureMismatch,
)
from .graphs import FatGraph, half_id
from .morphisms import Morphism, require_valid
from .openclosed import (
    OpenClosedFatGraph,
    cobordism_signature,
    require_admissible,
)

CIRCLE = "circle"
INTERVAL = "interval"


@dataclass(frozen=True)
class MatchPair:
    """One matched (outgoing leaf of g1, incoming leaf of g2) pair."""
    kind: str
    out_index: int
    in_index: int
    out_leaf: str
    in_leaf: str
    a_halves: tuple   # circle part of g1's outgoing cycle, walk order
    b_halves: tuple   # circle part of g2's incoming cycle, walk order

    @property
    def k(self):
        return len(self.a_halves)

    def identified_halves(self, g1):
        """The recorded identification: ``B_i`` against the reversal of
        ``A_{k+1-i}``, indices mod ``k`` (the circles are traversed in
        opposite directions, anchored at the leaf edges)."""
        k = self.k
        return tuple(
            (self.b_halves[i], g1.base.partner(self.a_halves[(k - 1 - i) % k]))
            for i in range(k))


@dataclass(frozen=True)
class GluingMatch:
    g1: OpenClosedFatGraph
    g2: OpenClosedFatGraph
    pairs: tuple

    @property
    def closed_pairs(self):
        return tuple(p for p in self.pairs if p.kind == CIRCLE)

    @property
    def open_pairs(self):
        return tuple(p for p in self.pairs if p.kind == INTERVAL)


def _leaf_kind(g, v):
    return CIRCLE if v in g.closed else INTERVAL


def gluable(g1, g2, pairs=None):
    """Match g1's outgoing leaves against g2's incoming leaves.

    With ``pairs=None`` every outgoing leaf of ``g1`` is matched
    against the incoming leaf of ``g2`` in the same position, and the
    ordered boundary 1-manifolds must agree.  Passing explicit
    ``(out_index, in_index)`` pairs composes partially: the unmatched
    boundary stays boundary.  Closed pairs must carry the same number
    of circle edges, or :class:`EdgeCountMismatch` is raised.
    """
    require_admissible(g2)
    if pairs is None:
        sig1 = cobordism_signature(g1)
        sig2 = cobordism_signature(g2)
        if sig1.target != sig2.source:
            raise SignatureMismatch(
                "outgoing %s does not match incoming %s"
                % (list(sig1.target), list(sig2.source)))
        pairs = [(i, i) for i in range(len(g1.out_leaves))]
    else:
        pairs = [tuple(p) for p in pairs]
        if len({o for o, _ in pairs}) != len(pairs) or \
           len({i for _, i in pairs}) != len(pairs):
            raise InvalidMatch("an outgoing or incoming slot is matched twice")
    out = []
    for idx, (oi, ii) in enumerate(pairs):
        try:
            v_out = g1.out_leaves[oi]
            v_in = g2.in_leaves[ii]
        except IndexError:
            raise InvalidMatch("pair %d is out of range" % idx) from None
        k_out = _leaf_kind(g1, v_out)
        k_in = _leaf_kind(g2, v_in)
        if k_out != k_in:
            raise SignatureMismatch(
                "pair %d matches a %s against a %s" % (idx, k_out, k_in))
        if k_out == CIRCLE:
            a = g1.leaf_cycle_normal_form(v_out)[2:]
            b = g2.leaf_cycle_normal_form(v_in)[2:]
            if len(a) != len(b):
                raise EdgeCountMismatch(idx, len(a), len(b))
            out.append(MatchPair(CIRCLE, oi, ii, v_out, v_in, a, b))
        else:
            out.append(MatchPair(INTERVAL, oi, ii, v_out, v_in, (), ()))
    return GluingMatch(g1, g2, tuple(out))


def subdivision_match(g1, g2, pairs=None):
    """Subdivide circle edges until the matched cycles have equal size.

    The deficient side is subdivided one edge at a time, always at the
    first circle edge after the leaf anchor; any fixed rule gives
    isomorphic results.  Returns ``(g1', g2', match)``.
    """
    if pairs is None:
        sig1 = cobordism_signature(g1)
        sig2 = cobordism_signature(g2)
        if sig1.target != sig2.source:
            raise SignatureMismatch(
                "outgoing %s does not match incoming %s"
                % (list(sig1.target), list(sig2.source)))
        pairs = [(i, i) for i in range(len(g1.out_leaves))]
    while True:
        deficit = None
        for oi, ii in pairs:
            v_out = g1.out_leaves[oi]
            v_in = g2.in_leaves[ii]
            if _leaf_kind(g1, v_out) != CIRCLE:
                continue
            a = g1.leaf_cycle_normal_form(v_out)[2:]
            b = g2.leaf_cycle_normal_form(v_in)[2:]
            if len(a) != len(b):
                deficit = (oi, ii, a, b)
                break
        if deficit is None:
            return g1, g2, gluable(g1, g2, pairs)
        oi, ii, a, b = deficit
        if len(a) < len(b):
            # grow g1's outgoing cycle; with no circle edge yet, split
            # the leaf edge itself
            edge = g1.base.edge_of(a[0]) if a else \
                g1.base.edge_of(g1.base.leaf_half(g1.out_leaves[oi]))
            new_base, _ = g1.base.subdivide_edge(edge)
            g1 = g1.with_base(new_base)
        else:
            edge = g2.base.edge_of(b[0])
            new_base, _ = g2.base.subdivide_edge(edge)
            g2 = g2.with_base(new_base)


@dataclass(frozen=True)
class GlueData:
    """Where the cells went: renaming prefixes, dropped cells of both
    sides, and the reattachment map for g2's matched circle vertices."""
    prefix1: str
    prefix2: str
    dropped_vertices1: frozenset
    dropped_edges1: frozenset
    dropped_vertices2: frozenset
    dropped_edges2: frozenset
    reattach: dict          # g2 vertex name -> result vertex name
    junctions: dict         # g2 open in-leaf -> result junction vertex

    def vertex_image(self, side, v):
        """Result vertex carrying the given input vertex, or None."""
        if side == 1:
            if v in self.dropped_vertices1:
                return None
            return self.prefix1 + v
        if v in self.reattach:
            return self.reattach[v]
        if v in self.junctions:
            return self.junctions[v]
        if v in self.dropped_vertices2:
            return None
        return self.prefix2 + v


def glue(g1, g2, match, with_data=False):
    """Compose two decorated graphs along a :class:`GluingMatch`.

    Incoming data of the result is g1's incoming list followed by the
    unmatched incoming leaves of g2; outgoing data is the unmatched
    outgoing leaves of g1 followed by g2's outgoing list.  Cells are
    renamed with ``1:``/``2:`` prefixes.  The result is validated and
    is always admissible (its incoming circles are untouched copies).
    """
    if match.g1 != g1 or match.g2 != g2:
        raise InvalidMatch("match was computed for different graphs")
    b1, b2 = g1.base, g2.base
    p1, p2 = "1:", "2:"

    def r1(h):
        return p1 + h

    def r2(h):
        return p2 + h

    dropped_v1, dropped_e1 = set(), set()
    dropped_v2, dropped_e2 = set(), set()
    reattach = {}
    junctions = {}
    subst = {}     # renamed g2 half -> renamed g1 half (circle replacement)
    for pair in match.closed_pairs:
        a, b = pair.a_halves, pair.b_halves
        k = pair.k
        dropped_v1.add(pair.out_leaf)
        dropped_e1.add(b1.edge_of(b1.leaf_half(pair.out_leaf)))
        dropped_v2.add(pair.in_leaf)
        dropped_e2.add(b2.edge_of(b2.leaf_half(pair.in_leaf)))
        for bi in range(k):
            dropped_e2.add(b2.edge_of(b[bi]))
            # s(B_i) -> s(reversal of A_{k+1-i}); 0-based: partner(a[k-1-bi])
            tgt = b1.source(b1.partner(a[(k - 1 - bi) % k]))
            reattach[b2.source(b[bi])] = r1(tgt)
            # walk replacement: reversal of B_i -> A_{k+1-i}
            subst[r2(b2.partner(b[bi]))] = r1(a[(k - 1 - bi) % k])
        for bi in range(k):
            dropped_v2.add(b2.source(b[bi]))
    for pair in match.open_pairs:
        dropped_v2.add(pair.in_leaf)
        junctions[pair.in_leaf] = r1(pair.out_leaf)

    dropped_h1 = {h for h in b1.half_edges if b1.edge_of(h) in dropped_e1}
    dropped_h2 = {h for h in b2.half_edges if b2.edge_of(h) in dropped_e2}
    keep1 = [h for h in b1.half_edges if h not in dropped_h1]
    keep2 = [h for h in b2.half_edges if h not in dropped_h2]

    # half-edge renaming: prefix the edge part
    def rh1(h):
        e, end = h.rsplit(".", 1)
        return half_id(p1 + e, int(end))

    def rh2(h):
        e, end = h.rsplit(".", 1)
        return half_id(p2 + e, int(end))

    source = {}
    involution = {}
    for h in keep1:
        source[rh1(h)] = p1 + b1.source(h)
        involution[rh1(h)] = rh1(b1.partner(h))
    data = GlueData(p1, p2, frozenset(dropped_v1), frozenset(dropped_e1),
                    frozenset(dropped_v2), frozenset(dropped_e2),
                    reattach, junctions)
    for h in keep2:
        v = b2.source(h)
        source[rh2(h)] = data.vertex_image(2, v)
        involution[rh2(h)] = rh2(b2.partner(h))

    # assemble the boundary walk of the composite
    matched_out_cycles = {g1.leaf_cycle_index(p.out_leaf)
                          for p in match.closed_pairs}
    matched_in_cycles = {g2.leaf_cycle_index(p.in_leaf)
                         for p in match.closed_pairs}
    omega = {}
    for ci, cyc in enumerate(b1.boundary_cycles().cycles):
        if ci in matched_out_cycles:
            continue
        ren = [rh1(h) for h in cyc]
        for i, h in enumerate(ren):
            omega[h] = ren[(i + 1) % len(ren)]
    for ci, cyc in enumerate(b2.boundary_cycles().cycles):
        if ci in matched_in_cycles:
            continue
        ren = [subst.get(rh2(h), rh2(h)) for h in cyc]
        for i, h in enumerate(ren):
            omega[h] = ren[(i + 1) % len(ren)]
    if set(omega) != set(source):
        raise ResultInvalid(
            "boundary-walk surgery lost half-edges: %s"
            % sorted(set(source) ^ set(omega))[:4])
    # sigma = omega . involution, then patch the open-pair junctions
    sigma = {h: omega[involution[h]] for h in source}
    for pair in match.open_pairs:
        ha = rh1(b1.leaf_half(pair.out_leaf))
        hb = rh2(b2.leaf_half(pair.in_leaf))
        sigma[ha] = hb
        sigma[hb] = ha
    isolated = {p1 + v for v in b1.isolated_vertices} | \
        {p2 + v for v in b2.isolated_vertices}
    try:
        base = FatGraph(source, involution, sigma, isolated=isolated)
    except Exception as exc:
        raise ResultInvalid("glued graph failed validation: %s" % exc) from exc
    matched_in = {p.in_leaf for p in match.pairs}
    matched_out = {p.out_leaf for p in match.pairs}
    in_leaves = [p1 + v for v in g1.in_leaves] + \
        [p2 + v for v in g2.in_leaves if v not in matched_in]
    out_leaves = [p1 + v for v in g1.out_leaves if v not in matched_out] + \
        [p2 + v for v in g2.out_leaves]
    closed = {p1 + v for v in g1.closed if v not in matched_out} | \
        {p2 + v for v in g2.closed if v not in matched_in}
    try:
        out = OpenClosedFatGraph(base, in_leaves, out_leaves, closed)
    except Exception as exc:
        raise ResultInvalid("glued decorations failed: %s" % exc) from exc
    require_admissible(out)
    return (out, data) if with_data else out


def glue_morphisms(m1, m2, match):
    """Glue a pair of morphisms along matched graphs.

    ``m1`` acts on the g1 side, ``m2`` on the g2 side, and ``match``
    matches their sources.  A closed pair forces the circle edges to be
    collapsed in tandem: ``B_i`` may be collapsed exactly when the
    reversal of ``A_{k+1-i}`` is.
    """
    s1, s2 = m1.source, m2.source
    t1, t2 = m1.target, m2.target
    if match.g1 != s1 or match.g2 != s2:
        raise InvalidMatch("match does not fit the morphism sources")
    col1 = {s1.base.edge_of(h) for h in m1.collapsed_halves()}
    col2 = {s2.base.edge_of(h) for h in m2.collapsed_halves()}
    for pair in match.closed_pairs:
        k = pair.k
        for bi in range(k):
            eb = s2.base.edge_of(pair.b_halves[bi])
            ea = s1.base.edge_of(pair.a_halves[(k - 1 - bi) % k])
            if (eb in col2) != (ea in col1):
                raise NotGluablePairMorphism(
                    "circle edge %s collapsed on one side only" % eb)
    index_pairs = [(p.out_index, p.in_index) for p in match.pairs]
    tmatch = gluable(t1, t2, index_pairs)
    src, sdata = glue(s1, s2, match, with_data=True)
    tgt, tdata = glue(t1, t2, tmatch, with_data=True)

    def map_vertex2(w):
        # image of a g2-side vertex of the target gluing
        img = tdata.vertex_image(2, w)
        if img is None:
            raise ResultInvalid("image vertex %s vanished in the target" % w)
        return img

    vmap = {}
    for v in s1.base.vertices:
        if v in sdata.dropped_vertices1:
            continue
        vmap[sdata.prefix1 + v] = tdata.prefix1 + m1.vertex_map[v]
    for v in s2.base.vertices:
        img = sdata.vertex_image(2, v)
        if img is None or img in vmap:
            continue
        if img.startswith(sdata.prefix2):
            vmap[img] = map_vertex2(m2.vertex_map[v])
    hmap = {}

    def rh(prefix, h):
        e, end = h.rsplit(".", 1)
        return half_id(prefix + e, int(end))

    for h in s1.base.half_edges:
        if s1.base.edge_of(h) in sdata.dropped_edges1:
            continue
        img = m1.half_map[h]
        hmap[rh("1:", h)] = None if img is None else rh("1:", img)
    for h in s2.base.half_edges:
        if s2.base.edge_of(h) in sdata.dropped_edges2:
            continue
        img = m2.half_map[h]
        if img is None:
            hmap[rh("2:", h)] = None
        else:
            hmap[rh("2:", h)] = rh("2:", img)
    return require_valid(Morphism(src, tgt, vmap, hmap))

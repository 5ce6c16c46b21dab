"""Half-edge fat graphs and their surface invariants.

A fat graph is a graph together with a cyclic ordering of the half-edges
at each vertex.  We store it as a triple of maps on the half-edge set:

* ``source``     -- the vertex a half-edge starts at,
* ``involution`` -- the fixed-point-free pairing of a half-edge with the
  other half of the same edge,
* ``sigma``      -- the permutation whose orbits are the half-edge fans
  ``source**-1(v)``, read as "next half-edge counterclockwise".

Thickening every vertex to a disk and every edge to a band produces an
oriented surface whose boundary components are the orbits of the
composite permutation ``omega = sigma . involution``.  Everything in
this module is a pure function of that data: boundary cycles, Euler
characteristic, genus, connected components, and the two homotopy-
neutral moves (subdividing an edge, smoothing a bivalent vertex).

Half-edge identifiers are derived from edge names: the edge ``e`` from
``u`` to ``v`` owns the half-edges ``e.0`` (at ``u``) and ``e.1`` (at
``v``).  All orderings exposed by this module are keyed to identifier
order so that equal inputs give byte-identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DanglingHalfEdge,
    DuplicateName,
    FixedPointInvolution,
    NonIntegerGenus,
    UnknownEdge,
    WrongVertexOrder,
)


def half_id(edge, end):
    """Identifier of one half of ``edge``; ``end`` is 0 (source) or 1."""
    return "%s.%d" % (edge, end)


class FatGraph:
    """An immutable fat graph.

    Instances are normally built through :func:`new_fat_graph` (or the
    ``.fg`` parser), which derives the half-edge maps from an edge list
    and per-vertex cyclic orders.  Direct construction from the three
    maps is allowed and fully validated.
    """

    __slots__ = ("_vertices", "_halves", "_source", "_involution", "_sigma",
                 "_edge_of", "_edge_ends", "_isolated", "_bcycles")

    def __init__(self, source, involution, sigma, isolated=()):
        self._source = dict(source)
        self._involution = dict(involution)
        self._sigma = dict(sigma)
        self._halves = tuple(sorted(self._source))
        vs = set(self._source.values()) | set(isolated)
        self._vertices = tuple(sorted(vs))
        self._isolated = frozenset(isolated)
        self._edge_of = {}
        self._edge_ends = {}
        self._bcycles = None
        self._validate()

    # -- construction helpers -------------------------------------------

    def _validate(self):
        halves = set(self._halves)
        if set(self._involution) != halves or set(self._sigma) != halves:
            raise DanglingHalfEdge("involution/sigma not total on half-edges")
        for h in self._halves:
            hbar = self._involution.get(h)
            if hbar == h:
                raise FixedPointInvolution("involution fixes %r" % h)
            if hbar not in halves or self._involution.get(hbar) != h:
                raise FixedPointInvolution(
                    "involution orbit of %r is not a 2-cycle" % h)
        # sigma orbits must equal the source fibers
        fibers = {}
        for h in self._halves:
            fibers.setdefault(self._source[h], set()).add(h)
        seen = set()
        for h in self._halves:
            if h in seen:
                continue
            orbit = set()
            cur = h
            while cur not in orbit:
                orbit.add(cur)
                cur = self._sigma[cur]
                if cur not in halves:
                    raise DanglingHalfEdge("sigma leaves the half-edge set")
            if cur != h or orbit != fibers[self._source[h]]:
                raise WrongVertexOrder(
                    "orbit of sigma through %r differs from the half-edge "
                    "fan at %r" % (h, self._source[h]))
            seen |= orbit
        for v in self._isolated:
            if v in fibers:
                raise WrongVertexOrder(
                    "vertex %r flagged isolated but carries half-edges" % v)
        # edge names from half ids
        for h in self._halves:
            name, dot, end = h.rpartition(".")
            if not dot or end not in ("0", "1"):
                raise DanglingHalfEdge("malformed half-edge id %r" % h)
            self._edge_of[h] = name
        for h in self._halves:
            e = self._edge_of[h]
            if self._edge_of[self._involution[h]] != e:
                raise FixedPointInvolution(
                    "halves of edge %r are not paired together" % e)
        for e in sorted(set(self._edge_of.values())):
            self._edge_ends[e] = (half_id(e, 0), half_id(e, 1))
            if half_id(e, 0) not in halves or half_id(e, 1) not in halves:
                raise DanglingHalfEdge("edge %r is missing a half" % e)

    # -- basic accessors --------------------------------------------------

    @property
    def vertices(self):
        return self._vertices

    @property
    def half_edges(self):
        return self._halves

    def edges(self):
        return tuple(sorted(self._edge_ends))

    def num_edges(self):
        return len(self._edge_ends)

    def source(self, h):
        return self._source[h]

    def partner(self, h):
        return self._involution[h]

    def next_at_vertex(self, h):
        return self._sigma[h]

    def edge_of(self, h):
        return self._edge_of[h]

    def edge_halves(self, e):
        try:
            return self._edge_ends[e]
        except KeyError:
            raise UnknownEdge("no edge named %r" % e) from None

    def edge_ends(self, e):
        h0, h1 = self.edge_halves(e)
        return (self._source[h0], self._source[h1])

    def is_isolated(self, v):
        return v in self._isolated

    @property
    def isolated_vertices(self):
        return self._isolated

    def fan(self, v):
        """Half-edges at ``v`` in cyclic order, starting at the smallest."""
        hs = sorted(h for h in self._halves if self._source[h] == v)
        if not hs:
            return ()
        out = [hs[0]]
        cur = self._sigma[hs[0]]
        while cur != hs[0]:
            out.append(cur)
            cur = self._sigma[cur]
        return tuple(out)

    def valence(self, v):
        return sum(1 for h in self._halves if self._source[h] == v)

    def is_leaf(self, v):
        return self.valence(v) == 1

    def leaves(self):
        return tuple(v for v in self._vertices if self.is_leaf(v))

    def leaf_half(self, v):
        """The unique half-edge at the leaf ``v``."""
        for h in self._halves:
            if self._source[h] == v:
                return h
        raise UnknownEdge("vertex %r carries no half-edge" % v)

    def euler_characteristic(self):
        return len(self._vertices) - len(self._edge_ends)

    # -- equality ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FatGraph):
            return NotImplemented
        return (self._source == other._source
                and self._involution == other._involution
                and self._sigma == other._sigma
                and self._isolated == other._isolated)

    def __hash__(self):
        return hash((self._halves, tuple(sorted(self._source.items())),
                     tuple(sorted(self._sigma.items())), self._isolated))

    def __repr__(self):
        return "FatGraph(%d vertices, %d edges)" % (
            len(self._vertices), len(self._edge_ends))

    # -- derived structure -------------------------------------------------

    def omega(self, h):
        """The boundary-walk permutation ``sigma . involution``."""
        return self._sigma[self._involution[h]]

    def boundary_cycles(self):
        """Cycle decomposition of the boundary walk.

        Cycles are sorted by their minimal half-edge identifier and each
        cycle is rotated to start at that identifier, so the result is a
        canonical function of the graph.
        """
        if self._bcycles is None:
            seen = set()
            cycles = []
            for h in self._halves:
                if h in seen:
                    continue
                cyc = [h]
                cur = self.omega(h)
                while cur != h:
                    cyc.append(cur)
                    cur = self.omega(cur)
                seen.update(cyc)
                lo = min(range(len(cyc)), key=lambda i: cyc[i])
                cycles.append(tuple(cyc[lo:] + cyc[:lo]))
            cycles.sort(key=lambda c: c[0])
            h2c = {}
            for i, cyc in enumerate(cycles):
                for h in cyc:
                    h2c[h] = i
            self._bcycles = BoundaryCycles(tuple(cycles), h2c)
        return self._bcycles

    def connected_components(self):
        """Partition of the vertices under edge adjacency.

        Returns a tuple of components, each a (vertices, half_edges)
        pair of sorted tuples, ordered by minimal vertex identifier.
        Isolated vertices form singleton components.
        """
        parent = {v: v for v in self._vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for h in self._halves:
            a, b = find(self._source[h]), find(self._source[self._involution[h]])
            if a != b:
                parent[a] = b
        groups = {}
        for v in self._vertices:
            groups.setdefault(find(v), []).append(v)
        comps = []
        for vs in groups.values():
            vset = set(vs)
            hs = sorted(h for h in self._halves if self._source[h] in vset)
            comps.append((tuple(sorted(vs)), tuple(hs)))
        comps.sort(key=lambda c: c[0][0])
        return tuple(comps)

    def surface_invariants(self):
        """Genus, boundary count and Euler characteristic per component.

        The thickened surface of a fat graph is always orientable, so
        each component satisfies ``chi = 2 - 2g - b`` with an integer
        genus ``g >= 0``; anything else trips :class:`NonIntegerGenus`.
        """
        if self._isolated:
            raise ValueError(
                "surface invariants are undefined for isolated vertices: %s"
                % sorted(self._isolated))
        bc = self.boundary_cycles()
        comps = []
        for vs, hs in self.connected_components():
            vset = set(vs)
            n_edges = sum(1 for e, (h0, h1) in self._edge_ends.items()
                          if self._source[h0] in vset)
            chi = len(vs) - n_edges
            cyc_ids = {bc.half_edge_to_cycle[h] for h in hs}
            b = len(cyc_ids)
            two_g = 2 - chi - b
            if two_g < 0 or two_g % 2:
                raise NonIntegerGenus(
                    "component %r has 2-chi-b = %d" % (vs[0], two_g))
            comps.append(ComponentSignature(
                genus=two_g // 2, boundary_count=b, euler_characteristic=chi,
                vertices=vs))
        return SurfaceSignature(components=tuple(comps))

    # -- homotopy-neutral moves --------------------------------------------

    def subdivide_edge(self, e):
        """Insert a bivalent vertex in the middle of ``e``.

        Returns ``(graph, correspondence)``.  The move does not change
        the boundary cycle count, the Euler characteristic or the genus.
        """
        h0, h1 = self.edge_halves(e)
        mid = self._fresh_vertex("%s:m" % e)
        e_a = self._fresh_edge("%s:a" % e)
        e_b = self._fresh_edge("%s:b" % e)
        a0, a1 = half_id(e_a, 0), half_id(e_a, 1)
        b0, b1 = half_id(e_b, 0), half_id(e_b, 1)
        ren = {h0: a0, h1: b1}
        source = {ren.get(h, h): self._source[h] for h in self._halves}
        source.update({a1: mid, b0: mid})
        involution = {}
        for h in self._halves:
            if h in (h0, h1):
                continue
            involution[h] = self._involution[h]
        involution.update({a0: a1, a1: a0, b0: b1, b1: b0})
        sigma = {}
        for h in self._halves:
            sigma[ren.get(h, h)] = ren.get(self._sigma[h], self._sigma[h])
        sigma.update({a1: b0, b0: a1})
        g = FatGraph(source, involution, sigma, isolated=self._isolated)
        corr = CellCorrespondence(
            vertex_map={v: v for v in self._vertices},
            edge_map={x: ((e_a, e_b) if x == e else (x,))
                      for x in self._edge_ends},
            new_vertices=(mid,))
        return g, corr

    def bivalent_vertices(self):
        return tuple(v for v in self._vertices if self.valence(v) == 2)

    def smooth_bivalent(self):
        """Remove bivalent vertices, joining the two edges at each one.

        A bivalent vertex both of whose half-edges belong to the same
        edge (the single vertex of a bare circle) cannot be removed and
        is kept.  Returns ``(graph, correspondence)``; the invariants
        chi, b and genus are unchanged.
        """
        g = self
        corr = CellCorrespondence(
            vertex_map={v: v for v in self._vertices},
            edge_map={e: (e,) for e in self._edge_ends},
            new_vertices=())
        while True:
            target = None
            for v in g._vertices:
                if g.valence(v) != 2:
                    continue
                ha, hb = sorted(h for h in g._halves if g._source[h] == v)
                if g._edge_of[ha] != g._edge_of[hb]:
                    target = (v, ha, hb)
                    break
            if target is None:
                return g, corr
            g, step = g._smooth_one(*target)
            corr = corr.then(step)

    def _smooth_one(self, v, ha, hb):
        # v is bivalent with distinct incident edges; join them.
        pa, pb = self._involution[ha], self._involution[hb]
        ea, eb = self._edge_of[ha], self._edge_of[hb]
        name = self._fresh_edge(min(ea, eb), removed={ea, eb})
        n0, n1 = half_id(name, 0), half_id(name, 1)
        # the merged edge runs between source(pa) and source(pb)
        lo, hi = (pa, pb) if pa < pb else (pb, pa)
        ren = {lo: n0, hi: n1}
        drop = {ha, hb}
        source = {ren.get(h, h): self._source[h]
                  for h in self._halves if h not in drop}
        involution = {}
        for h in self._halves:
            if h in drop or h in (pa, pb):
                continue
            involution[h] = self._involution[h]
        involution.update({n0: n1, n1: n0})
        sigma = {}
        for h in self._halves:
            if h in drop:
                continue
            nxt = self._sigma[h]
            # pa and pb keep their slots; v's fan disappears entirely
            sigma[ren.get(h, h)] = ren.get(nxt, nxt)
        g = FatGraph(source, involution, sigma, isolated=self._isolated)
        vmap = {u: u for u in self._vertices if u != v}
        vmap[v] = None
        emap = {e: (e,) for e in self._edge_ends}
        emap[ea] = (name,)
        emap[eb] = (name,)
        return g, CellCorrespondence(vmap, emap, ())

    # -- renaming ----------------------------------------------------------

    def relabel(self, vertex_map=None, edge_map=None):
        """A copy with vertices/edges renamed through the given maps."""
        vmap = vertex_map or {}
        emap = edge_map or {}

        def rv(v):
            return vmap.get(v, v)

        def rh(h):
            e = self._edge_of[h]
            return half_id(emap.get(e, e), int(h.rsplit(".", 1)[1]))

        source = {rh(h): rv(self._source[h]) for h in self._halves}
        involution = {rh(h): rh(self._involution[h]) for h in self._halves}
        sigma = {rh(h): rh(self._sigma[h]) for h in self._halves}
        return FatGraph(source, involution, sigma,
                        isolated=frozenset(rv(v) for v in self._isolated))

    def _fresh_vertex(self, base):
        name = base
        k = 0
        names = set(self._vertices)
        while name in names:
            k += 1
            name = "%s%d" % (base, k)
        return name

    def _fresh_edge(self, base, removed=frozenset()):
        name = base
        k = 0
        taken = set(self._edge_ends) - set(removed)
        while name in taken:
            k += 1
            name = "%s~%d" % (base, k)
        return name


@dataclass(frozen=True)
class BoundaryCycles:
    """The orbits of the boundary walk, in canonical order."""
    cycles: tuple
    half_edge_to_cycle: dict

    def __len__(self):
        return len(self.cycles)

    def cycle_of(self, h):
        return self.cycles[self.half_edge_to_cycle[h]]


@dataclass(frozen=True)
class ComponentSignature:
    genus: int
    boundary_count: int
    euler_characteristic: int
    vertices: tuple = ()


@dataclass(frozen=True)
class SurfaceSignature:
    """Per-component genus/boundary/chi data plus global totals."""
    components: tuple

    @property
    def total_euler_characteristic(self):
        return sum(c.euler_characteristic for c in self.components)

    @property
    def genera(self):
        return tuple(c.genus for c in self.components)

    @property
    def boundary_counts(self):
        return tuple(c.boundary_count for c in self.components)

    def __len__(self):
        return len(self.components)


@dataclass(frozen=True)
class CellCorrespondence:
    """Tracks where the cells of a graph went under a local move.

    ``vertex_map`` sends an old vertex to its survivor (or ``None`` if
    it was absorbed); ``edge_map`` sends an old edge to the tuple of
    edges now covering it.
    """
    vertex_map: dict
    edge_map: dict
    new_vertices: tuple = ()

    def then(self, later):
        vmap = {}
        for v, w in self.vertex_map.items():
            vmap[v] = None if w is None else later.vertex_map.get(w, w)
        emap = {}
        for e, parts in self.edge_map.items():
            out = []
            for p in parts:
                out.extend(later.edge_map.get(p, (p,)))
            # collapse duplicates from merged chains, keep order
            dedup = []
            for p in out:
                if not dedup or dedup[-1] != p:
                    dedup.append(p)
            emap[e] = tuple(dedup)
        new_vs = tuple(x for x in
                       [later.vertex_map.get(v, v) for v in self.new_vertices]
                       if x is not None) + tuple(later.new_vertices)
        return CellCorrespondence(vmap, emap, new_vs)


def new_fat_graph(vertices, edges, vertex_orders, isolated=()):
    """Build and validate a fat graph from named parts.

    ``edges`` is a list of ``(name, src, dst)`` triples; each edge
    contributes half-edges ``name.0`` at ``src`` and ``name.1`` at
    ``dst``.  ``vertex_orders`` maps every non-isolated vertex to the
    cyclic list of its half-edges.
    """
    vlist = list(vertices)
    if len(set(vlist)) != len(vlist):
        raise DuplicateName("repeated vertex name")
    vset = set(vlist)
    source = {}
    enames = set()
    for name, src, dst in edges:
        if name in enames:
            raise DuplicateName("repeated edge name %r" % name)
        enames.add(name)
        if src not in vset or dst not in vset:
            raise UnknownEdge("edge %r uses unknown endpoint" % name)
        source[half_id(name, 0)] = src
        source[half_id(name, 1)] = dst
    involution = {}
    for name in enames:
        h0, h1 = half_id(name, 0), half_id(name, 1)
        involution[h0] = h1
        involution[h1] = h0
    sigma = {}
    ordered = set()
    for v, hs in vertex_orders.items():
        if v not in vset:
            raise UnknownEdge("order given for unknown vertex %r" % v)
        for h in hs:
            if h not in source:
                raise DanglingHalfEdge("unknown half-edge %r at %r" % (h, v))
            if source[h] != v:
                raise WrongVertexOrder(
                    "half-edge %r listed at %r but starts at %r"
                    % (h, v, source[h]))
            if h in ordered:
                raise DuplicateName("half-edge %r ordered twice" % h)
            ordered.add(h)
        for i, h in enumerate(hs):
            sigma[h] = hs[(i + 1) % len(hs)]
    missing = set(source) - ordered
    if missing:
        raise DanglingHalfEdge(
            "half-edges missing from vertex orders: %s" % sorted(missing))
    iso = set(isolated)
    degree0 = vset - {source[h] for h in source}
    if degree0 - iso:
        raise DanglingHalfEdge(
            "vertices %s carry no half-edge and are not flagged isolated"
            % sorted(degree0 - iso))
    if iso - degree0:
        raise WrongVertexOrder(
            "vertices %s flagged isolated but have edges" % sorted(iso - degree0))
    return FatGraph(source, involution, sigma, isolated=iso)


def disjoint_union(g1, g2, prefix1="1:", prefix2="2:"):
    """Disjoint union with cells renamed through the given prefixes."""
    r1 = g1.relabel({v: prefix1 + v for v in g1.vertices},
                    {e: prefix1 + e for e in g1.edges()})
    r2 = g2.relabel({v: prefix2 + v for v in g2.vertices},
                    {e: prefix2 + e for e in g2.edges()})
    source = {}
    involution = {}
    sigma = {}
    for g in (r1, r2):
        for h in g.half_edges:
            source[h] = g.source(h)
            involution[h] = g.partner(h)
            sigma[h] = g.next_at_vertex(h)
    return FatGraph(source, involution, sigma,
                    isolated=r1.isolated_vertices | r2.isolated_vertices)


def boundary_cycles(g):
    return g.boundary_cycles()


def surface_invariants(g):
    return g.surface_invariants()


def connected_components(g):
    return g.connected_components()


def subdivide_edge(g, e):
    return g.subdivide_edge(e)


def smooth_bivalent(g):
    return g.smooth_bivalent()

"""Relative chain complexes, determinant lines and the sign calculus.

For an admissible decorated graph the pair (graph, incoming boundary)
is computed by a two-term rational complex: one 1-cell per extra
half-edge, one 0-cell per extra edge midpoint and per extra vertex,
with ``d(h) = [midpoint of h's edge] - [source of h]`` and the source
term dropped when it lies on the incoming part.  Kernel and cokernel
bases are chosen by row reduction with leftmost pivots, so every sign
below is reproducible.

The determinant line of a complex is the top exterior power of its
degree-1 homology tensored with the dual top power of its degree-0
homology; it carries an integer degree (rank H1 - rank H0) and, once
bases are fixed, morphisms and gluings act on it by explicit nonzero
rationals.  Gluing two graphs splits the glued complex as an extension
with the first graph's cells in front, and the six-term exact homology
sequence of that extension produces the gluing isomorphism of
determinant lines; composing the two ways of stacking three pairs of
pants detects the dimension-parity sign of the composition product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import InvalidMorphism, NotGluable, ResultInvalid
from .morphisms import validate_morphism
from .openclosed import incoming_partition, require_admissible

ZERO = linalg.ZERO
ONE = linalg.ONE


class ChainComplexPair:
    """A two-term complex ``C1 -> C0`` with chosen homology bases.

    ``basis1`` labels the 1-cells, ``basis0`` the 0-cells; the
    differential is a dense rational matrix (rows over ``basis0``).
    ``h1_basis`` is the reduced kernel basis (one vector per free
    column, identity on the free coordinates); the degree-0 homology is
    the cokernel, coordinatized by the unit vectors at the non-pivot
    rows of the column space.
    """

    def __init__(self, basis1, basis0, differential):
        self.basis1 = tuple(basis1)
        self.basis0 = tuple(basis0)
        self.d = differential
        assert len(self.d) == len(self.basis0)
        assert all(len(row) == len(self.basis1) for row in self.d)
        self.h1_basis = linalg.kernel_basis(self.d, len(self.basis1))
        _, piv = linalg.rref(self.d)
        self._free1 = [j for j in range(len(self.basis1))
                       if j not in set(piv)]
        # cokernel: row-reduce the column space
        cols = linalg.transpose(self.d)
        if cols:
            self._rrefT, pivT = linalg.rref(cols)
            self._rrefT = [row for row in self._rrefT if any(x != 0 for x in row)]
            self._piv0 = list(pivT)
        else:
            self._rrefT, self._piv0 = [], []
        piv0 = set(self._piv0)
        self._free0 = [i for i in range(len(self.basis0)) if i not in piv0]

    # -- ranks ------------------------------------------------------------

    @property
    def rank_h1(self):
        return len(self.h1_basis)

    @property
    def rank_h0(self):
        return len(self._free0)

    @property
    def degree(self):
        """Degree of the determinant line: rank H1 - rank H0."""
        return self.rank_h1 - self.rank_h0

    @property
    def h0_basis(self):
        """Unit-vector representatives of the cokernel basis classes."""
        out = []
        for i in self._free0:
            v = [ZERO] * len(self.basis0)
            v[i] = ONE
            out.append(v)
        return out

    # -- coordinates -------------------------------------------------------

    def h1_coords(self, vec):
        """Coordinates of a kernel vector in the chosen H1 basis."""
        assert all(x == 0 for x in linalg.matvec(self.d, vec)), \
            "vector is not a cycle"
        coords = [vec[j] for j in self._free1]
        check = [ZERO] * len(self.basis1)
        for c, b in zip(coords, self.h1_basis):
            for i in range(len(check)):
                check[i] += c * b[i]
        assert check == list(vec), "kernel coordinates failed to reproduce"
        return coords

    def h0_class(self, vec):
        """Coordinates of the class of ``vec`` in the cokernel basis."""
        w = list(vec)
        for row in self._rrefT:
            p = next(i for i, x in enumerate(row) if x != 0)
            if w[p] != 0:
                f = w[p]
                w = [a - f * b for a, b in zip(w, row)]
        assert all(w[i] == 0 for i in self._piv0)
        return [w[i] for i in self._free0]

    def index1(self, label):
        return self.basis1.index(label)

    def index0(self, label):
        return self.basis0.index(label)


def relative_chain_complex(g):
    """The two-term complex of ``g`` relative to its incoming boundary."""
    part = incoming_partition(g)
    base = g.base
    basis1 = list(part.e_h)
    basis0 = [("E", e) for e in part.e_e] + [("V", v) for v in part.e_v]
    pos0 = {c: i for i, c in enumerate(basis0)}
    ev = set(part.e_v)
    d = linalg.zeros(len(basis0), len(basis1))
    for j, h in enumerate(basis1):
        d[pos0[("E", base.edge_of(h))]][j] += ONE
        v = base.source(h)
        if v in ev:
            d[pos0[("V", v)]][j] -= ONE
    cc = ChainComplexPair(basis1, basis0, d)
    assert cc.rank_h0 - cc.rank_h1 == part.euler_difference, \
        "homology ranks disagree with the cell count"
    return cc


def relative_euler_char(g):
    """``|eV| - |eE|``, the degree-shift unit of the induced operation."""
    part = incoming_partition(g)
    cc = relative_chain_complex(g)
    assert cc.rank_h0 - cc.rank_h1 == part.euler_difference
    return part.euler_difference


def operation_degree(g, dim):
    """Degree shift of the operation on a ``dim``-manifold's loop homology."""
    if dim < 0:
        raise ValueError("manifold dimension must be nonnegative")
    return dim * relative_euler_char(g)


# ---------------------------------------------------------------------------
# graded lines


@dataclass(frozen=True)
class GradedLine:
    """A one-dimensional graded piece: integer degree, nonzero scale."""
    degree: int
    scalar: Fraction

    def __post_init__(self):
        if self.scalar == 0:
            raise ValueError("graded line scalar must be nonzero")

    @property
    def sign(self):
        return 1 if self.scalar > 0 else -1


def tensor(l1, l2):
    return GradedLine(l1.degree + l2.degree, l1.scalar * l2.scalar)


def swap(l1, l2):
    """Koszul sign of exchanging the two factors."""
    return -1 if (l1.degree * l2.degree) % 2 else 1


def power(line, d):
    if d < 0:
        raise ValueError("tensor powers need d >= 0")
    return GradedLine(d * line.degree, line.scalar ** d)


# ---------------------------------------------------------------------------
# chain maps of morphisms


@dataclass
class ChainMap:
    """Matrices of a morphism on the relative complexes."""
    source_cc: ChainComplexPair
    target_cc: ChainComplexPair
    f_eH: list
    f_eEV: list


def chain_map_of_morphism(m):
    """The induced map on relative complexes of an admissible morphism.

    Half-edges map to their image half-edge (zero when collapsed or
    when the image lies on the incoming part); midpoints follow their
    edge, collapsed midpoints and vertices go to the image vertex, and
    anything landing on the incoming part is zero in the relative
    complex.  The pair commutes with the differentials.
    """
    ok, why = validate_morphism(m)
    if not ok:
        raise InvalidMorphism(why)
    src, tgt = m.source, m.target
    require_admissible(src)
    require_admissible(tgt)
    A = relative_chain_complex(src)
    B = relative_chain_complex(tgt)
    sbase, tbase = src.base, tgt.base
    pos1 = {h: i for i, h in enumerate(B.basis1)}
    pos0 = {c: i for i, c in enumerate(B.basis0)}
    f1 = linalg.zeros(len(B.basis1), len(A.basis1))
    for j, h in enumerate(A.basis1):
        img = m.half_map[h]
        if img is not None and img in pos1:
            f1[pos1[img]][j] += ONE
    f0 = linalg.zeros(len(B.basis0), len(A.basis0))
    for j, cell in enumerate(A.basis0):
        kind, name = cell
        if kind == "V":
            w = m.vertex_map[name]
            if ("V", w) in pos0:
                f0[pos0[("V", w)]][j] += ONE
        else:
            h0, _ = sbase.edge_halves(name)
            img = m.half_map[h0]
            if img is None:
                w = m.vertex_map[sbase.source(h0)]
                if ("V", w) in pos0:
                    f0[pos0[("V", w)]][j] += ONE
            else:
                e1 = tbase.edge_of(img)
                if ("E", e1) in pos0:
                    f0[pos0[("E", e1)]][j] += ONE
    lhs = linalg.matmul(f0, A.d)
    rhs = linalg.matmul(B.d, f1)
    assert lhs == rhs, "chain map does not commute with the differentials"
    return ChainMap(A, B, f_eH=f1, f_eEV=f0)


def _induced_h1_matrix(A, B, f1):
    cols = []
    for vec in A.h1_basis:
        cols.append(B.h1_coords(linalg.matvec(f1, vec)))
    return linalg.columns_matrix(cols)


def _induced_h0_matrix(A, B, f0):
    cols = []
    for rep in A.h0_basis:
        cols.append(B.h0_class(linalg.matvec(f0, rep)))
    return linalg.columns_matrix(cols)


def _sign(x):
    return 1 if x > 0 else -1


def morphism_det_sign(m):
    """Sign of the induced isomorphism on the determinant line.

    Computed twice: from the forward chain map, and from the section
    that picks unique preimages (summing a collapsed tree's cells for a
    vertex).  The section is only a chain map up to corrections
    supported on the collapsed cells, which form an acyclic subcomplex,
    so its homology action is still well defined; the two signs always
    agree and the common value is returned.
    """
    cm = chain_map_of_morphism(m)
    A, B = cm.source_cc, cm.target_cc
    if A.rank_h1 != B.rank_h1 or A.rank_h0 != B.rank_h0:
        raise InvalidMorphism("morphism is not a quasi-isomorphism")
    det1_f = linalg.det(_induced_h1_matrix(A, B, cm.f_eH))
    det0_f = linalg.det(_induced_h0_matrix(A, B, cm.f_eEV))
    if det1_f == 0 or det0_f == 0:
        raise InvalidMorphism("induced homology map is singular")
    sign_f = _sign(det1_f) * _sign(det0_f)

    src, tgt = m.source, m.target
    sbase, tbase = src.base, tgt.base
    # section on 1-cells: unique preimages
    pre_half = {}
    for h, img in m.half_map.items():
        if img is not None:
            pre_half[img] = h
    posA1 = {h: i for i, h in enumerate(A.basis1)}
    g1 = linalg.zeros(len(A.basis1), len(B.basis1))
    for j, h in enumerate(B.basis1):
        g1[posA1[pre_half[h]]][j] += ONE
    # section on 0-cells: preimage edge, or the collapsed tree's cells
    posA0 = {c: i for i, c in enumerate(A.basis0)}
    collapsed_by_vertex = {}
    for h, img in m.half_map.items():
        if img is None:
            w = m.vertex_map[sbase.source(h)]
            collapsed_by_vertex.setdefault(w, set()).add(
                ("E", sbase.edge_of(h)))
    for v, w in m.vertex_map.items():
        collapsed_by_vertex.setdefault(w, set()).add(("V", v))
    g0 = linalg.zeros(len(A.basis0), len(B.basis0))
    for j, cell in enumerate(B.basis0):
        kind, name = cell
        if kind == "E":
            h0, _ = tbase.edge_halves(name)
            pre_e = sbase.edge_of(pre_half[h0])
            g0[posA0[("E", pre_e)]][j] += ONE
        else:
            for c in collapsed_by_vertex.get(name, ()):
                if c in posA0:
                    g0[posA0[c]][j] += ONE
    # H1 action of the section: lift and correct inside the collapsed
    # cells, which the forward map kills and which carry no homology
    k_cols = [posA1[h] for h, img in m.half_map.items()
              if img is None and h in posA1]
    k_cols.sort()
    d_restricted = [[A.d[i][j] for j in k_cols] for i in range(len(A.basis0))]
    cols = []
    for vec in B.h1_basis:
        lift = linalg.matvec(g1, vec)
        defect = linalg.matvec(A.d, lift)
        x = linalg.solve(d_restricted, defect)
        assert x is not None, "collapsed cells failed to absorb the defect"
        for idx, col in enumerate(k_cols):
            lift[col] -= x[idx]
        cols.append(A.h1_coords(lift))
    det1_g = linalg.det(linalg.columns_matrix(cols))
    det0_g = linalg.det(_induced_h0_matrix(B, A, g0))
    assert det1_g != 0 and det0_g != 0
    sign_g = _sign(det1_g) * _sign(det0_g)
    assert sign_f == sign_g, \
        "forward and section determinant signs disagree"
    return sign_f


# ---------------------------------------------------------------------------
# the six-term sequence of an extension of complexes


def _ses_det_scalar(A, B, C, incl1, incl0, proj1, proj0):
    """Scalar of det(H A) (x) det(H C) -> det(H B) for an extension.

    ``incl*`` map A-indices to B-indices; ``proj*`` map B-indices to
    C-indices (None off the quotient).  The scalar is assembled from
    four base changes: splitting H1(B) over H1(A) and the kernel of the
    connecting map, splitting H1(C) over that kernel, splitting H0(A)
    over the connecting image, and splitting H0(B) under H0(C).
    """
    nB1, nB0 = len(B.basis1), len(B.basis0)
    sect1 = {}
    for bi, ci in enumerate(proj1):
        if ci is not None:
            sect1[ci] = bi
    sect0 = {}
    for bi, ci in enumerate(proj0):
        if ci is not None:
            sect0[ci] = bi

    def up1(vec):
        out = [ZERO] * nB1
        for i, x in enumerate(vec):
            out[incl1[i]] = x
        return out

    def up0(vec):
        out = [ZERO] * nB0
        for i, x in enumerate(vec):
            out[incl0[i]] = x
        return out

    def lift1(vec):
        out = [ZERO] * nB1
        for i, x in enumerate(vec):
            out[sect1[i]] = x
        return out

    def lift0(vec):
        out = [ZERO] * nB0
        for i, x in enumerate(vec):
            out[sect0[i]] = x
        return out

    def a_part0(vec):
        out = [ZERO] * len(A.basis0)
        seen = set()
        for i in range(len(A.basis0)):
            out[i] = vec[incl0[i]]
            seen.add(incl0[i])
        assert all(vec[i] == 0 for i in range(nB0) if i not in seen), \
            "boundary left the subcomplex"
        return out

    # connecting map on H1(C)
    delta_cols = []
    for vec in C.h1_basis:
        lifted = lift1(vec)
        bdry = linalg.matvec(B.d, lifted)
        delta_cols.append(A.h0_class(a_part0(bdry)))
    dM = linalg.columns_matrix(delta_cols)
    if dM and dM[0]:
        kerK = linalg.kernel_basis(dM, len(C.h1_basis))
        _, piv = linalg.rref(dM)
    else:
        kerK = [[ONE if i == j else ZERO for i in range(len(C.h1_basis))]
                for j in range(len(C.h1_basis))]
        piv = []
    # s2: (kernel basis | chosen complements) against the H1(C) basis
    unitsW = []
    for p in piv:
        v = [ZERO] * len(C.h1_basis)
        v[p] = ONE
        unitsW.append(v)
    s2 = linalg.det(linalg.columns_matrix(kerK + unitsW))
    # s3: (connecting images | greedy unit complement) in H0(A)
    deltas = [[dM[i][p] for i in range(len(dM))] for p in piv] if piv else []
    comp_idx = []
    have = list(deltas)
    for q in range(A.rank_h0):
        if len(have) == A.rank_h0:
            break
        unit = [ONE if i == q else ZERO for i in range(A.rank_h0)]
        trial = have + [unit]
        if linalg.rank(linalg.columns_matrix(trial)) == len(trial):
            have.append(unit)
            comp_idx.append(q)
    assert len(have) == A.rank_h0, "connecting image has no complement"
    s3 = linalg.det(linalg.columns_matrix(have)) if have else ONE
    # s1: (H1(A) | corrected lifts of the kernel) in H1(B)
    colsB = [B.h1_coords(up1(vec)) for vec in A.h1_basis]
    for kvec in kerK:
        zC = [ZERO] * len(C.basis1)
        for c, bvec in zip(kvec, C.h1_basis):
            for i in range(len(zC)):
                zC[i] += c * bvec[i]
        lifted = lift1(zC)
        defect = a_part0(linalg.matvec(B.d, lifted))
        y = linalg.solve(A.d, defect)
        assert y is not None, "kernel lift is not correctable"
        corrected = [a - b for a, b in zip(lifted, up1(y))]
        colsB.append(B.h1_coords(corrected))
    assert len(colsB) == B.rank_h1, "rank bookkeeping broken in degree 1"
    s1 = linalg.det(linalg.columns_matrix(colsB))
    # s4: (H0(A) complement | lifts of H0(C)) in H0(B)
    cols0 = []
    for q in comp_idx:
        rep = A.h0_basis[q]
        cols0.append(B.h0_class(up0(rep)))
    for rep in C.h0_basis:
        cols0.append(B.h0_class(lift0(rep)))
    assert len(cols0) == B.rank_h0, "rank bookkeeping broken in degree 0"
    s4 = linalg.det(linalg.columns_matrix(cols0)) if cols0 else ONE
    assert s1 != 0 and s2 != 0 and s3 != 0 and s4 != 0
    assert B.degree == A.degree + C.degree, "degrees fail to add"
    return (s1 * s4) / (s2 * s3)


def _chain_iso_scalar(F, T, map1, map0):
    """Determinant-line scalar of a cell bijection between complexes."""
    for i in range(len(F.basis0)):
        for j in range(len(F.basis1)):
            assert T.d[map0[i]][map1[j]] == F.d[i][j], \
                "cell bijection is not a chain map"
    f1 = linalg.zeros(len(T.basis1), len(F.basis1))
    for j in range(len(F.basis1)):
        f1[map1[j]][j] = ONE
    f0 = linalg.zeros(len(T.basis0), len(F.basis0))
    for i in range(len(F.basis0)):
        f0[map0[i]][i] = ONE
    det1 = linalg.det(_induced_h1_matrix(F, T, f1))
    det0 = linalg.det(_induced_h0_matrix(F, T, f0))
    assert det1 != 0 and det0 != 0
    return det1 / det0


def _subcomplex(cc, keep1, keep0):
    """Restrict to the given cells; they must span a subcomplex."""
    idx1 = [i for i, lab in enumerate(cc.basis1) if lab in keep1]
    idx0 = [i for i, lab in enumerate(cc.basis0) if lab in keep0]
    set0 = set(idx0)
    for j in idx1:
        for i in range(len(cc.basis0)):
            if cc.d[i][j] != 0 and i not in set0:
                raise ResultInvalid("cells do not span a subcomplex")
    d = [[cc.d[i][j] for j in idx1] for i in idx0]
    sub = ChainComplexPair([cc.basis1[i] for i in idx1],
                           [cc.basis0[i] for i in idx0], d)
    return sub, idx1, idx0


def _quotient_complex(cc, drop1_idx, drop0_idx):
    d = [[cc.d[i][j] for j in drop1_idx] for i in drop0_idx]
    return ChainComplexPair([cc.basis1[i] for i in drop1_idx],
                            [cc.basis0[i] for i in drop0_idx], d)


def _drop_scalar(cc, dropped_halves, dropped_cells):
    """det-line scalar of cutting an acyclic set of cells out of ``cc``.

    Returns ``(subcomplex, scalar)`` where scalar carries
    det(H sub) -> det(H cc).
    """
    keep1 = [h for h in cc.basis1 if h not in dropped_halves]
    keep0 = [c for c in cc.basis0 if c not in dropped_cells]
    sub, idx1, idx0 = _subcomplex(cc, set(keep1), set(keep0))
    drop1 = [i for i, lab in enumerate(cc.basis1) if lab in dropped_halves]
    drop0 = [i for i, lab in enumerate(cc.basis0) if lab in dropped_cells]
    quot = _quotient_complex(cc, drop1, drop0)
    if quot.rank_h1 or quot.rank_h0:
        raise ResultInvalid("dropped cells are not acyclic")
    proj1 = [None] * len(cc.basis1)
    for qi, bi in enumerate(drop1):
        proj1[bi] = qi
    proj0 = [None] * len(cc.basis0)
    for qi, bi in enumerate(drop0):
        proj0[bi] = qi
    scalar = _ses_det_scalar(sub, cc, quot, idx1, idx0, proj1, proj0)
    return sub, scalar


def _glued_extension(cc1, cc2, match, data):
    """Blockwise complex of the glued graph, first graph's cells first.

    Couples an extra half-edge of the second graph whose source sat on
    a matched incoming circle (or matched incoming leaf) to the glued
    vertex of the first graph, when that vertex is an extra cell there.
    """
    g1, g2 = match.g1, match.g2
    basis1 = [("1", h) for h in cc1.basis1] + [("2", h) for h in cc2.basis1]
    basis0 = [("1", c) for c in cc1.basis0] + [("2", c) for c in cc2.basis0]
    n1_1, n1_0 = len(cc1.basis1), len(cc1.basis0)
    d = linalg.zeros(len(basis0), len(basis1))
    for i in range(n1_0):
        for j in range(n1_1):
            d[i][j] = cc1.d[i][j]
    for i in range(len(cc2.basis0)):
        for j in range(len(cc2.basis1)):
            d[n1_0 + i][n1_1 + j] = cc2.d[i][j]
    pos1_0 = {c: i for i, c in enumerate(cc1.basis0)}
    for j, h in enumerate(cc2.basis1):
        v = g2.base.source(h)
        img = data.vertex_image(2, v)
        if img is None or img.startswith(data.prefix2):
            continue
        cell = ("V", img[len(data.prefix1):])
        if cell in pos1_0:
            d[pos1_0[cell]][n1_1 + j] -= ONE
    return ChainComplexPair(basis1, basis0, d)


def _gluing_scalar(g1, g2, match):
    """d=1 scalar of the gluing isomorphism, plus the glued complex.

    Steps: cut the matched outgoing leaf cells out of the first
    complex (an acyclic drop), form the blockwise extension, run the
    six-term sequence, and re-express everything in the glued graph's
    own canonical complex.
    """
    from .gluing import glue
    require_admissible(g1)
    require_admissible(g2)
    cc1 = relative_chain_complex(g1)
    cc2 = relative_chain_complex(g2)
    glued, data = glue(g1, g2, match, with_data=True)
    dropped_halves = set()
    dropped_cells = set()
    for e in data.dropped_edges1:
        h0, h1 = g1.base.edge_halves(e)
        dropped_halves.update((h0, h1))
        dropped_cells.add(("E", e))
    for v in data.dropped_vertices1:
        dropped_cells.add(("V", v))
    if dropped_halves or dropped_cells:
        cc1p, s_drop = _drop_scalar(cc1, dropped_halves, dropped_cells)
    else:
        cc1p, s_drop = cc1, ONE
    ccB = _glued_extension(cc1p, cc2, match, data)
    incl1 = list(range(len(cc1p.basis1)))
    incl0 = list(range(len(cc1p.basis0)))
    proj1 = [None] * len(cc1p.basis1) + list(range(len(cc2.basis1)))
    proj0 = [None] * len(cc1p.basis0) + list(range(len(cc2.basis0)))
    s_ses = _ses_det_scalar(cc1p, ccB, cc2, incl1, incl0, proj1, proj0)
    ccG = relative_chain_complex(glued)

    def glued_half(tag, h):
        e, end = h.rsplit(".", 1)
        return ("1:" if tag == "1" else "2:") + e + "." + end

    def glued_cell(tag, cell):
        kind, name = cell
        return (kind, ("1:" if tag == "1" else "2:") + name)

    try:
        map1 = [ccG.index1(glued_half(tag, h)) for tag, h in ccB.basis1]
        map0 = [ccG.index0(glued_cell(tag, c)) for tag, c in ccB.basis0]
    except ValueError as exc:
        raise ResultInvalid(
            "glued cells disagree with the extension cells: %s" % exc)
    assert sorted(map1) == list(range(len(ccG.basis1)))
    assert sorted(map0) == list(range(len(ccG.basis0)))
    s_perm = _chain_iso_scalar(ccB, ccG, map1, map0)
    return (s_ses * s_perm) / s_drop, ccG, glued


def gluing_det_iso(g1, g2, match, d):
    """The gluing isomorphism on d-th tensor powers of det lines.

    Returns a :class:`GradedLine` whose degree is the degree of the
    glued line and whose scalar is the image of the canonical basis
    element of det(g1-line)^(x)d (x) det(g2-line)^(x)d, including the
    Koszul sign of interleaving the d copies of the two factors.
    """
    if d < 0:
        raise ValueError("tensor powers need d >= 0")
    try:
        scalar, ccG, _ = _gluing_scalar(g1, g2, match)
    except (ResultInvalid, AssertionError) as exc:
        raise NotGluable(str(exc)) from exc
    cc1 = relative_chain_complex(g1)
    cc2 = relative_chain_complex(g2)
    assert ccG.degree == cc1.degree + cc2.degree
    shuffle = -1 if (cc1.degree * cc2.degree * (d * (d - 1) // 2)) % 2 else 1
    return GradedLine(d * ccG.degree, Fraction(shuffle) * scalar ** d)


# ---------------------------------------------------------------------------
# skew-associativity of the composition product


def _circle_vertices(g, leaf):
    return {g.base.source(h) for h in g.circle_edges(leaf)}


def _arc_class(cc, g, from_vertices, to_vertices):
    """H1 class of an arc between two incoming circles.

    Breadth-first search through the extra edges; the chain of a step
    from ``u`` along edge ``e`` contributes the half at ``u`` minus the
    half at the far end, so its boundary telescopes to endpoint terms,
    which vanish relative to the incoming part.
    """
    base = g.base
    extra = {name for kind, name in cc.basis0 if kind == "E"}
    adj = {}
    for e in sorted(extra):
        u, v = base.edge_ends(e)
        adj.setdefault(u, []).append((e, v))
        adj.setdefault(v, []).append((e, u))
    prev = {v: None for v in sorted(from_vertices)}
    queue = sorted(from_vertices)
    found = None
    while queue:
        u = queue.pop(0)
        if u in to_vertices:
            found = u
            break
        for e, w in adj.get(u, ()):
            if w not in prev:
                prev[w] = (u, e)
                queue.append(w)
    assert found is not None, "incoming circles are not linked by extra edges"
    chain = [ZERO] * len(cc.basis1)
    cur = found
    while prev[cur] is not None:
        u, e = prev[cur]
        h0, h1 = base.edge_halves(e)
        if base.source(h0) == u:
            near, far = h0, h1
        else:
            near, far = h1, h0
        chain[cc.index1(near)] += ONE
        chain[cc.index1(far)] -= ONE
        cur = u
    return cc.h1_coords(chain)


def _composite_coefficient(inner, outer, in_slot):
    """Scalar of one stacking, measured in the geometric arc frame."""
    from .gluing import gluable
    match = gluable(inner, outer, pairs=[(0, in_slot)])
    scalar, ccG, glued = _gluing_scalar(inner, outer, match)
    if in_slot == 1:
        glued = glued.reorder_inputs(
            (glued.in_leaves[2], glued.in_leaves[0], glued.in_leaves[1]))
    circles = [_circle_vertices(glued, v) for v in glued.in_leaves]
    gamma12 = _arc_class(ccG, glued, circles[0], circles[1])
    gamma23 = _arc_class(ccG, glued, circles[1], circles[2])
    mat = linalg.columns_matrix([gamma12, gamma23])
    det_geo = linalg.det(mat)
    assert det_geo != 0, "arc classes fail to frame the glued homology"
    return scalar / det_geo


def skew_associativity_sign(d):
    """Ratio of the two ways of stacking two multiplications.

    Both stackings feed one pair-of-pants into an input of a second
    one whose incoming circles were pre-subdivided to the size of the
    outgoing cycle.  The two composite det-line isomorphisms are
    compared in the frame given by the arcs linking consecutive inputs
    of the three-input composite; the ratio is -1 to the d-th power.
    """
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    from .fixtures import pants, subdivided_incoming
    inner = pants()
    k_out = len(inner.leaf_cycle_normal_form(inner.out_leaves[0])) - 2
    outer = subdivided_incoming(pants(), k_out)
    c_left = _composite_coefficient(inner, outer, 0)
    c_right = _composite_coefficient(inner, outer, 1)
    ratio = c_left / c_right
    assert ratio in (ONE, -ONE), "stacking comparison is not a sign"
    return 1 if (ratio ** d) > 0 else -1

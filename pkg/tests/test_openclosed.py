import pytest

from fatcob import fixtures as fx
from fatcob.errors import (
    ClosedSharesCycle,
    InOutOverlap,
    NotALeaf,
    NotAdmissible,
)
from fatcob.graphs import new_fat_graph
from fatcob.openclosed import (
    check_positive_boundary,
    cobordism_signature,
    decorate,
    incoming_partition,
    is_admissible,
)


class TestDecorate:
    def test_open_closed_example(self):
        oc = fx.open_closed_example()
        assert oc.in_leaves == ("v", "z")
        assert oc.out_leaves == ("x", "y")
        assert oc.closed == {"v"}
        assert oc.open_leaves == ("z", "x", "y")

    def test_in_out_overlap(self):
        g = fx.interval().base
        with pytest.raises(InOutOverlap):
            decorate(g, ["p"], ["p"])

    def test_not_a_leaf(self):
        with pytest.raises(NotALeaf):
            decorate(fx.figure4(), ["u"], [])

    def test_closed_shares_cycle(self):
        g = fx.interval().base
        with pytest.raises(ClosedSharesCycle):
            decorate(g, ["p"], ["q"], {"p"})

    def test_leaf_cycle_normal_form(self):
        oc = fx.cylinder()
        assert oc.leaf_cycle_normal_form("p") == ("L.1", "L.0", "a.0")
        assert oc.circle_edges("q") == ("a.1",)


class TestAdmissible:
    def test_embedded_example_xy(self):
        g = fx.embedded_circle_example()
        for closed in ([], ["x"], ["y"], ["x", "y"]):
            oc = decorate(g, closed or ["x"], [], set(closed))
            ok, _ = is_admissible(oc)
            assert ok

    def test_embedded_example_z_fails(self):
        oc = decorate(fx.embedded_circle_example(), ["z"], [], {"z"})
        ok, witness = is_admissible(oc)
        assert not ok
        assert witness.leaf == "z"

    def test_vertex_repeat_witness(self):
        # two triangles wedged at a vertex: six distinct edges, the
        # marked cycle passes the wedge point twice
        g = new_fat_graph(
            ["c", "d1", "d2", "d3", "d4", "p"],
            [("a1", "c", "d1"), ("a2", "d1", "d2"), ("a3", "d2", "c"),
             ("b1", "c", "d3"), ("b2", "d3", "d4"), ("b3", "d4", "c"),
             ("L", "p", "c")],
            {"c": ["L.1", "a1.0", "a3.1", "b1.0", "b3.1"],
             "d1": ["a1.1", "a2.0"], "d2": ["a2.1", "a3.0"],
             "d3": ["b1.1", "b2.0"], "d4": ["b2.1", "b3.0"],
             "p": ["L.0"]})
        oc = decorate(g, ["p"], [], {"p"})
        ok, witness = is_admissible(oc)
        assert not ok
        assert witness.reason == "incoming cycle repeats a vertex"
        assert witness.cell == "c"

    def test_no_closed_incoming_is_vacuous(self):
        ok, _ = is_admissible(fx.flaps())
        assert ok

    def test_disjointness_required(self):
        # two closed incoming leaves marking loop circles through the
        # same vertex; each owns its cycle but the circles intersect
        g = new_fat_graph(
            ["u", "p1", "p2"],
            [("a", "u", "u"), ("b", "u", "u"),
             ("L1", "p1", "u"), ("L2", "p2", "u")],
            {"u": ["L1.1", "a.0", "b.1", "L2.1", "b.0", "a.1"],
             "p1": ["L1.0"], "p2": ["L2.0"]})
        oc = decorate(g, ["p1", "p2"], [], {"p1", "p2"})
        ok, witness = is_admissible(oc)
        assert not ok
        assert "intersect" in witness.reason
        assert witness.cell == "u"

    def test_invariant_under_subdivision(self):
        oc = fx.pants()
        base, _ = oc.base.subdivide_edge("a1")
        ok, _ = is_admissible(oc.with_base(base))
        assert ok

    def test_invariant_under_smoothing(self):
        from fatcob.morphisms import canonical_form
        from fatcob.openclosed import smooth_undecorated_bivalent
        oc = fx.subdivided_incoming(fx.pants(), 4)
        smoothed, _ = smooth_undecorated_bivalent(oc)
        ok, _ = is_admissible(smoothed)
        assert ok
        assert canonical_form(smoothed) == canonical_form(fx.pants())


class TestIncomingPartition:
    def test_cylinder_balance(self):
        part = incoming_partition(fx.cylinder())
        assert part.e_v == ("q",)
        assert part.e_e == ("M",)
        assert part.euler_difference == 0

    def test_pants_balance(self):
        part = incoming_partition(fx.pants())
        assert part.euler_difference == -1
        assert set(part.e_v) == {"q", "w"}
        assert set(part.e_e) == {"M", "r1", "r2"}

    def test_open_only(self):
        part = incoming_partition(fx.flaps())
        assert part.v_in == ("p1", "p2")
        assert part.e_in == ()

    def test_not_admissible_rejected(self):
        oc = decorate(fx.embedded_circle_example(), ["z"], [], {"z"})
        with pytest.raises(NotAdmissible):
            incoming_partition(oc)

    def test_balance_under_subdivision(self):
        oc = fx.pants()
        before = incoming_partition(oc).euler_difference
        base, _ = oc.base.subdivide_edge("r1")
        after = incoming_partition(oc.with_base(base)).euler_difference
        assert before == after == -1


class TestCobordismSignature:
    def test_open_closed_example(self):
        sig = cobordism_signature(fx.open_closed_example())
        assert sig.source == ("circle", "interval")
        assert sig.target == ("interval", "interval")
        assert [c.genus for c in sig.components] == [0]
        assert sig.components[0].boundary_count == 4
        assert sig.components[0].free_cycles == 1

    def test_cylinder(self):
        sig = cobordism_signature(fx.cylinder())
        assert sig.source == ("circle",)
        assert sig.target == ("circle",)
        assert sig.components[0].boundary_count == 2
        assert sig.components[0].genus == 0

    def test_pants(self):
        sig = cobordism_signature(fx.pants())
        assert sig.source == ("circle", "circle")
        assert sig.target == ("circle",)
        assert sig.components[0].boundary_count == 3

    def test_classification_is_partition(self):
        for oc in (fx.cylinder(), fx.pants(), fx.mouthpiece(), fx.flaps(),
                   fx.open_closed_example()):
            sig = cobordism_signature(oc)
            cycles = oc.base.boundary_cycles().cycles
            assert sorted(c.index for c in sig.cycle_classes) == \
                list(range(len(cycles)))


class TestPositiveBoundary:
    def test_disk_with_incoming_circle(self):
        assert not check_positive_boundary(fx.disk_closed_in())

    def test_cylinder(self):
        assert check_positive_boundary(fx.cylinder())

    def test_interval_both_incoming(self):
        assert not check_positive_boundary(fx.interval_in_in())

    def test_component_quantifier(self):
        oc = fx.oc_disjoint_union(fx.cylinder(), fx.disk_closed_in())
        assert not check_positive_boundary(oc)
        oc2 = fx.oc_disjoint_union(fx.cylinder(), fx.cylinder())
        assert check_positive_boundary(oc2)

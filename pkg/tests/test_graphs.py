"""Graph structure, classification, products, and whole-graph measures."""

import pytest

from artifact import BNN, DegenerateError, InputError, SVNN
from artifact.graphs import (
    NeutroGraph,
    cartesian,
    complete_graph,
    composition,
    graph_hausdorff,
    graph_prob_similarity,
    hausdorff_channel,
    join,
    union,
)

import refdata as rd


def approx(x, tol=1e-9):
    return pytest.approx(x, abs=tol)


class TestConstruction:
    def test_edges_stored_sorted(self):
        g = rd.graph_cycle_svnn()
        keys = [k for k, _ in g.edges]
        assert keys == sorted(keys)
        assert all(u < v for u, v in keys)

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(InputError):
            NeutroGraph(family="svnn", vertices=[("a", SVNN(0.5, 0.2, 0.3)),
                                                 ("a", SVNN(0.4, 0.2, 0.3))])

    def test_loop_rejected(self):
        with pytest.raises(InputError):
            NeutroGraph(family="svnn",
                        vertices={"a": SVNN(0.5, 0.2, 0.3)},
                        edges={("a", "a"): SVNN(0.2, 0.3, 0.4)})

    def test_missing_endpoint_rejected(self):
        with pytest.raises(InputError):
            NeutroGraph(family="svnn",
                        vertices={"a": SVNN(0.5, 0.2, 0.3)},
                        edges={("a", "b"): SVNN(0.2, 0.3, 0.4)})

    def test_family_typed_labels(self):
        with pytest.raises(InputError) as err:
            NeutroGraph(family="svnn", vertices={"a": BNN(0.5, 0.2, 0.3, -0.1, -0.2, -0.3)})
        assert err.value.kind == "family_mismatch"

    def test_unknown_family(self):
        with pytest.raises(InputError):
            NeutroGraph(family="hyper")

    def test_overbound_edge_loads_but_fails_validate(self):
        g = NeutroGraph(family="svnn",
                        vertices={"a": SVNN(0.5, 0.2, 0.3), "b": SVNN(0.4, 0.2, 0.3)},
                        edges={("a", "b"): SVNN(0.9, 0.3, 0.4)})
        violations = g.validate()
        assert len(violations) == 1 and "t" in violations[0]
        assert not g.is_valid()


class TestDegrees:
    def test_svnn_cycle_degrees(self):
        g = rd.graph_cycle_svnn()
        assert g.validate() == []
        for name, want in rd.CYCLE_DEGREES.items():
            assert g.degree(name) == approx(want)

    def test_bipolar_cycle_degrees(self):
        g = rd.graph_cycle_bnn()
        assert g.validate() == []
        for name, want in rd.BIPOLAR_DEGREES.items():
            assert g.degree(name) == approx(want)

    def test_constant_graph(self):
        g = rd.graph_constant_svnn()
        assert g.constant_degree() == approx(rd.CONSTANT_K)

    def test_cycle_not_constant(self):
        assert rd.graph_cycle_svnn().constant_degree() is None

    def test_regular_but_not_constant(self):
        g = rd.graph_regular_bnn()
        assert g.neighborhood_degree("v1") == approx(rd.REGULAR_ND)
        cls = g.classify()
        assert cls["regular"] is not None
        assert cls["constant"] is None

    def test_total_degree_adds_own_label(self):
        g = rd.graph_cycle_svnn()
        own = g.vertex_map()["v1"].as_tuple()
        want = tuple(d + c for d, c in zip(g.degree("v1"), own))
        assert g.total_degree("v1") == approx(want)

    def test_unknown_vertex(self):
        with pytest.raises(InputError):
            rd.graph_cycle_svnn().degree("v9")


class TestCompleteAndComplement:
    VERTS = {"a": SVNN(0.5, 0.2, 0.3), "b": SVNN(0.7, 0.1, 0.2), "c": SVNN(0.4, 0.3, 0.3)}

    def test_complete_graph(self):
        g = complete_graph("svnn", dict(self.VERTS))
        assert g.validate() == []
        assert g.is_complete()
        assert len(g.edges) == 3

    def test_complement_of_complete_is_edgeless(self):
        g = complete_graph("svnn", dict(self.VERTS))
        assert g.complement().edges == ()

    def test_double_complement_restores_strong(self):
        g = complete_graph("svnn", {"a": SVNN(0.5, 0.2, 0.3), "b": SVNN(0.7, 0.1, 0.2)})
        back = g.complement().complement()
        assert back.edge_map().keys() == g.edge_map().keys()
        for key, label in g.edge_map().items():
            assert back.edge_map()[key].as_tuple() == approx(label.as_tuple())

    def test_complement_keeps_vertices(self):
        g = rd.graph_cycle_svnn()
        assert g.complement().vertex_names() == g.vertex_names()


class TestProducts:
    def test_cartesian_reference(self):
        ga, gb = rd.ivnn_graph_pair()
        prod = cartesian(ga, gb)
        assert prod.validate() == []
        assert len(prod.vertices) == 4 and len(prod.edges) == 4
        vmap = prod.vertex_map()
        for name, want in rd.CARTESIAN_VERTICES.items():
            flat = [x for pair in want for x in pair]
            assert vmap[name].bounds() == approx(flat)
        emap = prod.edge_map()
        for key, want in rd.CARTESIAN_EDGES.items():
            flat = [x for pair in want for x in pair]
            assert emap[key].bounds() == approx(flat)

    def test_composition_closure(self):
        ga, gb = rd.ivnn_graph_pair()
        comp = composition(ga, gb)
        assert comp.validate() == []
        # composition keeps the cartesian edges and adds the cross pairs
        assert len(comp.edges) >= 4

    def test_union_closure(self):
        ga, _ = rd.ivnn_graph_pair()
        twin = NeutroGraph(family="ivnn", vertices=dict(ga.vertices), edges=dict(ga.edges))
        gu = union(ga, twin)
        assert gu.validate() == []
        assert gu.vertex_names() == ga.vertex_names()

    def test_join_closure_and_cross_edges(self):
        ga, gb = rd.ivnn_graph_pair()
        gj = join(ga, gb)
        assert gj.validate() == []
        # join adds every cross pair: 1 + 1 + 2*2
        assert len(gj.edges) == 6

    def test_join_requires_disjoint_names(self):
        ga, _ = rd.ivnn_graph_pair()
        with pytest.raises(InputError):
            join(ga, ga)

    def test_product_families_must_match(self):
        ga, _ = rd.ivnn_graph_pair()
        with pytest.raises(InputError):
            cartesian(ga, rd.graph_cycle_svnn())

    def test_separator_collision_rejected(self):
        g = NeutroGraph(family="svnn", vertices={"a|b": SVNN(0.5, 0.2, 0.3)})
        with pytest.raises(InputError):
            cartesian(g, rd.graph_cycle_svnn())


class TestGraphHausdorff:
    def test_truth_channel_spot_value(self):
        gs1 = NeutroGraph(family="svnn",
                          vertices={"x": SVNN(0.0, 0.0, 0.0), "y": SVNN(0.5, 0.0, 0.0)})
        gs2 = NeutroGraph(family="svnn",
                          vertices={"x": SVNN(0.2, 0.0, 0.0), "y": SVNN(0.9, 0.0, 0.0)})
        d = graph_hausdorff(gs1, gs2, form="ngd")
        assert d[0] == approx(0.4)

    def test_identical_graph_zero(self):
        g = rd.graph_constant_svnn()
        assert graph_hausdorff(g, g, form="ngd") == approx((0.0, 0.0, 0.0))
        assert graph_hausdorff(g, g, form="mngd") == approx((0.0, 0.0, 0.0))

    def test_symmetric(self):
        g1 = rd.graph_cycle_svnn()
        g2 = rd.graph_constant_svnn()
        for form in ("ngd", "mngd"):
            assert graph_hausdorff(g1, g2, form=form) == approx(
                graph_hausdorff(g2, g1, form=form)
            )

    def test_mngd_triangle_counterexample(self):
        # pinned witness: the mean-of-min truth deviation is not a metric
        A, B, C = (0.0, 0.1, 1.0), (0.0, 1.0), (1.0,)
        d_ac = hausdorff_channel(A, C, "mean", "min")
        d_ab = hausdorff_channel(A, B, "mean", "min")
        d_bc = hausdorff_channel(B, C, "mean", "min")
        assert d_ac == approx(0.633333, tol=1e-6)
        assert d_ab + d_bc == approx(0.533333, tol=1e-6)
        assert d_ac > d_ab + d_bc

    def test_needs_svnn_family(self):
        with pytest.raises(InputError) as err:
            graph_hausdorff(rd.graph_cycle_bnn(), rd.graph_cycle_bnn())
        assert err.value.kind == "family_mismatch"

    def test_unknown_form(self):
        g = rd.graph_cycle_svnn()
        with pytest.raises(InputError):
            graph_hausdorff(g, g, form="frechet")


class TestProbSimilarity:
    def test_identical_truth_similarity_one(self):
        g = NeutroGraph(family="svnn",
                        vertices={"x": SVNN(0.5, 0.2, 0.3), "y": SVNN(0.6, 0.1, 0.2)},
                        edges={("x", "y"): SVNN(0.45, 0.25, 0.35)})
        s = graph_prob_similarity(g, g, sigma=0.5)
        assert s[0] == approx(1.0)

    def test_edgeless_degenerate(self):
        g1 = rd.graph_cycle_svnn()
        g2 = NeutroGraph(family="svnn", vertices={"x": SVNN(0.5, 0.2, 0.3)})
        with pytest.raises(DegenerateError):
            graph_prob_similarity(g1, g2)

    def test_sigma_positive(self):
        g = rd.graph_cycle_svnn()
        with pytest.raises(InputError):
            graph_prob_similarity(g, g, sigma=0.0)

    def test_values_in_unit_interval(self):
        s = graph_prob_similarity(rd.graph_cycle_svnn(), rd.graph_constant_svnn())
        assert all(0.0 <= x <= 1.0 for x in s)

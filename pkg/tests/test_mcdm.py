"""Decision pipelines against frozen oracles: stages, rankings, errors."""

import pytest

from artifact import DegenerateError, IVNN, InputError, SVNN
from artifact.measures import DistanceSpec
from artifact.mcdm import (
    GraParams,
    ProjParams,
    entropy_madm_rank,
    gra_rank,
    hybrid_group_rank,
    ideal_distance_rank,
    projection_rank,
    svnsf_screen,
    topsis_bipolar_rank,
    topsis_refined_rank,
    zone_of,
)
from artifact.mcdm.entropy_madm import ideal_scores
from artifact.problem import DecisionProblem

import refdata as rd


def approx(x, tol=1e-9):
    return pytest.approx(x, abs=tol)


def triple_spec(form="hamming", lam=1.0):
    return DistanceSpec(
        family="svnhf",
        form=form,
        lam=lam,
        weights=rd.W_TRIPLE_T,
        weights_i=rd.W_TRIPLE_I,
        weights_f=rd.W_TRIPLE_F,
    )


class TestIdealDistance:
    @pytest.mark.parametrize("lam", [1, 2, 5, 10])
    def test_triple_weighted_sweep(self, lam):
        spec = triple_spec(form="generalized", lam=float(lam))
        trail = ideal_distance_rank(rd.investment_problem(), spec)
        assert trail.get("distances") == approx(rd.FROZEN_SL_SWEEP[lam], tol=5e-7)
        assert trail.ranking.order == rd.SL_ORDERS[lam]
        assert trail.ranking.direction == "asc"

    @pytest.mark.parametrize("lam", [1, 2, 5, 10])
    def test_biswas_normalized_sweep(self, lam):
        spec = DistanceSpec(
            family="svnhf",
            form="generalized",
            lam=float(lam),
            weights=rd.W_SINGLE,
            normalization="biswas_l",
        )
        trail = ideal_distance_rank(rd.investment_problem(), spec)
        assert trail.get("distances") == approx(rd.FROZEN_BISWAS[lam], tol=5e-7)
        assert trail.ranking.order == rd.BISWAS_ORDERS[lam]

    def test_problem_weights_fallback(self):
        trail = ideal_distance_rank(rd.investment_problem(weights=rd.W_YE))
        assert trail.get("distances")[1] == approx(0.236667, tol=5e-7)

    def test_ideal_row_in_trail(self):
        trail = ideal_distance_rank(rd.investment_problem())
        ideal = trail.get("ideal")
        assert all(cell.t == (1.0,) and cell.i == (0.0,) for cell in ideal)

    def test_cost_criterion_uses_anti_ideal(self):
        prob = DecisionProblem(
            alternatives=("A1",),
            criteria=(("C1", "cost"),),
            family="svnhf",
            cells=[[rd.H((0.2,), (0.8,), (0.9,))]],
        )
        ideal = ideal_distance_rank(prob).get("ideal")[0]
        assert ideal.t == (0.0,) and ideal.i == (1.0,) and ideal.f == (1.0,)

    def test_exact_ideal_row_ranks_first(self):
        cells = rd.investment_cells()
        cells.append([rd.H((1.0,), (0.0,), (0.0,))] * 3)
        prob = DecisionProblem(
            alternatives=("A1", "A2", "A3", "A4", "A5"),
            criteria=rd.investment_problem().criteria,
            family="svnhf",
            cells=cells,
        )
        trail = ideal_distance_rank(prob)
        assert trail.get("distances")[4] == approx(0.0)
        assert trail.ranking.best() == 4

    def test_family_mismatch(self):
        with pytest.raises(InputError) as err:
            ideal_distance_rank(rd.car_problem())
        assert err.value.kind == "family_mismatch"


class TestGra:
    def trail(self):
        return gra_rank(rd.investment_problem(weights=rd.W_SINGLE))

    def test_reference_cells(self):
        trail = self.trail()
        pis, nis = trail.get("pis"), trail.get("nis")
        cells = rd.investment_cells()
        alt_index = {"A1": 0, "A2": 1, "A3": 2, "A4": 3}
        for j, name in enumerate(rd.GRA_PIS):
            assert pis[j] == cells[alt_index[name]][j]
        for j, name in enumerate(rd.GRA_NIS):
            assert nis[j] == cells[alt_index[name]][j]

    def test_coefficient_matrices(self):
        trail = self.trail()
        for got_row, want_row in zip(trail.get("coefficients_pos"), rd.FROZEN_GRA_XI_POS):
            assert got_row == approx(want_row, tol=1e-6)
        for got_row, want_row in zip(trail.get("coefficients_neg"), rd.FROZEN_GRA_XI_NEG):
            assert got_row == approx(want_row, tol=1e-6)

    def test_degrees_and_closeness(self):
        trail = self.trail()
        assert trail.get("degree_pos") == approx(rd.FROZEN_GRA_DEG_POS, tol=5e-7)
        assert trail.get("degree_neg") == approx(rd.FROZEN_GRA_DEG_NEG, tol=5e-7)
        assert trail.get("closeness") == approx(rd.FROZEN_GRA_CLOSE, tol=5e-7)

    def test_ranking(self):
        trail = self.trail()
        assert trail.ranking.order == rd.GRA_ORDER
        assert trail.ranking.direction == "desc"

    def test_equal_weights_default(self):
        trail = gra_rank(rd.investment_problem())
        row = trail.get("coefficients_pos")[0]
        assert trail.get("degree_pos")[0] == approx(sum(row) / 3)

    def test_rho_validated(self):
        with pytest.raises(InputError):
            GraParams(rho=1.5)

    def test_family_mismatch(self):
        with pytest.raises(InputError) as err:
            gra_rank(rd.car_problem())
        assert err.value.kind == "family_mismatch"


class TestTopsisBipolar:
    def trail(self):
        return topsis_bipolar_rank(rd.car_problem())

    def test_derived_weights(self):
        assert self.trail().get("weights") == approx(rd.FROZEN_CAR_WEIGHTS, tol=5e-7)

    def test_weighted_cell(self):
        cell = self.trail().get("weighted")[0][0]
        assert cell.as_tuple() == approx(rd.REF_CAR_WCELL, tol=5e-4)

    def test_separations_frozen(self):
        trail = self.trail()
        assert trail.get("d_pos") == approx(rd.FROZEN_CAR_DPOS, tol=5e-7)
        assert trail.get("d_neg") == approx(rd.FROZEN_CAR_DNEG, tol=5e-7)

    def test_closeness_and_ranking(self):
        trail = self.trail()
        assert trail.get("closeness") == approx(rd.FROZEN_CAR_CC, tol=5e-7)
        assert trail.ranking.order == rd.FROZEN_CAR_ORDER
        assert trail.ranking.direction == "desc"

    def test_alternate_weights_best(self):
        trail = topsis_bipolar_rank(rd.car_problem(weights=rd.CAR_ALT_WEIGHTS))
        assert trail.get("closeness") == approx(rd.FROZEN_CAR_ALT_CC, tol=5e-7)
        assert trail.ranking.best() == 3

    def test_family_mismatch(self):
        with pytest.raises(InputError) as err:
            topsis_bipolar_rank(rd.svnsf_problem())
        assert err.value.kind == "family_mismatch"


class TestTopsisRefined:
    def trail(self):
        return topsis_refined_rank(rd.refined_problem())

    def test_dm_weights(self):
        assert self.trail().get("dm_weights") == approx(rd.FROZEN_REFINED_DMW, tol=5e-7)

    def test_aggregated_cells(self):
        agg = self.trail().get("aggregated")
        assert agg[0][0].as_tuple() == approx(rd.REF_REFINED_AGG_A1C1, tol=5e-3)
        assert agg[1][4].as_tuple() == approx(rd.REF_REFINED_AGG_A2C5, tol=5e-3)

    def test_criteria_weights_cell(self):
        wbar = self.trail().get("criteria_weights")
        assert wbar[0].as_tuple() == approx(rd.REF_REFINED_WBAR_C1, tol=5e-3)

    def test_weighted_cell(self):
        cell = self.trail().get("weighted")[0][0]
        assert cell.as_tuple() == approx(rd.REF_REFINED_WCELL_A1C1, tol=5e-3)

    def test_separations_frozen(self):
        trail = self.trail()
        assert trail.get("d_pos") == approx(rd.FROZEN_REFINED_DPOS, tol=5e-7)
        assert trail.get("d_neg") == approx(rd.FROZEN_REFINED_DNEG, tol=5e-7)

    def test_closeness_and_best(self):
        trail = self.trail()
        assert trail.get("closeness") == approx(rd.FROZEN_REFINED_R, tol=5e-7)
        assert trail.ranking.direction == "asc"
        assert trail.ranking.best() == 2

    def test_needs_dm_layers(self):
        with pytest.raises(InputError):
            topsis_refined_rank(rd.svnsf_problem())


class TestProjection:
    def trail(self, xi=0.5):
        return projection_rank(rd.projection_problem(), ProjParams(xi=xi))

    def test_derived_weights(self):
        assert self.trail().get("weights") == approx(rd.FROZEN_PROJ_WEIGHTS, tol=5e-7)

    def test_projection_rows(self):
        trail = self.trail()
        assert trail.get("projection") == approx(rd.FROZEN_PROJ, tol=5e-7)
        assert trail.get("weighted_projection") == approx(rd.FROZEN_PROJW, tol=5e-7)
        assert trail.get("cosine") == approx(rd.FROZEN_PROJ_COS, tol=5e-7)
        assert trail.get("hybrid") == approx(rd.FROZEN_PROJ_HYBRID, tol=5e-7)

    @pytest.mark.parametrize("xi", sorted(rd.PROJ_XI_ORDERS))
    def test_xi_sweep_orders(self, xi):
        trail = self.trail(xi=xi)
        got = tuple("h%d" % (k + 1) for k in trail.ranking.order)
        assert got == rd.PROJ_XI_ORDERS[xi]

    def test_cost_criteria_standardized(self):
        scale = rd.IVNN_SCALE
        prob = DecisionProblem(
            alternatives=("h1", "h2"),
            criteria=(("k1", "benefit"), ("k2", "cost")),
            family="ivnn",
            cells=[[IVNN(*scale["G"]), IVNN(*scale["VG"])],
                   [IVNN(*scale["M"]), IVNN(*scale["L"])]],
            weights=(0.5, 0.5),
        )
        std = projection_rank(prob).get("standardized")
        want = IVNN(*scale["VG"])
        got = std[0][1]
        # complemented: truth and falsity swap, indeterminacy reflects
        assert got.bounds()[:2] == want.bounds()[4:6]

    def test_xi_validated(self):
        with pytest.raises(InputError):
            ProjParams(xi=-0.2)

    def test_zero_profile_degenerate(self):
        zero = IVNN((0, 0), (0, 0), (0, 0))
        prob = DecisionProblem(
            alternatives=("h1", "h2"),
            criteria=(("k1", "benefit"),),
            family="ivnn",
            cells=[[zero], [zero]],
            weights=(1.0,),
        )
        with pytest.raises(DegenerateError):
            projection_rank(prob)

    def test_family_mismatch(self):
        with pytest.raises(InputError):
            projection_rank(rd.svnsf_problem())


class TestHybridGroup:
    def trail(self):
        return hybrid_group_rank(rd.hybrid_problem())

    def test_mean_score_row(self):
        assert self.trail().get("mean_scores")[0] == approx(rd.HYBRID_MEAN_B1)

    def test_omega_gamma(self):
        trail = self.trail()
        assert trail.get("omega") == approx(rd.FROZEN_HYBRID_OMEGA, tol=5e-7)
        assert trail.get("gamma") == approx(rd.FROZEN_HYBRID_GAMMA, tol=5e-7)

    def test_lp_weights_and_scores(self):
        trail = self.trail()
        assert trail.get("weights") == approx(rd.FROZEN_HYBRID_W)
        assert trail.get("scores") == approx(rd.FROZEN_HYBRID_PSI, tol=5e-7)

    def test_explicit_weights_scores(self):
        trail = hybrid_group_rank(rd.hybrid_problem(weights=rd.REF_HYBRID_W))
        assert trail.get("scores") == approx(rd.FROZEN_HYBRID_PSI_REFW, tol=5e-7)
        assert trail.ranking.order == rd.HYBRID_ORDER_REFW
        assert trail.ranking.direction == "desc"

    def test_equal_weight_fallback(self):
        trail = hybrid_group_rank(rd.hybrid_problem(with_bounds=False))
        assert trail.get("weights") == approx((1 / 6,) * 6)

    def test_alpha_validated(self):
        with pytest.raises(InputError):
            hybrid_group_rank(rd.hybrid_problem(), alpha=1.2)

    def test_needs_dm_layers(self):
        with pytest.raises(InputError):
            hybrid_group_rank(rd.svnsf_problem())


class TestEntropyMadm:
    def trail(self, scheme="lstmm"):
        return entropy_madm_rank(rd.agv_problem(), scheme=scheme)

    def test_entropy_row(self):
        assert self.trail().get("entropy") == approx(rd.FROZEN_AGV_E, tol=5e-7)

    def test_weights_row(self):
        got = self.trail().get("weights")
        assert got == approx(rd.FROZEN_AGV_W, tol=5e-7)
        assert sum(got) == approx(1.0)

    def test_scores_row(self):
        assert self.trail().get("scores") == approx(rd.FROZEN_AGV_AW, tol=5e-7)

    def test_lstmm_ranking(self):
        assert self.trail().ranking.order == rd.AGV_LSTMM_ORDER

    @pytest.mark.parametrize("scheme", sorted(rd.AGV_RANK_COLUMNS))
    def test_rank_columns(self, scheme):
        order = self.trail(scheme).ranking.order
        pos = [0] * 8
        for r, idx in enumerate(order):
            pos[idx] = r + 1
        assert tuple(pos) == rd.AGV_RANK_COLUMNS[scheme]

    def test_ideal_scores_with_external_weights(self):
        trail = self.trail()
        got = ideal_scores(trail.get("lifted"), rd.agv_problem().kinds, rd.REF_AGV_W)
        assert got == approx(rd.REF_AGV_AW, tol=5e-4)

    def test_unknown_scheme(self):
        with pytest.raises(InputError):
            entropy_madm_rank(rd.agv_problem(), scheme="zscore")

    def test_lstmm_zero_cost_degenerate(self):
        prob = DecisionProblem(
            alternatives=("A1", "A2"),
            criteria=(("C1", "cost"),),
            family="crisp",
            cells=((0.0,), (0.5,)),
        )
        with pytest.raises(DegenerateError):
            entropy_madm_rank(prob, scheme="lstmm")

    def test_lstmmm_constant_column_degenerate(self):
        prob = DecisionProblem(
            alternatives=("A1", "A2"),
            criteria=(("C1", "benefit"),),
            family="crisp",
            cells=((0.4,), (0.4,)),
        )
        with pytest.raises(DegenerateError):
            entropy_madm_rank(prob, scheme="lstmmm")

    def test_family_mismatch(self):
        with pytest.raises(InputError):
            entropy_madm_rank(rd.svnsf_problem())


class TestSvnsfScreen:
    def trail(self):
        return svnsf_screen(rd.svnsf_problem())

    def test_scores(self):
        assert self.trail().get("scores") == approx(rd.REF_SVNSF_SCORES, tol=5e-5)

    def test_tie_groups(self):
        ties = self.trail().ranking.ties
        got = {tuple(sorted(group)) for group in ties}
        assert got == {tuple(sorted(g)) for g in rd.SVNSF_TIE_GROUPS}

    def test_order_respects_groups(self):
        order = self.trail().ranking.order
        assert order[0] == 3  # C4 first
        assert set(order[1:3]) == {0, 1}  # C1 = C2
        assert order[3] == 2
        assert set(order[4:6]) == {4, 5}  # C5 = C6
        assert order[6] == 6

    def test_zones(self):
        assert self.trail().get("zones") == rd.SVNSF_ZONES

    def test_zone_boundaries(self):
        assert zone_of(0.5) == "high"
        assert zone_of(0.49) == "tolerable"
        assert zone_of(0.25) == "tolerable"
        assert zone_of(0.24) == "unacceptable"

    def test_family_mismatch(self):
        with pytest.raises(InputError):
            svnsf_screen(rd.car_problem())

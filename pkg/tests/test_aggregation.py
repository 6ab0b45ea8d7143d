"""Scalar operators, SVNN aggregation and the weight-derivation schemes."""

import pytest

from artifact import BNN, DegenerateError, InputError, SVNN
from artifact.aggregation import (
    WeightBounds,
    check_weights,
    crispify_dm_weights,
    entropy_values,
    entropy_weights,
    gisvwag,
    giwagm,
    isvwag,
    iwagm,
    lp_criteria_weights,
    maximizing_deviation_weights,
    refined_group_aggregate,
    wam,
    wgm,
)
from artifact.core.ops import svnn_weighted_average, svnn_weighted_geometric
from artifact.measures import bnn_distance

import refdata as rd


def approx(x, tol=1e-9):
    return pytest.approx(x, abs=tol)


class TestScalarOperators:
    # reference scalar cases: 0.001728 and 0.5684
    def test_iwagm_reference_cases(self):
        assert iwagm((0.0001, 1.0), (0.9, 0.1)) == approx(0.001728, tol=5e-6)
        assert iwagm((0.0001, 1.0), (0.1, 0.9)) == approx(0.5684, tol=5e-4)

    def test_sandwich_spot(self):
        vals, w = (0.3, 0.8, 0.55), (0.2, 0.5, 0.3)
        assert wgm(vals, w) <= iwagm(vals, w) <= wam(vals, w)

    def test_idempotent(self):
        assert iwagm((0.37, 0.37), (0.5, 0.5)) == approx(0.37)

    def test_giwagm_k2_reduces(self):
        vals, w = (0.25, 0.7, 0.5), (0.3, 0.3, 0.4)
        assert giwagm(vals, w, k=2) == approx(iwagm(vals, w))

    def test_giwagm_rejects_zero_k(self):
        with pytest.raises(InputError):
            giwagm((0.5, 0.5), (0.5, 0.5), k=0)

    def test_values_outside_unit_rejected(self):
        with pytest.raises(InputError):
            iwagm((1.2, 0.5), (0.5, 0.5))

    def test_weights_must_sum_to_one(self):
        with pytest.raises(InputError):
            iwagm((0.5, 0.5), (0.6, 0.6))


class TestSVNNAggregation:
    def columns(self):
        return rd.network_rows()

    def aggregate_rows(self, op):
        return [op(row, rd.NETWORK_W) for row in self.columns()]

    def test_componentwise_average_rows(self):
        rows = self.aggregate_rows(
            lambda vals, w: svnn_weighted_average(vals, w, law="componentwise")
        )
        for got, want in zip(rows, rd.REF_SVWA_ROWS):
            assert got.as_tuple() == approx(want, tol=5e-3)

    def test_componentwise_geometric_rows(self):
        rows = self.aggregate_rows(
            lambda vals, w: svnn_weighted_geometric(vals, w, law="componentwise")
        )
        for got, want in zip(rows, rd.REF_SVWG_ROWS):
            assert got.as_tuple() == approx(want, tol=5e-3)

    def test_isvwag_rows(self):
        rows = self.aggregate_rows(isvwag)
        for got, want in zip(rows, rd.REF_ISVWAG_ROWS):
            assert got.as_tuple() == approx(want, tol=5e-3)

    def test_isvwag_tight_cell(self):
        got = isvwag(self.columns()[0], rd.NETWORK_W)
        assert got.as_tuple() == approx((0.254226, 0.172108, 0.303137), tol=5e-5)

    def test_isvwag_not_idempotent(self):
        got = isvwag([SVNN(0.2, 0.2, 0.2)] * 3, (0.35, 0.25, 0.40))
        assert got.t == approx(0.172108, tol=5e-6)

    def test_gisvwag_k2_reduces(self):
        row = self.columns()[1]
        a = gisvwag(row, rd.NETWORK_W, k=2)
        b = isvwag(row, rd.NETWORK_W)
        assert a.as_tuple() == approx(b.as_tuple())

    def test_refined_group_aggregate(self):
        cells = [SVNN(*rd.REFINED_D[d]["A1"][0]) for d in ("D1", "D2", "D3", "D4")]
        got = refined_group_aggregate(cells, rd.FROZEN_REFINED_DMW)
        assert got.as_tuple() == approx(rd.REF_REFINED_AGG_A1C1, tol=5e-3)


class TestCheckWeights:
    def test_passthrough(self):
        assert check_weights((0.35, 0.25, 0.40)) == (0.35, 0.25, 0.40)

    def test_length_pin(self):
        with pytest.raises(InputError):
            check_weights((0.5, 0.5), n=3)

    def test_negative_rejected(self):
        with pytest.raises(InputError):
            check_weights((-0.1, 0.6, 0.5))

    def test_sum_enforced(self):
        with pytest.raises(InputError):
            check_weights((0.3, 0.3, 0.3))

    def test_empty_rejected(self):
        with pytest.raises(InputError):
            check_weights(())


class TestWeightBounds:
    def test_feasible(self):
        wb = WeightBounds(pairs=rd.HYBRID_BOUNDS)
        assert len(wb) == 6

    def test_lower_sum_above_one(self):
        with pytest.raises(InputError):
            WeightBounds(pairs=[(0.6, 0.7), (0.5, 0.8)])

    def test_upper_sum_below_one(self):
        with pytest.raises(InputError):
            WeightBounds(pairs=[(0.1, 0.2), (0.1, 0.3)])

    def test_inverted_pair(self):
        with pytest.raises(InputError):
            WeightBounds(pairs=[(0.5, 0.2), (0.1, 0.9)])


class TestCrispify:
    def test_reference_values(self):
        got = crispify_dm_weights([SVNN(*v) for v in rd.REFINED_DM_VALUES])
        assert got == approx(rd.FROZEN_REFINED_DMW, tol=5e-6)
        assert sum(got) == approx(1.0)

    def test_degenerate_all_zero(self):
        with pytest.raises(DegenerateError):
            crispify_dm_weights([SVNN(0.0, 1.0, 1.0)] * 3)

    def test_empty(self):
        with pytest.raises(InputError):
            crispify_dm_weights([])


class TestEntropyWeights:
    def lifted(self):
        # benefit columns lift R to (R, 1-R, 1-R); cost column used complemented
        matrix = []
        for row in ((0.9, 0.2), (0.4, 0.7)):
            matrix.append([SVNN(r, 1 - r, 1 - r) for r in row])
        return matrix

    def test_entropy_formula(self):
        m = self.lifted()
        got = entropy_values(m)
        want = []
        for j in range(2):
            acc = sum((m[i][j].t + m[i][j].f) * abs(2 * m[i][j].i - 1) for i in range(2))
            want.append(1 - acc / 2)
        assert got == approx(tuple(want))

    def test_weights_normalized(self):
        w = entropy_weights(self.lifted())
        assert sum(w) == approx(1.0)
        assert all(x >= 0 for x in w)

    def test_uninformative_matrix_degenerate(self):
        flat = [[SVNN(1.0, 0.5, 0.0)], [SVNN(1.0, 0.5, 0.0)]]
        with pytest.raises(DegenerateError):
            entropy_weights(flat)

    def test_ragged_rejected(self):
        with pytest.raises(InputError):
            entropy_values([[SVNN(0.5, 0.5, 0.5)], []])


class TestMaximizingDeviation:
    def test_bipolar_reference_weights(self):
        matrix = [[BNN(*c) for c in row] for row in rd.CAR_RAW]
        got = maximizing_deviation_weights(
            matrix, lambda a, b: bnn_distance([a], [b], form="normalized_hamming")
        )
        assert got == approx(rd.FROZEN_CAR_WEIGHTS, tol=5e-6)
        assert got == approx(rd.REF_CAR_WEIGHTS, tol=5e-3)

    def test_single_alternative_rejected(self):
        matrix = [[BNN(*c) for c in rd.CAR_RAW[0]]]
        with pytest.raises(InputError):
            maximizing_deviation_weights(
                matrix, lambda a, b: bnn_distance([a], [b], form="normalized_hamming")
            )

    def test_constant_columns_degenerate(self):
        row = [BNN(*c) for c in rd.CAR_RAW[0]]
        with pytest.raises(DegenerateError):
            maximizing_deviation_weights(
                [row, row], lambda a, b: bnn_distance([a], [b], form="normalized_hamming")
            )


class TestLPWeights:
    def hybrid_H(self):
        from artifact.mcdm import hybrid_group_rank
        trail = hybrid_group_rank(rd.hybrid_problem())
        return trail.get("collective")

    def test_reference_solution(self):
        H = self.hybrid_H()
        got = lp_criteria_weights(H, WeightBounds(pairs=rd.HYBRID_BOUNDS))
        assert got == approx(rd.FROZEN_HYBRID_W)

    def test_respects_box_and_simplex(self):
        H = self.hybrid_H()
        got = lp_criteria_weights(H, WeightBounds(pairs=rd.HYBRID_BOUNDS))
        assert sum(got) == approx(1.0)
        for w, (lo, hi) in zip(got, rd.HYBRID_BOUNDS):
            assert lo - 1e-12 <= w <= hi + 1e-12

    def test_bounds_length_mismatch(self):
        with pytest.raises(InputError):
            lp_criteria_weights([[0.5, 0.5]], WeightBounds(pairs=[(0.0, 1.0)] * 3))

    def test_empty_matrix(self):
        with pytest.raises(InputError):
            lp_criteria_weights([], WeightBounds(pairs=[(0.0, 1.0)]))

"""Group TOPSIS with crispified decision-maker weights."""

from __future__ import annotations

import math

from ..errors import InputError
from ..core.values import SVNN
from ..core.ops import _psum
from ..problem import Trail, rank_by
from ..aggregation.weights import crispify_dm_weights
from ..aggregation.svnn_ops import refined_group_aggregate


def _otimes(a, b):
    """Triple product: truths multiply, the other channels combine dually."""
    return SVNN(a.t * b.t, _psum(a.i, b.i), _psum(a.f, b.f))


def _euclid_to(row, ref, q):
    total = 0.0
    for cell, ideal in zip(row, ref):
        total += (
            (cell.t - ideal.t) ** 2 + (cell.i - ideal.i) ** 2 + (cell.f - ideal.f) ** 2
        )
    return math.sqrt(total / (3.0 * q))


def topsis_refined_rank(problem):
    """Group TOPSIS: aggregate layers geometrically, weight, rank by closeness.

    Decision-maker reliability triples are crispified into a weight vector;
    both the cell layers and the per-maker criterion-weight triples are then
    aggregated with the componentwise weighted geometric before the usual
    ideal-separation stage. Smaller relative closeness is better.
    """
    if problem.family != "svnn":
        raise InputError("refined group TOPSIS needs single-valued cells", kind="family_mismatch")
    if problem.dm_layers is None:
        raise InputError("refined group TOPSIS needs dm_layers", kind="shape")
    if problem.dm_weights is None:
        raise InputError("refined group TOPSIS needs dm_weights", kind="shape")
    if problem.criteria_weight_layers is None:
        raise InputError(
            "refined group TOPSIS needs criteria_weight_layers", kind="shape"
        )
    layers = problem.dm_layers
    n_dm = len(layers)
    n_alt, n_crit = len(layers[0]), len(layers[0][0])
    if len(problem.dm_weights) != n_dm:
        raise InputError("one reliability triple per decision maker", kind="shape")
    if len(problem.criteria_weight_layers) != n_dm or any(
        len(row) != n_crit for row in problem.criteria_weight_layers
    ):
        raise InputError(
            "criteria_weight_layers must be makers x criteria", kind="shape"
        )

    trail = Trail(method="topsis-refined")
    gamma = crispify_dm_weights(problem.dm_weights)
    trail.add("dm_weights", gamma)

    aggregated = tuple(
        tuple(
            refined_group_aggregate([layers[k][i][j] for k in range(n_dm)], gamma)
            for j in range(n_crit)
        )
        for i in range(n_alt)
    )
    trail.add("aggregated", aggregated)

    crit_weights = tuple(
        refined_group_aggregate(
            [problem.criteria_weight_layers[k][j] for k in range(n_dm)], gamma
        )
        for j in range(n_crit)
    )
    trail.add("criteria_weights", crit_weights)

    weighted = tuple(
        tuple(_otimes(aggregated[i][j], crit_weights[j]) for j in range(n_crit))
        for i in range(n_alt)
    )
    trail.add("weighted", weighted)

    pis, nis = [], []
    for j, kind in enumerate(problem.kinds):
        col = [weighted[i][j] for i in range(n_alt)]
        best = SVNN(max(c.t for c in col), min(c.i for c in col), min(c.f for c in col))
        worst = SVNN(min(c.t for c in col), max(c.i for c in col), max(c.f for c in col))
        if kind == "cost":
            best, worst = worst, best
        pis.append(best)
        nis.append(worst)
    trail.add("pis", tuple(pis))
    trail.add("nis", tuple(nis))

    d_pos = tuple(_euclid_to(row, pis, n_crit) for row in weighted)
    d_neg = tuple(_euclid_to(row, nis, n_crit) for row in weighted)
    trail.add("d_pos", d_pos)
    trail.add("d_neg", d_neg)

    closeness = tuple(
        0.5 if p + q == 0.0 else p / (p + q) for p, q in zip(d_pos, d_neg)
    )
    trail.add("closeness", closeness)
    trail.ranking = rank_by(closeness, "asc")
    return trail

"""Entropy-weighted ranking of crisp matrices lifted to triples."""

from __future__ import annotations

import math

from ..errors import DegenerateError, InputError
from ..core.values import SVNN
from ..problem import Trail, rank_by
from ..aggregation.weights import entropy_values, entropy_weights

NORMALIZATIONS = ("lstmm", "lstmmm", "lstsm", "vnm")


def _normalize_column(col, kind, scheme):
    if scheme == "lstmm":
        if kind == "benefit":
            hi = max(col)
            if hi == 0.0:
                raise DegenerateError("benefit column is all zero")
            return [x / hi for x in col]
        lo = min(col)
        if lo <= 0.0:
            raise DegenerateError("cost column touches zero")
        return [lo / x for x in col]
    if scheme == "lstmmm":
        lo, hi = min(col), max(col)
        if hi == lo:
            raise DegenerateError("column is constant")
        if kind == "benefit":
            return [(x - lo) / (hi - lo) for x in col]
        return [(hi - x) / (hi - lo) for x in col]
    if scheme == "lstsm":
        s = sum(col)
        if s == 0.0:
            raise DegenerateError("column sums to zero")
        if kind == "benefit":
            return [x / s for x in col]
        return [1.0 - x / s for x in col]
    s = math.sqrt(sum(x * x for x in col))
    if s == 0.0:
        raise DegenerateError("column is all zero")
    if kind == "benefit":
        return [x / s for x in col]
    return [1.0 - x / s for x in col]


def entropy_madm_rank(problem, scheme="lstmm"):
    """Entropy-weighted scoring of a crisp matrix through a triple lift.

    Columns are normalized (cost direction folded in), lifted to
    <R, 1-R, 1-R> for benefit and <1-R, R, R> for cost, weighted by the
    entropy of each lifted column, and scored against the per-kind ideal.
    Larger scores are better.
    """
    if scheme not in NORMALIZATIONS:
        raise InputError("unknown normalization %r" % (scheme,), kind="parameter")
    if problem.family != "crisp":
        raise InputError("entropy ranking needs crisp cells", kind="family_mismatch")
    if problem.cells is None:
        raise InputError("problem has no cells matrix", kind="shape")
    cells = [[float(x) for x in row] for row in problem.cells]
    if any(x < 0.0 for row in cells for x in row):
        raise InputError("crisp cells must be nonnegative", kind="value")
    n_alt, n_crit = len(cells), len(cells[0])

    trail = Trail(method="entropy-madm", params={"normalization": scheme})
    norm_cols = [
        _normalize_column([cells[i][j] for i in range(n_alt)], kind, scheme)
        for j, kind in enumerate(problem.kinds)
    ]
    normalized = tuple(
        tuple(norm_cols[j][i] for j in range(n_crit)) for i in range(n_alt)
    )
    trail.add("normalized", normalized)

    lifted = tuple(
        tuple(
            SVNN(r, 1.0 - r, 1.0 - r) if kind == "benefit" else SVNN(1.0 - r, r, r)
            for r, kind in zip(row, problem.kinds)
        )
        for row in normalized
    )
    trail.add("lifted", lifted)

    ent = entropy_values(lifted)
    trail.add("entropy", ent)
    w = entropy_weights(lifted)
    trail.add("weights", w)

    scores = ideal_scores(lifted, problem.kinds, w)
    trail.add("scores", scores)
    trail.ranking = rank_by(scores, "desc")
    return trail


def ideal_scores(lifted, kinds, w):
    """Inner product of each row with the per-kind ideal triples."""
    scores = []
    for row in lifted:
        total = 0.0
        for cell, kind, wj in zip(row, kinds, w):
            if kind == "benefit":
                total += wj * cell.t
            else:
                total += wj * (cell.i + cell.f)
        scores.append(total)
    return tuple(scores)

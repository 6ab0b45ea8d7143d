"""Group ranking through hybrid score-accuracy matrices."""

from __future__ import annotations

import math

from ..errors import DegenerateError, InputError
from ..core.ops import svnn_score
from ..problem import Trail, rank_by
from ..aggregation.weights import check_weights, lp_criteria_weights


def _cosine(u, v):
    nu = math.sqrt(sum(x * x for x in u))
    nv = math.sqrt(sum(x * x for x in v))
    if nu == 0.0 or nv == 0.0:
        raise DegenerateError("zero score row has no direction")
    return sum(x * y for x, y in zip(u, v)) / (nu * nv)


def hybrid_group_rank(problem, alpha=0.5):
    """Score-level group ranking with cosine-derived decision-maker weights.

    Every maker's matrix is scalarized by the hybrid score, makers are
    weighted by how well their score rows agree with the mean profile, and
    the collective matrix is folded with criteria weights (given explicitly
    or chosen inside the weight bounds to maximize the mean collective
    score). Larger scores are better.
    """
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise InputError("alpha must lie in [0, 1]", kind="parameter")
    if problem.family != "svnn":
        raise InputError("hybrid group ranking needs single-valued cells", kind="family_mismatch")
    if problem.dm_layers is None:
        raise InputError("hybrid group ranking needs dm_layers", kind="shape")
    layers = problem.dm_layers
    n_dm = len(layers)
    n_alt, n_crit = len(layers[0]), len(layers[0][0])

    trail = Trail(method="hybrid-group", params={"alpha": alpha})
    score_layers = tuple(
        tuple(
            tuple(svnn_score(cell, variant="ye_hybrid", alpha=alpha) for cell in row)
            for row in layer
        )
        for layer in layers
    )
    trail.add("score_layers", score_layers)

    mean_scores = tuple(
        tuple(
            sum(score_layers[s][i][j] for s in range(n_dm)) / n_dm
            for j in range(n_crit)
        )
        for i in range(n_alt)
    )
    trail.add("mean_scores", mean_scores)

    omega = tuple(
        sum(_cosine(score_layers[s][i], mean_scores[i]) for i in range(n_alt))
        for s in range(n_dm)
    )
    trail.add("omega", omega)
    total = sum(omega)
    if total == 0.0:
        raise DegenerateError("all decision makers received zero weight")
    gamma = tuple(o / total for o in omega)
    trail.add("gamma", gamma)

    collective = tuple(
        tuple(
            sum(gamma[s] * score_layers[s][i][j] for s in range(n_dm))
            for j in range(n_crit)
        )
        for i in range(n_alt)
    )
    trail.add("collective", collective)

    if problem.weights is not None:
        w = check_weights(problem.weights, n_crit, name="weights")
    elif problem.weight_bounds is not None:
        w = lp_criteria_weights(collective, problem.weight_bounds)
    else:
        w = (1.0 / n_crit,) * n_crit
    trail.add("weights", w)

    scores = tuple(
        sum(wj * hij for wj, hij in zip(w, row)) for row in collective
    )
    trail.add("scores", scores)
    trail.ranking = rank_by(scores, "desc")
    return trail

"""TOPSIS over bipolar decision matrices."""

from __future__ import annotations

from ..errors import InputError
from ..core.values import BNN
from ..core.ops import bnn_scale
from ..problem import Trail, rank_by
from ..aggregation.weights import check_weights, maximizing_deviation_weights
from ..measures.bnn import bnn_distance


def _column_ideals(column, kind):
    """Channel-extreme profiles of one weighted column.

    For a benefit column the positive ideal takes max T+, min I+, min F+,
    min T-, max I-, max F-; the negative ideal the opposite. Cost columns
    swap the two.
    """
    chans = list(zip(*[c.as_tuple() for c in column]))
    best = (
        max(chans[0]), min(chans[1]), min(chans[2]),
        min(chans[3]), max(chans[4]), max(chans[5]),
    )
    worst = (
        min(chans[0]), max(chans[1]), max(chans[2]),
        max(chans[3]), min(chans[4]), min(chans[5]),
    )
    if kind == "cost":
        best, worst = worst, best
    return BNN(*best), BNN(*worst)


def topsis_bipolar_rank(problem):
    """Bipolar TOPSIS: closeness to channel-extreme ideals, ranked descending.

    Criteria weights come from the problem, or else from maximizing deviation
    under the normalized Hamming distance.
    """
    if problem.family != "bnn":
        raise InputError("bipolar TOPSIS needs bipolar cells", kind="family_mismatch")
    if problem.cells is None:
        raise InputError("problem has no cells matrix", kind="shape")
    cells = problem.cells
    n_alt, n_crit = len(cells), len(cells[0])

    trail = Trail(method="topsis-bipolar")
    if problem.weights is not None:
        w = check_weights(problem.weights, n_crit, name="weights")
    else:
        w = maximizing_deviation_weights(
            cells, lambda a, b: bnn_distance(a, b, form="normalized_hamming")
        )
    trail.add("weights", w)

    weighted = tuple(
        tuple(bnn_scale(w[j], cells[i][j]) for j in range(n_crit))
        for i in range(n_alt)
    )
    trail.add("weighted", weighted)

    pis, nis = [], []
    for j, kind in enumerate(problem.kinds):
        best, worst = _column_ideals([weighted[i][j] for i in range(n_alt)], kind)
        pis.append(best)
        nis.append(worst)
    trail.add("pis", tuple(pis))
    trail.add("nis", tuple(nis))

    # Separations are the squared normalized Euclidean distances: the method's
    # worked numbers (confirmed end to end by its alternate-weights run) omit
    # the square root.
    d_pos = tuple(
        bnn_distance(row, pis, form="normalized_euclidean") ** 2 for row in weighted
    )
    d_neg = tuple(
        bnn_distance(row, nis, form="normalized_euclidean") ** 2 for row in weighted
    )
    trail.add("d_pos", d_pos)
    trail.add("d_neg", d_neg)

    closeness = tuple(
        0.5 if p + q == 0.0 else q / (p + q) for p, q in zip(d_pos, d_neg)
    )
    trail.add("closeness", closeness)
    trail.ranking = rank_by(closeness, "desc")
    return trail

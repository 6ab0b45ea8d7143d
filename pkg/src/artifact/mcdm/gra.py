"""Grey relational analysis over hesitant decision matrices."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputError
from ..core.ops import svnhfe_compare
from ..core.values import SVNHFE
from ..problem import DecisionProblem, Trail, rank_by
from ..aggregation.weights import check_weights


@dataclass(frozen=True)
class GraParams:
    """rho is the distinguishing coefficient of the grey relation."""

    rho: float = 0.5

    def __post_init__(self):
        rho = float(self.rho)
        if not 0.0 <= rho <= 1.0:
            raise InputError("rho must lie in [0, 1]", kind="parameter")
        object.__setattr__(self, "rho", rho)


def _mean_distance(a, b):
    """Hamming distance between the channel means of two hesitant elements."""
    ma, mb = a.means(), b.means()
    return sum(abs(x - y) for x, y in zip(ma, mb)) / 3.0


def _column_extreme(column, best):
    """Score-maximal (or minimal) element of a column, first index on ties."""
    pick = column[0]
    for el in column[1:]:
        cmp = svnhfe_compare(el, pick)
        if (cmp > 0) if best else (cmp < 0):
            pick = el
    return pick


def _grey_coefficients(D, rho):
    flat = [d for row in D for d in row]
    lo, hi = min(flat), max(flat)
    out = []
    for row in D:
        coeffs = []
        for d in row:
            den = d + rho * hi
            coeffs.append(1.0 if den == 0.0 else (lo + rho * hi) / den)
        out.append(tuple(coeffs))
    return tuple(out)


def gra_rank(problem, params=None):
    """Grey relational ranking: closeness to the positive ideal pattern.

    Per column the score-best (worst) cell is the positive (negative)
    reference; grey coefficients against both references are weight-averaged
    and combined into a relative closeness, ranked descending.
    """
    if params is None:
        params = GraParams()
    if problem.family != "svnhf":
        raise InputError("grey relational ranking needs hesitant cells", kind="family_mismatch")
    if problem.cells is None:
        raise InputError("problem has no cells matrix", kind="shape")
    cells = problem.cells
    n_alt, n_crit = len(cells), len(cells[0])
    if problem.weights is None:
        w = (1.0 / n_crit,) * n_crit
    else:
        w = check_weights(problem.weights, n_crit, name="weights")

    trail = Trail(method="gra", params={"rho": params.rho})
    pis, nis = [], []
    for j, kind in enumerate(problem.kinds):
        column = [cells[i][j] for i in range(n_alt)]
        hi = _column_extreme(column, best=True)
        lo = _column_extreme(column, best=False)
        if kind == "cost":
            hi, lo = lo, hi
        pis.append(hi)
        nis.append(lo)
    trail.add("pis", tuple(pis))
    trail.add("nis", tuple(nis))

    d_pos = [
        tuple(_mean_distance(cells[i][j], pis[j]) for j in range(n_crit))
        for i in range(n_alt)
    ]
    d_neg = [
        tuple(_mean_distance(cells[i][j], nis[j]) for j in range(n_crit))
        for i in range(n_alt)
    ]
    xi_pos = _grey_coefficients(d_pos, params.rho)
    xi_neg = _grey_coefficients(d_neg, params.rho)
    trail.add("coefficients_pos", xi_pos)
    trail.add("coefficients_neg", xi_neg)

    deg_pos = tuple(sum(wj * x for wj, x in zip(w, row)) for row in xi_pos)
    deg_neg = tuple(sum(wj * x for wj, x in zip(w, row)) for row in xi_neg)
    trail.add("degree_pos", deg_pos)
    trail.add("degree_neg", deg_neg)

    closeness = tuple(
        0.5 if p + q == 0.0 else p / (p + q) for p, q in zip(deg_pos, deg_neg)
    )
    trail.add("closeness", closeness)
    trail.ranking = rank_by(closeness, "desc")
    return trail

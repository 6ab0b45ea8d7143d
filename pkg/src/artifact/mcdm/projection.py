"""Projection-based ranking for interval-valued matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DegenerateError, InputError
from ..core.values import IVNN
from ..core.ops import ivnn_complement
from ..problem import Trail, rank_by
from ..aggregation.weights import check_weights, maximizing_deviation_weights
from ..measures.ivnn import ivnn_distance


@dataclass(frozen=True)
class ProjParams:
    """xi blends cosine (xi) against projection (1 - xi) in the hybrid score."""

    xi: float = 0.5

    def __post_init__(self):
        xi = float(self.xi)
        if not 0.0 <= xi <= 1.0:
            raise InputError("xi must lie in [0, 1]", kind="parameter")
        object.__setattr__(self, "xi", xi)


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def projection_rank(problem, params=None):
    """Rank by a cosine/projection blend against the per-column virtual ideal.

    Cost columns are standardized by complement. Each cell becomes the
    6-vector of its interval bounds; the ideal column takes componentwise max
    truth and min indeterminacy/falsity bounds over the standardized column.
    """
    if params is None:
        params = ProjParams()
    if problem.family != "ivnn":
        raise InputError("projection ranking needs interval cells", kind="family_mismatch")
    if problem.cells is None:
        raise InputError("problem has no cells matrix", kind="shape")
    n_alt, n_crit = len(problem.cells), len(problem.cells[0])

    cells = tuple(
        tuple(
            ivnn_complement(c) if kind == "cost" else c
            for c, kind in zip(row, problem.kinds)
        )
        for row in problem.cells
    )
    trail = Trail(method="projection", params={"xi": params.xi})
    trail.add("standardized", cells)

    if problem.weights is not None:
        w = check_weights(problem.weights, n_crit, name="weights")
    else:
        w = maximizing_deviation_weights(
            cells, lambda a, b: ivnn_distance(a, b, form="euclidean")
        )
    trail.add("weights", w)

    ideal = []
    for j in range(n_crit):
        col = [cells[i][j] for i in range(n_alt)]
        ideal.append(
            IVNN(
                (max(c.t[0] for c in col), max(c.t[1] for c in col)),
                (min(c.i[0] for c in col), min(c.i[1] for c in col)),
                (min(c.f[0] for c in col), min(c.f[1] for c in col)),
            )
        )
    ideal = tuple(ideal)
    trail.add("ideal", ideal)

    z = [cell.bounds() for cell in ideal]
    z_sq = [_dot(v, v) for v in z]
    z_norm = math.sqrt(sum(z_sq))
    zw_norm = math.sqrt(sum(wj * wj * s for wj, s in zip(w, z_sq)))
    if z_norm == 0.0 or zw_norm == 0.0:
        raise DegenerateError("ideal profile is the zero vector")

    proj, projw, cos = [], [], []
    for i in range(n_alt):
        h = [cells[i][j].bounds() for j in range(n_crit)]
        dots = [_dot(h[j], z[j]) for j in range(n_crit)]
        h_norm = math.sqrt(sum(_dot(v, v) for v in h))
        if h_norm == 0.0:
            raise DegenerateError("alternative %d is the zero vector" % i)
        proj.append(sum(dots) / z_norm)
        projw.append(sum(wj * wj * d for wj, d in zip(w, dots)) / zw_norm)
        cos.append(sum(dots) / (h_norm * z_norm))
    proj, projw, cos = tuple(proj), tuple(projw), tuple(cos)
    trail.add("projection", proj)
    trail.add("weighted_projection", projw)
    trail.add("cosine", cos)

    rho = tuple(
        params.xi * c + (1.0 - params.xi) * p for c, p in zip(cos, proj)
    )
    trail.add("hybrid", rho)
    trail.ranking = rank_by(rho, "desc")
    return trail

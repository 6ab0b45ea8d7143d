"""Attribute screening by averaged triple scores."""

from __future__ import annotations

from ..errors import InputError
from ..problem import Trail, rank_by

ZONES = (
    ("high", 0.5),
    ("tolerable", 0.25),
    ("unacceptable", 0.0),
)


def zone_of(score):
    """Acceptance zone of a screening score in [0, 1]."""
    if score >= 0.5:
        return "high"
    if score >= 0.25:
        return "tolerable"
    return "unacceptable"


def svnsf_screen(problem):
    """Screen the criteria of a single-valued matrix by mean score.

    Unlike the other pipelines this ranks columns, not rows: each criterion
    gets the mean of (2 + T - I - F) / 3 over all alternatives, a zone label,
    and a rank (descending, stable ties).
    """
    if problem.family != "svnn":
        raise InputError("screening needs single-valued cells", kind="family_mismatch")
    if problem.cells is None:
        raise InputError("problem has no cells matrix", kind="shape")
    cells = problem.cells
    n_alt, n_crit = len(cells), len(cells[0])

    trail = Trail(method="svnsf-screen")
    scores = tuple(
        sum((2.0 + c.t - c.i - c.f) / 3.0 for c in (cells[i][j] for i in range(n_alt)))
        / n_alt
        for j in range(n_crit)
    )
    trail.add("scores", scores)
    trail.add("zones", tuple(zone_of(s) for s in scores))
    trail.ranking = rank_by(scores, "desc")
    return trail

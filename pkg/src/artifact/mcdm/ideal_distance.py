"""Ranking by distance to the per-criterion ideal (hesitant matrices)."""

from __future__ import annotations

from dataclasses import replace

from ..errors import InputError
from ..measures.specs import DistanceSpec
from ..measures.svnhf import svnhf_ideal_rank, IDEAL_BENEFIT, IDEAL_COST
from ..problem import DecisionProblem, Trail


def ideal_distance_rank(problem, spec=None):
    """Score alternatives by their distance to the synthetic ideal row.

    Benefit criteria contribute the absolute-best element <{1},{0},{0}>, cost
    criteria the absolute-worst <{0},{1},{1}>. Smaller distance is better.
    """
    if not isinstance(problem, DecisionProblem):
        raise InputError("expected a DecisionProblem", kind="value")
    if problem.family not in ("svnhf", "svnn"):
        raise InputError(
            "ideal-distance ranking needs hesitant or single-valued cells",
            kind="family_mismatch",
        )
    if problem.cells is None:
        raise InputError("problem has no cells matrix", kind="shape")
    if spec is None:
        spec = DistanceSpec(family="svnhf", form="hamming")
    if spec.weights is None and problem.weights is not None:
        spec = replace(spec, weights=problem.weights)

    trail = Trail(
        method="ideal-distance",
        params={
            "form": spec.form,
            "lambda": spec.effective_lambda(),
            "normalization": spec.normalization,
        },
    )
    ideal = tuple(
        IDEAL_BENEFIT if kind == "benefit" else IDEAL_COST for kind in problem.kinds
    )
    trail.add("ideal", ideal)
    dists, ranking = svnhf_ideal_rank(problem.cells, problem.kinds, spec)
    trail.add("distances", dists)
    trail.ranking = ranking
    return trail

"""Decision pipelines over neutrosophic matrices."""

from ..problem import DecisionProblem, Ranking, Trail, rank_by
from .ideal_distance import ideal_distance_rank
from .gra import GraParams, gra_rank
from .topsis_bipolar import topsis_bipolar_rank
from .topsis_refined import topsis_refined_rank
from .projection import ProjParams, projection_rank
from .hybrid import hybrid_group_rank
from .entropy_madm import NORMALIZATIONS as ENTROPY_NORMALIZATIONS
from .entropy_madm import entropy_madm_rank
from .svnsf import svnsf_screen, zone_of

METHODS = (
    "ideal-distance",
    "gra",
    "topsis-bipolar",
    "topsis-refined",
    "projection",
    "hybrid-group",
    "entropy-madm",
    "svnsf-screen",
)

__all__ = [
    "DecisionProblem",
    "ENTROPY_NORMALIZATIONS",
    "GraParams",
    "METHODS",
    "ProjParams",
    "Ranking",
    "Trail",
    "entropy_madm_rank",
    "gra_rank",
    "hybrid_group_rank",
    "ideal_distance_rank",
    "projection_rank",
    "rank_by",
    "svnsf_screen",
    "topsis_bipolar_rank",
    "topsis_refined_rank",
    "zone_of",
]

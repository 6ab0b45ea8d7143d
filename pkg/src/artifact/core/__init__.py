"""Core value families and pointwise operations."""

from .ops import (
    bnn_add,
    bnn_mul,
    bnn_power,
    bnn_scale,
    ivnn_complement,
    svnhfe_accuracy,
    svnhfe_align,
    svnhfe_compare,
    svnhfe_score,
    svnn_accuracy,
    svnn_certainty,
    svnn_complement,
    svnn_rank_key,
    svnn_score,
    svnn_weighted_average,
    svnn_weighted_geometric,
)
from .scales import (
    FIVE_LEVEL_SVNN,
    NINE_LEVEL_IVNN,
    SCALES,
    LinguisticScale,
    get_scale,
    linguistic_to_value,
)
from .values import BNN, IVNN, SVNN, SVNHFE, TOL, RoughSVNN

__all__ = [
    "SVNN",
    "IVNN",
    "BNN",
    "SVNHFE",
    "RoughSVNN",
    "TOL",
    "LinguisticScale",
    "SCALES",
    "NINE_LEVEL_IVNN",
    "FIVE_LEVEL_SVNN",
    "get_scale",
    "linguistic_to_value",
    "svnn_complement",
    "ivnn_complement",
    "svnn_score",
    "svnn_accuracy",
    "svnn_certainty",
    "svnn_rank_key",
    "svnhfe_score",
    "svnhfe_accuracy",
    "svnhfe_compare",
    "svnhfe_align",
    "bnn_scale",
    "bnn_power",
    "bnn_add",
    "bnn_mul",
    "svnn_weighted_average",
    "svnn_weighted_geometric",
]

"""Distance and similarity measures across the value families."""

from ..errors import InputError
from .specs import (
    ATTITUDES,
    DISTANCE_FORMS,
    NORMALIZATIONS,
    SIMILARITY_FORMS,
    DistanceSpec,
    SimilaritySpec,
)
from .svnhf import (
    IDEAL_BENEFIT,
    IDEAL_COST,
    svnhf_distance,
    svnhf_ideal_rank,
    svnhf_similarity,
)
from .bnn import BNN_FORMS, bnn_distance
from .ivnn import IVNN_FORMS, ivnn_distance
from .rough import TRIG_FORMS, rough_distance, rough_trig_similarity

# DistanceSpec form names mapped onto the bipolar/interval measure forms.
_FLAT_FORMS = {
    "generalized": "generalized",
    "hamming": "hamming",
    "euclidean": "euclidean",
    "hausdorff_generalized": "hausdorff",
    "hausdorff_hamming": "hausdorff",
    "hausdorff_euclidean": "hausdorff",
}
_FLAT_BNN = dict(_FLAT_FORMS, hamming="normalized_hamming", euclidean="normalized_euclidean")


def distance(a, b, spec):
    """Family-dispatching distance under a DistanceSpec."""
    if spec.family == "svnhf":
        return svnhf_distance(a, b, spec)
    if spec.family == "rough":
        return rough_distance(a, b, spec)
    form = (_FLAT_BNN if spec.family == "bnn" else _FLAT_FORMS)[spec.form]
    lam = spec.effective_lambda()
    if spec.form in ("hausdorff_hamming", "hausdorff_euclidean"):
        lam = 1.0 if spec.form == "hausdorff_hamming" else 2.0
    fn = bnn_distance if spec.family == "bnn" else ivnn_distance
    return fn(a, b, form=form, lam=lam, weights=spec.weights)


def similarity(a, b, spec):
    """Family-dispatching similarity under a SimilaritySpec."""
    if spec.form in TRIG_FORMS:
        return rough_trig_similarity(a, b, form=spec.form, weights=spec.weights)
    if spec.family == "svnhf":
        return svnhf_similarity(a, b, spec)
    if spec.form == "one_minus_distance":
        return 1.0 - distance(a, b, spec.base_distance())
    raise InputError(
        "form %r is not defined for family %r" % (spec.form, spec.family),
        kind="family_mismatch",
    )


__all__ = [
    "ATTITUDES",
    "BNN_FORMS",
    "DISTANCE_FORMS",
    "DistanceSpec",
    "IDEAL_BENEFIT",
    "IDEAL_COST",
    "IVNN_FORMS",
    "NORMALIZATIONS",
    "SIMILARITY_FORMS",
    "SimilaritySpec",
    "TRIG_FORMS",
    "bnn_distance",
    "distance",
    "ivnn_distance",
    "rough_distance",
    "rough_trig_similarity",
    "similarity",
    "svnhf_distance",
    "svnhf_ideal_rank",
    "svnhf_similarity",
]

"""Configuration records for distance and similarity measures."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputError
from ..aggregation.weights import check_weights

FAMILIES = ("svnhf", "bnn", "ivnn", "rough")
DISTANCE_FORMS = (
    "generalized",
    "hamming",
    "euclidean",
    "hausdorff_generalized",
    "hausdorff_hamming",
    "hausdorff_euclidean",
)
SIMILARITY_FORMS = (
    "one_minus_distance",
    "set_theoretic",
    "matching_function",
    "rough_cosine",
    "rough_sine",
    "rough_cotangent",
)
NORMALIZATIONS = ("standard", "biswas_l")
ATTITUDES = ("pessimistic", "optimistic")

# Fixed-exponent forms ignore the lam field.
FORM_LAMBDA = {
    "hamming": 1.0,
    "euclidean": 2.0,
    "hausdorff_hamming": 1.0,
    "hausdorff_euclidean": 2.0,
}


@dataclass(frozen=True)
class DistanceSpec:
    """What distance to compute and how.

    weights is the per-element weight vector; weights_i / weights_f optionally
    give the indeterminacy and falsity channels their own vectors (truth then
    uses weights). Leaving all three None selects the unweighted form.
    """

    family: str = "svnhf"
    form: str = "hamming"
    lam: float = 1.0
    weights: tuple = None
    weights_i: tuple = None
    weights_f: tuple = None
    normalization: str = "standard"
    attitude: str = "pessimistic"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError("unknown distance family %r" % (self.family,), kind="family_mismatch")
        if self.form not in DISTANCE_FORMS:
            raise InputError("unknown distance form %r" % (self.form,), kind="parameter")
        lam = float(self.lam)
        if not lam > 0.0:
            raise InputError("lambda must be positive, got %r" % (self.lam,), kind="parameter")
        object.__setattr__(self, "lam", lam)
        if self.normalization not in NORMALIZATIONS:
            raise InputError("unknown normalization %r" % (self.normalization,), kind="parameter")
        if self.attitude not in ATTITUDES:
            raise InputError("unknown alignment attitude %r" % (self.attitude,), kind="parameter")
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        for name in ("weights_i", "weights_f"):
            vec = getattr(self, name)
            if vec is None:
                continue
            if self.weights is None:
                raise InputError("%s given without weights" % name, kind="parameter")
            object.__setattr__(self, name, tuple(float(w) for w in vec))

    def effective_lambda(self):
        return FORM_LAMBDA.get(self.form, self.lam)

    def is_hausdorff(self):
        return self.form.startswith("hausdorff")

    def weight_triple(self, n):
        """Validated (truth, indeterminacy, falsity) weight vectors, or None."""
        if self.weights is None:
            return None
        w = check_weights(self.weights, n, name="weights")
        wi = check_weights(self.weights_i, n, name="weights_i") if self.weights_i is not None else w
        wf = check_weights(self.weights_f, n, name="weights_f") if self.weights_f is not None else w
        return w, wi, wf


@dataclass(frozen=True)
class SimilaritySpec:
    """What similarity to compute; one_minus_distance wraps a DistanceSpec."""

    family: str = "svnhf"
    form: str = "one_minus_distance"
    weights: tuple = None
    distance: DistanceSpec = None
    attitude: str = "pessimistic"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError("unknown similarity family %r" % (self.family,), kind="family_mismatch")
        if self.form not in SIMILARITY_FORMS:
            raise InputError("unknown similarity form %r" % (self.form,), kind="parameter")
        if self.attitude not in ATTITUDES:
            raise InputError("unknown alignment attitude %r" % (self.attitude,), kind="parameter")
        if self.form.startswith("rough_") and self.family != "rough":
            raise InputError(
                "%s applies to the rough family only" % self.form, kind="family_mismatch"
            )
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if self.distance is not None and self.form != "one_minus_distance":
            raise InputError(
                "distance spec only applies to one_minus_distance", kind="parameter"
            )

    def base_distance(self):
        """The DistanceSpec behind a one_minus_distance similarity."""
        if self.distance is not None:
            return self.distance
        return DistanceSpec(
            family=self.family,
            form="hamming",
            weights=self.weights,
            attitude=self.attitude,
        )

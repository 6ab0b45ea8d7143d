"""Distance measures for bipolar triples (BNN)."""

from __future__ import annotations

import math

from ..errors import InputError
from ..core.values import BNN

BNN_FORMS = (
    "hamming",
    "normalized_hamming",
    "euclidean",
    "normalized_euclidean",
    "generalized",
    "hausdorff",
)


def _coerce(x, name):
    if isinstance(x, BNN):
        return (x,)
    seq = tuple(x)
    if not seq:
        raise InputError("%s must be nonempty" % name, kind="shape")
    for k, el in enumerate(seq):
        if not isinstance(el, BNN):
            raise InputError(
                "%s[%d] is not a bipolar value" % (name, k), kind="family_mismatch"
            )
    return seq


def _channel_diffs(a, b):
    return [abs(x - y) for x, y in zip(a.as_tuple(), b.as_tuple())]


def bnn_distance(a, b, form="normalized_hamming", lam=1.0, weights=None):
    """Distance between two bipolar values or equal-length sequences of them.

    hamming / euclidean are the raw (unnormalized) sums over all six channels
    of every pair; the normalized_ variants divide by 6m so results stay in
    [0, 1]. generalized and hausdorff are normalized, with exponent lam.
    """
    if form not in BNN_FORMS:
        raise InputError("unknown bipolar distance form %r" % (form,), kind="parameter")
    lam = float(lam)
    if not lam > 0.0:
        raise InputError("lambda must be positive", kind="parameter")
    A = _coerce(a, "a")
    B = _coerce(b, "b")
    if len(A) != len(B):
        raise InputError(
            "sequences differ in length (%d vs %d)" % (len(A), len(B)), kind="shape"
        )
    m = len(A)
    if weights is not None:
        from ..aggregation.weights import check_weights

        weights = check_weights(weights, m, name="weights")

    if form in ("hamming", "euclidean"):
        if weights is not None:
            raise InputError(
                "weights apply to the normalized forms only", kind="parameter"
            )
        if form == "hamming":
            return sum(sum(_channel_diffs(x, y)) for x, y in zip(A, B))
        return math.sqrt(
            sum(sum(d * d for d in _channel_diffs(x, y)) for x, y in zip(A, B))
        )

    if form == "normalized_hamming":
        lam_eff = 1.0
    elif form == "normalized_euclidean":
        lam_eff = 2.0
    else:
        lam_eff = lam

    total = 0.0
    for k in range(m):
        diffs = _channel_diffs(A[k], B[k])
        if form == "hausdorff":
            inner = max(d ** lam_eff for d in diffs)
        else:
            inner = sum(d ** lam_eff for d in diffs) / 6.0
        total += inner / m if weights is None else weights[k] * inner
    return total ** (1.0 / lam_eff)

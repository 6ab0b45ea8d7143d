"""Distance measures for interval-valued triples (IVNN)."""

from __future__ import annotations

from ..errors import InputError
from ..core.values import IVNN

IVNN_FORMS = ("hamming", "euclidean", "generalized", "hausdorff")


def _coerce(x, name):
    if isinstance(x, IVNN):
        return (x,)
    seq = tuple(x)
    if not seq:
        raise InputError("%s must be nonempty" % name, kind="shape")
    for k, el in enumerate(seq):
        if not isinstance(el, IVNN):
            raise InputError(
                "%s[%d] is not an interval value" % (name, k), kind="family_mismatch"
            )
    return seq


def ivnn_distance(a, b, form="hamming", lam=1.0, weights=None):
    """Distance between interval values or equal-length sequences of them.

    Per pair the six interval bounds are compared; hamming averages the
    absolute differences, euclidean their squares. Sequences average over
    pairs, or weight them when a weight vector is given. Results lie in
    [0, 1].
    """
    if form not in IVNN_FORMS:
        raise InputError("unknown interval distance form %r" % (form,), kind="parameter")
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

    if form == "hamming":
        lam_eff = 1.0
    elif form == "euclidean":
        lam_eff = 2.0
    else:
        lam_eff = lam

    total = 0.0
    for k in range(m):
        diffs = [abs(x - y) for x, y in zip(A[k].bounds(), B[k].bounds())]
        if form == "hausdorff":
            inner = max(d ** lam_eff for d in diffs)
        else:
            inner = sum(d ** lam_eff for d in diffs) / 6.0
        total += inner / m if weights is None else weights[k] * inner
    return total ** (1.0 / lam_eff)

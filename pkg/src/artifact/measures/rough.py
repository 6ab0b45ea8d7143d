"""Similarity and distance measures for rough triples (RoughSVNN)."""

from __future__ import annotations

import math
from dataclasses import replace

from ..errors import InputError
from ..core.values import SVNHFE, RoughSVNN

TRIG_FORMS = ("rough_cosine", "rough_sine", "rough_cotangent")


def _coerce(x, name):
    if isinstance(x, RoughSVNN):
        return (x,)
    seq = tuple(x)
    if not seq:
        raise InputError("%s must be nonempty" % name, kind="shape")
    for k, el in enumerate(seq):
        if not isinstance(el, RoughSVNN):
            raise InputError(
                "%s[%d] is not a rough value" % (name, k), kind="family_mismatch"
            )
    return seq


def _midpoint_gap(a, b):
    """Sum of absolute channel differences between the two midpoints."""
    ma = a.midpoint()
    mb = b.midpoint()
    return abs(ma.t - mb.t) + abs(ma.i - mb.i) + abs(ma.f - mb.f)


def rough_trig_similarity(a, b, form="rough_cosine", weights=None):
    """Trigonometric similarity of rough sequences, scored on midpoints.

    Each pair contributes through the combined channel gap g:
      rough_cosine    cos(pi/6 * g)
      rough_sine      1 - sin(pi/6 * g) in aggregate
      rough_cotangent cot(pi/4 + pi/12 * g)
    Unweighted means average the contributions.
    """
    if form not in TRIG_FORMS:
        raise InputError("unknown rough similarity form %r" % (form,), kind="parameter")
    A = _coerce(a, "a")
    B = _coerce(b, "b")
    if len(A) != len(B):
        raise InputError(
            "sequences differ in length (%d vs %d)" % (len(A), len(B)), kind="shape"
        )
    n = len(A)
    if weights is None:
        w = (1.0 / n,) * n
    else:
        from ..aggregation.weights import check_weights

        w = check_weights(weights, n, name="weights")

    gaps = [_midpoint_gap(x, y) for x, y in zip(A, B)]
    if form == "rough_cosine":
        return sum(wk * math.cos(math.pi / 6.0 * g) for wk, g in zip(w, gaps))
    if form == "rough_sine":
        return 1.0 - sum(wk * math.sin(math.pi / 6.0 * g) for wk, g in zip(w, gaps))
    return sum(
        wk / math.tan(math.pi / 4.0 + math.pi / 12.0 * g) for wk, g in zip(w, gaps)
    )


def rough_distance(a, b, spec):
    """Distance between rough sequences: the hesitant measure on midpoints."""
    from .svnhf import svnhf_distance

    A = _coerce(a, "a")
    B = _coerce(b, "b")
    as_hesitant = lambda seq: [
        SVNHFE((m.t,), (m.i,), (m.f,)) for m in (r.midpoint() for r in seq)
    ]
    return svnhf_distance(as_hesitant(A), as_hesitant(B), replace(spec, family="svnhf"))

"""Scalar aggregation operators on values in [0, 1]."""

from __future__ import annotations

import math

from ..errors import InputError
from .weights import check_weights


def _prep(values, w):
    w = check_weights(w, n=len(values))
    vals = tuple(float(a) for a in values)
    if any(a < 0.0 or a > 1.0 for a in vals):
        raise InputError("values must lie in [0, 1], got %r" % (list(vals),), kind="value")
    return vals, w


def wam(values, w):
    """Weighted arithmetic mean."""
    vals, w = _prep(values, w)
    return sum(a * wj for a, wj in zip(vals, w))


def wgm(values, w):
    """Weighted geometric mean."""
    vals, w = _prep(values, w)
    return math.prod(a**wj for a, wj in zip(vals, w))


def iwagm(values, w):
    """Blend of the arithmetic and geometric means on square roots.

    (sum_j sqrt(a_j) w_j) * (prod_j a_j^(w_j/2)); always between wgm and wam.
    """
    vals, w = _prep(values, w)
    s = sum(math.sqrt(a) * wj for a, wj in zip(vals, w))
    g = math.prod(a ** (wj / 2.0) for a, wj in zip(vals, w))
    return s * g


def giwagm(values, w, k):
    """Generalized form: ((sum a^(1/k) w) (prod a^(w/k)))^(k/2); k=2 is iwagm."""
    if not isinstance(k, (int, float)) or isinstance(k, bool) or k == 0:
        raise InputError("k must be a nonzero real, got %r" % (k,), kind="parameter")
    vals, w = _prep(values, w)
    s = sum(a ** (1.0 / k) * wj for a, wj in zip(vals, w))
    g = math.prod(a ** (wj / k) for a, wj in zip(vals, w))
    return (s * g) ** (k / 2.0)

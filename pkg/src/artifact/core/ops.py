"""Pointwise operations, scores and orderings on neutrosophic values."""

from __future__ import annotations

import math

from ..errors import InputError
from .values import BNN, IVNN, SVNHFE, SVNN, TOL


def _mean(xs):
    return sum(xs) / len(xs)


# ---------------------------------------------------------------------------
# single valued numbers


def svnn_complement(a: SVNN) -> SVNN:
    """Complement: swap t and f, reflect i around 1/2."""
    return SVNN(a.f, 1.0 - a.i, a.t)


def ivnn_complement(a: IVNN) -> IVNN:
    """Interval complement: swap t and f, reflect the i interval around 1/2."""
    return IVNN(a.f, (1.0 - a.i[1], 1.0 - a.i[0]), a.t)


def svnn_score(a: SVNN, variant="liu", alpha=None):
    """Scalarize an SVNN.

    liu: 2 + t - i - f (range [0, 3]).
    ye_hybrid: alpha-blend of (1+t-f)/2 and (2+t-i-f)/3 (range [0, 1]).
    trig: t(1+sin(t pi/2)) + cos(i pi/2)/(2(1+i)) + cos(f pi/2)/(1+f).
    """
    if variant == "liu":
        return 2.0 + a.t - a.i - a.f
    if variant == "ye_hybrid":
        alpha = 0.5 if alpha is None else alpha
        if not 0.0 <= alpha <= 1.0:
            raise InputError("alpha=%r outside [0, 1]" % alpha, kind="parameter")
        s = (1.0 + a.t - a.f) / 2.0
        ac = (2.0 + a.t - a.i - a.f) / 3.0
        return alpha * s + (1.0 - alpha) * ac
    if variant == "trig":
        return (
            a.t * (1.0 + math.sin(a.t * math.pi / 2.0))
            + math.cos(a.i * math.pi / 2.0) / (2.0 * (1.0 + a.i))
            + math.cos(a.f * math.pi / 2.0) / (1.0 + a.f)
        )
    raise InputError("unknown score variant %r" % variant, kind="parameter")


def svnn_accuracy(a: SVNN):
    return a.t - a.f


def svnn_certainty(a: SVNN):
    """(|cos t pi| + |cos i pi| + |cos f pi|) / 3; zero exactly at (.5,.5,.5)."""
    return (
        abs(math.cos(a.t * math.pi))
        + abs(math.cos(a.i * math.pi))
        + abs(math.cos(a.f * math.pi))
    ) / 3.0


def svnn_rank_key(a: SVNN, variant="trig", alpha=None):
    """Descending sort key: score, then accuracy, then certainty."""
    return (svnn_score(a, variant, alpha), svnn_accuracy(a), svnn_certainty(a))


# ---------------------------------------------------------------------------
# hesitant elements


def svnhfe_score(n: SVNHFE):
    mt, mi, mf = n.means()
    return (2.0 + mt - mi - mf) / 3.0


def svnhfe_accuracy(n: SVNHFE):
    mt, _, mf = n.means()
    return mt - mf


def svnhfe_compare(a: SVNHFE, b: SVNHFE):
    """-1, 0 or +1 ordering a against b by score, then accuracy."""
    sa, sb = svnhfe_score(a), svnhfe_score(b)
    if sa > sb + TOL:
        return 1
    if sb > sa + TOL:
        return -1
    aa, ab = svnhfe_accuracy(a), svnhfe_accuracy(b)
    if aa > ab + TOL:
        return 1
    if ab > aa + TOL:
        return -1
    return 0


def _pad(xs, ys, fill):
    length = max(len(xs), len(ys))

    def ext(v):
        v = list(v)
        v.extend([fill(v)] * (length - len(v)))
        return tuple(sorted(v, reverse=True))

    return ext(xs), ext(ys)


def svnhfe_align(a: SVNHFE, b: SVNHFE, attitude="pessimistic"):
    """Pad each component pair to a common length, sorted descending.

    Pessimistic padding repeats the min for t and the max for i and f;
    optimistic is the reverse. Returns two (t, i, f) tuples of tuples with
    duplicates kept (padding may repeat values).
    """
    if attitude == "pessimistic":
        tf, if_, ff = min, max, max
    elif attitude == "optimistic":
        tf, if_, ff = max, min, min
    else:
        raise InputError("unknown attitude %r" % attitude, kind="parameter")
    at, bt = _pad(a.t, b.t, tf)
    ai, bi = _pad(a.i, b.i, if_)
    af, bf = _pad(a.f, b.f, ff)
    return (at, ai, af), (bt, bi, bf)


# ---------------------------------------------------------------------------
# bipolar numbers
#
# The operational laws pair each positive channel with a t-norm/t-conorm and
# mirror them on the negative side (working on magnitudes -x). scale and add
# are consistent (scale(2, b) = add(b, b)), as are power and mul.


def _psum(x, y):
    return x + y - x * y


def bnn_scale(w, b: BNN) -> BNN:
    """w . b: t-conorm scaling of the positive truth, dual on the rest."""
    if not isinstance(w, (int, float)) or isinstance(w, bool) or w <= 0:
        raise InputError("scale factor must be a positive real, got %r" % (w,), kind="parameter")
    return BNN(
        1.0 - (1.0 - b.t_pos) ** w,
        b.i_pos**w,
        b.f_pos**w,
        -((-b.t_neg) ** w),
        -((-b.i_neg) ** w),
        -(1.0 - (1.0 - (-b.f_neg)) ** w),
    )


def bnn_power(b: BNN, w) -> BNN:
    """b ** w: dual of bnn_scale."""
    if not isinstance(w, (int, float)) or isinstance(w, bool) or w <= 0:
        raise InputError("exponent must be a positive real, got %r" % (w,), kind="parameter")
    return BNN(
        b.t_pos**w,
        1.0 - (1.0 - b.i_pos) ** w,
        1.0 - (1.0 - b.f_pos) ** w,
        -(1.0 - (1.0 - (-b.t_neg)) ** w),
        -((-b.i_neg) ** w),
        -((-b.f_neg) ** w),
    )


def bnn_add(a: BNN, b: BNN) -> BNN:
    return BNN(
        _psum(a.t_pos, b.t_pos),
        a.i_pos * b.i_pos,
        a.f_pos * b.f_pos,
        -((-a.t_neg) * (-b.t_neg)),
        -((-a.i_neg) * (-b.i_neg)),
        -_psum(-a.f_neg, -b.f_neg),
    )


def bnn_mul(a: BNN, b: BNN) -> BNN:
    return BNN(
        a.t_pos * b.t_pos,
        _psum(a.i_pos, b.i_pos),
        _psum(a.f_pos, b.f_pos),
        -_psum(-a.t_neg, -b.t_neg),
        -((-a.i_neg) * (-b.i_neg)),
        -((-a.f_neg) * (-b.f_neg)),
    )


# ---------------------------------------------------------------------------
# weighted aggregation of single valued numbers


def _check_values_weights(values, w):
    if not values:
        raise InputError("empty value list", kind="shape")
    if len(values) != len(w):
        raise InputError(
            "got %d values but %d weights" % (len(values), len(w)), kind="shape"
        )
    total = sum(w)
    if any(x < -TOL for x in w) or abs(total - 1.0) > 1e-9:
        raise InputError("weights must be nonnegative and sum to 1, got %r" % (list(w),), kind="parameter")


def _iter_psum(xs):
    acc = 0.0
    for x in xs:
        acc = _psum(acc, x)
    return acc


def svnn_weighted_average(values, w, law="algebraic") -> SVNN:
    """Weighted average of SVNNs.

    law="algebraic": T = 1 - prod(1-t)^w, I = prod i^w, F = prod f^w
    (idempotent closed form of the t-conorm sum).
    law="componentwise": probabilistic sum of the scalar-weighted channel
    values, each channel treated independently (not idempotent).
    """
    _check_values_weights(values, w)
    if law == "algebraic":
        t = 1.0 - math.prod((1.0 - v.t) ** wj for v, wj in zip(values, w))
        i = math.prod(v.i**wj for v, wj in zip(values, w))
        f = math.prod(v.f**wj for v, wj in zip(values, w))
    elif law == "componentwise":
        t = _iter_psum(wj * v.t for v, wj in zip(values, w))
        i = _iter_psum(wj * v.i for v, wj in zip(values, w))
        f = _iter_psum(wj * v.f for v, wj in zip(values, w))
    else:
        raise InputError("unknown aggregation law %r" % law, kind="parameter")
    return SVNN(min(t, 1.0), min(i, 1.0), min(f, 1.0))


def svnn_weighted_geometric(values, w, law="algebraic") -> SVNN:
    """Weighted geometric mean of SVNNs; laws mirror svnn_weighted_average."""
    _check_values_weights(values, w)
    if law == "algebraic":
        t = math.prod(v.t**wj for v, wj in zip(values, w))
        i = 1.0 - math.prod((1.0 - v.i) ** wj for v, wj in zip(values, w))
        f = 1.0 - math.prod((1.0 - v.f) ** wj for v, wj in zip(values, w))
    elif law == "componentwise":
        t = math.prod(v.t**wj for v, wj in zip(values, w))
        i = math.prod(v.i**wj for v, wj in zip(values, w))
        f = math.prod(v.f**wj for v, wj in zip(values, w))
    else:
        raise InputError("unknown aggregation law %r" % law, kind="parameter")
    return SVNN(min(t, 1.0), min(i, 1.0), min(f, 1.0))

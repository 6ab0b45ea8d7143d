"""Value families: single valued, interval, bipolar, hesitant and rough neutrosophic numbers.

All types are frozen dataclasses validated on construction. Membership values
live in [0, 1] (negative bipolar channels in [-1, 0]); violations raise
InputError rather than being clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import InputError

TOL = 1e-9


def _num(name, x):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError("%s must be a real number, got %r" % (name, x), kind="value")
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        raise InputError("%s must be finite, got %r" % (name, x), kind="value")
    return x


def _unit(name, x):
    x = _num(name, x)
    if x < -TOL or x > 1.0 + TOL:
        raise InputError("%s=%r outside [0, 1]" % (name, x), kind="value")
    return x


def _neg_unit(name, x):
    x = _num(name, x)
    if x < -1.0 - TOL or x > TOL:
        raise InputError("%s=%r outside [-1, 0]" % (name, x), kind="value")
    return x


def _interval(name, pair):
    try:
        lo, hi = pair
    except (TypeError, ValueError):
        raise InputError("%s must be a (lo, hi) pair, got %r" % (name, pair), kind="value")
    lo = _unit(name + " lower", lo)
    hi = _unit(name + " upper", hi)
    if lo > hi + TOL:
        raise InputError("%s lower bound %r exceeds upper bound %r" % (name, lo, hi), kind="value")
    return (lo, hi)


def _hset(name, xs):
    if isinstance(xs, (int, float)) and not isinstance(xs, bool):
        xs = (xs,)
    try:
        vals = tuple(_unit(name + " member", v) for v in xs)
    except TypeError:
        raise InputError("%s must be an iterable of reals, got %r" % (name, xs), kind="value")
    if not vals:
        raise InputError("%s set must be nonempty" % name, kind="value")
    # canonical form: descending, duplicates removed
    return tuple(sorted(set(vals), reverse=True))


@dataclass(frozen=True)
class SVNN:
    """Single valued neutrosophic number: truth, indeterminacy, falsity in [0, 1]."""

    t: float
    i: float
    f: float

    def __post_init__(self):
        object.__setattr__(self, "t", _unit("t", self.t))
        object.__setattr__(self, "i", _unit("i", self.i))
        object.__setattr__(self, "f", _unit("f", self.f))

    def as_tuple(self):
        return (self.t, self.i, self.f)


@dataclass(frozen=True)
class IVNN:
    """Interval valued neutrosophic number: each channel is a subinterval of [0, 1]."""

    t: tuple
    i: tuple
    f: tuple

    def __post_init__(self):
        object.__setattr__(self, "t", _interval("t", self.t))
        object.__setattr__(self, "i", _interval("i", self.i))
        object.__setattr__(self, "f", _interval("f", self.f))

    def bounds(self):
        """Flattened (tL, tU, iL, iU, fL, fU)."""
        return self.t + self.i + self.f


@dataclass(frozen=True)
class BNN:
    """Bipolar neutrosophic number: positive channels in [0, 1], negative in [-1, 0]."""

    t_pos: float
    i_pos: float
    f_pos: float
    t_neg: float
    i_neg: float
    f_neg: float

    def __post_init__(self):
        object.__setattr__(self, "t_pos", _unit("t_pos", self.t_pos))
        object.__setattr__(self, "i_pos", _unit("i_pos", self.i_pos))
        object.__setattr__(self, "f_pos", _unit("f_pos", self.f_pos))
        object.__setattr__(self, "t_neg", _neg_unit("t_neg", self.t_neg))
        object.__setattr__(self, "i_neg", _neg_unit("i_neg", self.i_neg))
        object.__setattr__(self, "f_neg", _neg_unit("f_neg", self.f_neg))

    def as_tuple(self):
        return (self.t_pos, self.i_pos, self.f_pos, self.t_neg, self.i_neg, self.f_neg)


@dataclass(frozen=True)
class SVNHFE:
    """Hesitant element: finite candidate sets for truth, indeterminacy and falsity.

    Stored canonically: descending order, duplicates removed.
    """

    t: tuple
    i: tuple
    f: tuple

    def __post_init__(self):
        object.__setattr__(self, "t", _hset("t", self.t))
        object.__setattr__(self, "i", _hset("i", self.i))
        object.__setattr__(self, "f", _hset("f", self.f))

    def means(self):
        return (
            sum(self.t) / len(self.t),
            sum(self.i) / len(self.i),
            sum(self.f) / len(self.f),
        )


@dataclass(frozen=True)
class RoughSVNN:
    """Lower/upper approximation pair of SVNNs.

    The defining construction (min over an equivalence class below, max above)
    forces lower <= upper on every channel, but data sets in the wild routinely
    store I and F with the opposite orientation. Construction therefore only
    enforces the truth ordering; approximation_gaps reports the rest.
    """

    lower: SVNN
    upper: SVNN

    def __post_init__(self):
        if not isinstance(self.lower, SVNN) or not isinstance(self.upper, SVNN):
            raise InputError("RoughSVNN needs SVNN lower and upper parts", kind="value")
        if self.lower.t > self.upper.t + TOL:
            raise InputError(
                "lower.t=%r exceeds upper.t=%r" % (self.lower.t, self.upper.t), kind="value"
            )

    def midpoint(self):
        """Channelwise average of the two approximations."""
        return SVNN(
            (self.lower.t + self.upper.t) / 2.0,
            (self.lower.i + self.upper.i) / 2.0,
            (self.lower.f + self.upper.f) / 2.0,
        )

    def approximation_gaps(self):
        """Channels where the lower approximation exceeds the upper one."""
        gaps = []
        for name in ("i", "f"):
            lo, hi = getattr(self.lower, name), getattr(self.upper, name)
            if lo > hi + TOL:
                gaps.append("lower.%s=%r exceeds upper.%s=%r" % (name, lo, name, hi))
        return gaps

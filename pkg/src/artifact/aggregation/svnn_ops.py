"""Aggregation operators producing SVNNs."""

from __future__ import annotations

import math

from ..core.values import SVNN
from ..errors import InputError
from .weights import check_weights


def _psum_iter(xs):
    acc = 0.0
    for x in xs:
        acc = acc + x - acc * x
    return acc


def gisvwag(values, w, k) -> SVNN:
    """Generalized improved weighted averaging-geometric operator.

    Each channel c gets ((psum_j w_j c_j^(1/k)) * (prod_j c_j^(w_j/k)))^(k/2),
    where psum is the iterated probabilistic sum x + y - xy.
    """
    if not isinstance(k, (int, float)) or isinstance(k, bool) or k == 0:
        raise InputError("k must be a nonzero real, got %r" % (k,), kind="parameter")
    w = check_weights(w, n=len(values))

    def channel(cs):
        s = _psum_iter(wj * c ** (1.0 / k) for c, wj in zip(cs, w))
        g = math.prod(c ** (wj / k) for c, wj in zip(cs, w))
        return min((s * g) ** (k / 2.0), 1.0)

    return SVNN(
        channel([v.t for v in values]),
        channel([v.i for v in values]),
        channel([v.f for v in values]),
    )


def isvwag(values, w, k=2.0) -> SVNN:
    """Improved single valued weighted averaging-geometric operator (k = 2)."""
    return gisvwag(values, w, k)


def refined_group_aggregate(cells, gamma) -> SVNN:
    """Componentwise weighted geometric product across decision makers."""
    gamma = check_weights(gamma, n=len(cells), name="gamma")
    return SVNN(
        math.prod(c.t**g for c, g in zip(cells, gamma)),
        math.prod(c.i**g for c, g in zip(cells, gamma)),
        math.prod(c.f**g for c, g in zip(cells, gamma)),
    )

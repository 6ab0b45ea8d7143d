"""Whole-graph distance and similarity over label collections."""

from __future__ import annotations

import math

from ..errors import DegenerateError, InputError
from .graph import NeutroGraph

HAUSDORFF_FORMS = ("ngd", "mngd")


def _require_svnn(g, name):
    if not isinstance(g, NeutroGraph):
        raise InputError("%s is not a graph" % name, kind="value")
    if g.family != "svnn":
        raise InputError(
            "graph distance is defined for single-valued graphs", kind="family_mismatch"
        )


def matrix_collections(g):
    """Channel multisets of the full vertex-by-vertex label matrix.

    Diagonal entries hold the vertex labels, off-diagonal entries the edge
    label or zero; every channel therefore contributes n*n values (both
    orientations of each edge included).
    """
    names = g.vertex_names()
    vmap = g.vertex_map()
    emap = g.edge_map()
    t, i, f = [], [], []
    for a in names:
        for b in names:
            if a == b:
                lab = vmap[a]
            else:
                lab = emap.get((a, b) if a <= b else (b, a))
            if lab is None:
                t.append(0.0)
                i.append(0.0)
                f.append(0.0)
            else:
                t.append(lab.t)
                i.append(lab.i)
                f.append(lab.f)
    return tuple(t), tuple(i), tuple(f)


def _directed(A, B, outer, inner):
    vals = []
    for a in A:
        diffs = [abs(a - b) for b in B]
        if inner == "min":
            vals.append(min(diffs))
        elif inner == "max":
            vals.append(max(diffs))
        else:
            vals.append(sum(diffs) / len(diffs))
    if outer == "max":
        return max(vals)
    if outer == "min":
        return min(vals)
    return sum(vals) / len(vals)


def hausdorff_channel(A, B, outer, inner):
    """Symmetrized directed deviation between two value collections."""
    if not A or not B:
        raise DegenerateError("empty value collection")
    return max(_directed(A, B, outer, inner), _directed(B, A, outer, inner))


# (outer, inner) per channel: truth, indeterminacy, falsity.
_CHANNEL_MODES = {
    "ngd": (("max", "min"), ("max", "mean"), ("min", "max")),
    "mngd": (("mean", "min"), ("mean", "mean"), ("mean", "max")),
}


def graph_hausdorff(g1, g2, form="ngd"):
    """Channelwise graph distance over the matrix label collections.

    ngd uses the classical max-of-min truth deviation; mngd replaces the
    outer max with a mean. Returns the (t, i, f) distance triple.
    """
    if form not in HAUSDORFF_FORMS:
        raise InputError("unknown graph distance form %r" % (form,), kind="parameter")
    _require_svnn(g1, "g1")
    _require_svnn(g2, "g2")
    cols1 = matrix_collections(g1)
    cols2 = matrix_collections(g2)
    modes = _CHANNEL_MODES[form]
    return tuple(
        hausdorff_channel(a, b, outer, inner)
        for (a, b), (outer, inner) in zip(zip(cols1, cols2), modes)
    )


def _gaussian(rho, sigma):
    return math.exp(-(rho * rho) / (2.0 * sigma * sigma))


def graph_prob_similarity(g1, g2, sigma=0.5):
    """Edge-correspondence similarity through Gaussian posteriors.

    For every edge incidence of g1, candidate edges of g2 are scored by a
    Gaussian kernel of the channel difference, normalized into a posterior;
    the best posterior (worst for the falsity channel) is averaged over all
    incidences. Not a metric: a lone candidate always gets posterior 1.
    """
    sigma = float(sigma)
    if not sigma > 0.0:
        raise InputError("sigma must be positive", kind="parameter")
    _require_svnn(g1, "g1")
    _require_svnn(g2, "g2")
    e1 = g1.edge_map()
    e2 = g2.edge_map()
    if not e1 or not e2:
        raise DegenerateError("similarity needs at least one edge on each side")

    out = []
    for chan, pick in (("t", max), ("i", max), ("f", min)):
        values2 = [getattr(lab, chan) for lab in e2.values()]
        acc = 0.0
        terms = 0
        for lab in e1.values():
            x = getattr(lab, chan)
            kernels = [_gaussian(abs(y - x), sigma) for y in values2]
            total = sum(kernels)
            posteriors = (
                [k / total for k in kernels]
                if total > 0.0
                else [1.0 / len(kernels)] * len(kernels)
            )
            # Each edge is incident twice; the factor cancels in the mean.
            acc += 2.0 * pick(posteriors)
            terms += 2
        out.append(acc / terms)
    return tuple(out)

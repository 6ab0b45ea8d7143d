"""Binary operations on neutrosophic graphs."""

from __future__ import annotations

from ..errors import InputError
from .graph import (
    CHANNEL_RULES,
    NeutroGraph,
    combine_bound,
    edge_key,
    label_channels,
    label_from_channels,
)

SEP = "|"


def _same_family(g1, g2):
    if g1.family != g2.family:
        raise InputError(
            "graphs mix families %s and %s" % (g1.family, g2.family),
            kind="family_mismatch",
        )
    return g1.family


def _no_separator(g):
    for name in g.vertex_names():
        if SEP in name:
            raise InputError(
                "vertex name %r contains the pair separator %r" % (name, SEP),
                kind="graph",
            )


def _combine(family, labels):
    """Channelwise bound of several labels under the family's rules."""
    chans = [label_channels(family, lab) for lab in labels]
    ch = tuple(
        combine_bound(rule, [c[k] for c in chans])
        for k, rule in enumerate(CHANNEL_RULES[family])
    )
    return label_from_channels(family, ch)


def _combine_flipped(family, labels):
    """Dual combination: used where overlapping parts reinforce each other."""
    chans = [label_channels(family, lab) for lab in labels]
    ch = tuple(
        combine_bound("max" if rule == "min" else "min", [c[k] for c in chans])
        for k, rule in enumerate(CHANNEL_RULES[family])
    )
    return label_from_channels(family, ch)


def _pair(x1, x2):
    return x1 + SEP + x2


def cartesian(g1, g2):
    """Cartesian product: copies of g2 per g1-vertex plus rung edges."""
    family = _same_family(g1, g2)
    _no_separator(g1)
    _no_separator(g2)
    v1, v2 = g1.vertex_map(), g2.vertex_map()
    vertices = {
        _pair(x1, x2): _combine(family, (l1, l2))
        for x1, l1 in v1.items()
        for x2, l2 in v2.items()
    }
    edges = {}
    for x1, l1 in v1.items():
        for (y2, z2), e2 in g2.edge_map().items():
            key = edge_key(_pair(x1, y2), _pair(x1, z2))
            edges[key] = _combine(family, (l1, e2))
    for (y1, z1), e1 in g1.edge_map().items():
        for x2, l2 in v2.items():
            key = edge_key(_pair(y1, x2), _pair(z1, x2))
            edges[key] = _combine(family, (e1, l2))
    return NeutroGraph(family, tuple(vertices.items()), tuple(edges.items()))


def composition(g1, g2):
    """Lexicographic composition: the cartesian edges plus cross pairs."""
    family = _same_family(g1, g2)
    prod = cartesian(g1, g2)
    v2 = g2.vertex_map()
    edges = prod.edge_map()
    for (x1, y1), e1 in g1.edge_map().items():
        for x2, l2 in v2.items():
            for y2, m2 in v2.items():
                if x2 == y2:
                    continue
                key = edge_key(_pair(x1, x2), _pair(y1, y2))
                if key in edges:
                    continue
                edges[key] = _combine(family, (l2, m2, e1))
    return NeutroGraph(family, prod.vertices, tuple(edges.items()))


def union(g1, g2):
    """Union on vertex names; overlapping labels combine dually."""
    family = _same_family(g1, g2)
    v1, v2 = g1.vertex_map(), g2.vertex_map()
    vertices = {}
    for name in set(v1) | set(v2):
        if name in v1 and name in v2:
            vertices[name] = _combine_flipped(family, (v1[name], v2[name]))
        else:
            vertices[name] = v1.get(name, v2.get(name))
    e1, e2 = g1.edge_map(), g2.edge_map()
    edges = {}
    for key in set(e1) | set(e2):
        if key in e1 and key in e2:
            edges[key] = _combine_flipped(family, (e1[key], e2[key]))
        else:
            edges[key] = e1.get(key, e2.get(key))
    return NeutroGraph(family, tuple(vertices.items()), tuple(edges.items()))


def join(g1, g2):
    """Disjoint union plus all cross edges bounded by the vertex labels."""
    family = _same_family(g1, g2)
    v1, v2 = g1.vertex_map(), g2.vertex_map()
    shared = set(v1) & set(v2)
    if shared:
        raise InputError(
            "join needs disjoint vertex names, shared: %s" % sorted(shared),
            kind="graph",
        )
    vertices = dict(v1)
    vertices.update(v2)
    edges = dict(g1.edge_map())
    edges.update(g2.edge_map())
    for x1, l1 in v1.items():
        for x2, l2 in v2.items():
            edges[edge_key(x1, x2)] = _combine(family, (l1, l2))
    return NeutroGraph(family, tuple(vertices.items()), tuple(edges.items()))

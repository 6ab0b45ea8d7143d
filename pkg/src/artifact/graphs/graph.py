"""Neutrosophic graphs over single-valued, bipolar and interval labels."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InputError
from ..core.values import BNN, IVNN, SVNN, TOL

# Per family: how each flat channel of an edge label is bounded by the two
# endpoint labels. "min" channels must not exceed the endpoint minimum,
# "max" channels must not fall below the endpoint maximum.
CHANNEL_RULES = {
    "svnn": ("min", "max", "max"),
    "bnn": ("min", "max", "max", "max", "min", "min"),
    "ivnn": ("min", "min", "max", "max", "max", "max"),
}
CHANNEL_NAMES = {
    "svnn": ("t", "i", "f"),
    "bnn": ("t_pos", "i_pos", "f_pos", "t_neg", "i_neg", "f_neg"),
    "ivnn": ("t_lo", "t_hi", "i_lo", "i_hi", "f_lo", "f_hi"),
}
_FAMILY_TYPES = {"svnn": SVNN, "bnn": BNN, "ivnn": IVNN}


def label_channels(family, value):
    if family == "svnn":
        return value.as_tuple()
    if family == "bnn":
        return value.as_tuple()
    return value.bounds()


def label_from_channels(family, ch):
    if family == "svnn":
        return SVNN(*ch)
    if family == "bnn":
        return BNN(*ch)
    return IVNN((ch[0], ch[1]), (ch[2], ch[3]), (ch[4], ch[5]))


def combine_bound(rule, xs):
    return min(xs) if rule == "min" else max(xs)


def edge_key(u, v):
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class NeutroGraph:
    """Undirected graph whose vertices and edges carry neutrosophic labels.

    Edges are stored under sorted name pairs; loops, duplicate edges and
    edges with missing endpoints are rejected outright. Label-bound
    violations are *not* rejected at construction so that defective inputs
    can still be loaded and inspected; validate() lists them.
    """

    family: str
    vertices: tuple = field(default_factory=tuple)
    edges: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.family not in CHANNEL_RULES:
            raise InputError("unknown graph family %r" % (self.family,), kind="family_mismatch")
        want = _FAMILY_TYPES[self.family]
        vitems = (
            tuple(self.vertices.items())
            if isinstance(self.vertices, dict)
            else tuple(tuple(p) for p in self.vertices)
        )
        seen = {}
        for name, label in vitems:
            name = str(name)
            if name in seen:
                raise InputError("duplicate vertex %r" % name, kind="graph")
            if not isinstance(label, want):
                raise InputError(
                    "vertex %r label is not a %s value" % (name, self.family),
                    kind="family_mismatch",
                )
            seen[name] = label
        eitems = (
            tuple(self.edges.items())
            if isinstance(self.edges, dict)
            else tuple(tuple(p) for p in self.edges)
        )
        edges = {}
        for pair, label in eitems:
            u, v = (str(x) for x in pair)
            if u == v:
                raise InputError("loop edge at %r" % u, kind="graph")
            if u not in seen or v not in seen:
                raise InputError("edge (%s, %s) has a missing endpoint" % (u, v), kind="graph")
            key = edge_key(u, v)
            if key in edges:
                raise InputError("duplicate edge (%s, %s)" % key, kind="graph")
            if not isinstance(label, want):
                raise InputError(
                    "edge (%s, %s) label is not a %s value" % (key[0], key[1], self.family),
                    kind="family_mismatch",
                )
            edges[key] = label
        object.__setattr__(self, "vertices", tuple(seen.items()))
        object.__setattr__(self, "edges", tuple(sorted(edges.items())))

    # -- access helpers ----------------------------------------------------

    def vertex_map(self):
        return dict(self.vertices)

    def edge_map(self):
        return dict(self.edges)

    def vertex_names(self):
        return tuple(name for name, _ in self.vertices)

    def neighbors(self, name):
        out = []
        for (u, v), _ in self.edges:
            if u == name:
                out.append(v)
            elif v == name:
                out.append(u)
        return tuple(sorted(out))

    def _channels(self, value):
        return label_channels(self.family, value)

    # -- validity ----------------------------------------------------------

    def validate(self):
        """All label-bound violations, as human-readable strings."""
        rules = CHANNEL_RULES[self.family]
        names = CHANNEL_NAMES[self.family]
        vmap = self.vertex_map()
        problems = []
        for (u, v), label in self.edges:
            ech = self._channels(label)
            uch = self._channels(vmap[u])
            vch = self._channels(vmap[v])
            for k, rule in enumerate(rules):
                bound = combine_bound(rule, (uch[k], vch[k]))
                if rule == "min" and ech[k] > bound + TOL:
                    problems.append(
                        "edge (%s, %s) channel %s exceeds endpoint bound %.6g"
                        % (u, v, names[k], bound)
                    )
                elif rule == "max" and ech[k] < bound - TOL:
                    problems.append(
                        "edge (%s, %s) channel %s falls below endpoint bound %.6g"
                        % (u, v, names[k], bound)
                    )
        return problems

    def is_valid(self):
        return not self.validate()

    # -- degrees and totals --------------------------------------------------

    def _zero(self):
        return (0.0,) * len(CHANNEL_RULES[self.family])

    def degree(self, name):
        """Channel-wise sum of the labels on incident edges."""
        if name not in self.vertex_map():
            raise InputError("unknown vertex %r" % (name,), kind="graph")
        total = list(self._zero())
        for (u, v), label in self.edges:
            if name in (u, v):
                for k, c in enumerate(self._channels(label)):
                    total[k] += c
        return tuple(total)

    def total_degree(self, name):
        """Degree plus the vertex's own label."""
        own = self._channels(self.vertex_map()[name])
        return tuple(d + c for d, c in zip(self.degree(name), own))

    def neighborhood_degree(self, name):
        """Channel-wise sum of the labels of adjacent vertices."""
        vmap = self.vertex_map()
        if name not in vmap:
            raise InputError("unknown vertex %r" % (name,), kind="graph")
        total = list(self._zero())
        for nb in self.neighbors(name):
            for k, c in enumerate(self._channels(vmap[nb])):
                total[k] += c
        return tuple(total)

    def closed_neighborhood_degree(self, name):
        own = self._channels(self.vertex_map()[name])
        return tuple(d + c for d, c in zip(self.neighborhood_degree(name), own))

    def order(self):
        """Channel-wise sum over all vertex labels."""
        total = list(self._zero())
        for _, label in self.vertices:
            for k, c in enumerate(self._channels(label)):
                total[k] += c
        return tuple(total)

    def size(self):
        """Channel-wise sum over all edge labels."""
        total = list(self._zero())
        for _, label in self.edges:
            for k, c in enumerate(self._channels(label)):
                total[k] += c
        return tuple(total)

    # -- structure classification -------------------------------------------

    def _tight(self, label, u, v):
        """Does the edge label sit exactly on the endpoint bounds?"""
        rules = CHANNEL_RULES[self.family]
        vmap = self.vertex_map()
        ech = self._channels(label)
        uch = self._channels(vmap[u])
        vch = self._channels(vmap[v])
        return all(
            abs(ech[k] - combine_bound(rule, (uch[k], vch[k]))) <= TOL
            for k, rule in enumerate(rules)
        )

    def is_strong(self):
        """Every existing edge label equals its endpoint bound (vacuous if none)."""
        return all(self._tight(label, u, v) for (u, v), label in self.edges)

    def is_complete(self):
        """Strong, and every vertex pair carries an edge."""
        names = self.vertex_names()
        want = len(names) * (len(names) - 1) // 2
        return len(self.edges) == want and self.is_strong()

    def _common(self, per_vertex):
        names = self.vertex_names()
        first = per_vertex(names[0])
        for name in names[1:]:
            cur = per_vertex(name)
            if any(abs(a - b) > TOL for a, b in zip(first, cur)):
                return None
        return first

    def constant_degree(self):
        """The shared degree tuple if all vertices agree, else None."""
        return self._common(self.degree)

    def totally_constant_degree(self):
        return self._common(self.total_degree)

    def regular_degree(self):
        """The shared neighborhood-degree tuple if all agree, else None."""
        return self._common(self.neighborhood_degree)

    def totally_regular_degree(self):
        return self._common(self.closed_neighborhood_degree)

    def classify(self):
        """Structure summary used by the command-line front end."""
        return {
            "valid": self.is_valid(),
            "strong": self.is_strong(),
            "complete": self.is_complete(),
            "constant": self.constant_degree(),
            "totally_constant": self.totally_constant_degree(),
            "regular": self.regular_degree(),
            "totally_regular": self.totally_regular_degree(),
        }

    # -- complement ----------------------------------------------------------

    def complement(self):
        """Bound-minus-label complement over all vertex pairs.

        Channels whose complement would leave the value range raise; labels
        that come out all-zero mean "no edge" and are dropped.
        """
        rules = CHANNEL_RULES[self.family]
        names = CHANNEL_NAMES[self.family]
        vmap = self.vertex_map()
        emap = self.edge_map()
        vnames = self.vertex_names()
        new_edges = {}
        for a in range(len(vnames)):
            for b in range(a + 1, len(vnames)):
                u, v = edge_key(vnames[a], vnames[b])
                old = emap.get((u, v))
                och = (
                    self._channels(old) if old is not None else self._zero()
                )
                uch = self._channels(vmap[u])
                vch = self._channels(vmap[v])
                ch = tuple(
                    combine_bound(rule, (uch[k], vch[k])) - och[k]
                    for k, rule in enumerate(rules)
                )
                if all(abs(c) <= TOL for c in ch):
                    continue
                try:
                    label = label_from_channels(self.family, ch)
                except InputError as err:
                    raise InputError(
                        "complement leaves the value range on edge (%s, %s): %s"
                        % (u, v, err),
                        kind="graph",
                    ) from err
                new_edges[(u, v)] = label
        return NeutroGraph(self.family, self.vertices, tuple(new_edges.items()))


def complete_graph(family, vertices):
    """The strong complete graph on the given labelled vertices."""
    rules = CHANNEL_RULES[family]
    vitems = (
        tuple(vertices.items())
        if isinstance(vertices, dict)
        else tuple(tuple(p) for p in vertices)
    )
    edges = {}
    for a in range(len(vitems)):
        for b in range(a + 1, len(vitems)):
            (u, ulab), (v, vlab) = vitems[a], vitems[b]
            uch = label_channels(family, ulab)
            vch = label_channels(family, vlab)
            ch = tuple(
                combine_bound(rule, (uch[k], vch[k])) for k, rule in enumerate(rules)
            )
            edges[edge_key(str(u), str(v))] = label_from_channels(family, ch)
    return NeutroGraph(family, vitems, tuple(edges.items()))

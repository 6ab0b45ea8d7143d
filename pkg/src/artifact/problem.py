"""Decision-problem container, ranking record, and computation trails."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError

KINDS = ("benefit", "cost")
FAMILIES = ("svnn", "ivnn", "bnn", "svnhf", "rough", "crisp")
_TIE_TOL = 1e-9


def _tuplize_matrix(rows, n_alt, n_crit, what):
    rows = tuple(tuple(r) for r in rows)
    if len(rows) != n_alt or any(len(r) != n_crit for r in rows):
        raise InputError(
            "%s must be a %dx%d matrix" % (what, n_alt, n_crit), kind="shape"
        )
    return rows


@dataclass(frozen=True)
class DecisionProblem:
    """Alternatives x criteria decision matrix over one value family.

    Group problems carry one matrix per decision maker in dm_layers instead
    of (or besides) the flat cells matrix.
    """

    alternatives: tuple
    criteria: tuple  # (name, kind) pairs, kind in KINDS
    family: str
    cells: tuple = None
    weights: tuple = None
    weight_bounds: object = None
    dm_layers: tuple = None
    dm_weights: tuple = None
    criteria_weight_layers: tuple = None

    def __post_init__(self):
        alts = tuple(str(a) for a in self.alternatives)
        if not alts:
            raise InputError("need at least one alternative", kind="shape")
        crits = []
        for c in self.criteria:
            name, kind = c
            if kind not in KINDS:
                raise InputError("criterion kind must be benefit or cost, got %r" % (kind,), kind="value")
            crits.append((str(name), kind))
        if not crits:
            raise InputError("need at least one criterion", kind="shape")
        if self.family not in FAMILIES:
            raise InputError("unknown value family %r" % (self.family,), kind="family_mismatch")
        object.__setattr__(self, "alternatives", alts)
        object.__setattr__(self, "criteria", tuple(crits))
        if self.cells is not None:
            object.__setattr__(
                self, "cells", _tuplize_matrix(self.cells, len(alts), len(crits), "cells")
            )
        if self.dm_layers is not None:
            layers = tuple(
                _tuplize_matrix(layer, len(alts), len(crits), "dm layer %d" % k)
                for k, layer in enumerate(self.dm_layers)
            )
            if not layers:
                raise InputError("dm_layers must be nonempty when given", kind="shape")
            object.__setattr__(self, "dm_layers", layers)
        if self.cells is None and self.dm_layers is None:
            raise InputError("problem needs cells or dm_layers", kind="shape")
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if self.dm_weights is not None:
            object.__setattr__(self, "dm_weights", tuple(self.dm_weights))
        if self.criteria_weight_layers is not None:
            object.__setattr__(
                self,
                "criteria_weight_layers",
                tuple(tuple(row) for row in self.criteria_weight_layers),
            )

    @property
    def kinds(self):
        return tuple(kind for _, kind in self.criteria)

    def n_alternatives(self):
        return len(self.alternatives)

    def n_criteria(self):
        return len(self.criteria)


@dataclass(frozen=True)
class Ranking:
    """Per-alternative scores plus the induced preference order.

    direction says whether smaller ("asc") or larger ("desc") scores are
    preferred. order lists alternative indices best-first; equal scores keep
    their original index order and are reported in ties.
    """

    scores: tuple
    order: tuple
    ties: tuple
    direction: str

    def best(self):
        return self.order[0]


def rank_by(scores, direction):
    """Build a Ranking from raw scores; stable original-index tie-breaks."""
    if direction not in ("asc", "desc"):
        raise InputError("direction must be asc or desc", kind="parameter")
    scores = tuple(float(s) for s in scores)
    sign = -1.0 if direction == "desc" else 1.0
    order = tuple(sorted(range(len(scores)), key=lambda k: (sign * scores[k], k)))
    ties = []
    group = [order[0]]
    for prev, cur in zip(order, order[1:]):
        if abs(scores[prev] - scores[cur]) <= _TIE_TOL:
            group.append(cur)
        else:
            if len(group) > 1:
                ties.append(tuple(group))
            group = [cur]
    if len(group) > 1:
        ties.append(tuple(group))
    return Ranking(scores, order, tuple(ties), direction)


@dataclass
class Trail:
    """Ordered record of a pipeline's intermediate results."""

    method: str
    params: dict = field(default_factory=dict)
    steps: list = field(default_factory=list)
    ranking: Ranking = None

    def add(self, label, payload):
        self.steps.append((label, payload))
        return payload

    def get(self, label):
        for lab, payload in self.steps:
            if lab == label:
                return payload
        raise KeyError(label)

    def labels(self):
        return [lab for lab, _ in self.steps]

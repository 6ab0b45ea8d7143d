"""Weight vectors, bounds, and every weight-derivation scheme."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DegenerateError, InputError
from ..core.values import TOL


def check_weights(w, n=None, name="weights"):
    """Validate a simplex vector: nonnegative entries summing to 1.

    Returns the vector as a tuple of floats. n pins the expected length.
    """
    try:
        vec = tuple(float(x) for x in w)
    except (TypeError, ValueError):
        raise InputError("%s must be a sequence of reals, got %r" % (name, w), kind="parameter")
    if not vec:
        raise InputError("%s must be nonempty" % name, kind="parameter")
    if n is not None and len(vec) != n:
        raise InputError("%s must have length %d, got %d" % (name, n, len(vec)), kind="shape")
    if any(x < -TOL for x in vec):
        raise InputError("%s must be nonnegative, got %r" % (name, list(vec)), kind="parameter")
    if abs(sum(vec) - 1.0) > 1e-9:
        raise InputError("%s must sum to 1, got %r" % (name, sum(vec)), kind="parameter")
    return vec


@dataclass(frozen=True)
class WeightBounds:
    """Per-criterion (lo, hi) box constraints on a simplex vector."""

    pairs: tuple

    def __post_init__(self):
        pairs = []
        for k, pair in enumerate(self.pairs):
            try:
                lo, hi = float(pair[0]), float(pair[1])
            except (TypeError, ValueError, IndexError):
                raise InputError("bound %d must be a (lo, hi) pair" % k, kind="parameter")
            if not (0.0 <= lo <= hi <= 1.0):
                raise InputError(
                    "bound %d: need 0 <= lo <= hi <= 1, got (%r, %r)" % (k, lo, hi),
                    kind="parameter",
                )
            pairs.append((lo, hi))
        if sum(p[0] for p in pairs) > 1.0 + TOL or sum(p[1] for p in pairs) < 1.0 - TOL:
            raise InputError("infeasible bounds: simplex does not intersect the box", kind="parameter")
        object.__setattr__(self, "pairs", tuple(pairs))

    def __len__(self):
        return len(self.pairs)


def crispify_dm_weights(dm_values):
    """Turn decision-maker importance SVNNs into normalized crisp weights.

    Each value maps to 1 - sqrt(((1-t)^2 + i^2 + f^2) / 3), then the vector
    is normalized. All-zero raw weights are degenerate.
    """
    if not dm_values:
        raise InputError("no decision-maker values given", kind="shape")
    raw = [
        1.0 - math.sqrt(((1.0 - v.t) ** 2 + v.i**2 + v.f**2) / 3.0) for v in dm_values
    ]
    total = sum(raw)
    if total <= TOL:
        raise DegenerateError("all decision-maker weights crispify to zero")
    return tuple(r / total for r in raw)


def entropy_values(matrix):
    """Per-criterion entropy E_j = 1 - (1/m) sum_i (T_ij + F_ij) |2 I_ij - 1|."""
    if not matrix or not matrix[0]:
        raise InputError("empty decision matrix", kind="shape")
    m = len(matrix)
    ncrit = len(matrix[0])
    if any(len(row) != ncrit for row in matrix):
        raise InputError("ragged decision matrix", kind="shape")
    entropies = []
    for j in range(ncrit):
        acc = 0.0
        for i in range(m):
            cell = matrix[i][j]
            acc += (cell.t + cell.f) * abs(2.0 * cell.i - 1.0)
        entropies.append(1.0 - acc / m)
    return tuple(entropies)


def entropy_weights(matrix):
    """Entropy-based criteria weights: normalized information contents 1 - E_j."""
    contents = [1.0 - e for e in entropy_values(matrix)]
    total = sum(contents)
    if total <= TOL:
        raise DegenerateError("all entropies are one; weights undefined")
    return tuple(c / total for c in contents)


def maximizing_deviation_weights(matrix, dist):
    """Criteria weights proportional to total pairwise deviation per column.

    w_j ~ sum_i sum_k dist(r_ij, r_kj); dist is any pairwise distance on the
    cell family. All-zero deviations are degenerate.
    """
    if not matrix or not matrix[0]:
        raise InputError("empty decision matrix", kind="shape")
    if len(matrix) < 2:
        raise InputError("need at least two alternatives", kind="shape")
    ncrit = len(matrix[0])
    if any(len(row) != ncrit for row in matrix):
        raise InputError("ragged decision matrix", kind="shape")
    devs = []
    for j in range(ncrit):
        col = [row[j] for row in matrix]
        devs.append(sum(dist(a, b) for a in col for b in col))
    total = sum(devs)
    if total <= TOL:
        raise DegenerateError("all pairwise deviations are zero; weights undefined")
    return tuple(d / total for d in devs)


def lp_criteria_weights(H, bounds: WeightBounds):
    """Maximize sum_ij w_j h_ij over the box-constrained simplex.

    Solved by greedy water-filling: start every weight at its lower bound and
    hand the remaining mass to criteria in descending column-sum order (ties
    broken by ascending index) up to each upper bound. The objective is linear,
    so this reaches an optimal vertex.
    """
    if not H or not H[0]:
        raise InputError("empty score matrix", kind="shape")
    ncrit = len(H[0])
    if any(len(row) != ncrit for row in H):
        raise InputError("ragged score matrix", kind="shape")
    if len(bounds) != ncrit:
        raise InputError(
            "bounds cover %d criteria but matrix has %d" % (len(bounds), ncrit), kind="shape"
        )
    colsum = [sum(row[j] for row in H) for j in range(ncrit)]
    w = [lo for lo, _ in bounds.pairs]
    remaining = 1.0 - sum(w)
    for j in sorted(range(ncrit), key=lambda j: (-colsum[j], j)):
        if remaining <= TOL:
            break
        room = bounds.pairs[j][1] - w[j]
        take = min(room, remaining)
        w[j] += take
        remaining -= take
    return tuple(w)

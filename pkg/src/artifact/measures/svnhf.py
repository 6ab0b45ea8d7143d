"""Distance and similarity measures for hesitant triples (SVNHFE)."""

from __future__ import annotations

from ..errors import InputError
from ..core.values import SVNHFE, SVNN
from ..core.ops import svnhfe_align
from ..problem import rank_by
from .specs import DistanceSpec, SimilaritySpec

IDEAL_BENEFIT = SVNHFE((1.0,), (0.0,), (0.0,))
IDEAL_COST = SVNHFE((0.0,), (1.0,), (1.0,))


def _coerce_sequence(x, name):
    if isinstance(x, SVNHFE):
        return (x,)
    if isinstance(x, SVNN):
        return (SVNHFE((x.t,), (x.i,), (x.f,)),)
    seq = tuple(x)
    if not seq:
        raise InputError("%s must be nonempty" % name, kind="shape")
    out = []
    for k, el in enumerate(seq):
        if isinstance(el, SVNN):
            el = SVNHFE((el.t,), (el.i,), (el.f,))
        if not isinstance(el, SVNHFE):
            raise InputError(
                "%s[%d] is not a hesitant element" % (name, k), kind="family_mismatch"
            )
        out.append(el)
    return tuple(out)


def _aligned_deltas(a, b, attitude):
    """Per-channel absolute slot differences after padding to a common length."""
    (at, ai, af), (bt, bi, bf) = svnhfe_align(a, b, attitude)
    dt = tuple(abs(x - y) for x, y in zip(at, bt))
    di = tuple(abs(x - y) for x, y in zip(ai, bi))
    df = tuple(abs(x - y) for x, y in zip(af, bf))
    return dt, di, df


def _mean(xs):
    return sum(xs) / len(xs)


def svnhf_distance(a, b, spec=None):
    """Distance between two hesitant sequences under a DistanceSpec.

    Single elements are treated as length-1 sequences. The hamming and
    euclidean forms are the lambda=1 and lambda=2 members of the generalized
    family and share its code path exactly.
    """
    if spec is None:
        spec = DistanceSpec()
    if spec.family != "svnhf":
        raise InputError(
            "spec family %r cannot score hesitant elements" % spec.family,
            kind="family_mismatch",
        )
    A = _coerce_sequence(a, "a")
    B = _coerce_sequence(b, "b")
    if len(A) != len(B):
        raise InputError(
            "sequences differ in length (%d vs %d)" % (len(A), len(B)), kind="shape"
        )
    n = len(A)
    lam = spec.effective_lambda()
    hausdorff = spec.is_hausdorff()
    triple = spec.weight_triple(n)

    acc = 0.0
    for idx in range(n):
        dt, di, df = _aligned_deltas(A[idx], B[idx], spec.attitude)
        pt = [d ** lam for d in dt]
        pi = [d ** lam for d in di]
        pf = [d ** lam for d in df]
        if hausdorff:
            # Cardinality normalization is a no-op under a max.
            if triple is None:
                inner = max(pt + pi + pf)
            else:
                w, wi, wf = triple
                inner = max(
                    [w[idx] * v for v in pt]
                    + [wi[idx] * v for v in pi]
                    + [wf[idx] * v for v in pf]
                )
        elif spec.normalization == "biswas_l":
            l_x = len(pt) + len(pi) + len(pf)
            if triple is None:
                inner = (sum(pt) + sum(pi) + sum(pf)) / l_x
            else:
                w, wi, wf = triple
                inner = (w[idx] * sum(pt) + wi[idx] * sum(pi) + wf[idx] * sum(pf)) / l_x
        else:
            if triple is None:
                inner = _mean(pt) + _mean(pi) + _mean(pf)
            else:
                w, wi, wf = triple
                inner = w[idx] * _mean(pt) + wi[idx] * _mean(pi) + wf[idx] * _mean(pf)
        acc += inner

    total = acc / (3.0 * n) if triple is None else acc / 3.0
    return total ** (1.0 / lam)


def _ratio_terms(A, B, attitude, kind):
    """Per-element overlap ratios for the set_theoretic / matching forms."""
    ratios = []
    for a, b in zip(A, B):
        (at, ai, af), (bt, bi, bf) = svnhfe_align(a, b, attitude)
        xs = list(at) + list(ai) + list(af)
        ys = list(bt) + list(bi) + list(bf)
        if kind == "set_theoretic":
            num = sum(min(x, y) for x, y in zip(xs, ys))
            den = sum(max(x, y) for x, y in zip(xs, ys))
        else:
            num = sum(x * y for x, y in zip(xs, ys))
            den = max(sum(x * x for x in xs), sum(y * y for y in ys))
        # Two all-zero elements are identical: perfect overlap.
        ratios.append(1.0 if den == 0.0 else num / den)
    return ratios


def svnhf_similarity(a, b, spec=None):
    """Similarity between two hesitant sequences under a SimilaritySpec."""
    if spec is None:
        spec = SimilaritySpec()
    if spec.family != "svnhf":
        raise InputError(
            "spec family %r cannot score hesitant elements" % spec.family,
            kind="family_mismatch",
        )
    if spec.form == "one_minus_distance":
        return 1.0 - svnhf_distance(a, b, spec.base_distance())
    A = _coerce_sequence(a, "a")
    B = _coerce_sequence(b, "b")
    if len(A) != len(B):
        raise InputError(
            "sequences differ in length (%d vs %d)" % (len(A), len(B)), kind="shape"
        )
    ratios = _ratio_terms(A, B, spec.attitude, spec.form)
    if spec.weights is None:
        return _mean(ratios)
    from ..aggregation.weights import check_weights

    w = check_weights(spec.weights, len(A), name="weights")
    return sum(wi * r for wi, r in zip(w, ratios))


def svnhf_ideal_rank(cells, kinds, spec):
    """Distance of every row to the per-criterion ideal; smaller is better.

    cells is an alternatives x criteria matrix of SVNHFE; kinds gives
    benefit/cost per criterion. Returns (distances, Ranking).
    """
    rows = tuple(tuple(r) for r in cells)
    if not rows:
        raise InputError("empty decision matrix", kind="shape")
    m = len(rows[0])
    if len(kinds) != m or any(len(r) != m for r in rows):
        raise InputError("kinds and matrix columns disagree", kind="shape")
    ideal = tuple(
        IDEAL_BENEFIT if kind == "benefit" else IDEAL_COST for kind in kinds
    )
    dists = tuple(svnhf_distance(row, ideal, spec) for row in rows)
    return dists, rank_by(dists, "asc")

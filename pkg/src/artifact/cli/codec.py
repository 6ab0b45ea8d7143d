"""JSON codec for problem, graph and trail documents."""

from __future__ import annotations

from ..errors import InputError
from ..core.values import BNN, IVNN, SVNN, SVNHFE, RoughSVNN
from ..core.scales import get_scale, linguistic_to_value
from ..aggregation.weights import WeightBounds
from ..graphs.graph import NeutroGraph
from ..problem import DecisionProblem

SCHEMA_VERSION = 1

PROBLEM_KEYS = (
    ("schema_version", "family", "alternatives", "criteria"),
    (
        "cells",
        "weights",
        "weight_bounds",
        "dm_layers",
        "dm_weights",
        "criteria_weight_layers",
        "linguistic",
        "scale",
        "params",
    ),
)
SEQUENCE_KEYS = (
    ("schema_version", "family", "elements"),
    ("weights", "linguistic", "scale"),
)
GRAPH_KEYS = (("schema_version", "family", "vertices", "edges"), ("name",))

PARAM_KEYS = (
    "rho",
    "xi",
    "alpha",
    "lambda",
    "sigma",
    "normalization",
    "attitude",
    "form",
)


def check_keys(doc, spec, what, strict):
    if not isinstance(doc, dict):
        raise InputError("%s must be a JSON object" % what, kind="schema")
    required, optional = spec
    for key in required:
        if key not in doc:
            raise InputError("%s is missing %r" % (what, key), kind="schema")
    if strict:
        unknown = sorted(k for k in doc if k not in required and k not in optional)
        if unknown:
            raise InputError(
                "%s has unknown keys %s (strict mode)" % (what, unknown), kind="schema"
            )


def check_version(doc, what):
    v = doc.get("schema_version")
    if v != SCHEMA_VERSION:
        raise InputError(
            "%s schema_version must be %d, got %r" % (what, SCHEMA_VERSION, v),
            kind="schema",
        )


def _numbers(raw, n, what):
    if not isinstance(raw, (list, tuple)) or len(raw) != n:
        raise InputError("%s must be a list of %d numbers" % (what, n), kind="schema")
    out = []
    for x in raw:
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise InputError("%s holds a non-number" % what, kind="schema")
        out.append(float(x))
    return out


def _interval(raw, what):
    return tuple(_numbers(raw, 2, what))


def decode_cell(family, raw, scale=None):
    """One JSON cell into a value of the requested family."""
    if isinstance(raw, str):
        if scale is None:
            raise InputError(
                "linguistic cell %r without a scale" % raw, kind="schema"
            )
        value = linguistic_to_value(raw, scale)
        got = _family_of(value)
        if got != family:
            raise InputError(
                "scale %r yields %s cells, document says %s"
                % (scale.name, got, family),
                kind="family_mismatch",
            )
        return value
    if family == "crisp":
        if isinstance(raw, bool) or not isinstance(raw, (int, float)):
            raise InputError("crisp cell must be a number", kind="schema")
        return float(raw)
    if family == "svnn":
        return SVNN(*_numbers(raw, 3, "svnn cell"))
    if family == "bnn":
        return BNN(*_numbers(raw, 6, "bnn cell"))
    if family == "ivnn":
        if not isinstance(raw, (list, tuple)) or len(raw) != 3:
            raise InputError("ivnn cell must hold three intervals", kind="schema")
        return IVNN(*(_interval(part, "ivnn bound") for part in raw))
    if family == "svnhf":
        if not isinstance(raw, (list, tuple)) or len(raw) != 3:
            raise InputError("svnhf cell must hold three value lists", kind="schema")
        slots = []
        for part in raw:
            if not isinstance(part, (list, tuple)) or not part:
                raise InputError(
                    "svnhf channel must be a nonempty list", kind="schema"
                )
            slots.append(_numbers(part, len(part), "svnhf channel"))
        return SVNHFE(*slots)
    if family == "rough":
        if not isinstance(raw, (list, tuple)) or len(raw) != 2:
            raise InputError(
                "rough cell must hold lower and upper triples", kind="schema"
            )
        lo = SVNN(*_numbers(raw[0], 3, "rough lower"))
        hi = SVNN(*_numbers(raw[1], 3, "rough upper"))
        return RoughSVNN(lo, hi)
    raise InputError("unknown family %r" % (family,), kind="family_mismatch")


def _family_of(value):
    if isinstance(value, SVNN):
        return "svnn"
    if isinstance(value, IVNN):
        return "ivnn"
    if isinstance(value, BNN):
        return "bnn"
    if isinstance(value, SVNHFE):
        return "svnhf"
    if isinstance(value, RoughSVNN):
        return "rough"
    return "crisp"


def _scale_for(doc):
    if not doc.get("linguistic"):
        return None
    name = doc.get("scale")
    if not isinstance(name, str):
        raise InputError("linguistic documents need a scale name", kind="schema")
    return get_scale(name)


def _decode_matrix(family, rows, scale, what):
    if not isinstance(rows, (list, tuple)) or not rows:
        raise InputError("%s must be a nonempty matrix" % what, kind="schema")
    out = []
    for r, row in enumerate(rows):
        if not isinstance(row, (list, tuple)) or not row:
            raise InputError("%s row %d must be a nonempty list" % (what, r), kind="schema")
        out.append(tuple(decode_cell(family, cell, scale) for cell in row))
    return tuple(out)


def decode_params(raw):
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise InputError("params must be an object", kind="schema")
    out = {}
    for key, value in raw.items():
        if key not in PARAM_KEYS:
            raise InputError("unknown param %r" % (key,), kind="parameter")
        out[key] = value
    return out


def decode_problem(doc, strict=True):
    """ProblemDocument JSON into (DecisionProblem, params)."""
    check_keys(doc, PROBLEM_KEYS, "problem document", strict)
    check_version(doc, "problem document")
    family = doc.get("family")
    if not isinstance(family, str):
        raise InputError("family must be a string", kind="schema")
    scale = _scale_for(doc)

    raw_criteria = doc.get("criteria")
    if not isinstance(raw_criteria, (list, tuple)) or not raw_criteria:
        raise InputError("criteria must be a nonempty list", kind="schema")
    criteria = []
    for c in raw_criteria:
        if isinstance(c, dict):
            check_keys(c, (("name", "kind"), ()), "criterion", strict)
            criteria.append((c["name"], c["kind"]))
        elif isinstance(c, (list, tuple)) and len(c) == 2:
            criteria.append((c[0], c[1]))
        else:
            raise InputError(
                "criterion entries need a name and a kind", kind="schema"
            )

    cells = doc.get("cells")
    if cells is not None:
        cells = _decode_matrix(family, cells, scale, "cells")
    dm_layers = doc.get("dm_layers")
    if dm_layers is not None:
        if not isinstance(dm_layers, (list, tuple)) or not dm_layers:
            raise InputError("dm_layers must be a nonempty list", kind="schema")
        dm_layers = tuple(
            _decode_matrix(family, layer, scale, "dm layer %d" % k)
            for k, layer in enumerate(dm_layers)
        )
    dm_weights = doc.get("dm_weights")
    if dm_weights is not None:
        if not isinstance(dm_weights, (list, tuple)) or not dm_weights:
            raise InputError("dm_weights must be a nonempty list", kind="schema")
        dm_weights = tuple(decode_cell("svnn", w, scale) for w in dm_weights)
    cw_layers = doc.get("criteria_weight_layers")
    if cw_layers is not None:
        cw_layers = _decode_matrix("svnn", cw_layers, scale, "criteria_weight_layers")
    weights = doc.get("weights")
    if weights is not None:
        weights = tuple(_numbers(weights, len(weights), "weights"))
    bounds = doc.get("weight_bounds")
    if bounds is not None:
        if not isinstance(bounds, (list, tuple)) or not bounds:
            raise InputError("weight_bounds must be a list of pairs", kind="schema")
        bounds = WeightBounds(tuple(_interval(p, "weight bound") for p in bounds))

    problem = DecisionProblem(
        alternatives=doc.get("alternatives", ()),
        criteria=criteria,
        family=family,
        cells=cells,
        weights=weights,
        weight_bounds=bounds,
        dm_layers=dm_layers,
        dm_weights=dm_weights,
        criteria_weight_layers=cw_layers,
    )
    return problem, decode_params(doc.get("params"))


def decode_sequence(doc, strict=True):
    """Measure-input JSON into (family, tuple of values, weights or None)."""
    check_keys(doc, SEQUENCE_KEYS, "sequence document", strict)
    check_version(doc, "sequence document")
    family = doc.get("family")
    if not isinstance(family, str):
        raise InputError("family must be a string", kind="schema")
    scale = _scale_for(doc)
    raw = doc.get("elements")
    if not isinstance(raw, (list, tuple)) or not raw:
        raise InputError("elements must be a nonempty list", kind="schema")
    elements = tuple(decode_cell(family, cell, scale) for cell in raw)
    weights = doc.get("weights")
    if weights is not None:
        weights = tuple(_numbers(weights, len(weights), "weights"))
    return family, elements, weights


def decode_graph(doc, strict=True):
    """Graph JSON into a NeutroGraph."""
    check_keys(doc, GRAPH_KEYS, "graph document", strict)
    check_version(doc, "graph document")
    family = doc.get("family")
    if family not in ("svnn", "bnn", "ivnn"):
        raise InputError(
            "graph family must be svnn, bnn or ivnn, got %r" % (family,),
            kind="family_mismatch",
        )
    raw_vertices = doc.get("vertices")
    if not isinstance(raw_vertices, dict) or not raw_vertices:
        raise InputError(
            "vertices must be a nonempty name-to-cell object", kind="schema"
        )
    vertices = tuple(
        (name, decode_cell(family, cell)) for name, cell in raw_vertices.items()
    )
    raw_edges = doc.get("edges")
    if not isinstance(raw_edges, (list, tuple)):
        raise InputError("edges must be a list", kind="schema")
    edges = []
    for e in raw_edges:
        if not isinstance(e, dict):
            raise InputError("edges must be objects with u, v, label", kind="schema")
        check_keys(e, (("u", "v", "label"), ()), "edge", strict)
        edges.append(((str(e["u"]), str(e["v"])), decode_cell(family, e["label"])))
    return NeutroGraph(family, vertices, tuple(edges))


# -- encoding ---------------------------------------------------------------


def _r6(x):
    return round(float(x), 6)


def encode_value(x):
    """Any library value or container into 6-decimal JSON data."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return _r6(x)
    if isinstance(x, SVNN):
        return [_r6(x.t), _r6(x.i), _r6(x.f)]
    if isinstance(x, IVNN):
        return [[_r6(b) for b in pair] for pair in (x.t, x.i, x.f)]
    if isinstance(x, BNN):
        return [_r6(c) for c in x.as_tuple()]
    if isinstance(x, SVNHFE):
        return [[_r6(v) for v in chan] for chan in (x.t, x.i, x.f)]
    if isinstance(x, RoughSVNN):
        return [encode_value(x.lower), encode_value(x.upper)]
    if isinstance(x, WeightBounds):
        return [[_r6(lo), _r6(hi)] for lo, hi in x.pairs]
    if isinstance(x, dict):
        return {str(k): encode_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [encode_value(v) for v in x]
    raise InputError("cannot encode %r" % type(x).__name__, kind="value")


def encode_ranking(ranking, names):
    return {
        "scores": [_r6(s) for s in ranking.scores],
        "order": list(ranking.order),
        "ranked": [names[k] for k in ranking.order],
        "ties": [list(group) for group in ranking.ties],
        "direction": ranking.direction,
    }


def encode_trail(trail, names):
    """Trail into a TrailDocument; names label the ranked axis."""
    doc = {
        "schema_version": SCHEMA_VERSION,
        "method": trail.method,
        "params": encode_value(trail.params),
        "names": list(names),
        "steps": [
            {"label": label, "data": encode_value(payload)}
            for label, payload in trail.steps
        ],
    }
    if trail.ranking is not None:
        doc["ranking"] = encode_ranking(trail.ranking, list(names))
    return doc


def encode_graph(g):
    return {
        "schema_version": SCHEMA_VERSION,
        "family": g.family,
        "vertices": {name: encode_value(label) for name, label in g.vertices},
        "edges": [
            {"u": u, "v": v, "label": encode_value(label)}
            for (u, v), label in g.edges
        ],
    }

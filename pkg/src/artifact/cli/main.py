"""Command-line front end: solve, measure and graph subcommands."""

from __future__ import annotations

import argparse
import json
import sys

from ..errors import DegenerateError, InputError
from ..measures import DistanceSpec, SimilaritySpec, distance, similarity
from ..mcdm import (
    GraParams,
    ProjParams,
    entropy_madm_rank,
    gra_rank,
    hybrid_group_rank,
    ideal_distance_rank,
    projection_rank,
    svnsf_screen,
    topsis_bipolar_rank,
    topsis_refined_rank,
)
from ..graphs import (
    cartesian,
    composition,
    graph_hausdorff,
    graph_prob_similarity,
    join,
    union,
)
from . import codec
from .render import render_plain, render_trail

METHODS = (
    "ideal-distance",
    "gra",
    "topsis-bipolar",
    "topsis-refined",
    "projection",
    "hybrid-group",
    "entropy-madm",
    "svnsf-screen",
)

# measure name -> (mode, form, weights required)
MEASURES = {
    "hamming": ("distance", "hamming", False),
    "euclidean": ("distance", "euclidean", False),
    "generalized": ("distance", "generalized", False),
    "hausdorff_hamming": ("distance", "hausdorff_hamming", False),
    "hausdorff_euclidean": ("distance", "hausdorff_euclidean", False),
    "hausdorff_generalized": ("distance", "hausdorff_generalized", False),
    "one_minus_distance": ("similarity", "one_minus_distance", False),
    "set_theoretic": ("similarity", "set_theoretic", False),
    "matching_function": ("similarity", "matching_function", False),
    "rough_cosine": ("similarity", "rough_cosine", False),
    "rough_sine": ("similarity", "rough_sine", False),
    "rough_cotangent": ("similarity", "rough_cotangent", False),
}
MEASURE_ALIASES = {
    "h": "hamming",
    "e": "euclidean",
    "g": "generalized",
    "hh": "hausdorff_hamming",
    "he": "hausdorff_euclidean",
    "hg": "hausdorff_generalized",
    "omd": "one_minus_distance",
    "st": "set_theoretic",
    "mf": "matching_function",
    "cos": "rough_cosine",
    "sin": "rough_sine",
    "cot": "rough_cotangent",
}
for _short, _long in list(MEASURE_ALIASES.items()):
    MEASURES[_short] = MEASURES[_long]
# w-prefixed names demand a weight vector.
for _name in (
    "h", "e", "g", "hh", "he", "hg",
    "hamming", "euclidean", "generalized",
    "hausdorff_hamming", "hausdorff_euclidean", "hausdorff_generalized",
):
    _mode, _form, _ = MEASURES[_name]
    MEASURES["w" + _name] = (_mode, _form, True)

UNARY_OPS = ("validate", "degree", "classify", "complement")
BINARY_OPS = ("cartesian", "composition", "union", "join", "hausdorff", "prob-sim")
GRAPH_OPS = UNARY_OPS + BINARY_OPS

STRING_PARAMS = ("normalization", "attitude", "form")


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as err:
        raise InputError("cannot read %s: %s" % (path, err), kind="parse") from err
    except json.JSONDecodeError as err:
        raise InputError("malformed JSON in %s: %s" % (path, err), kind="parse") from err


def _parse_cli_params(pairs):
    out = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise InputError("params must look like key=value, got %r" % pair, kind="parameter")
        if key not in codec.PARAM_KEYS:
            raise InputError("unknown param %r" % key, kind="parameter")
        if key in STRING_PARAMS:
            out[key] = value
        else:
            try:
                out[key] = float(value)
            except ValueError:
                raise InputError("param %s needs a number, got %r" % (key, value), kind="parameter")
    return out


def _parse_weights(text):
    if text is None:
        return None
    try:
        return tuple(float(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise InputError("weights must be comma-separated numbers", kind="parameter")


def _emit(doc, out, table_renderer):
    if out == "table":
        sys.stdout.write(table_renderer(doc))
    else:
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")


def _run_method(problem, method, params):
    if method == "ideal-distance":
        lam = params.get("lambda")
        form = params.get("form")
        if form is None:
            form = "generalized" if lam is not None else "hamming"
        spec = DistanceSpec(
            family="svnhf",
            form=form,
            lam=1.0 if lam is None else lam,
            normalization=params.get("normalization", "standard"),
            attitude=params.get("attitude", "pessimistic"),
        )
        return ideal_distance_rank(problem, spec)
    if method == "gra":
        return gra_rank(problem, GraParams(rho=params.get("rho", 0.5)))
    if method == "topsis-bipolar":
        return topsis_bipolar_rank(problem)
    if method == "topsis-refined":
        return topsis_refined_rank(problem)
    if method == "projection":
        return projection_rank(problem, ProjParams(xi=params.get("xi", 0.5)))
    if method == "hybrid-group":
        return hybrid_group_rank(problem, alpha=params.get("alpha", 0.5))
    if method == "entropy-madm":
        return entropy_madm_rank(problem, scheme=params.get("normalization", "lstmm"))
    return svnsf_screen(problem)


def cmd_solve(args):
    doc = _load_json(args.input)
    problem, params = codec.decode_problem(doc, strict=not args.permissive)
    params.update(_parse_cli_params(args.param))
    trail = _run_method(problem, args.method, params)
    names = (
        [name for name, _ in problem.criteria]
        if args.method == "svnsf-screen"
        else list(problem.alternatives)
    )
    _emit(codec.encode_trail(trail, names), args.out, render_trail)
    return 0


def cmd_measure(args):
    name = args.measure
    if name not in MEASURES:
        raise InputError("unknown measure %r" % name, kind="parameter")
    mode, form, needs_weights = MEASURES[name]
    fam_a, elems_a, w_a = codec.decode_sequence(
        _load_json(args.a), strict=not args.permissive
    )
    fam_b, elems_b, w_b = codec.decode_sequence(
        _load_json(args.b), strict=not args.permissive
    )
    if fam_a != fam_b:
        raise InputError(
            "documents mix families %s and %s" % (fam_a, fam_b), kind="family_mismatch"
        )
    weights = _parse_weights(args.weights)
    if weights is None:
        weights = w_a if w_a is not None else w_b
    if needs_weights and weights is None:
        raise InputError("measure %r needs a weight vector" % name, kind="parameter")

    family = "svnhf" if fam_a == "svnn" else fam_a
    if mode == "distance":
        spec = DistanceSpec(
            family=family,
            form=form,
            lam=1.0 if args.lam is None else args.lam,
            weights=weights,
            weights_i=_parse_weights(args.weights_i),
            weights_f=_parse_weights(args.weights_f),
            normalization=args.normalization,
            attitude=args.attitude,
        )
        value = distance(elems_a, elems_b, spec)
    else:
        spec = SimilaritySpec(
            family=family, form=form, weights=weights, attitude=args.attitude
        )
        value = similarity(elems_a, elems_b, spec)
    sys.stdout.write("%.6f\n" % value)
    return 0


def cmd_graph(args):
    needed = 1 if args.op in UNARY_OPS else 2
    if len(args.inputs) != needed:
        raise InputError(
            "op %s takes %d graph document(s), got %d"
            % (args.op, needed, len(args.inputs)),
            kind="parameter",
        )
    graphs = [
        codec.decode_graph(_load_json(path), strict=not args.permissive)
        for path in args.inputs
    ]
    g = graphs[0]
    if args.op == "validate":
        violations = g.validate()
        doc = {
            "schema_version": codec.SCHEMA_VERSION,
            "op": "validate",
            "valid": not violations,
            "violations": violations,
        }
    elif args.op == "degree":
        doc = {
            "schema_version": codec.SCHEMA_VERSION,
            "op": "degree",
            "degrees": {
                name: codec.encode_value(g.degree(name)) for name in g.vertex_names()
            },
        }
    elif args.op == "classify":
        doc = {
            "schema_version": codec.SCHEMA_VERSION,
            "op": "classify",
            "classification": codec.encode_value(g.classify()),
        }
    elif args.op == "complement":
        doc = codec.encode_graph(g.complement())
    elif args.op in ("cartesian", "composition", "union", "join"):
        fn = {
            "cartesian": cartesian,
            "composition": composition,
            "union": union,
            "join": join,
        }[args.op]
        doc = codec.encode_graph(fn(g, graphs[1]))
    elif args.op == "hausdorff":
        d = graph_hausdorff(g, graphs[1], form=args.form)
        doc = {
            "schema_version": codec.SCHEMA_VERSION,
            "op": "hausdorff",
            "form": args.form,
            "distance": codec.encode_value(d),
        }
    else:
        s = graph_prob_similarity(g, graphs[1], sigma=args.sigma)
        doc = {
            "schema_version": codec.SCHEMA_VERSION,
            "op": "prob-sim",
            "sigma": codec.encode_value(args.sigma),
            "similarity": codec.encode_value(s),
        }
    _emit(doc, args.out, render_plain)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="neutro",
        description="Neutrosophic decision, measure and graph toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="rank a decision problem document")
    p.add_argument("input", help="problem document (JSON)")
    p.add_argument("--method", required=True, choices=METHODS)
    p.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="method parameter, may repeat (overrides document params)",
    )
    p.add_argument("--out", choices=("json", "table"), default="json")
    p.add_argument("--permissive", action="store_true", help="ignore unknown document keys")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("measure", help="distance or similarity of two sequences")
    p.add_argument("a", help="first sequence document (JSON)")
    p.add_argument("b", help="second sequence document (JSON)")
    p.add_argument("--measure", required=True, help="form name or alias, e.g. wh")
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--weights", default=None, help="comma-separated weights")
    p.add_argument("--weights-i", dest="weights_i", default=None)
    p.add_argument("--weights-f", dest="weights_f", default=None)
    p.add_argument("--normalization", choices=("standard", "biswas_l"), default="standard")
    p.add_argument("--attitude", choices=("pessimistic", "optimistic"), default="pessimistic")
    p.add_argument("--permissive", action="store_true")
    p.set_defaults(fn=cmd_measure)

    p = sub.add_parser("graph", help="graph validation, metrics and products")
    p.add_argument("--op", required=True, choices=GRAPH_OPS)
    p.add_argument("inputs", nargs="+", help="graph document(s) (JSON)")
    p.add_argument("--form", choices=("ngd", "mngd"), default="ngd")
    p.add_argument("--sigma", type=float, default=0.5)
    p.add_argument("--out", choices=("json", "table"), default="json")
    p.add_argument("--permissive", action="store_true")
    p.set_defaults(fn=cmd_graph)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as err:
        json.dump({"error": {"kind": err.kind, "message": str(err)}}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except DegenerateError as err:
        json.dump({"error": {"kind": err.kind, "message": str(err)}}, sys.stderr)
        sys.stderr.write("\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())

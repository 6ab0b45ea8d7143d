"""Plain-text rendering of JSON output documents.

Everything here formats data already present in the JSON documents; no
values are computed in this module.
"""

from __future__ import annotations


def _fmt_scalar(x):
    if isinstance(x, bool) or x is None:
        return str(x)
    if isinstance(x, float):
        return "%.6f" % x
    return str(x)


def _fmt_cell(data):
    if isinstance(data, list):
        return "[" + ", ".join(_fmt_cell(v) for v in data) + "]"
    return _fmt_scalar(data)


def _is_matrix(data):
    return (
        isinstance(data, list)
        and data
        and all(isinstance(row, list) for row in data)
        and any(isinstance(v, list) for row in data for v in row)
    )


def _step_lines(label, data, names):
    lines = ["%s:" % label]
    if _is_matrix(data) and len(data) == len(names):
        width = max(len(n) for n in names)
        for name, row in zip(names, data):
            lines.append(
                "  %-*s  %s" % (width, name, "  ".join(_fmt_cell(v) for v in row))
            )
    elif isinstance(data, list):
        lines.append("  " + "  ".join(_fmt_cell(v) for v in data))
    elif isinstance(data, dict):
        for key, value in data.items():
            lines.append("  %s: %s" % (key, _fmt_cell(value)))
    else:
        lines.append("  " + _fmt_scalar(data))
    return lines


def _ranking_chain(ranking):
    order = ranking["order"]
    ranked = ranking["ranked"]
    ties = [set(group) for group in ranking.get("ties", [])]

    def same_group(a, b):
        return any(a in g and b in g for g in ties)

    parts = [ranked[0]]
    for pos in range(1, len(order)):
        sep = " = " if same_group(order[pos - 1], order[pos]) else " > "
        parts.append(sep + ranked[pos])
    return "".join(parts)


def render_trail(doc):
    """TrailDocument as an aligned text report."""
    lines = ["method: %s" % doc["method"]]
    params = doc.get("params") or {}
    if params:
        lines.append(
            "params: "
            + ", ".join("%s=%s" % (k, _fmt_scalar(v)) for k, v in params.items())
        )
    names = doc.get("names", [])
    for step in doc.get("steps", []):
        lines.append("")
        lines.extend(_step_lines(step["label"], step["data"], names))
    ranking = doc.get("ranking")
    if ranking:
        lines.append("")
        lines.append(
            "scores: " + "  ".join(_fmt_scalar(s) for s in ranking["scores"])
        )
        lines.append("ranking: " + _ranking_chain(ranking))
    return "\n".join(lines) + "\n"


def render_plain(doc, indent=0):
    """Generic key/value rendering for graph and metric documents."""
    pad = "  " * indent
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append("%s%s:" % (pad, key))
            lines.append(render_plain(value, indent + 1).rstrip("\n"))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append("%s%s:" % (pad, key))
            for item in value:
                lines.append(render_plain(item, indent + 1).rstrip("\n"))
        else:
            lines.append("%s%s: %s" % (pad, key, _fmt_cell(value)))
    return "\n".join(lines) + "\n"

"""Graphviz DOT rendering of a complex, its assignment and its bad cells.

Sensors become nodes labelled with their readings and 1-cells become edges.
DOT has no 2-cells, so each higher cell is written as a comment block and a
plain (non-cluster) subgraph grouping its vertices, and its boundary edges
are drawn bold.  Bad cells are red.
"""
import json

from .complex import build_complex, enumerate_cells
from .documents import ProblemDocument, ReportDocument

BAD = 'color=red, fontcolor=red'


def _quote(text):
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def export_dot(problem: ProblemDocument, report: ReportDocument, budget=None) -> str:
    network = problem.network()
    cx = build_complex(network)
    cells = enumerate_cells(cx, budget or problem.options.cell_budget or 1_000_000)
    bad = {tuple(c) for c in report.bad_cells}
    higher = [c for c in cells if c.dimension >= 2]
    boundary = {e for c in higher for e in _edges(c.vertices)}

    lines = ["graph complex {"]
    if network.vertices:
        lines.append("  node [shape=circle];")
    for v in network.vertices:
        readings = ", ".join(f"{x}={json.dumps(val)}" for x, val in sorted(problem.assignment[v].items()))
        label = f"{v}\n{readings}" if readings else v
        lines.append(f"  {_quote(v)} [label={_quote(label)}];")
    for c in cells:
        if c.dimension != 1:
            continue
        attrs = []
        if c.vertices in bad:
            attrs.append(BAD)
        if c.vertices in boundary:
            attrs.append("style=bold")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        a, b = c.vertices
        lines.append(f"  {_quote(a)} -- {_quote(b)}{suffix};")
    for c in higher:
        status = "inconsistent" if c.vertices in bad else "consistent"
        members = ", ".join(c.vertices)
        lines.append(f"  /* {c.dimension}-cell {{{members}}}: {status} */")
        lines.append(f"  subgraph {_quote('cell:' + ','.join(c.vertices))} {{")
        attrs = f"label={_quote('{' + members + '}')}"
        if c.vertices in bad:
            attrs += ", " + BAD
        lines.append(f"    graph [{attrs}];")
        lines.append("    " + " ".join(f"{_quote(v)};" for v in c.vertices))
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _edges(vertices):
    return {(a, b) for i, a in enumerate(vertices) for b in vertices[i + 1:]}

"""Command-line driver.

    sheafcheck analyze    --input problem.json [--output report.json] [--budget N] [--no-glue]
    sheafcheck check      --input problem.json
    sheafcheck oracle     --input problem.json
    sheafcheck export-dot --input problem.json

Input defaults to stdin and output to stdout.  Exit status is 0 on success,
1 for analysis errors (budget, type, gluing, oracle limit) and 2 for input
errors.
"""
import argparse
import sys

from .complex import DEFAULT_CELL_BUDGET, build_complex, cell_counts
from .consistency import verdicts
from .documents import CheckReport, ProblemDocument, ReportDocument, parse_problem
from .dot import export_dot
from .errors import AnalysisError, InputError
from .sections import analyze


def _settings(problem: ProblemDocument, budget=None, glue=True):
    budget = budget or problem.options.cell_budget or DEFAULT_CELL_BUDGET
    if problem.options.glue is False:
        glue = False
    return budget, glue


def run_analyze(problem: ProblemDocument, budget=None, glue=True, oracle=False) -> ReportDocument:
    budget, glue = _settings(problem, budget, glue)
    network = problem.network()
    result = analyze(
        network,
        problem.build_assignment(network),
        problem.consistency.build(),
        cell_budget=budget,
        glue=glue,
        oracle=oracle,
    )
    return ReportDocument.from_result(result)


def run_oracle(problem: ProblemDocument, budget=None, glue=True) -> ReportDocument:
    return run_analyze(problem, budget, glue, oracle=True)


def run_check(problem: ProblemDocument, budget=None) -> CheckReport:
    budget, _ = _settings(problem, budget)
    network = problem.network()
    cx = build_complex(network)
    structure = problem.consistency.build()
    found = verdicts(structure, cx, problem.build_assignment(network), budget)
    return CheckReport.from_verdicts(found, cell_counts(cx, budget), structure.name)


def build_parser():
    parser = argparse.ArgumentParser(prog="sheafcheck", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("analyze", "compute maximal consistent sections"),
        ("check", "report the verdict on every cell"),
        ("oracle", "compute maximal sections by exhaustive search"),
        ("export-dot", "render the complex as Graphviz DOT"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", "-i", default="-", help="problem JSON (default: stdin)")
        p.add_argument("--output", "-o", default="-", help="destination (default: stdout)")
        p.add_argument("--budget", type=int, default=None, help=f"cell budget (default {DEFAULT_CELL_BUDGET})")
        p.add_argument("--no-glue", action="store_true", help="skip gluing local sections")
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.budget is not None and args.budget < 1:
        print("sheafcheck: error: --budget must be positive", file=sys.stderr)
        return 2
    try:
        problem = parse_problem(_read(args.input))
        glue = not args.no_glue
        if args.command == "analyze":
            text = run_analyze(problem, args.budget, glue).to_json()
        elif args.command == "oracle":
            text = run_oracle(problem, args.budget, glue).to_json()
        elif args.command == "check":
            text = run_check(problem, args.budget).to_json()
        else:
            text = export_dot(problem, run_analyze(problem, args.budget, glue), args.budget)
    except InputError as exc:
        print(f"sheafcheck: input error: {exc}", file=sys.stderr)
        return 2
    except AnalysisError as exc:
        print(f"sheafcheck: error: {exc}", file=sys.stderr)
        return 1
    _write(args.output, text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``refex generate | interpret | compare``.

Exit codes: 0 success, 1 input error, 2 no distinguishing description
(or, for ``interpret``, a description that does not pick out the given
referent), 3 quality violation, 70 failed self-monitoring (a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from refex import describe, hearer
from refex.describe import Description, IncrementalOptions
from refex.errors import (
    InstanceTooLarge,
    NoDistinguishingDescription,
    NotDistinguishing,
    QualityViolation,
    RefexError,
    VerificationFailure,
)
from refex.genre import read_genre
from refex.goals import GoalAgenda, Strategy, plan_description
from refex.kb import AttributeValue, read_kb

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_DD = 2
EXIT_QUALITY = 3
EXIT_BUG = 70


def _ids(text: str) -> list[str]:
    ids = [t.strip() for t in text.split(",") if t.strip()]
    if not ids:
        raise argparse.ArgumentTypeError("expected a comma-separated list of entity ids")
    return ids


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def cmd_generate(args, out) -> int:
    kb = read_kb(args.kb)
    genre = read_genre(args.genre)
    context = kb.context(args.context)
    conveys = [AttributeValue.parse(c) for c in args.convey]
    agenda = GoalAgenda.for_referent(args.referent, conveys)
    options = IncrementalOptions(always_include_type=not args.no_type)
    report = plan_description(agenda, context, kb, genre, args.strategy, options)
    if args.json:
        print(_dump(report.to_json()), file=out)
    else:
        print(report.description.render(), file=out)
        for w in report.warnings:
            print(f"warning: {w}", file=sys.stderr)
    return EXIT_OK


def cmd_interpret(args, out) -> int:
    kb = read_kb(args.kb)
    context = kb.context(args.context)
    desc = Description.parse(args.description)
    report = hearer.interpret(desc, context, kb, args.referent)
    if args.json:
        print(_dump(report.to_json()), file=out)
        return EXIT_OK
    print(f"outcome: {report.outcome.value}", file=out)
    print(f"resolved: {', '.join(sorted(report.resolved))}", file=out)
    for item, purpose in sorted(report.classifications.items()):
        print(f"  {item}: {purpose.value}", file=out)
    return EXIT_OK


@dataclass
class StrategyResult:
    strategy: str
    description: Description | None
    warnings: list = field(default_factory=list)
    seconds: float = 0.0
    error: str | None = None

    @property
    def length(self) -> int | None:
        return None if self.description is None else len(self.description)


@dataclass
class ComparisonReport:
    results: list[StrategyResult]
    oracle_size: int | None
    oracle_count: int | None
    oracle_error: str | None

    @property
    def minimality_gap(self) -> int | None:
        by_name = {r.strategy: r for r in self.results}
        greedy, fb = by_name["greedy"], by_name["full-brevity"]
        if self.oracle_size is None or greedy.length is None or fb.length is None:
            return None
        return greedy.length - fb.length

    def to_json(self, timings: bool = False) -> dict:
        rows = []
        for r in self.results:
            row = {
                "strategy": r.strategy,
                "description": None if r.description is None else sorted(str(p) for p in r.description),
                "length": r.length,
                "warnings": [w.to_json() for w in r.warnings],
                "error": r.error,
            }
            if timings:
                row["seconds"] = r.seconds
            rows.append(row)
        return {
            "strategies": rows,
            "oracle": {"size": self.oracle_size, "count": self.oracle_count, "error": self.oracle_error},
            "minimality_gap": self.minimality_gap,
        }

    def table(self, timings: bool = False) -> str:
        header = ["strategy", "length", "warnings", "description"]
        if timings:
            header.insert(3, "seconds")
        rows = [header]
        for r in self.results:
            row = [
                r.strategy,
                "-" if r.length is None else str(r.length),
                str(len(r.warnings)),
                r.error if r.description is None else r.description.render(),
            ]
            if timings:
                row.insert(3, f"{r.seconds:.6f}")
            rows.append(row)
        if self.oracle_size is not None:
            oracle = ["oracle", str(self.oracle_size), "-", f"{self.oracle_count} minimal description(s)"]
        else:
            oracle = ["oracle", "-", "-", self.oracle_error or ""]
        if timings:
            oracle.insert(3, "-")
        rows.append(oracle)
        widths = [max(len(r[i]) for r in rows) for i in range(len(header) - 1)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)) + "  " + r[-1] for r in rows]
        gap = self.minimality_gap
        lines.append(f"minimality gap: {'-' if gap is None else gap}")
        return "\n".join(line.rstrip() for line in lines)


def compare(referent, context, kb, genre, options=IncrementalOptions()) -> ComparisonReport:
    runs = {
        "full-brevity": lambda: (describe.full_brevity(referent, context, kb), []),
        "greedy": lambda: (describe.greedy_heuristic(referent, context, kb)[0], []),
        "incremental": lambda: describe.incremental(referent, context, kb, genre, options),
    }
    results = []
    for name, run in runs.items():
        t0 = time.perf_counter()
        try:
            desc, warnings = run()
            results.append(StrategyResult(name, desc, list(warnings), time.perf_counter() - t0))
        except NoDistinguishingDescription as exc:
            results.append(StrategyResult(name, None, [], time.perf_counter() - t0, str(exc)))
    try:
        minimal = describe.naive_oracle(referent, context, kb)
        size, count, err = len(next(iter(minimal))), len(minimal), None
    except (InstanceTooLarge, NoDistinguishingDescription) as exc:
        size, count, err = None, None, str(exc)
    return ComparisonReport(results, size, count, err)


def cmd_compare(args, out) -> int:
    kb = read_kb(args.kb)
    genre = read_genre(args.genre)
    context = kb.context(args.context)
    report = compare(args.referent, context, kb, genre, IncrementalOptions(not args.no_type))
    if args.json:
        print(_dump(report.to_json(args.timings)), file=out)
    else:
        print(report.table(args.timings), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="refex", description="Referring-expression generation and interpretation.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, referent_required=True):
        p.add_argument("--kb", required=True, help="knowledge-base JSON file")
        p.add_argument("--context", required=True, type=_ids, help="comma-separated context ids")
        p.add_argument("--referent", required=referent_required)
        p.add_argument("--json", action="store_true", help="machine-readable report")

    g = sub.add_parser("generate", help="plan a description for a referent")
    common(g)
    g.add_argument("--strategy", choices=[s.value for s in Strategy], default=Strategy.GREEDY.value)
    g.add_argument("--genre", default="casual", help="genre JSON file or built-in name (casual, inventory)")
    g.add_argument("--convey", action="append", default=[], metavar="ATTR=VALUE", help="extra fact to convey")
    g.add_argument("--no-type", action="store_true", help="incremental: do not force the type attribute")
    g.set_defaults(func=cmd_generate)

    i = sub.add_parser("interpret", help="resolve a description hearer-side")
    common(i, referent_required=False)
    i.add_argument("description", help='comma-separated attr=value pairs, e.g. "colour=red,type=pen"')
    i.set_defaults(func=cmd_interpret)

    c = sub.add_parser("compare", help="run every strategy and the oracle side by side")
    common(c)
    c.add_argument("--genre", default="casual")
    c.add_argument("--no-type", action="store_true")
    c.add_argument("--timings", action="store_true", help="include wall-clock times (non-deterministic)")
    c.set_defaults(func=cmd_compare)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except QualityViolation as exc:
        print(f"QualityViolation: {exc}", file=sys.stderr)
        return EXIT_QUALITY
    except (NoDistinguishingDescription, NotDistinguishing) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NO_DD
    except VerificationFailure as exc:
        print(f"VerificationFailure: {exc}", file=sys.stderr)
        return EXIT_BUG
    except (RefexError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: analyze (one distribution or roster), compare (rank several
cohorts), profiles (acquisition-profile relation), verify (closed forms
against the geometric oracle). Exit codes: 0 success, 1 data or
verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .comparison import CohortResult, Ranking, midline_threshold, rank
from .core import (
    LevelDistribution,
    ModelKind,
    centroid,
    make_distribution,
)
from .errors import FuzzmarkError, IncomparableCohorts
from .ingestion import default_scheme, distribution_from_roster, load_scheme, parse_roster
from .oracle import oracle_centroid
from .report import ReportDocument, SCHEMA_VERSION, number_entry, round12
from .voskoglou import (
    LEVELS,
    membership_from_counts,
    profile_relation,
    top_profiles,
)

MODEL_TOKENS = {
    "rect": ModelKind.RECTANGULAR,
    "trap": ModelKind.TRAPEZOIDAL_UNIT,
    "trap10": ModelKind.TRAPEZOIDAL_BASE10,
}

GRADE_POINTS = {"A": 4.0, "B": 3.0, "C": 2.0, "D": 1.0, "F": 0.0}
DEFAULT_VERIFY_SEED = 2016
SEED_ENV_VAR = "FUZZMARK_SEED"


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _with_rational(entry: dict) -> str:
    value = _fmt(entry["value"])
    if "rational" in entry and entry["rational"] != value:
        return f"{value} ({entry['rational']})"
    return value


def _dist_arg(text: str) -> list[float]:
    """Comma-separated weights; each token a decimal or a fraction like 5/6."""
    try:
        return [float(Fraction(token.strip())) for token in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a comma-separated list of numbers or fractions"
        ) from None


def _labels_arg(text: str) -> tuple[str, ...]:
    labels = tuple(token.strip() for token in text.split(","))
    if any(not label for label in labels):
        raise argparse.ArgumentTypeError("labels must be nonempty")
    return labels


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _counts_arg(text: str) -> tuple[int, ...]:
    parts = text.split(",")
    if len(parts) != len(LEVELS):
        raise argparse.ArgumentTypeError(
            f"expected {len(LEVELS)} comma-separated counts, got {len(parts)}"
        )
    try:
        counts = tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"counts must be integers: {text!r}") from None
    if any(c < 0 for c in counts):
        raise argparse.ArgumentTypeError(f"counts must be nonnegative: {text!r}")
    return counts


def _default_labels(n: int) -> tuple[str, ...]:
    if n == 3:
        return ("C", "B", "A")
    return tuple(f"L{i}" for i in range(1, n + 1))


def _grade_stats(dist: LevelDistribution) -> tuple[float | None, float | None]:
    """(GPA, quality of knowledge) when the labels are letter grades, else Nones.

    GPA uses the conventional 4-point letter values and is reported to
    one decimal; quality of knowledge is the mass on grades B and above.
    """
    bases = [label.rstrip("+-") or label for label in dist.labels]
    if not all(base in GRADE_POINTS for base in bases):
        return None, None
    gpa = sum(w * GRADE_POINTS[base] for base, w in zip(bases, dist.weights))
    quality = sum(w for base, w in zip(bases, dist.weights) if base in ("A", "B"))
    return round(gpa, 1), quality


def _cohort_entry(result: CohortResult) -> dict:
    dist = result.distribution
    gpa, quality = _grade_stats(dist)
    entry = {
        "label": result.label,
        "levels": list(dist.labels),
        "weights": [number_entry(w) for w in dist.weights],
        "centroid": {
            "x": number_entry(result.centroid.x),
            "y": number_entry(result.centroid.y),
        },
    }
    if gpa is not None:
        entry["gpa"] = gpa
        entry["quality_of_knowledge"] = number_entry(quality)
    return entry


def _ranking_entry(ranking: Ranking) -> dict:
    return {
        "order": list(ranking.order),
        "verdicts": [
            {
                "first": v.first,
                "second": v.second,
                "winner": v.winner,
                "rule": v.rule.value,
                "at_threshold": v.at_threshold,
            }
            for v in ranking.verdicts
        ],
    }


def _build_report(
    command: str,
    kind: ModelKind,
    cohorts: list[CohortResult],
    ranking: Ranking | None,
) -> ReportDocument:
    n = cohorts[0].distribution.n
    data = {
        "schema": SCHEMA_VERSION,
        "version": __version__,
        "command": command,
        "model": kind.value,
        "threshold": round12(midline_threshold(kind, n)),
        "cohorts": [_cohort_entry(c) for c in cohorts],
    }
    if ranking is not None:
        data["ranking"] = _ranking_entry(ranking)
    return ReportDocument(data)


def _report_csv(report: ReportDocument, ranked: bool) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["cohort", "model", "levels", "x", "y", "threshold", "gpa",
              "quality_of_knowledge", "weights"]
    if ranked:
        header.insert(0, "rank")
    writer.writerow(header)
    order = report["ranking"]["order"] if ranked else None
    entries = {entry["label"]: entry for entry in report["cohorts"]}
    labels = order if ranked else [entry["label"] for entry in report["cohorts"]]
    for pos, label in enumerate(labels, start=1):
        entry = entries[label]
        row = [
            label,
            report["model"],
            ";".join(entry["levels"]),
            _fmt(entry["centroid"]["x"]["value"]),
            _fmt(entry["centroid"]["y"]["value"]),
            _fmt(report["threshold"]),
            entry.get("gpa", ""),
            _fmt(entry["quality_of_knowledge"]["value"]) if "quality_of_knowledge" in entry else "",
            ";".join(_fmt(w["value"]) for w in entry["weights"]),
        ]
        if ranked:
            row.insert(0, pos)
        writer.writerow(row)
    return buf.getvalue()


def _report_text(report: ReportDocument) -> str:
    lines = [f"model: {report['model']}"]
    lines.append(f"midline threshold: {_fmt(report['threshold'])}")
    for entry in report["cohorts"]:
        lines.append("")
        lines.append(f"cohort: {entry['label']}")
        lines.append(f"  levels:  {', '.join(entry['levels'])}")
        lines.append(
            "  weights: " + ", ".join(_with_rational(w) for w in entry["weights"])
        )
        cx, cy = entry["centroid"]["x"], entry["centroid"]["y"]
        lines.append(f"  centroid: x = {_with_rational(cx)}   y = {_with_rational(cy)}")
        if "gpa" in entry:
            lines.append(
                f"  gpa: {entry['gpa']}   quality of knowledge: "
                f"{_with_rational(entry['quality_of_knowledge'])}"
            )
    if "ranking" in report.data:
        lines.append("")
        lines.append("ranking (best first): " + "  >  ".join(report["ranking"]["order"]))
        for v in report["ranking"]["verdicts"]:
            if v["winner"] is None:
                outcome = f"{v['first']} ties {v['second']}"
            else:
                loser = v["second"] if v["winner"] == v["first"] else v["first"]
                outcome = f"{v['winner']} beats {loser}"
            flag = "  [exactly on threshold]" if v["at_threshold"] else ""
            lines.append(f"  {outcome}  ({v['rule']}){flag}")
    return "\n".join(lines) + "\n"


def _emit(report: ReportDocument, args, results: list[CohortResult], ranked: bool = False) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(report.to_json())
    elif getattr(args, "csv", False):
        sys.stdout.write(_report_csv(report, ranked))
    else:
        sys.stdout.write(_report_text(report))
    svg_path = getattr(args, "svg", None)
    if svg_path:
        from .figures import render_svg

        render_svg(
            [(r.label, r.distribution, r.centroid) for r in results],
            results[0].model,
            svg_path,
        )


def _load_cohort_value(
    value: str, labels: tuple[str, ...] | None, scheme_path: str | None
) -> LevelDistribution:
    """A cohort source is either a roster file path or an inline distribution."""
    if value.endswith(".csv") or os.path.exists(value):
        with open(value, encoding="utf-8") as fh:
            records = parse_roster(fh)
        scheme = load_scheme(scheme_path) if scheme_path else default_scheme()
        return distribution_from_roster(records, scheme)
    try:
        raw = [float(Fraction(token.strip())) for token in value.split(",")]
    except (ValueError, ZeroDivisionError):
        raise FuzzmarkError(
            f"cohort value {value!r} is neither an existing roster file nor a distribution"
        ) from None
    return make_distribution(labels or _default_labels(len(raw)), raw)


def cmd_analyze(args) -> int:
    kind = MODEL_TOKENS[args.model]
    if args.dist is not None:
        if args.scheme:
            print("fuzzmark analyze: error: --scheme only applies to --roster", file=sys.stderr)
            return 2
        labels = args.labels or _default_labels(len(args.dist))
        dist = make_distribution(labels, args.dist)
        label = "cohort"
    else:
        with open(args.roster, encoding="utf-8") as fh:
            records = parse_roster(fh)
        scheme = load_scheme(args.scheme) if args.scheme else default_scheme()
        dist = distribution_from_roster(records, scheme)
        label = Path(args.roster).stem
    result = CohortResult.from_distribution(label, dist, kind)
    report = _build_report("analyze", kind, [result], ranking=None)
    _emit(report, args, [result])
    return 0


def cmd_compare(args) -> int:
    if len(args.cohort) < 2:
        print("fuzzmark compare: error: need at least two --cohort arguments", file=sys.stderr)
        return 2
    kind = MODEL_TOKENS[args.model]
    cohorts = []
    for cohort_arg in args.cohort:
        name, sep, value = cohort_arg.partition("=")
        if not sep or not name or not value:
            raise FuzzmarkError(f"--cohort needs NAME=DIST or NAME=ROSTER.csv, got {cohort_arg!r}")
        dist = _load_cohort_value(value, args.labels, args.scheme)
        cohorts.append(CohortResult.from_distribution(name, dist, kind))
    counts = {c.distribution.n for c in cohorts}
    if len(counts) > 1:
        raise IncomparableCohorts(f"cohorts have different level counts: {sorted(counts)}")
    ranking = rank(cohorts)
    report = _build_report("compare", kind, cohorts, ranking)
    _emit(report, args, cohorts, ranked=True)
    return 0


def cmd_profiles(args) -> int:
    totals = [sum(args.state1), sum(args.state2), sum(args.state3)]
    if len(set(totals)) != 1:
        raise FuzzmarkError(
            f"state counts must describe the same students; totals differ: {totals}"
        )
    states = [
        membership_from_counts(i, counts, totals[0])
        for i, counts in enumerate((args.state1, args.state2, args.state3), start=1)
    ]
    relation = profile_relation(*states)
    top = top_profiles(relation, args.top)
    total = relation.total()

    data = {
        "schema": SCHEMA_VERSION,
        "version": __version__,
        "command": "profiles",
        "states": [
            {
                "state": s.state,
                "name": s.name,
                "degrees": [
                    {"grade": level.value, **number_entry(float(s.degree(level)))}
                    for level in LEVELS
                ],
            }
            for s in states
        ],
        "top_profiles": [
            {
                "profile": [level.value for level in triple],
                **number_entry(float(degree)),
            }
            for triple, degree in top
        ],
        "total": number_entry(float(total)),
    }
    report = ReportDocument(data)
    if args.json:
        sys.stdout.write(report.to_json())
        return 0

    lines = []
    for s in states:
        degrees = ", ".join(f"{level.value}={s.degree(level)}" for level in LEVELS)
        lines.append(f"state {s.state} ({s.name}): {degrees}")
    lines.append(f"top {len(top)} profiles:")
    for pos, (triple, degree) in enumerate(top, start=1):
        lines.append(f"  {pos}. ({', '.join(l.value for l in triple)})  degree {degree} = {float(degree):.12g}")
    lines.append(f"sum over all {len(relation.degrees)} profiles: {total}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get(SEED_ENV_VAR, DEFAULT_VERIFY_SEED))
    rng = np.random.default_rng(seed)
    worst = -1.0
    worst_case: tuple[str, tuple[float, ...]] | None = None
    for _ in range(args.samples):
        n = int(rng.integers(1, 11))
        raw = rng.random(n)
        raw[rng.random(n) < 0.3] = 0.0  # exercise empty levels
        if raw.max() <= 0:
            raw[int(rng.integers(0, n))] = 1.0
        dist = make_distribution(tuple(f"L{i}" for i in range(1, n + 1)), raw.tolist())
        for kind in ModelKind:
            closed = centroid(dist, kind)
            reference = oracle_centroid(dist, kind)
            deviation = max(abs(closed.x - reference.x), abs(closed.y - reference.y))
            if deviation > worst:
                worst = deviation
                worst_case = (kind.value, dist.weights)
    print(f"samples: {args.samples}  seed: {seed}  tolerance: {args.tolerance:g}")
    print(f"max |closed form - oracle| deviation: {worst:.6e}")
    if worst > args.tolerance:
        kind_name, weights = worst_case
        print(f"exceeded tolerance under {kind_name} with weights {weights!r}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzmark",
        description="Fuzzy grade-distribution assessment: centroid models, "
        "cohort ranking, acquisition profiles, and oracle verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="centroid of one distribution or roster")
    analyze.add_argument("--model", choices=MODEL_TOKENS, required=True)
    source = analyze.add_mutually_exclusive_group(required=True)
    source.add_argument("--dist", type=_dist_arg, help="weights, e.g. 1/6,0,5/6")
    source.add_argument("--roster", help="CSV roster file (student,score)")
    analyze.add_argument("--scheme", help="grade-band scheme file (with --roster)")
    analyze.add_argument("--labels", type=_labels_arg, help="level names, worst first")
    fmt = analyze.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    analyze.add_argument("--svg", metavar="FILE", help="render the figure as SVG")
    analyze.set_defaults(func=cmd_analyze)

    compare = sub.add_parser("compare", help="rank two or more cohorts")
    compare.add_argument("--model", choices=MODEL_TOKENS, required=True)
    compare.add_argument(
        "--cohort", action="append", required=True, metavar="NAME=DIST|NAME=ROSTER.csv"
    )
    compare.add_argument("--scheme", help="grade-band scheme file for roster cohorts")
    compare.add_argument("--labels", type=_labels_arg, help="level names for inline cohorts")
    fmt = compare.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    compare.add_argument("--svg", metavar="FILE", help="render all cohorts as SVG")
    compare.set_defaults(func=cmd_compare)

    profiles = sub.add_parser("profiles", help="acquisition-profile relation from counts")
    profiles.add_argument("--state1", type=_counts_arg, required=True, metavar="C1,..,C5")
    profiles.add_argument("--state2", type=_counts_arg, required=True, metavar="C1,..,C5")
    profiles.add_argument("--state3", type=_counts_arg, required=True, metavar="C1,..,C5")
    profiles.add_argument("--top", type=_positive_int, default=5)
    profiles.add_argument("--json", action="store_true")
    profiles.set_defaults(func=cmd_profiles)

    verify = sub.add_parser("verify", help="check closed forms against the oracle")
    verify.add_argument("--samples", type=_positive_int, default=1000)
    verify.add_argument("--seed", type=int, default=None,
                        help=f"default: ${SEED_ENV_VAR} or {DEFAULT_VERIFY_SEED}")
    verify.add_argument("--tolerance", type=float, default=1e-9)
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FuzzmarkError as exc:
        print(f"fuzzmark: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"fuzzmark: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

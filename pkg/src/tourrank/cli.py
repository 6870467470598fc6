"""Command-line front end: rank, validate, export-plotdata.

Exit codes: 0 success, 1 input or parse error, 2 consistency-gate failure.
Warnings and errors go to stderr; data stays on stdout.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import sys
import warnings
from dataclasses import dataclass
from typing import Sequence

from .ahp import build_pairwise, evaluate_consistency
from .dataset import ScoreVector, category_means, load_reviews, normalize
from .errors import ConvergenceError, InputError
from .ranking import METHODS, RankingReport, compare_methods

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCONSISTENT = 2


@dataclass
class RunConfig:
    input_path: str
    method: str = "all"
    delimiter: str = ","
    normalize: bool = True
    score_mode: str = "weight"
    cr_threshold: float = 0.1
    output_format: str = "table"
    names_config: str | None = None

    def __post_init__(self):
        if not self.input_path:
            raise InputError("input path must be non-empty")
        if self.cr_threshold <= 0:
            raise InputError("cr-threshold must be positive")
        if len(self.delimiter) != 1:
            raise InputError("delimiter must be a single character")


def load_names_config(path: str) -> dict[int, str]:
    """Parse `index=name` lines; blank lines and # comments are skipped."""
    mapping: dict[int, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            index_text, sep, name = line.partition("=")
            if not sep:
                raise InputError(f"{path}:{line_no}: expected 'index=name'")
            try:
                index = int(index_text.strip())
            except ValueError:
                raise InputError(
                    f"{path}:{line_no}: column index {index_text.strip()!r} "
                    "is not an integer"
                ) from None
            name = name.strip()
            if not name:
                raise InputError(f"{path}:{line_no}: empty name")
            mapping[index] = name
    return mapping


@contextlib.contextmanager
def _warnings_to_stderr():
    """Collect pipeline warnings and replay them on stderr, one line each."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            yield
        finally:
            for w in caught:
                print(f"warning: {w.message}", file=sys.stderr)


def _load(config: RunConfig):
    names = load_names_config(config.names_config) if config.names_config else None
    with open(config.input_path, newline="", encoding="utf-8") as fh:
        return load_reviews(fh, delimiter=config.delimiter, names=names)


def _methods(flag: str) -> tuple[str, ...]:
    if flag == "all":
        return METHODS
    return (flag.replace("-", "_"),)


def _format_table(report: RankingReport) -> str:
    lines = [f"method: {report.method}"]
    if report.consistency is not None:
        c = report.consistency
        verdict = "PASS" if c.consistent else "FAIL"
        lines.append(
            f"consistency: lambda_max={c.lambda_max:.4f} CI={c.ci:.4f} "
            f"RI={c.ri:.4f} CR={c.cr:.4f} [{verdict}]"
        )
    if report.mse_vs_manual is not None:
        lines.append(f"mse_vs_manual: {report.mse_vs_manual:.4f}")
    width = max(len("alternative"), *(len(e.name) for e in report.entries))
    lines.append(f"rank  {'alternative':<{width}}  weight  raw_score")
    for e in report.entries:
        raw = f"{e.raw_score:9.4f}" if e.raw_score is not None else "        -"
        lines.append(f"{e.rank:4d}  {e.name:<{width}}  {e.weight:.4f}  {raw}")
    return "\n".join(lines)


def _report_dict(report: RankingReport) -> dict:
    consistency = None
    if report.consistency is not None:
        c = report.consistency
        consistency = {
            "lambda_max": round(c.lambda_max, 6),
            "n": c.n,
            "ci": round(c.ci, 6),
            "ri": round(c.ri, 6),
            "cr": round(c.cr, 6),
            "consistent": c.consistent,
        }
    return {
        "method": report.method,
        "consistency": consistency,
        "mse_vs_manual": (
            None if report.mse_vs_manual is None else round(report.mse_vs_manual, 6)
        ),
        "entries": [
            {
                "rank": e.rank,
                "name": e.name,
                "weight": round(e.weight, 6),
                "raw_score": None if e.raw_score is None else round(e.raw_score, 6),
            }
            for e in report.entries
        ],
    }


def _render_reports(reports: list[RankingReport], output_format: str) -> None:
    if output_format == "table":
        print("\n\n".join(_format_table(r) for r in reports))
    elif output_format == "json":
        payload = [_report_dict(r) for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    elif output_format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["method", "rank", "alternative", "weight", "raw_score"])
        for r in reports:
            for e in r.entries:
                writer.writerow(
                    [r.method, e.rank, e.name, f"{e.weight:.6f}",
                     "" if e.raw_score is None else f"{e.raw_score:.6f}"]
                )
    else:
        raise InputError(f"unknown output format {output_format!r}")


def _gate(reports: list[RankingReport]) -> int:
    failed = [r for r in reports if r.consistency and not r.consistency.consistent]
    if failed:
        c = failed[0].consistency
        print(
            f"warning: consistency ratio {c.cr:.6f} exceeds the threshold; "
            "results are flagged, not suppressed",
            file=sys.stderr,
        )
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_rank(config: RunConfig) -> int:
    """Rank alternatives with the requested method(s) and print the reports."""
    try:
        with _warnings_to_stderr():
            data = _load(config)
            reports = compare_methods(
                data,
                methods=_methods(config.method),
                score_mode=config.score_mode,
                normalize_scores=config.normalize,
                cr_threshold=config.cr_threshold,
            )
    except OSError as exc:
        # str(exc) names the offending file (input or names config)
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _render_reports(reports, config.output_format)
    return _gate(reports)


def cmd_validate(config: RunConfig) -> int:
    """Print consistency diagnostics for the comparison matrix behind the data."""
    try:
        with _warnings_to_stderr():
            data = _load(config)
            means = category_means(data)
            scores = (
                ScoreVector(means.alternatives, normalize(means.scores))
                if config.normalize
                else means
            )
            _, report = evaluate_consistency(
                build_pairwise(scores), threshold=config.cr_threshold
            )
    except OSError as exc:
        # str(exc) names the offending file (input or names config)
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    verdict = (
        f"PASS (CR <= {config.cr_threshold:g})"
        if report.consistent
        else f"FAIL (CR > {config.cr_threshold:g})"
    )
    print(f"n           {report.n}")
    print(f"lambda_max  {report.lambda_max:.6f}")
    print(f"CI          {report.ci:.6f}")
    print(f"RI          {report.ri:.6f}")
    print(f"CR          {report.cr:.6f}")
    print(f"verdict     {verdict}")
    return EXIT_OK if report.consistent else EXIT_INCONSISTENT


def cmd_export_plotdata(config: RunConfig) -> int:
    """Emit long-format CSV (method, alternative, weight, rank) for plotting."""
    try:
        with _warnings_to_stderr():
            data = _load(config)
            reports = compare_methods(
                data,
                methods=_methods(config.method),
                score_mode=config.score_mode,
                normalize_scores=config.normalize,
                cr_threshold=config.cr_threshold,
            )
    except OSError as exc:
        # str(exc) names the offending file (input or names config)
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["method", "alternative", "weight", "rank"])
    for r in reports:
        for e in r.entries:
            writer.writerow([r.method, e.name, f"{e.weight:.6f}", e.rank])
    return _gate(reports)


class _Parser(argparse.ArgumentParser):
    # Usage mistakes are input errors (exit 1); 2 is reserved for the CR gate.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="ratings CSV to process")
    parser.add_argument(
        "--method",
        choices=["ahp", "fuzzy-ahp", "manual", "all"],
        default="all",
        help="which method(s) to run (default: all)",
    )
    parser.add_argument(
        "--delimiter", default=",", help="field separator (default: ',')"
    )
    parser.add_argument(
        "--normalize",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="SAW-normalize the mean scores before weighting",
    )
    parser.add_argument(
        "--score-mode",
        choices=["weight", "weight-times-mean"],
        default="weight",
        help="rank by weights alone or by weight x normalized mean",
    )
    parser.add_argument(
        "--cr-threshold",
        type=float,
        default=0.1,
        help="consistency-ratio gate (default: 0.1)",
    )
    parser.add_argument(
        "--names-config",
        default=None,
        help="file of 'index=name' lines renaming rating columns (1-based)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tourrank",
        description="Rank alternatives from reviewer ratings using AHP, "
        "fuzzy-AHP, and a manual baseline.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_rank = sub.add_parser("rank", help="rank alternatives")
    _add_common(p_rank)
    p_rank.add_argument(
        "--format",
        choices=["table", "json", "csv"],
        default="table",
        help="output format (default: table)",
    )
    p_rank.set_defaults(func=cmd_rank)

    p_val = sub.add_parser("validate", help="check pairwise-matrix consistency")
    _add_common(p_val)
    p_val.set_defaults(func=cmd_validate)

    p_plot = sub.add_parser(
        "export-plotdata", help="emit long-format CSV of weights and ranks"
    )
    _add_common(p_plot)
    p_plot.set_defaults(func=cmd_export_plotdata)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = RunConfig(
            input_path=args.input,
            method=args.method,
            delimiter=args.delimiter,
            normalize=args.normalize,
            score_mode=args.score_mode,
            cr_threshold=args.cr_threshold,
            output_format=getattr(args, "format", "table"),
            names_config=args.names_config,
        )
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return args.func(config)


if __name__ == "__main__":
    sys.exit(main())

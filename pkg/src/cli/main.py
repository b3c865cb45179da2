"""
verify: run the derivation steps and write a report

Exit codes: 0 when every selected step verified, 1 when a step failed or was
skipped, 2 on a usage error (bad flag, invalid configuration, unwritable
output).
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from src.core.config import RunConfig, build_config
from src.core.report import build_report, render_report
from src.morley.pipeline import run_pipeline
from src.oracle.scan import equilateral_scan

logger = logging.getLogger(__name__)

EXIT_VERIFIED = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="verify",
        description="Machine-check the converse Morley derivation step by step.",
    )
    p.add_argument("--config", type=str, default=None, help="YAML file with run settings.")
    p.add_argument("--degree", type=int, default=None, help="Series truncation degree (default: 8).")
    p.add_argument(
        "--precision", type=int, default=None, dest="precision_bits",
        help="Bits for certified enclosures (default: 128, at least 64).",
    )
    p.add_argument("--steps", type=str, default=None, help="Comma-separated step ids, e.g. S04,S29.")
    p.add_argument("--format", choices=["json", "text"], default=None, help="Report format (default: json).")
    p.add_argument("-o", "--output", type=str, default=None, help="Report path (default: stdout).")
    p.add_argument("--scan", action="store_true", default=None, help="Run the equilateral scan.")
    p.add_argument("--grid", type=int, default=None, help="Scan grid resolution (default: 50).")
    p.add_argument("--params", type=str, default=None, help="Scan parameters t1,...,t6.")
    p.add_argument("--csv", type=str, default=None, help="Write the scan cells to this CSV file.")
    p.add_argument("--progress", action="store_true", default=None, help="Show progress bars.")
    p.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")
    return p


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    keys = ("degree", "precision_bits", "steps", "format", "output", "scan", "grid", "params", "csv", "progress")
    return {key: getattr(args, key) for key in keys}


def _check_writable(path: Optional[str]) -> Optional[str]:
    if path is None:
        return None
    parent = Path(path).resolve().parent
    if not parent.is_dir():
        return f"output directory does not exist: {parent}"
    return None


def _usage_error(message: str) -> int:
    print(f"verify: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def run(config: RunConfig) -> int:
    """Run a validated configuration; returns the exit code"""
    for path in (config.output, config.csv):
        problem = _check_writable(path)
        if problem:
            return _usage_error(problem)

    results = run_pipeline(config)
    scan = None
    if config.scan:
        scan_report = equilateral_scan(
            config.grid, config.cevian_params(), csv_path=config.csv, progress=config.progress
        )
        scan = scan_report.to_dict()

    report = build_report(config.echo(), results, scan)
    if report.warning:
        logger.warning(report.warning)
    text = render_report(report, config.format)
    if config.output is None:
        sys.stdout.write(text)
    else:
        try:
            Path(config.output).write_text(text, encoding="utf-8")
        except OSError as e:
            return _usage_error(f"cannot write report: {e}")
        logger.info(f"Report written to {config.output}")
    return EXIT_VERIFIED if report.verified else EXIT_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        config = build_config(_overrides(args), args.config)
    except ValidationError as e:
        errors = "; ".join(err["msg"] for err in e.errors())
        return _usage_error(f"invalid configuration: {errors}")
    except ValueError as e:
        return _usage_error(str(e))
    return run(config)


if __name__ == "__main__":
    sys.exit(main())

"""
verify: run the selected check suites and write a JSON report.

Exit codes: 0 all non-skipped checks pass, 1 some check failed,
2 usage error, 3 internal lattice assertion.
"""
import argparse
import json
import logging
import os
import sys
from logging.config import fileConfig
from typing import List, Optional, Tuple

from pydantic import ValidationError

from config import LOG_CONFIG, REPORT_VERSION, TESTING
from errors import LatticeError, ParameterError
from schemas import SUITES, LatticeInfo, Report, RunConfig, Summary, format_rational
from suites import SuiteContext, run_suite

logger = logging.getLogger("verify")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="verify", description="Exact verification of q-Bannai-Ito and Askey-Wilson identities.")
    parser.add_argument("--n", type=int, default=None, help="number of tensor factors (3..5)")
    parser.add_argument("--mu", default=None, help="comma-separated positive rationals, e.g. 1/2,1,3/2")
    parser.add_argument("--max-degree", type=int, default=None, help="polynomial degree bound for model checks")
    parser.add_argument("--suite", default=None, help=f"comma-separated subset of {','.join(SUITES)} or all")
    parser.add_argument("--report", default=None, help="path of the JSON report")
    parser.add_argument("--config", default=None, help="JSON config file; flags override its values")
    parser.add_argument("--jobs", type=int, default=None, help="worker threads per suite")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    return parser.parse_args(argv)


def setup_logging(verbose: bool = False):
    if os.path.exists(LOG_CONFIG):
        fileConfig(LOG_CONFIG, disable_existing_loggers=False)
    else:
        logging.basicConfig(level=logging.INFO, format="%(levelname)-5.5s [%(name)s] %(message)s")
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)


def load_config(args: argparse.Namespace) -> RunConfig:
    """File values first, then any flag given on the command line."""
    data = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ParameterError({"error": "config file must hold a JSON object", "path": args.config})
    overrides = {
        "n": args.n,
        "mu": args.mu,
        "max_degree": args.max_degree,
        "suites": args.suite,
        "report_path": args.report,
        "jobs": args.jobs,
    }
    data.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig.model_validate(data)


def run(config: RunConfig) -> Tuple[Report, int]:
    ctx = SuiteContext(config)
    checks = []
    for name in config.suites:
        checks.extend(run_suite(name, ctx, config.jobs))
    counts = {status: sum(1 for c in checks if c.status == status) for status in ("pass", "fail", "skipped")}
    lat = ctx.lat
    report = Report(
        version=REPORT_VERSION,
        config=config,
        lattice=LatticeInfo(
            L=lat.L,
            mu=[format_rational(m) for m in lat.mu],
            gamma=[format_rational(g) for g in lat.gamma],
        ),
        checks=checks,
        summary=Summary(passed=counts["pass"], fail=counts["fail"], skipped=counts["skipped"], total=len(checks)),
    )
    return report, EXIT_OK if counts["fail"] == 0 else EXIT_FAILED


def render_report(report: Report) -> str:
    return json.dumps(report.model_dump(mode="json", by_alias=True), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_report(report: Report, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_report(report))


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)
    if not TESTING:
        setup_logging(args.verbose)

    try:
        config = load_config(args)
    except ValidationError as exc:
        print(f"[error] invalid configuration: {exc.errors(include_url=False)}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError) as exc:
        print(f"[error] cannot read config: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParameterError as exc:
        print(f"[error] {exc.as_dict()}", file=sys.stderr)
        return EXIT_USAGE

    logger.info("verify n=%d mu=%s suites=%s", config.n, ",".join(config.mu), ",".join(config.suites))
    try:
        report, code = run(config)
    except ParameterError as exc:
        print(f"[error] {exc.as_dict()}", file=sys.stderr)
        return EXIT_USAGE
    except LatticeError as exc:
        logger.error("lattice assertion: %s", exc.as_dict())
        return EXIT_INTERNAL

    write_report(report, config.report_path)
    summary = report.summary
    logger.info("%d pass, %d fail, %d skipped; report at %s", summary.passed, summary.fail, summary.skipped, config.report_path)
    return code


if __name__ == "__main__":
    sys.exit(main())

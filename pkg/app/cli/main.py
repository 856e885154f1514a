"""
Command-line entry point.

    python -m app.cli.main verify --config job.json --out ./out [--grid 0.005] [--truncate 20]

Prints the report path on stdout and nothing else; messages go to stderr.
Exit codes: 0 all checks passed, 1 a check failed, 2 invalid config or spec.
"""
import argparse
import sys
from typing import List, Optional

from app.cli.config import load_config
from app.cli.pipeline import COMMANDS, run
from app.core.errors import error_payload, exit_code_for

DESCRIPTIONS = {
    "extend": "Build the extended system and check that Xi_D is nodeless",
    "classify": "Classify every seed of the config by its boundary behaviour",
    "spectrum": "Finite-difference spectrum of the original or extended potential",
    "verify": "Run the checks listed in the config",
    "curve": "Write the real-n energy curve with region labels",
    "equivalence": "Half-integer coupling equivalence with the dual eigenstate deletion",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="overshoot", description="Rational extensions of shape-invariant potentials")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name, help=DESCRIPTIONS[name])
        cmd.add_argument("--config", required=True, help="Path to the JSON job config")
        cmd.add_argument("--out", default=None, help="Output directory (overrides the config)")
        cmd.add_argument("--grid", type=float, default=None, help="Finite-difference grid spacing")
        cmd.add_argument("--truncate", type=float, default=None, help="Domain truncation")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        overrides = {}
        if args.grid is not None:
            overrides["grid"] = args.grid
        if args.truncate is not None:
            overrides["truncation"] = args.truncate
        if overrides:
            config = config.model_copy(update={"numeric": config.numeric.model_copy(update=overrides)})
        report, path = run(config, args.command, args.out)
    except Exception as exc:
        code = exit_code_for(exc)
        payload = error_payload(exc)
        location = payload.get("context", {}).get("location")
        prefix = f"{location}: " if location else ""
        print(f"{payload['error']}: {prefix}{payload['detail']}", file=sys.stderr)
        return code

    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"[{status}] {check.name}: {check.detail}", file=sys.stderr)
    print(path)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())

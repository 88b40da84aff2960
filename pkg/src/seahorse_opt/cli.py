"""Command-line entry point.

Subcommands: `run <config-file>` executes an experiment grid and writes
the configured outputs; `list-problems` and `list-algorithms` print the
registries; `validate-fixtures` audits every published best row against
the implemented formulations. Exit code 0 on success; on failure a
machine-parsable line `error: <category>: <message>` goes to stderr and
the exit code is nonzero.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import __version__
from .engine import ConfigurationError
from .harness import (
    ALGORITHMS,
    emit_outputs,
    load_config,
    render_report_text,
    run_experiment,
)
from .problems import audit_fixtures, list_problems


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seahorse-opt",
        description="Seeded experiment harness for the sea-horse optimizers",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run the experiment grid from a config file")
    run.add_argument("config", help="path to a JSON experiment config")
    run.add_argument("--seed", type=int, help="override the config base seed")
    run.add_argument("--runs", type=int, help="override the number of runs per cell")
    run.add_argument("--out", help="override the output directory")
    run.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker processes for independent cells (affects wall time only)",
    )
    run.set_defaults(func=cmd_run)

    lp = commands.add_parser("list-problems", help="print the problem registry")
    lp.set_defaults(func=cmd_list_problems)

    la = commands.add_parser("list-algorithms", help="print the algorithm registry")
    la.set_defaults(func=cmd_list_algorithms)

    vf = commands.add_parser(
        "validate-fixtures",
        help="recompute every published best row and report discrepancies",
    )
    vf.set_defaults(func=cmd_validate_fixtures)

    return parser


def cmd_run(args) -> int:
    config = load_config(args.config)
    overrides = {}
    if args.seed is not None:
        overrides["base_seed"] = args.seed
    if args.runs is not None:
        overrides["runs"] = args.runs
    if args.out is not None:
        overrides["output_dir"] = args.out
    if overrides:
        config = replace(config, **overrides)
    if args.threads < 1:
        raise ConfigurationError("--threads: must be >= 1")

    result = run_experiment(config, threads=args.threads)
    written = emit_outputs(result)
    for path in written.values():
        print(f"wrote {path}")
    print()
    print(render_report_text(result), end="")
    if result.failures:
        total = len(result.records) + len(result.failures)
        print(
            f"error: runtime: {len(result.failures)} of {total} cells failed "
            "(details in the report)",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_list_problems(args) -> int:
    for group, names in list_problems().items():
        if not names:
            continue
        print(f"{group}:")
        for name in names:
            print(f"  {name}")
    return 0


def cmd_list_algorithms(args) -> int:
    for name in sorted(ALGORITHMS):
        print(name)
    return 0


def cmd_validate_fixtures(args) -> int:
    entries = audit_fixtures()
    confirmed = 0
    for entry in entries:
        status = "ok" if entry["passes"] else "DISCREPANCY"
        confirmed += entry["passes"]
        line = (
            f"{entry['problem']:<16} published {entry['published_cost']:<12.6g} "
            f"recomputed {entry['recomputed_cost']:<12.6g} "
            f"rel {entry['relative_error']:.4%} "
            f"max_violation {entry['max_violation']:.3g} {status}"
        )
        if entry["note"]:
            line += f" ({entry['note']})"
        print(line)
    print(f"{confirmed} of {len(entries)} fixtures confirmed; "
          f"{len(entries) - confirmed} in the discrepancy ledger")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigurationError as exc:
        print(f"error: config: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

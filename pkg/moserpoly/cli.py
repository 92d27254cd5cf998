# Handles CLI argument parsing, configuration and the subcommands

import argparse
from dataclasses import dataclass
import json
import logging
import math
import os
from pathlib import Path
import shutil
import sys
from typing import Callable, Dict, Optional, Tuple

import yaml

from moserpoly.combinatorics import format_rational
from moserpoly.combinatorics import to_rational
from moserpoly.combinatorics import triangle
from moserpoly.errors import EXIT_OK
from moserpoly.errors import EXIT_PROPERTY_FAILED
from moserpoly.errors import InvalidArgumentError
from moserpoly.moser import moser_coefficients
from moserpoly.moser import moser_table
from moserpoly.moser import moser_value
from moserpoly.moser import moser_value_eulerian_form
from moserpoly.moser import moser_value_stirling_forms
from moserpoly.moser import q_polynomial
from moserpoly.output import CommandOutput
from moserpoly.output import FORMATS
from moserpoly.recovery import find_ambiguous_pairs
from moserpoly.recovery import MODES
from moserpoly.recovery import recover
from moserpoly.recovery import SolvabilityReport
from moserpoly.recovery import solvability_table
from moserpoly.symfun import parse_multiset
from moserpoly.symfun import s_sums
from moserpoly.verify_pipeline import report
from moserpoly.verify_pipeline import SUITES
from moserpoly.verify_pipeline import VerificationPipeline

TABLE_KINDS = ["eulerian", "stirling1", "stirling2", "moser", "solvability"]
EVAL_FORMS = ["binomial", "eulerian", "stirling1", "stirling2"]
MAX_TABLE_INDEX = 64
MAX_SEED = (1 << 64) - 1

DEFAULT_CONFIG_NAME = "moserpoly.yaml"


@dataclass
class Settings:
    """Options shared by the subcommands after every source is merged."""

    format: str = "json"
    seed: int = 0
    tol: float = 1e-6
    verbose: bool = False
    quiet: bool = False
    trials: int = 25
    workers: int = 3
    mode: str = "auto"


def _as_bool(value) -> bool:
    if isinstance(value, bool):
        return value
    return str(value).strip().lower() in ("1", "true", "yes", "on")


# setting: (config section, environment variable, converter)
SETTING_SOURCES: Dict[str, Tuple[str, Optional[str], Callable]] = {
    "format": ("general", "MOSERPOLY_FORMAT", str),
    "seed": ("general", "MOSERPOLY_SEED", int),
    "tol": ("general", "MOSERPOLY_TOL", float),
    "verbose": ("general", None, _as_bool),
    "quiet": ("general", None, _as_bool),
    "trials": ("verify", "MOSERPOLY_TRIALS", int),
    "workers": ("verify", "MOSERPOLY_WORKERS", int),
    "mode": ("recovery", None, str),
}


def create_config_template(output_path=None):
    """Create a template YAML configuration file."""
    template = {
        "general": {
            "format": "json",  # json, csv or plain
            "seed": 0,  # Unsigned 64-bit seed for randomized suites
            "tol": 1e-6,  # Verification tolerance for numeric recovery
            "verbose": False,  # Debug logging
            "quiet": False  # Warnings and errors only
        },
        "verify": {
            "trials": 25,  # Random samples per randomized property
            "workers": 3  # Suites running side by side
        },
        "recovery": {
            "mode": "auto"  # exact, numeric or auto
        }
    }

    # If no output path specified, use default
    if not output_path:
        output_path = Path.cwd() / DEFAULT_CONFIG_NAME
    else:
        output_path = Path(output_path)

    # Check if file already exists
    if output_path.exists():
        backup_path = output_path.with_suffix(output_path.suffix + ".backup")
        shutil.copy2(output_path, backup_path)
        print(f"Existing config file backed up to: {backup_path}")

    with open(output_path, 'w') as f:
        yaml.dump(template, f, sort_keys=False, default_flow_style=False)
        print(f"Created config template at: {output_path}")


def load_config(config_path) -> dict:
    """Load a YAML or JSON config file; no path means an empty config."""
    if not config_path:
        return {}

    config_path = Path(config_path)
    if not config_path.exists():
        raise InvalidArgumentError(f"Config file not found: {config_path}")

    with open(config_path, 'r') as f:
        try:
            if config_path.suffix.lower() in ['.yml', '.yaml']:
                config_data = yaml.safe_load(f)
            else:  # JSON
                config_data = json.load(f)
        except (yaml.YAMLError, json.JSONDecodeError) as e:
            raise InvalidArgumentError(f"Invalid config file {config_path}: {e}")

    if config_data is None:
        return {}
    if not isinstance(config_data, dict):
        raise InvalidArgumentError(
            f"Config file {config_path} must hold a mapping at the top level")
    return config_data


def resolve_settings(args, config: dict, environ=None) -> Settings:
    """
    Merge the option sources, highest precedence first: command line,
    config file, MOSERPOLY_* environment, built-in default.
    """
    environ = os.environ if environ is None else environ
    settings = Settings()

    for name, (section, env_key, convert) in SETTING_SOURCES.items():
        section_values = config.get(section) or {}
        if getattr(args, name, None) is not None:
            raw = getattr(args, name)
        elif name in section_values and section_values[name] is not None:
            raw = section_values[name]
        elif env_key and environ.get(env_key):
            raw = environ[env_key]
        else:
            continue
        try:
            setattr(settings, name, convert(raw))
        except (TypeError, ValueError):
            raise InvalidArgumentError(f"Invalid value for {name}: {raw!r}")

    _validate_settings(settings)
    return settings


def _validate_settings(settings: Settings):
    if settings.format not in FORMATS:
        raise InvalidArgumentError(
            f"Unknown format {settings.format!r}, expected one of {FORMATS}")
    if not 0 <= settings.seed <= MAX_SEED:
        raise InvalidArgumentError(
            f"Seed must be an unsigned 64-bit integer, got {settings.seed}")
    if not math.isfinite(settings.tol) or settings.tol <= 0:
        raise InvalidArgumentError(f"Tolerance must be > 0, got {settings.tol}")
    if settings.trials < 1:
        raise InvalidArgumentError(f"Trials must be >= 1, got {settings.trials}")
    if settings.workers < 1:
        raise InvalidArgumentError(
            f"Workers must be >= 1, got {settings.workers}")
    if settings.mode not in MODES:
        raise InvalidArgumentError(
            f"Unknown recovery mode {settings.mode!r}, expected one of {MODES}")


def _create_common_parser():
    """Options every subcommand accepts."""
    common = argparse.ArgumentParser(add_help=False)

    output_group = common.add_argument_group('Output Options')
    output_group.add_argument("--format",
                              choices=FORMATS,
                              help="Output format (default: json).")
    output_group.add_argument(
        "--seed",
        type=int,
        help="Unsigned 64-bit seed for randomized suites (default: 0).")
    output_group.add_argument(
        "--tol",
        type=float,
        help="Verification tolerance for numeric recovery (default: 1e-6).")
    output_group.add_argument(
        "--config",
        type=str,
        help="Path to YAML/JSON config file with option defaults.")
    output_group.add_argument("--verbose",
                              "-v",
                              action="store_true",
                              default=None,
                              help="Enable debug logging.")
    output_group.add_argument("--quiet",
                              "-q",
                              action="store_true",
                              default=None,
                              help="Only log warnings and errors.")
    return common


def _create_parser():
    """Create and configure the argument parser."""
    parser = argparse.ArgumentParser(
        prog="moserpoly",
        description=
        "Moser polynomials, s-sum power-sum expansions and multiset recovery.")
    common = _create_common_parser()
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    table = subparsers.add_parser(
        "table",
        parents=[common],
        help="Print a triangle or table of numbers.")
    table.add_argument("kind", choices=TABLE_KINDS, help="Table to print.")
    table_group = table.add_argument_group('Table Options')
    table_group.add_argument(
        "--rows",
        type=int,
        default=8,
        help="Number of triangle rows, or largest n for solvability.")
    table_group.add_argument("--s",
                             type=int,
                             help="Moser polynomial index s (moser only).")
    table_group.add_argument("--k-max",
                             type=int,
                             help="Largest exponent k (moser only).")
    table_group.add_argument("--n",
                             type=int,
                             help="Evaluation point n (moser only).")

    evaluate = subparsers.add_parser(
        "eval",
        parents=[common],
        help="Evaluate F_{s,k}(x) or print its coefficients.")
    eval_group = evaluate.add_argument_group('Evaluation Options')
    eval_group.add_argument("--s", type=int, required=True, help="Index s.")
    eval_group.add_argument("--k", type=int, required=True, help="Exponent k.")
    eval_group.add_argument(
        "--x",
        type=str,
        help="Rational point such as 5 or 7/2; omit to print coefficients.")
    eval_group.add_argument(
        "--form",
        choices=EVAL_FORMS,
        default="binomial",
        help="Formula used for the value; all forms agree.")
    eval_group.add_argument(
        "--normalized",
        action="store_true",
        help="Print the integer coefficients of (s-1)! F_{s,k}.")

    qpoly = subparsers.add_parser(
        "qpoly",
        parents=[common],
        help="Print the power-sum expansion Q_{s,k,n}.")
    qpoly_group = qpoly.add_argument_group('Expansion Options')
    qpoly_group.add_argument("--s", type=int, required=True, help="Index s.")
    qpoly_group.add_argument("--k", type=int, required=True, help="Exponent k.")
    qpoly_group.add_argument("--n",
                             type=int,
                             required=True,
                             help="Size of the multiset.")

    sums = subparsers.add_parser("sums",
                                 parents=[common],
                                 help="Print the s-sums of a multiset.")
    sums.add_argument("input_path",
                      help="Multiset file (JSON array or one entry per line), "
                      "or - for stdin.")
    sums.add_argument("--s", type=int, required=True, help="Index s.")

    recovery = subparsers.add_parser(
        "recover",
        parents=[common],
        help="Recover a multiset from its s-sums.")
    recovery.add_argument("input_path",
                          help="File with the s-sums, or - for stdin.")
    recovery_group = recovery.add_argument_group('Recovery Options')
    recovery_group.add_argument("--n",
                                type=int,
                                required=True,
                                help="Size of the multiset to recover.")
    recovery_group.add_argument("--s", type=int, required=True, help="Index s.")
    recovery_group.add_argument("--mode",
                                choices=MODES,
                                help="Root finding mode (default: auto).")

    verify = subparsers.add_parser("verify",
                                   parents=[common],
                                   help="Run the property suites.")
    verify_group = verify.add_argument_group('Verification Options')
    verify_group.add_argument("--suite",
                              nargs="+",
                              choices=list(SUITES) + ["all"],
                              default=["all"],
                              help="Suites to run (default: all).")
    verify_group.add_argument(
        "--trials",
        type=int,
        help="Random samples per randomized property (default: 25).")
    verify_group.add_argument("--workers",
                              type=int,
                              help="Suites running side by side (default: 3).")

    pairs = subparsers.add_parser(
        "pairs",
        parents=[common],
        help="Search for distinct integer multisets with equal s-sums.")
    pairs_group = pairs.add_argument_group('Search Options')
    pairs_group.add_argument("--n",
                             type=int,
                             required=True,
                             help="Multiset size.")
    pairs_group.add_argument("--s", type=int, required=True, help="Index s.")
    pairs_group.add_argument("--range",
                             dest="range_bound",
                             type=int,
                             default=8,
                             help="Entries are searched in [0, RANGE].")
    pairs_group.add_argument("--cap",
                             type=int,
                             default=100,
                             help="Maximum number of pairs reported.")

    init = subparsers.add_parser(
        "init", help="Create a template configuration file.")
    init.add_argument(
        "--config-path",
        type=str,
        help="Custom path for the generated config file.")

    return parser


def parse_args(argv=None):
    """Parse command line arguments; returns None once ``init`` is handled."""
    parser = _create_parser()
    args = parser.parse_args(argv)

    # Handle init command
    if args.command == "init":
        create_config_template(args.config_path)
        return None

    return args


def _read_input(input_path: str) -> str:
    if input_path == "-":
        return sys.stdin.read()
    try:
        return Path(input_path).read_text()
    except OSError as e:
        raise InvalidArgumentError(f"Cannot read {input_path}: {e}")


def _check_table_index(name: str, value: Optional[int], low: int = 0) -> int:
    if value is None:
        raise InvalidArgumentError(f"table moser needs --{name}")
    if not low <= value <= MAX_TABLE_INDEX:
        raise InvalidArgumentError(
            f"--{name} must be in [{low}, {MAX_TABLE_INDEX}], got {value}")
    return value


def cmd_table(args, settings: Settings) -> Tuple[int, CommandOutput]:
    """Eulerian and Stirling triangles, F_{s,k}(n) columns, solvability."""
    if args.kind == "moser":
        s = _check_table_index("s", args.s, 1)
        k_max = _check_table_index("k-max", args.k_max, 1)
        n = _check_table_index("n", args.n)
        values = [(k, format_rational(v)) for k, v in moser_table(s, k_max, n)]
        document = {
            "kind": "moser",
            "s": s,
            "n": n,
            "values": [{"k": k, "value": v} for k, v in values],
        }
        return EXIT_OK, CommandOutput(document, ["k", "value"],
                                      [[str(k), v] for k, v in values])

    if args.kind == "solvability":
        reports = solvability_table(args.rows)
        rows = [[
            str(r.n),
            str(r.s),
            str(r.solvable).lower(), ",".join(map(str, r.vanishing_k))
        ] for r in reports]
        return EXIT_OK, CommandOutput([r.to_dict() for r in reports],
                                      ["n", "s", "solvable", "vanishing_k"],
                                      rows)

    rows = triangle(args.kind, args.rows)
    first = 1 if args.kind == "eulerian" else 0
    cells = [[str(v) for v in row] for row in rows]
    document = {
        "kind": args.kind,
        "rows": [{"n": n, "values": row}
                 for n, row in enumerate(cells, start=first)],
    }
    long_rows = [[str(n), str(m), v]
                 for n, row in enumerate(cells, start=first)
                 for m, v in enumerate(row)]
    return EXIT_OK, CommandOutput(document, ["n", "m", "value"], long_rows,
                                  plain=[" ".join(row) for row in cells])


def cmd_eval(args, settings: Settings) -> Tuple[int, CommandOutput]:
    """F_{s,k}(x) by the chosen formula, or its coefficients when x is omitted."""
    if args.x is None:
        polynomial = moser_coefficients(args.s, args.k)
        coefficients = (polynomial.normalized()
                        if args.normalized else polynomial.coefficients)
        strings = [format_rational(c) for c in coefficients.coefficients]
        document = {
            "s": args.s,
            "k": args.k,
            "normalized": args.normalized,
            "coefficients": strings,
        }
        return EXIT_OK, CommandOutput(
            document, ["degree", "coefficient"],
            [[str(j), c] for j, c in enumerate(strings)],
            plain=[str(coefficients)])

    if args.normalized:
        raise InvalidArgumentError("--normalized only applies without --x")

    x = to_rational(args.x)
    if args.form == "binomial":
        value = moser_value(args.s, args.k, x)
    elif args.form == "eulerian":
        value = moser_value_eulerian_form(args.s, args.k, x)
    else:
        first, second = moser_value_stirling_forms(args.s, args.k, x)
        value = first if args.form == "stirling1" else second

    document = {
        "s": args.s,
        "k": args.k,
        "x": format_rational(x),
        "form": args.form,
        "value": format_rational(value),
    }
    row = [str(args.s), str(args.k), document["x"], args.form, document["value"]]
    return EXIT_OK, CommandOutput(document, ["s", "k", "x", "form", "value"],
                                  [row],
                                  plain=[document["value"]])


def cmd_qpoly(args, settings: Settings) -> Tuple[int, CommandOutput]:
    q = q_polynomial(args.s, args.k, args.n)
    rows = [[str(partition), str(coefficient)] for partition, coefficient in q]
    return EXIT_OK, CommandOutput(q.to_dict(), ["partition", "coeff"], rows)


def cmd_sums(args, settings: Settings) -> Tuple[int, CommandOutput]:
    A = parse_multiset(_read_input(args.input_path))
    strings = s_sums(A, args.s).to_strings()
    return EXIT_OK, CommandOutput({
        "s": args.s,
        "sums": strings
    }, ["value"], [[v] for v in strings],
                                  plain=[",".join(strings)])


def cmd_recover(args, settings: Settings) -> Tuple[int, CommandOutput]:
    S = parse_multiset(_read_input(args.input_path))
    result = recover(S, args.n, args.s, mode=settings.mode, tol=settings.tol)
    document = result.to_dict()
    logging.info(f"Recovered {args.n} elements in {result.mode} mode, "
                 f"residual {result.residual:.3g}")

    if result.mode == "exact":
        return EXIT_OK, CommandOutput(document, ["element"],
                                      [[v] for v in document["multiset"]],
                                      plain=[",".join(document["multiset"])])
    rows = [[repr(re), repr(im)] for re, im in document["multiset"]]
    return EXIT_OK, CommandOutput(document, ["re", "im"], rows)


def solvability_output(solvability_report: SolvabilityReport) -> CommandOutput:
    """What ``recover`` prints for an unsolvable (n, s)."""
    document = solvability_report.to_dict()
    return CommandOutput(document, ["n", "s", "solvable", "vanishing_k"], [[
        str(solvability_report.n),
        str(solvability_report.s),
        str(solvability_report.solvable).lower(),
        ",".join(map(str, solvability_report.vanishing_k))
    ]])


def cmd_verify(args, settings: Settings) -> Tuple[int, CommandOutput]:
    pipeline = VerificationPipeline(args.suite,
                                    trials=settings.trials,
                                    seed=settings.seed,
                                    max_workers=settings.workers)
    document = report(pipeline.run())

    rows = []
    plain = []
    for suite in document["suites"]:
        for prop in suite["properties"]:
            counterexample = ("" if prop["counterexample"] is None else
                              json.dumps(prop["counterexample"],
                                         sort_keys=True))
            rows.append([
                prop["suite"], prop["name"],
                str(prop["passed"]).lower(),
                str(prop["cases"]), counterexample
            ])
            status = "PASS" if prop["passed"] else "FAIL"
            line = f"{status} {prop['suite']}.{prop['name']} ({prop['cases']} cases)"
            plain.append(f"{line} {counterexample}" if counterexample else line)
    plain.append("passed" if document["passed"] else "failed")

    code = EXIT_OK if document["passed"] else EXIT_PROPERTY_FAILED
    return code, CommandOutput(
        document, ["suite", "property", "passed", "cases", "counterexample"],
        rows,
        plain=plain)


def cmd_pairs(args, settings: Settings) -> Tuple[int, CommandOutput]:
    pairs = find_ambiguous_pairs(args.n, args.s, args.range_bound, args.cap)
    document = {
        "n": args.n,
        "s": args.s,
        "range": args.range_bound,
        "pairs": [{
            "first": A.to_strings(),
            "second": B.to_strings()
        } for A, B in pairs],
    }
    rows = [[" ".join(A.to_strings()), " ".join(B.to_strings())]
            for A, B in pairs]
    return EXIT_OK, CommandOutput(document, ["first", "second"], rows,
                                  plain=[f"{A} {B}" for A, B in pairs])


COMMANDS = {
    "table": cmd_table,
    "eval": cmd_eval,
    "qpoly": cmd_qpoly,
    "sums": cmd_sums,
    "recover": cmd_recover,
    "verify": cmd_verify,
    "pairs": cmd_pairs,
}

"""
The relfix command line.

Exit codes:
    0   the checks passed.
    1   a check failed; the report says which.
    2   usage, parse, validation or precondition error.
    3   soundness violation: premises held and the conclusion failed.

File:       cli.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.1.0
"""

import argparse
import logging
import os
import sys
from dataclasses import replace
from typing import Any, Mapping, Sequence

from .comparison import ComparisonFn, classify_phi
from .errors import (
    NonFiniteValue,
    NotInClass,
    ParseError,
    PremiseFailure,
    PreconditionError,
    RelfixError,
    ValidationError,
)
from .ini_file_parser import (
    CONFIG_FILE,
    SEED_VARIABLE,
    IniFileParser,
    Settings,
    load_settings,
)
from .instance_file import InstanceBundle, load_instance
from .instance_set import InstanceSet
from .metric import validate_metric
from .picard import (
    CONVERGED,
    EUCLIDEAN,
    MAX_NORM,
    METRICS,
    NUMERIC_MAPS,
    numeric_picard,
    orbit,
)
from .report_format import (
    FORMATS,
    TEXT,
    admissibility_data,
    finding_data,
    metric_data,
    numeric_data,
    picard_data,
    plain,
    reduction_data,
    render,
    suite_data,
    theorem_data,
)
from .reports import HOLDS
from .soundness import run_suite
from .theorems import (
    AI_FCT_RMS,
    AI_LIN_RSMS,
    B_CP_BDMS,
    B_CP_MS,
    E_CP_MS,
    K_ASY_RMS,
    NL_LIN_QOMS,
    THEOREM_IDS,
    VIOLATION,
    reduce_to_banach,
    verify_ai_functional,
    verify_ai_linear_rs,
    verify_banach,
    verify_banach_bounded,
    verify_edelstein,
    verify_kirk,
    verify_nieto_lopez,
)
from .validate import Validate

file_version = "1.1.0"
changes = {
    "1.0.0": "Initial release",
    "1.1.0": "--lambda is validated; --format is accepted after the subcommand",
}

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_VIOLATION = 3


class UsageError(RelfixError):
    """A command line the parser refuses."""


class _Parser(argparse.ArgumentParser):
    """An ArgumentParser that raises instead of exiting on errors."""

    def error(self, message: str) -> None:
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser with all subcommands.

    Returns:
        (argparse.ArgumentParser) the parser.
    """
    parser = _Parser(
        prog="relfix",
        description="Check fixed point theorems on finite relational metric spaces.",
    )
    parser.add_argument("--format", choices=FORMATS, default=TEXT)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--config", default=None, help="ini file with settings")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    # --format may also follow the subcommand; it overrides the global one
    output = _Parser(add_help=False)
    output.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    validate = commands.add_parser(
        "validate", parents=[output], help="validate instance files"
    )
    validate.add_argument("path", help="an instance file or a directory")

    check = commands.add_parser(
        "check", parents=[output], help="check one theorem on an instance"
    )
    check.add_argument("theorem", choices=THEOREM_IDS)
    check.add_argument("file")
    check.add_argument("--lambda", dest="lam", default=None)
    check.add_argument("--epsilon", default=None)
    check.add_argument("--phi", default=None)
    check.add_argument("--start", default=None)

    picard = commands.add_parser(
        "picard", parents=[output], help="iterate the map of an instance"
    )
    picard.add_argument("file")
    picard.add_argument("--from", dest="start", required=True)

    reduce = commands.add_parser(
        "reduce", parents=[output], help="reduce to a Banach instance"
    )
    reduce.add_argument("file")
    reduce.add_argument("--start", required=True)
    reduce.add_argument("--lambda", dest="lam", default=None)

    classify = commands.add_parser(
        "classify-phi", parents=[output], help="admissibility of phi"
    )
    classify.add_argument("--phi", required=True)
    classify.add_argument("--horizon", type=int, default=None)

    numeric = commands.add_parser(
        "numeric-picard", parents=[output], help="iterate a real map"
    )
    numeric.add_argument("--map", dest="map_name", choices=sorted(NUMERIC_MAPS))
    numeric.add_argument("--x0", required=True, help="comma separated numbers")
    numeric.add_argument("--tol", type=float, default=None)
    numeric.add_argument("--max-iter", type=int, default=None)
    numeric.add_argument("--lambda", dest="lam", type=float, default=None)
    numeric.add_argument("--metric", choices=METRICS, default=None)

    suite = commands.add_parser(
        "suite", parents=[output], help="soundness suite on random instances"
    )
    suite.add_argument("theorem", choices=THEOREM_IDS)
    suite.add_argument("--count", type=int, default=None)
    suite.add_argument("--workers", type=int, default=None)
    return parser


def configure_logging(verbosity: int) -> None:
    """
    Log to stderr: WARNING by default, INFO with -v, DEBUG with -vv.

    Parameters:
        verbosity (int): the number of -v options.
    """
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
    )


def settings_for(args: argparse.Namespace, environ: Mapping[str, str]) -> Settings:
    """
    The settings for one command: ini file, environment, then --seed.

    --seed is ignored when RELFIX_SEED is set.
    """
    if args.config:
        directory, filename = os.path.split(os.path.abspath(args.config))
        parser = IniFileParser(filename, ".", directory)
    else:
        parser = IniFileParser(CONFIG_FILE)
    settings = load_settings(parser, environ)
    if args.seed is not None and SEED_VARIABLE not in environ:
        settings = replace(settings, seed=args.seed)
    return settings


def run_command(
    argv: Sequence[str], environ: Mapping[str, str] = None
) -> tuple[int, str]:
    """
    Run one command line.

    Parameters:
        argv (Sequence[str]): the arguments without the program name.
        environ (Mapping[str, str]): the environment, default os.environ.

    Returns:
        (tuple[int, str]) the exit code and the report text. Errors
            return their message as the text.
    """
    if environ is None:
        environ = os.environ
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        return EXIT_USAGE, "usage error: " + str(exc) + "\n"
    except SystemExit as exc:
        # --help
        return (exc.code or EXIT_OK), ""
    configure_logging(args.verbose)

    handlers = {
        "validate": _validate,
        "check": _check,
        "picard": _picard,
        "reduce": _reduce,
        "classify-phi": _classify_phi,
        "numeric-picard": _numeric_picard,
        "suite": _suite,
    }
    try:
        settings = settings_for(args, environ)
        code, data = handlers[args.command](args, settings)
    except ParseError as exc:
        return EXIT_USAGE, "parse error: " + str(exc) + "\n"
    except ValidationError as exc:
        return EXIT_USAGE, "invalid instance: " + str(exc) + "\n"
    except (RelfixError, ValueError) as exc:
        return EXIT_USAGE, "error: " + str(exc) + "\n"
    return code, render(data, args.format)


def main() -> None:
    """Console entry point."""
    code, text = run_command(sys.argv[1:])
    stream = sys.stderr if code == EXIT_USAGE else sys.stdout
    stream.write(text)
    sys.exit(code)


def _point(bundle: InstanceBundle, point_id: str) -> int:
    """The index of a point id, PreconditionError if unknown."""
    try:
        return bundle.space.index_of(point_id)
    except KeyError:
        raise PreconditionError("unknown point id '" + point_id + "'") from None


def _modulus(bundle: InstanceBundle, text: str) -> Any:
    """lambda from the command line, else the linear modulus of the file."""
    if text is not None:
        result = Validate().rational_field(text, Validate.REQUIRED)
        if not result["valid"]:
            raise PreconditionError("--lambda: " + result["msg"])
        return result["entry"]
    if bundle.modulus is not None and bundle.modulus.lam is not None:
        return bundle.modulus.lam
    raise PreconditionError("a linear modulus is needed: use --lambda")


def _validate(args: argparse.Namespace, settings: Settings) -> tuple[int, dict]:
    if os.path.isdir(args.path):
        instances = InstanceSet(args.path, settings.arithmetic)
        files = []
        for entry in instances:
            item = {"file": os.path.basename(entry.path), "valid": entry.valid}
            if not entry.valid:
                item["error"] = str(entry.error)
            files.append(item)
        failed = len(instances.failures())
        data = {
            "directory": args.path,
            "files": files,
            "loaded": len(instances) - failed,
            "failed": failed,
        }
        return (EXIT_FAILED if failed else EXIT_OK), data

    try:
        bundle = load_instance(args.path, settings.arithmetic)
    except ValidationError as exc:
        data = {"file": args.path, "valid": False, "error": str(exc)}
        if exc.witness is not None:
            data["witness"] = plain(exc.witness)
        return EXIT_FAILED, data
    data = {"file": args.path, "valid": True, "points": bundle.space.size}
    data["metric"] = metric_data(validate_metric(bundle.space), bundle.space.points)
    return EXIT_OK, data


def _check(args: argparse.Namespace, settings: Settings) -> tuple[int, dict]:
    bundle = load_instance(args.file, settings.arithmetic)
    space, t, relation = bundle.space, bundle.t, bundle.relation
    theorem = args.theorem
    if theorem == B_CP_MS:
        report = verify_banach(space, t, _modulus(bundle, args.lam))
    elif theorem == B_CP_BDMS:
        report = verify_banach_bounded(space, t, _modulus(bundle, args.lam))
    elif theorem == K_ASY_RMS:
        report = verify_kirk(space, t, relation)
    elif theorem == AI_FCT_RMS:
        if args.phi is not None:
            phi = ComparisonFn.parse(args.phi)
        elif bundle.modulus is not None:
            phi = bundle.modulus
        else:
            phi = ComparisonFn.linear(_modulus(bundle, args.lam))
        report = verify_ai_functional(
            space,
            t,
            relation,
            phi,
            settings.sample_points,
            settings.horizon,
            settings.tail_tolerance,
        )
    elif theorem == AI_LIN_RSMS:
        report = verify_ai_linear_rs(space, t, relation, _modulus(bundle, args.lam))
    elif theorem == E_CP_MS:
        epsilon = bundle.epsilon
        if args.epsilon is not None:
            result = Validate().rational_field(
                args.epsilon, Validate.REQUIRED, min_value=0, min_exclusive=True
            )
            if not result["valid"]:
                raise PreconditionError("--epsilon: " + result["msg"])
            epsilon = result["entry"]
        if epsilon is None:
            raise PreconditionError("E-cp-ms needs --epsilon")
        report = verify_edelstein(space, t, epsilon, _modulus(bundle, args.lam))
    else:
        if bundle.order is None:
            raise PreconditionError(NL_LIN_QOMS + " needs an 'order' in the file")
        report = verify_nieto_lopez(space, t, bundle.order, _modulus(bundle, args.lam))

    data = theorem_data(report, space.points)
    start = args.start
    if start is None and bundle.start is not None:
        start = space.points[bundle.start]
    if start is not None:
        data["orbit"] = picard_data(orbit(t, _point(bundle, start)), space.points)

    if report.soundness == VIOLATION:
        logger.error("%s: premises hold and the conclusion fails", theorem)
        return EXIT_VIOLATION, data
    if report.premises_hold and report.conclusion == HOLDS:
        return EXIT_OK, data
    return EXIT_FAILED, data


def _picard(args: argparse.Namespace, settings: Settings) -> tuple[int, dict]:
    bundle = load_instance(args.file, settings.arithmetic)
    trace = orbit(bundle.t, _point(bundle, args.start))
    data = picard_data(trace, bundle.space.points)
    return (EXIT_OK if trace.converged else EXIT_FAILED), data


def _reduce(args: argparse.Namespace, settings: Settings) -> tuple[int, dict]:
    bundle = load_instance(args.file, settings.arithmetic)
    x0 = _point(bundle, args.start)
    ids = bundle.space.points
    try:
        reduced = reduce_to_banach(
            bundle.space, bundle.t, bundle.relation, _modulus(bundle, args.lam), x0
        )
    except PremiseFailure as exc:
        return EXIT_FAILED, {"reduced": False, "failed_premise": exc.premise}
    except NotInClass as exc:
        return EXIT_FAILED, {"reduced": False, "error": str(exc)}
    data = reduction_data(reduced, ids)
    if not reduced.round_trip_holds:
        failed = [
            finding_data(item, ids)
            for item in reduced.lemma_checks
            if not item.satisfied
        ]
        data["failed_checks"] = failed
        logger.error("reduction from %s does not round trip", ids[x0])
        return EXIT_VIOLATION, data
    return EXIT_OK, data


def _classify_phi(args: argparse.Namespace, settings: Settings) -> tuple[int, dict]:
    phi = ComparisonFn.parse(args.phi)
    horizon = args.horizon if args.horizon is not None else settings.horizon
    verdict = classify_phi(
        phi, settings.sample_points, horizon, settings.tail_tolerance
    )
    return EXIT_OK, admissibility_data(phi, verdict)


def _numeric_picard(args: argparse.Namespace, settings: Settings) -> tuple[int, dict]:
    if args.map_name is None:
        raise PreconditionError("--map is required")
    try:
        x0 = [float(item) for item in args.x0.split(",")]
    except ValueError:
        raise PreconditionError("--x0 must be comma separated numbers") from None
    metric = args.metric or (MAX_NORM if len(x0) == 1 else EUCLIDEAN)
    try:
        trace = numeric_picard(
            NUMERIC_MAPS[args.map_name],
            x0,
            metric,
            args.tol if args.tol is not None else settings.tol,
            args.max_iter if args.max_iter is not None else settings.max_iter,
            args.lam,
        )
    except NonFiniteValue as exc:
        data = {"map": args.map_name, "status": "non-finite", "error": str(exc)}
        return EXIT_FAILED, data
    data = {"map": args.map_name, "metric": metric, **numeric_data(trace)}
    return (EXIT_OK if trace.status == CONVERGED else EXIT_FAILED), data


def _suite(args: argparse.Namespace, settings: Settings) -> tuple[int, dict]:
    summary = run_suite(
        args.theorem,
        args.count if args.count is not None else settings.suite_count,
        settings.seed,
        args.workers if args.workers is not None else settings.workers,
    )
    return (EXIT_OK if summary.sound else EXIT_VIOLATION), suite_data(summary)

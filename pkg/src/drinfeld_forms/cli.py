"""Command line front end: expand, filtration, op, verify and proof-trace.

Exit codes: 0 on success, 1 when a check or congruence fails, 2 on usage
and configuration errors.  Results go to stdout (or --out), diagnostics to
stderr and the log file.
"""
import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from dotenv import load_dotenv
from platformdirs import user_log_dir

from .algebra import RatK, USeries, parse_rat
from .core.config import OUTPUT_FORMATS, SuiteConfig, apply_environment
from .core.encoders import JSONSerializable, dumps
from .core.errors import (CompositionNotSupported, ConfigError, FormExpressionError,
                          InsufficientPrecision, InvalidFieldSpec, NonUnitSeries,
                          NotAnEigenform, NotEvenWeight, NotInSpan, NotIrreducible,
                          NotPiIntegral, OddWeightUnsupported, PremiseViolated,
                          RootObstruction, TypeSupportViolation, UnknownForm, UnknownSuite)
from .core.logging import logger, setup_logging
from .core.version import version_number
from .forms import FormLibrary, Level, SeriesForm
from .operators import (OldformAlgebra, OldPoly, congruent, eigenvalue, parse_form, partial,
                        theta, u_operator, v_operator, w_action)
from .operators.proof import proof_trace
from .structure import filtration, isobaric_solve, solve_prec
from .suite import ALL, SUITES, run_suites

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

OPERATORS = ('theta', 'partial', 'u', 'v', 'w', 'trace', 'congruent')

# Input problems that end the run with EXIT_USAGE
USAGE_ERRORS = (ConfigError, UnknownSuite, UnknownForm, FormExpressionError, InvalidFieldSpec,
                NotIrreducible, NotAnEigenform, OddWeightUnsupported, NotInSpan,
                InsufficientPrecision, TypeSupportViolation, NotEvenWeight, NotPiIntegral,
                NonUnitSeries, CompositionNotSupported, RootObstruction)


class UsageError(Exception):
    """Raised by the argument parser instead of exiting"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--q', type=str, default=None, help='Order of the constant field F_q')
    common.add_argument('--r', type=str, default=None, help='Degree of F_q over F_p (checked)')
    common.add_argument('--modulus', type=str, default=None,
                        help='Irreducible polynomial in z defining F_q when r > 1')
    common.add_argument('--pi', type=str, default=None, help='Monic irreducible prime of F_q[T]')
    common.add_argument('--prec', type=str, default=None, help='u-adic precision N')
    common.add_argument('--format', type=str, default=None, choices=OUTPUT_FORMATS,
                        help='Output format')
    common.add_argument('--out', type=str, default=None, help='Write results to this file')
    common.add_argument('--jobs', type=str, default=None, help='Worker processes for verify')
    common.add_argument('--env-file', type=str, default=None,
                        help='The path to the .env file to load')
    common.add_argument('--log-level', type=str, default=None, help='Diagnostic log level')
    common.add_argument('--log-file', type=str, default=None,
                        help='Log file path, defaults to the user log directory')

    parser = _Parser(prog='drinfeld-forms',
                     description='Exact u-expansions and congruences of Drinfeld modular forms')
    parser.add_argument('--version', action='version', version=f"%(prog)s {version_number}")
    commands = parser.add_subparsers(dest='command', parser_class=_Parser)

    expand = commands.add_parser('expand', parents=[common],
                                 help='u-expansion of a form expression')
    expand.add_argument('--form', required=True, help='Generator name or form expression')

    filt = commands.add_parser('filtration', parents=[common],
                               help='Weight filtration of a level one form modulo pi')
    filt.add_argument('--form', required=True,
                      help='Generator name, form expression or JSON file written by expand')

    operator = commands.add_parser('op', parents=[common], help='Apply an operator to a form')
    operator.add_argument('name', choices=OPERATORS)
    operator.add_argument('--form', '--in', dest='form', required=True, help='Form expression')
    operator.add_argument('--against', default=None, help='Second form for congruent')
    operator.add_argument('--order', type=int, default=1, help='Power of pi for congruent')

    verify = commands.add_parser('verify', parents=[common], help='Run verification suites')
    verify.add_argument('--suite', action='append', default=None,
                        help=f"Suite to run ({', '.join(sorted(SUITES))} or {ALL}), repeatable")
    verify.add_argument('--matrix', action='store_true',
                        help='Run across the default (q, pi, N) matrix')

    proof = commands.add_parser('proof-trace', parents=[common],
                                help='Replay the filtration argument for a pair (f, g)')
    proof.add_argument('--f', required=True, help='W-eigenform f of weight k')
    proof.add_argument('--g', required=True, help='W-eigenform g of weight k + 2')
    return parser


def _render_table(payload: Any) -> str:
    """Plain aligned text for people; JSON stays the canonical format"""
    if isinstance(payload, list):
        return "\n\n".join(_render_table(item) for item in payload)
    if isinstance(payload, JSONSerializable):
        payload = payload.to_dict()
    if isinstance(payload, dict) and 'checks' in payload:
        lines = [f"suite {payload['suite']}  q={payload['config'].get('q')}  "
                 f"pi={payload['config'].get('pi')}  N={payload['config'].get('prec')}"]
        for check in payload['checks']:
            data = check.to_dict() if isinstance(check, JSONSerializable) else check
            status = 'PASS' if data['passed'] else 'FAIL'
            extra = f"  u^{data['witness']}: {data['coefficient']}" if 'witness' in data else ""
            lines.append(f"  {status}  {data['check']}{extra}  {data.get('detail', '')}".rstrip())
        return "\n".join(lines)
    if isinstance(payload, dict) and 'coeffs' in payload:
        head = {k: v for k, v in payload.items() if k != 'coeffs'}
        lines = [f"{k}: {v}" for k, v in sorted(head.items())]
        lines += [f"  u^{n:<4} {c}" for n, c in enumerate(payload['coeffs']) if c != "0"]
        return "\n".join(lines)
    if isinstance(payload, dict):
        data = json.loads(dumps(payload))
        width = max((len(k) for k in data), default=0)
        return "\n".join(f"{k:<{width}}  {json.dumps(v, sort_keys=True)}"
                         for k, v in sorted(data.items()))
    return str(payload)


def emit(payload: Any, config: SuiteConfig):
    """Writes results in the configured format to --out or stdout"""
    text = dumps(payload) if config.format == 'json' else _render_table(payload)
    if config.out:
        Path(config.out).write_text(text + "\n", encoding='utf-8')
        logger.info(f"Wrote results to {config.out}")
    else:
        sys.stdout.write(text + "\n")


def _context(config: SuiteConfig) -> Tuple[FormLibrary, OldformAlgebra]:
    library = FormLibrary(config.field, config.prec)
    return library, OldformAlgebra(library, config.prime)


def _load_expanded(path: str, config: SuiteConfig) -> SeriesForm:
    """A form written by 'expand --format json'"""
    try:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
    except (OSError, ValueError) as error:
        raise FormExpressionError(f"Cannot read a form from {path}: {error}") from error
    if data.get('level') != 'one':
        raise NotInSpan(f"{path} holds a form of level {data.get('level')}, not level one")
    coeffs: List[RatK] = [parse_rat(config.field, c) for c in data['coeffs']]
    return SeriesForm(USeries(config.field, coeffs), int(data['weight']), int(data['type']),
                      Level.one(), data.get('form', path))


def _form_prec(config: SuiteConfig, f: OldPoly) -> int:
    return max(config.prec, solve_prec(config.field.q, int(f.weight or 0), int(f.type or 0)))


def cmd_expand(args, config: SuiteConfig) -> int:
    _, algebra = _context(config)
    f = parse_form(algebra, args.form)
    data = algebra.flatten_form(f, config.prec, args.form).to_dict()
    data.update(q=config.field.q, pi=config.prime.to_text())
    emit(data, config)
    return EXIT_OK


def cmd_filtration(args, config: SuiteConfig) -> int:
    library, algebra = _context(config)
    if os.path.isfile(args.form):
        form = _load_expanded(args.form, config)
    else:
        f = parse_form(algebra, args.form)
        if not f.is_level_one():
            raise NotInSpan(f"{args.form} is not a level one form")
        form = algebra.flatten_form(f, _form_prec(config, f), args.form)
    w = filtration(form, config.prime, library)
    emit({'form': form.name, 'pi': config.prime.to_text(), 'weight': form.weight,
          'type': form.type, 'filtration': w,
          'isobaric': isobaric_solve(form, library).to_triples()}, config)
    return EXIT_OK


def _series_result(name: str, series, weight: int, type_: int, level: Level) -> Dict[str, Any]:
    q = series.field.q
    return SeriesForm(series, weight, type_ % (q - 1), level, name).to_dict()


def cmd_op(args, config: SuiteConfig) -> int:  # pylint: disable=too-many-return-statements
    library, algebra = _context(config)
    pi, prec = config.prime, config.prec
    f = parse_form(algebra, args.form)
    k, l = int(f.weight or 0), int(f.type or 0)  # noqa: E741
    level = Level.one() if f.is_level_one() else Level.at(pi)
    if args.name == 'theta':
        series = theta(algebra.flatten(f, prec)).truncate(prec)
        emit(_series_result(f"theta({args.form})", series, k + 2, l + 1, level), config)
    elif args.name == 'partial':
        form = algebra.flatten_form(f, prec, args.form)
        emit(partial(form, library).to_dict(), config)
    elif args.name == 'u':
        series = u_operator(algebra.flatten(f, prec), pi)
        emit(_series_result(f"U({args.form})", series, k, l, Level.at(pi)), config)
    elif args.name == 'v':
        inner = algebra.flatten(f, -(-prec // pi.norm))
        series = v_operator(inner, pi, prec)
        emit(_series_result(f"V({args.form})", series, k, l, Level.at(pi)), config)
    elif args.name == 'w':
        image = w_action(f)
        emit({'form': f.to_text(), 'image': image.to_text(), 'eigenvalue': eigenvalue(f),
              'coeffs': algebra.flatten(image, prec).to_texts()}, config)
    elif args.name == 'trace':
        emit(algebra.trace_form(f, prec, f"Tr({args.form})").to_dict(), config)
    else:
        if not args.against:
            raise ConfigError("op congruent needs --against")
        g = parse_form(algebra, args.against)
        report = congruent(algebra.flatten(f, prec), algebra.flatten(g, prec), pi,
                           args.order, args.form, args.against)
        emit(report, config)
        return EXIT_OK if report else EXIT_FAILED
    return EXIT_OK


def cmd_verify(args, config: SuiteConfig) -> int:
    configs = config.matrix() if args.matrix else [config]
    results = []
    for target in configs:
        results.extend(run_suites(target.suites, target))
    for result in results:
        logger.info(f"{result.suite} at pi={result.config['pi']}: "
                    f"{'pass' if result.passed else 'fail'} in {result.wall_time:.1f}s")
    emit(results, config)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def cmd_proof_trace(args, config: SuiteConfig) -> int:
    _, algebra = _context(config)
    f = parse_form(algebra, args.f)
    g = parse_form(algebra, args.g)
    try:
        report = proof_trace(f, g, algebra)
    except PremiseViolated as error:
        logger.error(f"Premise does not hold: {error}")
        return EXIT_FAILED
    emit(report, config)
    return EXIT_OK if report.chain_holds else EXIT_FAILED


COMMANDS = {
    'expand': cmd_expand,
    'filtration': cmd_filtration,
    'op': cmd_op,
    'verify': cmd_verify,
    'proof-trace': cmd_proof_trace,
}


def _setup_logging(args):
    log_file = args.log_file or os.path.join(user_log_dir('drinfeld-forms'), 'drinfeld_forms.log')
    setup_logging(log_path=log_file, handlers=['stderr', 'file'],
                  level=(args.log_level or 'INFO').upper(), init=True)


def cli_main(argv: Optional[List[str]] = None) -> int:
    """Runs one subcommand and returns its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as error:
        sys.stderr.write(f"{parser.prog}: error: {error}\n")
        return EXIT_USAGE

    # Common flags only exist on the subcommands
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    # Load the .env file if it exists
    load_dotenv(args.env_file)

    # Environment variables fill whatever the command line left unset
    apply_environment(args)
    try:
        _setup_logging(args)
    except ValueError as error:
        sys.stderr.write(f"{parser.prog}: error: {error}\n")
        return EXIT_USAGE

    try:
        config = SuiteConfig.from_args(args, check_prec=args.command == 'verify')
        return COMMANDS[args.command](args, config)
    except USAGE_ERRORS as error:
        logger.error(f"{args.command}: {error.__class__.__name__}: {error}")
        return EXIT_USAGE


def cli(argv=None):
    """Defines a command line entry point for the drinfeld-forms script"""
    sys.exit(cli_main(argv))


__all__ = [
    'build_parser',
    'cli',
    'cli_main',
]

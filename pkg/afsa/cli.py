#!/usr/bin/env python3
"""
Command-line interface.

Usage:
    afsa enumerate [--semantics complete|pl3] [--cap N] FILE   # complete labellings
    afsa encode FILE                                           # encoded formula
    afsa solve [--system eqG|eqP|eqL] [--three-valued] FILE    # equational semantics
    afsa transform --to setaf FILE                             # rewrite as a SETAF
    afsa check-equivalence [--cap N] FILE                      # complete vs PL3 models

FILE is a frame document path, or - for standard input.
Exit codes: 0 success, 1 domain error, 2 usage or parse error.
"""
import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence, TextIO

from .config import Config
from .encoder import encode
from .equational import (
    SolveConfig,
    build_system,
    enumerate_3valued_solutions,
    solve_fixed_point,
    ternarize,
)
from .errors import AfsaError, FrameParseError
from .frame_io import format_real, load_frame, serialize_frame, write_labellings
from .framework import Framework
from .fuzzy import get_algebra
from .logger import logger
from .logic3 import Truth3, enumerate_models3, pretty
from .semantics import satisfies_complete, enumerate_complete, labelling_key
from .transforms import to_setaf


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int
    stdout: str
    stderr: str


def check_equivalence(
    framework: Framework,
    cap: Optional[int] = None,
    checker: Callable[[Framework, Mapping[str, Truth3]], bool] = satisfies_complete,
) -> str:
    """
    Compare complete labellings with the three-valued models of the encoding.

    Returns:
        Report starting with PASS or FAIL; a FAIL lists the labellings found on one side only
    """
    complete = enumerate_complete(framework, cap, checker=checker)
    encoded = encode(framework)
    models = enumerate_models3(encoded.formula, cap, variables=encoded.variables)

    complete_keys = {labelling_key(lab): lab for lab in complete}
    model_keys = {labelling_key(lab): lab for lab in models}
    if complete_keys.keys() == model_keys.keys():
        count = len(complete)
        return f"PASS complete≡PL3 models ({count} labelling{'' if count == 1 else 's'})"

    lines = [f'FAIL complete≢PL3 models ({len(complete)} complete, {len(models)} models)']
    for key, lab in complete_keys.items():
        if key not in model_keys:
            lines.append('only-complete: ' + write_labellings([lab]).rstrip('\n'))
    for key, lab in model_keys.items():
        if key not in complete_keys:
            lines.append('only-models: ' + write_labellings([lab]).rstrip('\n'))
    return '\n'.join(lines)


def enumerate_command(args, out: TextIO) -> int:
    framework = load_frame(args.file)
    if args.semantics == 'complete':
        labellings = enumerate_complete(framework, args.cap, workers=args.workers)
    else:
        encoded = encode(framework)
        labellings = enumerate_models3(
            encoded.formula, args.cap, variables=encoded.variables, workers=args.workers
        )
    logger.info('%d %s labellings', len(labellings), args.semantics)
    out.write(write_labellings(labellings))
    return 0


def encode_command(args, out: TextIO) -> int:
    encoded = encode(load_frame(args.file))
    out.write(pretty(encoded.formula) + '\n')
    out.write('variables: ' + ', '.join(encoded.variables) + '\n')
    return 0


def solve_command(args, out: TextIO, err: TextIO) -> int:
    framework = load_frame(args.file)
    algebra = get_algebra(args.algebra or args.system or 'eqG')
    system = build_system(framework, algebra)

    if args.three_valued:
        out.write(write_labellings(enumerate_3valued_solutions(system, args.cap)))
        return 0

    config = SolveConfig.from_config(
        tolerance=args.tol,
        max_iterations=args.max_iter,
        damping=args.damping,
        restarts=args.restarts,
        seed=args.seed,
    )
    result = solve_fixed_point(system, config)
    payload = {
        'status': result.status.value,
        'assignment': None,
        'residual': result.residual,
        'iterations': result.iterations,
        'restart': result.restart,
    }
    if result.converged:
        payload['assignment'] = {name: format_real(v) for name, v in result.assignment.items()}
        # classification uses the model tolerance, not the solve tolerance
        labelling = ternarize(result.assignment, Config.MODEL_TOLERANCE)
        payload['ternarized'] = {name: str(v) for name, v in labelling.items()}
    out.write(json.dumps(payload, sort_keys=True, ensure_ascii=False) + '\n')
    if not result.converged:
        err.write(f'✗ solver failed, best residual {result.residual:.3e}\n')
        return 1
    return 0


def transform_command(args, out: TextIO) -> int:
    result = to_setaf(load_frame(args.file))
    out.write(serialize_frame(result.setaf))
    out.write(json.dumps(result.mapping, sort_keys=True) + '\n')
    return 0


def check_equivalence_command(args, out: TextIO) -> int:
    report = check_equivalence(load_frame(args.file), args.cap)
    out.write(report + '\n')
    return 0 if report.startswith('PASS') else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='afsa', description='Argumentation frameworks with set attackers'
    )
    subparsers = parser.add_subparsers(dest='command', help='Command to run')

    enumerate_parser = subparsers.add_parser('enumerate', help='List complete labellings')
    enumerate_parser.add_argument('--semantics', choices=['complete', 'pl3'], default='complete')
    enumerate_parser.add_argument('--cap', type=int, default=None, help='Enumeration cap')
    enumerate_parser.add_argument('--workers', type=int, default=None, help='Worker processes')
    enumerate_parser.add_argument('file', help='Frame document, or - for stdin')

    encode_parser = subparsers.add_parser('encode', help='Print the encoded formula')
    encode_parser.add_argument('file', help='Frame document, or - for stdin')

    solve_parser = subparsers.add_parser('solve', help='Solve the equational system')
    family = solve_parser.add_mutually_exclusive_group()
    family.add_argument('--system', choices=['eqG', 'eqP', 'eqL'], help='Default eqG')
    family.add_argument('--algebra', choices=['godel', 'product', 'lukasiewicz'])
    solve_parser.add_argument('--tol', type=float, default=None)
    solve_parser.add_argument('--max-iter', dest='max_iter', type=int, default=None)
    solve_parser.add_argument('--damping', type=float, default=None)
    solve_parser.add_argument('--restarts', type=int, default=None)
    solve_parser.add_argument('--seed', type=int, default=None)
    solve_parser.add_argument('--three-valued', dest='three_valued', action='store_true',
                              help='Enumerate exact solutions over {0, 1/2, 1}')
    solve_parser.add_argument('--cap', type=int, default=None, help='Enumeration cap')
    solve_parser.add_argument('file', help='Frame document, or - for stdin')

    transform_parser = subparsers.add_parser('transform', help='Rewrite as another kind')
    transform_parser.add_argument('--to', choices=['setaf'], required=True)
    transform_parser.add_argument('file', help='Frame document, or - for stdin')

    check_parser = subparsers.add_parser(
        'check-equivalence', help='Compare complete labellings with PL3 models'
    )
    check_parser.add_argument('--cap', type=int, default=None, help='Enumeration cap')
    check_parser.add_argument('file', help='Frame document, or - for stdin')
    return parser


def run(argv: Sequence[str]) -> CommandOutcome:
    """Run one command and capture its output."""
    out, err = io.StringIO(), io.StringIO()
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(list(argv))
    except SystemExit as e:
        return CommandOutcome(0 if e.code in (0, None) else 2, out.getvalue(), err.getvalue())

    try:
        if args.command == 'enumerate':
            code = enumerate_command(args, out)
        elif args.command == 'encode':
            code = encode_command(args, out)
        elif args.command == 'solve':
            code = solve_command(args, out, err)
        elif args.command == 'transform':
            code = transform_command(args, out)
        elif args.command == 'check-equivalence':
            code = check_equivalence_command(args, out)
        else:
            parser.print_usage(err)
            code = 2
    except FrameParseError as e:
        err.write(f'✗ Parse error: {e}\n')
        code = 2
    except (OSError, ValueError) as e:
        err.write(f'✗ Usage error: {e}\n')
        code = 2
    except AfsaError as e:
        logger.error('%s failed: %s', args.command, e)
        err.write(f'✗ Error: {e}\n')
        code = 1
    return CommandOutcome(code, out.getvalue(), err.getvalue())


def main():
    outcome = run(sys.argv[1:])
    sys.stdout.write(outcome.stdout)
    sys.stderr.write(outcome.stderr)
    sys.exit(outcome.exit_code)


if __name__ == '__main__':
    main()

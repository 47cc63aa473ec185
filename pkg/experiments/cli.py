# 
# Author(s):
# SimonLib contributors
# 
# Copyright (c) 2026 SimonLib contributors.
# 
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# 
# http://www.apache.org/licenses/LICENSE-2.0
# 
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# 

"""Command-line entry point.

Exit status: 0 on success; 1 when a verification fails, the promise does not
hold or the round budget is exhausted; 2 on usage, parse, capacity and I/O
errors. Documents go to ``--out`` or, failing that, to stdout; diagnostics go
to stderr.

"""

import argparse
import sys
from typing import List, Optional

from .config import ALL_ARMS, ExperimentConfig, ReportFormat
from .commands import cmd_gen, cmd_simon, cmd_classical, cmd_verify, cmd_compare, cmd_sweep
from .reports import render_json, render_cost_table, render_table, render_console_table
from ..baselines import CostReport
from ..oracles.tablefile import table_to_document
from ..pipeline.analysis import DEFAULT_TOLERANCE
from ..utils import BudgetExhaustedError, InsufficientRankError, PromiseViolationError
from ..utils import simonlib_err_header


EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE   = 2


def _hex(string: str) -> int:
    try:
        return int(string, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hexadecimal string: {string!r}")


def _on_off(string: str) -> bool:
    return string == 'on'


def _add_compare_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--seed',             type=int, default=0)
    parser.add_argument('--trials',           type=int, default=1)
    parser.add_argument('--measure-v',        type=str, choices=('on', 'off'), default='on')
    parser.add_argument('--max-rounds',       type=int, default=None)
    parser.add_argument('--strategies',       type=str, nargs='+', choices=ALL_ARMS, default=list(ALL_ARMS))
    parser.add_argument('--birthday-repeats', type=int, default=1)
    parser.add_argument('--format',           type=str, choices=[f.value for f in ReportFormat], default=ReportFormat.JSON.value)
    parser.add_argument('--out',              type=str, default=None)


def build_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(prog='simonlib', description="Simulate Simon's algorithm and benchmark it against classical collision search.")
    parser.add_argument('--capacity', type=int, default=None, help="largest register width (in qubits) the simulator accepts")
    parser.add_argument('--quiet', action='store_true', help="silence progress output")
    subparsers = parser.add_subparsers(dest='command', required=True)

    gen = subparsers.add_parser('gen', help="generate a random function table satisfying the promise")
    gen.add_argument('--n',    type=int, required=True)
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--r',    type=_hex, default=None, help="hidden shift, in hexadecimal")
    gen.add_argument('--out',  type=str, default=None)

    simon = subparsers.add_parser('simon', help="recover the hidden shift with Simon's algorithm")
    simon.add_argument('function_file')
    simon.add_argument('--seed',       type=int, default=0)
    simon.add_argument('--measure-v',  type=str, choices=('on', 'off'), default='on')
    simon.add_argument('--max-rounds', type=int, default=None)
    simon.add_argument('--out',        type=str, default=None)

    classical = subparsers.add_parser('classical', help="find a colliding pair classically")
    classical.add_argument('function_file')
    classical.add_argument('--strategy', type=str, choices=('scan', 'birthday'), default='scan')
    classical.add_argument('--seed',     type=int, default=0)
    classical.add_argument('--out',      type=str, default=None)

    verify = subparsers.add_parser('verify', help="check the promise and the exact properties of the quantum state")
    verify.add_argument('function_file')
    verify.add_argument('--tolerance', type=float, default=DEFAULT_TOLERANCE)
    verify.add_argument('--out',       type=str, default=None)

    compare = subparsers.add_parser('compare', help="benchmark the quantum and classical arms over many trials")
    compare.add_argument('--n', type=int, required=True)
    _add_compare_arguments(compare)

    sweep = subparsers.add_parser('sweep', help="repeat the comparison over several register widths")
    sweep.add_argument('--n', type=int, nargs='+', required=True)
    _add_compare_arguments(sweep)

    return parser


def _emit(text: str, out: Optional[str]) -> None:
    # commands write the file themselves; without a path the document goes to stdout
    if out is None:
        sys.stdout.write(text)


def _experiment_config(args: argparse.Namespace, n: int) -> ExperimentConfig:
    return ExperimentConfig(n=n,
                            seed=args.seed,
                            trials=args.trials,
                            measure_v=_on_off(args.measure_v),
                            strategies=tuple(args.strategies),
                            output_path=args.out,
                            format=args.format,
                            max_rounds=args.max_rounds,
                            birthday_repeats=args.birthday_repeats,
                            capacity=args.capacity)


def _run(args: argparse.Namespace) -> int:

    if args.command == 'gen':
        f = cmd_gen(args.n, args.seed, r=args.r, out_path=args.out, capacity=args.capacity)
        _emit(render_json(table_to_document(f)), args.out)
        return EXIT_SUCCESS

    elif args.command == 'simon':
        report = cmd_simon(args.function_file, args.seed, measure_v=_on_off(args.measure_v), max_rounds=args.max_rounds, report_path=args.out, capacity=args.capacity)
        _emit(render_json(report.to_dict()), args.out)
        return EXIT_SUCCESS if report.success else EXIT_FAILURE

    elif args.command == 'classical':
        result = cmd_classical(args.function_file, args.strategy, seed=args.seed, report_path=args.out)
        _emit(render_json(result.to_dict()), args.out)
        return EXIT_SUCCESS

    elif args.command == 'verify':
        summary = cmd_verify(args.function_file, tolerance=args.tolerance, report_path=args.out, capacity=args.capacity)
        if not args.quiet:
            print(render_console_table(summary.checks()), file=sys.stderr)
        _emit(render_json(summary.to_dict()), args.out)
        return EXIT_SUCCESS if summary.passed else EXIT_FAILURE

    elif args.command == 'compare':
        config = _experiment_config(args, args.n)
        reports, summary = cmd_compare(config, progress=not args.quiet)
        if not args.quiet:
            print(render_console_table([summary], CostReport.columns()), file=sys.stderr)
        _emit(render_cost_table(reports, summary, config.format), args.out)
        return EXIT_SUCCESS

    elif args.command == 'sweep':
        config = _experiment_config(args, args.n[0])
        summaries = cmd_sweep(args.n, config, progress=not args.quiet)
        if not args.quiet:
            print(render_console_table(summaries, CostReport.columns()), file=sys.stderr)
        _emit(render_table(summaries, CostReport.columns(), config.format, key='sweep'), args.out)
        return EXIT_SUCCESS

    else:  # unreachable: argparse rejects unknown commands
        raise ValueError(simonlib_err_header(obj_name='simonlib') + f"unknown command {args.command}.")


def main(argv: Optional[List[str]] = None) -> int:

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # argparse exits with status 2 on usage errors
        return EXIT_USAGE if e.code not in (0, None) else EXIT_SUCCESS

    try:
        return _run(args)
    # the promise error is also a ``ValueError``, so it must be caught first
    except (PromiseViolationError, BudgetExhaustedError, InsufficientRankError) as e:
        print(str(e), file=sys.stderr)
        return EXIT_FAILURE
    except (ValueError, TypeError, OSError) as e:
        print(str(e) if str(e).startswith('[SimonLib') else simonlib_err_header(obj_name='simonlib') + str(e), file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())

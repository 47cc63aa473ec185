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

"""The reproducible, file-backed experiments behind the command line.

Each command returns the object it computed; when given a path, it also
writes the corresponding document there. Commands never choose exit codes.

"""

from __future__ import annotations

from dataclasses import dataclass, replace
import os
import sys
import torch
from tqdm import tqdm
import warnings
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..config import Arm, ExperimentConfig
from ..reports import summarise_cost_reports, render_cost_table, render_table, write_text, write_json_document
from ...oracles import HiddenShift, SimonFunction, CountingOracle
from ...oracles import generate, random_shift, verify_promise, dump_table, load_table
from ...pipeline import RunReport, recover_hidden_shift
from ...pipeline import EquivalenceResult, equivalence_check, DistillationResult, distillation_check
from ...pipeline.analysis import DEFAULT_TOLERANCE
from ...baselines import CollisionResult, CostReport, build_cost_report, resolve_collisionstrategyspec
from ...baselines.collision import BirthdayCollisionSearcher, scan_collision
from ...utils import check_capacity
from ...utils import ArgumentError, BudgetExhaustedError, PromiseViolationError
from ...utils import simonlib_log, simonlib_err_header, simonlib_wng_header


PathType = Union[os.PathLike, str]


def cmd_gen(n:        int,
            seed:     int,
            r:        Optional[int] = None,
            out_path: Optional[PathType] = None,
            capacity: Optional[int] = None) -> SimonFunction:
    """Generate a function table; the shift is drawn from ``seed`` unless given."""
    if n < 1:
        raise ArgumentError(simonlib_err_header(obj_name='cmd_gen') + f"requires registers of at least one qubit, but received n = {n}.")
    check_capacity(n, capacity)

    if r is None:
        shift = random_shift(n, torch.Generator().manual_seed(seed))
    else:
        shift = HiddenShift(r, n)

    f = generate(n, shift, seed)
    verify_promise(f)

    if out_path is not None:
        dump_table(f, out_path)

    return f


def cmd_simon(function_path: PathType,
              seed:          int,
              measure_v:     bool = True,
              max_rounds:    Optional[int] = None,
              report_path:   Optional[PathType] = None,
              capacity:      Optional[int] = None) -> RunReport:
    """Recover the hidden shift of the function stored at ``function_path``.

    When the round budget runs out, the partial report is still written
    before ``BudgetExhaustedError`` propagates.
    """
    f = load_table(function_path)
    verify_promise(f)
    check_capacity(f.n, capacity)

    rng = torch.Generator().manual_seed(seed)
    try:
        report = recover_hidden_shift(f, measure_v, rng, max_rounds=max_rounds, capacity=capacity, seed=seed)
    except BudgetExhaustedError as e:
        if report_path is not None:
            write_json_document(e.report.to_dict(), report_path)
        raise

    if report_path is not None:
        write_json_document(report.to_dict(), report_path)

    return report


def cmd_classical(function_path: PathType,
                  strategy:      str,
                  seed:          int = 0,
                  report_path:   Optional[PathType] = None) -> CollisionResult:
    f = load_table(function_path)
    verify_promise(f)

    searcher = resolve_collisionstrategyspec(strategy)
    if 'seed' in searcher.default_kwargs:
        searcher = resolve_collisionstrategyspec((strategy, {'seed': seed}))

    result = searcher(CountingOracle(f))

    if report_path is not None:
        write_json_document(result.to_dict(), report_path)

    return result


@dataclass(frozen=True)
class VerificationSummary:
    n:              int
    tolerance:      float
    promise_passed: bool
    r:              Optional[HiddenShift] = None
    promise_error:  Optional[str] = None
    equivalence:    Optional[EquivalenceResult] = None
    distillation:   Optional[DistillationResult] = None

    @property
    def passed(self) -> bool:
        return self.promise_passed \
               and self.equivalence is not None and self.equivalence.passed \
               and self.distillation is not None and self.distillation.passed

    def checks(self) -> List[Dict[str, Any]]:
        """One record per check, for console rendering."""
        return [
            {'check': 'promise',      'passed': self.promise_passed, 'detail': self.promise_error if self.promise_error is not None else f"r = {self.r.to_bits()}"},
            {'check': 'equivalence',  'passed': self.equivalence.passed if self.equivalence is not None else None,
             'detail': f"max |difference| = {self.equivalence.max_abs_difference:.3e}" if self.equivalence is not None else 'skipped'},
            {'check': 'distillation', 'passed': self.distillation.passed if self.distillation is not None else None,
             'detail': f"{len(self.distillation.failures)} of {len(self.distillation.outcomes)} outcomes fail" if self.distillation is not None else 'skipped'},
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n':              self.n,
            'tolerance':      self.tolerance,
            'passed':         self.passed,
            'promise':        {'passed': self.promise_passed,
                               'r': self.r.to_bits() if self.r is not None else None,
                               'error': self.promise_error},
            'equivalence':    {'passed': self.equivalence.passed,
                               'max_abs_difference': self.equivalence.max_abs_difference} if self.equivalence is not None else None,
            'distillation':   {'passed': self.distillation.passed,
                               'outcomes': len(self.distillation.outcomes),
                               'failed_f_values': [o.f_value for o in self.distillation.failures]} if self.distillation is not None else None,
        }


def cmd_verify(function_path: PathType,
               tolerance:     float = DEFAULT_TOLERANCE,
               report_path:   Optional[PathType] = None,
               capacity:      Optional[int] = None) -> VerificationSummary:
    """Check the promise, the measurement equivalence and the distillation.

    The two exact checks are skipped when the promise does not hold.
    """
    f = load_table(function_path)
    check_capacity(f.n, capacity)

    if tolerance == 0.0:
        warnings.warn(simonlib_wng_header(obj_name='cmd_verify') + "a zero tolerance can not absorb floating-point residue; the exact checks are expected to fail.")

    try:
        r = verify_promise(f)
    except PromiseViolationError as e:
        summary = VerificationSummary(n=f.n, tolerance=tolerance, promise_passed=False, promise_error=str(e))
    else:
        summary = VerificationSummary(n=f.n,
                                      tolerance=tolerance,
                                      promise_passed=True,
                                      r=r,
                                      equivalence=equivalence_check(f, tolerance, capacity),
                                      distillation=distillation_check(f, tolerance, capacity))

    if report_path is not None:
        write_json_document(summary.to_dict(), report_path)

    return summary


def _spawn_seeds(generator: torch.Generator, count: int) -> List[int]:
    return torch.randint(0, 2 ** 31 - 1, (count,), generator=generator).tolist()


def _run_trial(f: SimonFunction, config: ExperimentConfig, quantum_seed: int, birthday_seeds: Sequence[int]) -> CostReport:

    quantum = None
    if config.runs(Arm.QUANTUM):
        rng = torch.Generator().manual_seed(quantum_seed)
        try:
            quantum = recover_hidden_shift(f, config.measure_v, rng, max_rounds=config.max_rounds, capacity=config.capacity, seed=quantum_seed)
        except BudgetExhaustedError as e:
            quantum = e.report  # unsuccessful trials are part of the statistics

    scan = scan_collision(CountingOracle(f)) if config.runs(Arm.SCAN) else None

    birthday = []
    if config.runs(Arm.BIRTHDAY):
        birthday = [BirthdayCollisionSearcher(seed)(CountingOracle(f)) for seed in birthday_seeds]

    return build_cost_report(quantum, scan, birthday)


def _compare(config: ExperimentConfig, progress: bool) -> Tuple[List[CostReport], Dict[str, Any]]:

    # every per-trial seed descends from the configuration seed, in a fixed order
    generator = torch.Generator().manual_seed(config.seed)

    reports = []
    for _ in tqdm(range(config.trials), desc=f"n = {config.n}", disable=not progress, file=sys.stderr):
        function_seed, quantum_seed = _spawn_seeds(generator, 2)
        shift = random_shift(config.n, generator)
        birthday_seeds = _spawn_seeds(generator, config.birthday_repeats)

        f = generate(config.n, shift, function_seed)
        reports.append(_run_trial(f, config, quantum_seed, birthday_seeds))

    return reports, summarise_cost_reports(reports)


def cmd_compare(config: ExperimentConfig, progress: bool = False) -> Tuple[List[CostReport], Dict[str, Any]]:
    """Benchmark the arms of ``config`` on freshly generated functions.

    Writes one row per trial plus the median-summary row to
    ``config.output_path`` (if any); identical configurations write identical
    files.
    """
    if progress:
        simonlib_log(obj_name="cmd_compare", message=f"comparing {list(config.strategies)} over {config.trials} trials at n = {config.n}.")

    reports, summary = _compare(config, progress)

    if config.output_path is not None:
        write_text(render_cost_table(reports, summary, config.format), config.output_path)

    return reports, summary


def cmd_sweep(ns: Sequence[int], config: ExperimentConfig, progress: bool = False) -> List[Dict[str, Any]]:
    """Repeat the comparison of ``config`` at every width in ``ns``.

    Returns (and writes) one summary record per width.
    """
    configs = [replace(config, n=n) for n in ns]  # validate every width before running any

    summaries = []
    for c in configs:
        if progress:
            simonlib_log(obj_name="cmd_sweep", message=f"sweeping n = {c.n}.")
        _, summary = _compare(c, progress)
        summaries.append(summary)

    if config.output_path is not None:
        write_text(render_table(summaries, CostReport.columns(), config.format, key='sweep'), config.output_path)

    return summaries

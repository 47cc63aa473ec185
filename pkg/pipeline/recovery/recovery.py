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

"""Recover the hidden shift by repeating rounds until it is determined.

Rounds are repeated until the sampled constraints reach rank :math:`n - 1`,
the threshold at which the non-zero solution is unique; a budget on the number
of rounds guards against non-termination. The number of rounds it took is
reported, rather than fixed in advance to reach some target confidence.

"""

from __future__ import annotations

from dataclasses import dataclass, field
import torch
from typing import Any, Dict, List, Optional

from ..rounds import run_round
from ...oracles import HiddenShift, SimonFunction, CountingOracle, reproduces_pairing
from ...oracles.tablefile import format_hex, parse_hex
from ...gf2 import ConstraintSystem
from ...utils import UNKNOWN
from ...utils import ArgumentError, BudgetExhaustedError, TableFormatError
from ...utils import simonlib_err_header


def default_max_rounds(n: int) -> int:
    return 20 * n


@dataclass
class RunReport:
    n:               int
    seed:            int
    measure_v:       bool
    rounds:          int = 0
    oracle_queries:  int = 0
    rank_trajectory: List[int] = field(default_factory=list)
    recovered:       Optional[HiddenShift] = None
    success:         bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n':               self.n,
            'seed':            self.seed,
            'measure_v':       self.measure_v,
            'rounds':          self.rounds,
            'oracle_queries':  self.oracle_queries,
            'rank_trajectory': list(self.rank_trajectory),
            'recovered':       format_hex(self.recovered.r, self.n) if self.recovered is not None else None,
            'success':         self.success,
        }

    @classmethod
    def from_dict(cls, document: Dict[str, Any]) -> RunReport:
        try:
            n = document['n']
            recovered = document['recovered']
            return cls(n=n,
                       seed=document['seed'],
                       measure_v=document['measure_v'],
                       rounds=document['rounds'],
                       oracle_queries=document['oracle_queries'],
                       rank_trajectory=list(document['rank_trajectory']),
                       recovered=HiddenShift(parse_hex(recovered, n), n) if recovered is not None else None,
                       success=document['success'])
        except (KeyError, TypeError) as e:
            raise TableFormatError(simonlib_err_header(obj_name=cls.__name__) + f"malformed run report: {e}.")


def recover_hidden_shift(f:          SimonFunction,
                         measure_v:  bool,
                         rng:        torch.Generator,
                         max_rounds: Optional[int] = None,
                         capacity:   Optional[int] = None,
                         seed:       Optional[int] = None) -> RunReport:
    """Run Simon's algorithm on ``f`` until its hidden shift is identified.

    Raises ``BudgetExhaustedError`` (carrying the partial report) when
    ``max_rounds`` rounds do not suffice. The recovered shift is accepted only
    if it pairs the arguments of ``f``; when ``f`` declares its shift, the two
    must also agree.

    ``seed`` is recorded in the report as given; it defaults to the initial
    seed of ``rng``.
    """
    n = f.n
    max_rounds = default_max_rounds(n) if max_rounds is None else max_rounds
    if max_rounds < 1:
        raise ArgumentError(simonlib_err_header(obj_name='recover_hidden_shift') + f"requires a budget of at least one round, but received {max_rounds}.")

    oracle = CountingOracle(f)
    system = ConstraintSystem(n)
    seed = rng.initial_seed() if seed is None else seed
    report = RunReport(n=n, seed=seed, measure_v=measure_v)

    # for n = 1 the target rank is zero, and the only candidate is r = 1
    while system.rank < n - 1:
        if report.rounds >= max_rounds:
            report.oracle_queries = oracle.quantum_queries
            raise BudgetExhaustedError(simonlib_err_header(obj_name='recover_hidden_shift') + f"reached rank {system.rank} of {n - 1} after {report.rounds} rounds.", report=report)

        sample = run_round(oracle, measure_v, rng, system=system, capacity=capacity)
        report.rounds += 1
        report.rank_trajectory.append(sample.rank_after)

    recovered = system.solve_hidden_shift()

    report.oracle_queries = oracle.quantum_queries
    report.recovered = recovered
    report.success = reproduces_pairing(f, recovered.r) and (f.shift is UNKNOWN or f.shift == recovered)

    return report

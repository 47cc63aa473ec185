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

r"""Side-by-side accounting of the quantum and classical query costs.

Costs are measured in oracle queries, which compare the two arms
independently of the platform that simulates them. The quantum arm also pays
for measurements: reading an :math:`n`-qubit register costs :math:`n` units
regardless of how entangled the measured state is, and each round reads both
registers, for :math:`2n` units per round.

The classical librarian faces the symbolic description ("print-out") of the
parallel-computation state, a sum of :math:`2^{n}` tensor products
:math:`| x \rangle_{a} | f(x) \rangle_{v}`, each rendered with :math:`2n`
bits.

"""

from __future__ import annotations

from dataclasses import dataclass, fields
import torch
from typing import Any, Dict, List, Optional, Sequence

from ..collision import CollisionResult
from ...pipeline import RunReport
from ...utils import ArgumentError
from ...utils import simonlib_err_header


def printout_term_count(n: int) -> int:
    if n < 1:
        raise ArgumentError(simonlib_err_header(obj_name='printout_term_count') + f"requires registers of at least one qubit, but received n = {n}.")
    return 2 ** n


def printout_term_bits(n: int) -> int:
    if n < 1:
        raise ArgumentError(simonlib_err_header(obj_name='printout_term_bits') + f"requires registers of at least one qubit, but received n = {n}.")
    return 2 * n


def median(values: Sequence[float]) -> float:
    return float(torch.tensor(list(values), dtype=torch.float64).quantile(0.5).item())


@dataclass(frozen=True)
class CostReport:
    # absent arms are recorded as ``None``
    n:                          int
    quantum_rounds:             Optional[int]
    quantum_oracle_queries:     Optional[int]
    quantum_measurement_units:  Optional[int]
    quantum_success:            Optional[bool]
    classical_scan_queries:     Optional[int]
    classical_birthday_queries: Optional[float]  # median over ``birthday_trials`` searches
    birthday_trials:            int
    printout_terms:             int
    printout_term_bits:         int

    @classmethod
    def columns(cls) -> List[str]:
        return [f.name for f in fields(cls)]

    def to_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name) for name in self.columns()}

    @classmethod
    def from_dict(cls, document: Dict[str, Any]) -> CostReport:
        return cls(**{name: document[name] for name in cls.columns()})


def build_cost_report(quantum:         Optional[RunReport],
                      scan:            Optional[CollisionResult],
                      birthday_trials: Sequence[CollisionResult] = ()) -> CostReport:
    """Assemble the costs measured on the same function by each arm."""
    ns = set()
    if quantum is not None:
        ns.add(quantum.n)
    if scan is not None:
        ns.add(scan.n)
    ns.update(b.n for b in birthday_trials)

    if len(ns) == 0:
        raise ArgumentError(simonlib_err_header(obj_name='build_cost_report') + "requires the costs of at least one arm.")
    if len(ns) > 1:
        raise ArgumentError(simonlib_err_header(obj_name='build_cost_report') + f"all the arms must refer to the same register width, but received widths {sorted(ns)}.")
    n = ns.pop()

    return CostReport(n=n,
                      quantum_rounds=quantum.rounds if quantum is not None else None,
                      quantum_oracle_queries=quantum.oracle_queries if quantum is not None else None,
                      quantum_measurement_units=quantum.rounds * 2 * n if quantum is not None else None,
                      quantum_success=quantum.success if quantum is not None else None,
                      classical_scan_queries=scan.queries if scan is not None else None,
                      classical_birthday_queries=median([b.queries for b in birthday_trials]) if len(birthday_trials) > 0 else None,
                      birthday_trials=len(birthday_trials),
                      printout_terms=printout_term_count(n),
                      printout_term_bits=printout_term_bits(n))

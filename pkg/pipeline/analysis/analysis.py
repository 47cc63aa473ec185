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

r"""Exact (sampling-free) analyses of Simon's algorithm.

These functions compute outcome distributions and post-measurement states
directly from the amplitudes, and check the two structural claims about the
algorithm:

* *equivalence*: the distribution of the final outcome :math:`z` is the same
  whether register :math:`v` is measured before the Hadamard transform or
  never measured;
* *distillation*: measuring register :math:`v` in the parallel-computation
  state leaves register :math:`a` in the equal superposition of the two
  arguments :math:`\bar{x}` and :math:`\bar{x} \oplus r` that collide on the
  observed value :math:`\bar{f}`.

"""

from dataclasses import dataclass, field
import torch
from typing import List, Tuple, Union

from ...statevector import Register
from ...statevector import hadamard_register, marginal_distribution, conditional_amplitudes, prepare_parallel_state
from ...statevector import occupied_columns, conditional_columns
from ...statevector.state import walsh_hadamard
from ...oracles import SimonFunction, verify_promise
from ...gf2 import inner_product_mod2
from ...utils import UNKNOWN
from ...utils import check_capacity


DEFAULT_TOLERANCE = 1e-12


def admissible_z_values(r: int, n: int) -> List[int]:
    """The :math:`2^{n-1}` outcomes orthogonal to ``r`` (mod 2)."""
    return [z for z in range(0, 2 ** n) if inner_product_mod2(r, z) == 0]


def exact_z_distribution(f: SimonFunction, measure_v: bool, capacity: Union[int, None] = None) -> torch.Tensor:
    """The distribution of the final outcome of register :math:`a`.

    When ``measure_v`` is set, the conditional distributions of :math:`z`
    given each outcome of register :math:`v` are averaged with the outcome
    probabilities as weights. Only the occupied columns of the state are
    transformed.
    """
    check_capacity(f.n, capacity)

    if not measure_v:
        _, columns = occupied_columns(f)
        return walsh_hadamard(columns, dim=0).abs().pow(2).sum(dim=1)

    _, probabilities, amplitudes = conditional_columns(f)
    conditionals = walsh_hadamard(amplitudes, dim=0).abs().pow(2)  # one column per outcome of register v
    return conditionals @ probabilities


def reference_z_distribution(f: SimonFunction, measure_v: bool, capacity: Union[int, None] = None) -> torch.Tensor:
    """``exact_z_distribution`` on the full statevector."""
    state = prepare_parallel_state(f, capacity)

    if not measure_v:
        state = hadamard_register(state, Register.A)
        return marginal_distribution(state, Register.A)

    _, probabilities, amplitudes = conditional_amplitudes(state, Register.V)
    conditionals = walsh_hadamard(amplitudes, dim=0).abs().pow(2)
    return conditionals @ probabilities



@dataclass(frozen=True)
class EquivalenceResult:
    max_abs_difference: float
    passed:             bool


def equivalence_check(f: SimonFunction, tolerance: float = DEFAULT_TOLERANCE, capacity: Union[int, None] = None) -> EquivalenceResult:
    measured   = exact_z_distribution(f, measure_v=True,  capacity=capacity)
    unmeasured = exact_z_distribution(f, measure_v=False, capacity=capacity)
    max_abs_difference = float((measured - unmeasured).abs().max().item())
    return EquivalenceResult(max_abs_difference=max_abs_difference,
                             passed=max_abs_difference <= tolerance)


@dataclass(frozen=True)
class DistilledOutcome:
    f_value:       int                   # observed value of register v
    probability:   float
    support:       Tuple[int, ...]       # arguments with non-zero amplitude in register a
    probabilities: Tuple[float, ...]     # |amplitude|^2 on each element of the support
    passed:        bool


@dataclass(frozen=True)
class DistillationResult:
    r:        int
    passed:   bool
    outcomes: List[DistilledOutcome] = field(default_factory=list)

    @property
    def failures(self) -> List[DistilledOutcome]:
        return [o for o in self.outcomes if not o.passed]


def distillation_check(f: SimonFunction, tolerance: float = DEFAULT_TOLERANCE, capacity: Union[int, None] = None) -> DistillationResult:
    """Check that every outcome of register :math:`v` distils a colliding pair.

    For each value :math:`\\bar{f}` observed with non-zero probability, the
    post-measurement state of register :math:`a` must be supported exactly on
    :math:`\\{ \\bar{x}, \\bar{x} \\oplus r \\}`, with probability
    :math:`1/2 \\pm` ``tolerance`` on each element, and both arguments must
    map to :math:`\\bar{f}`.
    """
    r = f.shift.r if f.shift is not UNKNOWN else verify_promise(f).r

    check_capacity(f.n, capacity)
    values, probabilities, amplitudes = conditional_columns(f)
    conditionals = amplitudes.abs().pow(2)

    outcomes = []
    for j, f_value in enumerate(values.tolist()):
        column = conditionals[:, j]
        support = tuple(torch.nonzero(column > 0.0).flatten().tolist())
        support_probabilities = tuple(float(column[x].item()) for x in support)

        passed = (len(support) == 2) \
                 and (support[0] ^ support[1] == r) \
                 and all(abs(p - 0.5) <= tolerance for p in support_probabilities) \
                 and all(f.table[x] == f_value for x in support)

        outcomes.append(DistilledOutcome(f_value=f_value,
                                         probability=float(probabilities[j].item()),
                                         support=support,
                                         probabilities=support_probabilities,
                                         passed=passed))

    return DistillationResult(r=r, passed=all(o.passed for o in outcomes), outcomes=outcomes)

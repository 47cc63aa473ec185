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

"""One round of Simon's algorithm.

A round prepares the parallel-computation state, optionally measures register
:math:`v` (which collapses register :math:`a` onto a pair :math:`\\{ \\bar{x},
\\bar{x} \\oplus r \\}`), applies the Hadamard transform to register :math:`a`
and measures it. The outcome :math:`z` satisfies :math:`r \\cdot z = 0`.

Each round consumes uniform draws from the generator in a fixed order: the
draw for register :math:`v` first (only when it is measured), then the draw
for register :math:`a`.

``run_round`` only touches the columns of the state that can be non-zero;
``run_round_reference`` evolves the full :math:`4^{n}` statevector and
consumes the same draws, so both return the same samples.

"""

from dataclasses import dataclass
import torch
from typing import Optional, Union

from ...statevector import Register
from ...statevector import hadamard_register, measure_register, sample_distribution, prepare_parallel_state
from ...statevector import value_distribution, collapsed_column, occupied_columns
from ...statevector.state import walsh_hadamard
from ...oracles import SimonFunction, CountingOracle
from ...gf2 import ConstraintSystem
from ...utils import check_capacity


@dataclass(frozen=True)
class RoundSample:
    z:          int            # outcome of register a after the Hadamard transform
    v_measured: bool
    v_value:    Optional[int]  # outcome of register v, when measured
    rank_after: int            # rank of the constraint system after adding z


def draw_uniform(generator: torch.Generator) -> float:
    return float(torch.rand(1, generator=generator, dtype=torch.float64).item())


def run_round(f:         Union[SimonFunction, CountingOracle],
              measure_v: bool,
              rng:       torch.Generator,
              system:    Optional[ConstraintSystem] = None,
              capacity:  Optional[int] = None) -> RoundSample:
    """Run one round and feed its outcome to ``system``.

    When no ``system`` is given, the outcome is added to a fresh one, so that
    ``rank_after`` is 1 for non-zero outcomes and 0 otherwise.

    If register :math:`v` is measured, only the surviving column of register
    :math:`a` is transformed; otherwise every occupied column (one per value
    of ``f``) is transformed and their outcome probabilities are summed.
    """
    check_capacity(f.n, capacity)
    if system is None:
        system = ConstraintSystem(f.n)

    if isinstance(f, CountingOracle):
        f = f.query_superposition()

    v_value = None
    if measure_v:
        v_value = sample_distribution(value_distribution(f), draw_uniform(rng), obj_name='run_round')
        z_distribution = walsh_hadamard(collapsed_column(f, v_value), dim=0).abs().pow(2)
    else:
        _, columns = occupied_columns(f)
        z_distribution = walsh_hadamard(columns, dim=0).abs().pow(2).sum(dim=1)

    z = sample_distribution(z_distribution, draw_uniform(rng), obj_name='run_round')
    system.add_row(z)

    return RoundSample(z=z,
                       v_measured=measure_v,
                       v_value=v_value,
                       rank_after=system.rank)


def run_round_reference(f:         Union[SimonFunction, CountingOracle],
                        measure_v: bool,
                        rng:       torch.Generator,
                        system:    Optional[ConstraintSystem] = None,
                        capacity:  Optional[int] = None) -> RoundSample:
    """``run_round`` on the full statevector."""
    if system is None:
        system = ConstraintSystem(f.n)

    state = prepare_parallel_state(f, capacity)

    v_value = None
    if measure_v:
        outcome_v = measure_register(state, Register.V, draw_uniform(rng))
        v_value = outcome_v.value
        state = outcome_v.post_state

    state = hadamard_register(state, Register.A)
    outcome_a = measure_register(state, Register.A, draw_uniform(rng))

    system.add_row(outcome_a.value)

    return RoundSample(z=outcome_a.value,
                       v_measured=measure_v,
                       v_value=v_value,
                       rank_after=system.rank)

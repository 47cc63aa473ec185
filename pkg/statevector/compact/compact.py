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

r"""Column-wise views of the parallel-computation state.

The parallel-computation state :math:`2^{-n/2} \sum_{x} | x \rangle_{a} | f(x)
\rangle_{v}` has exactly :math:`2^{n}` non-zero amplitudes out of
:math:`4^{n}`, one per row of the matrix view. The functions in this module
work on the columns of that matrix that can be non-zero (the values that
:math:`f` takes), so that a round of the algorithm costs :math:`O(n 2^{n})`
operations per occupied column instead of :math:`O(n 4^{n})`. The results
agree with the corresponding operations on ``prepare_parallel_state``.

"""

import math
import torch
from typing import Tuple

from ..state import AMPLITUDE_DTYPE, PROBABILITY_DTYPE
from ...oracles import SimonFunction
from ...utils import ArgumentError
from ...utils import simonlib_err_header


def parallel_amplitudes(f: SimonFunction) -> torch.Tensor:
    """The amplitude of each row :math:`x` of the parallel-computation state."""
    dim = 2 ** f.n
    return torch.ones(dim, dtype=AMPLITUDE_DTYPE) / math.sqrt(dim)


def value_distribution(f: SimonFunction) -> torch.Tensor:
    """The ``float64`` outcome distribution of register :math:`v`."""
    weights = parallel_amplitudes(f).abs().pow(2)
    return torch.zeros(2 ** f.n, dtype=PROBABILITY_DTYPE).index_add_(0, f.table_tensor, weights)


def collapsed_column(f: SimonFunction, value: int) -> torch.Tensor:
    """The normalised amplitudes of register :math:`a` after register
    :math:`v` has been observed in ``value``."""
    dim = 2 ** f.n
    if not (0 <= value < dim):
        raise ArgumentError(simonlib_err_header(obj_name='collapsed_column') + f"register values must lie in [0, {dim}), but received {value}.")

    preimage = f.table_tensor == value
    column = torch.zeros(dim, dtype=AMPLITUDE_DTYPE)
    column[preimage] = parallel_amplitudes(f)[preimage]

    probability = float(column.abs().pow(2).sum().item())
    if probability == 0.0:
        raise ArgumentError(simonlib_err_header(obj_name='collapsed_column') + f"value {value} has zero probability on register v.")

    return column / math.sqrt(probability)


def occupied_columns(f: SimonFunction) -> Tuple[torch.Tensor, torch.Tensor]:
    """The values taken by ``f`` (ascending) and the matching (unnormalised)
    columns of the parallel-computation state, one per value."""
    values, inverse = torch.unique(f.table_tensor, sorted=True, return_inverse=True)
    dim = 2 ** f.n
    columns = torch.zeros(dim, values.numel(), dtype=AMPLITUDE_DTYPE)
    columns[torch.arange(0, dim, dtype=torch.int64), inverse] = parallel_amplitudes(f)
    return values, columns


def conditional_columns(f: SimonFunction) -> Tuple[torch.Tensor, torch.Tensor, torch.Tensor]:
    """Collapse register :math:`v` onto each of its possible outcomes at once.

    Same contract as ``conditional_amplitudes(prepare_parallel_state(f), 'v')``.
    """
    values, columns = occupied_columns(f)
    probabilities = value_distribution(f)[values]
    amplitudes = columns / probabilities.sqrt().to(dtype=AMPLITUDE_DTYPE).unsqueeze(0)
    return values, probabilities, amplitudes

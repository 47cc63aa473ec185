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

r"""Dense statevectors over the joint basis of registers :math:`a` and :math:`v`.

All the operations in this module are pure: they return new ``StateVector``
objects and never modify their inputs. Randomness enters measurements only
through an explicit uniform draw in :math:`[0, 1)`, so that runs can be
reproduced from a seed.

"""

from __future__ import annotations

from dataclasses import dataclass
import math
import torch
from typing import Optional, Tuple, Union
import warnings

from ..layout import Register, RegisterLayout
from ..layout import RegisterSpecType, resolve_registerspec
from ...oracles import SimonFunction, CountingOracle
from ...utils import check_capacity
from ...utils import ArgumentError, DimensionError
from ...utils import simonlib_err_header, simonlib_wng_header


AMPLITUDE_DTYPE   = torch.complex128
PROBABILITY_DTYPE = torch.float64

NORMALISATION_TOLERANCE = 1e-12


class StateVector(object):
    r"""The :math:`4^{n}` amplitudes of the two-register state.

    ``amplitudes`` is a one-dimensional ``complex128`` tensor indexed by the
    joint basis index :math:`k = x 2^{n} + y`; ``matrix`` is the same data
    viewed as a :math:`2^{n} \times 2^{n}` matrix with rows indexed by the
    content :math:`x` of register :math:`a` and columns indexed by the content
    :math:`y` of register :math:`v`.
    """

    def __init__(self, layout: RegisterLayout, amplitudes: torch.Tensor):
        self._layout = layout
        self._amplitudes = amplitudes

    @classmethod
    def from_amplitudes(cls,
                        layout:     RegisterLayout,
                        amplitudes: torch.Tensor,
                        capacity:   Optional[int] = None) -> StateVector:
        """Validate user-provided amplitudes and wrap them into a state."""
        check_capacity(layout.n, capacity)

        amplitudes = torch.as_tensor(amplitudes).to(dtype=AMPLITUDE_DTYPE).flatten()
        if amplitudes.numel() != layout.dim:
            raise DimensionError(simonlib_err_header(obj_name=cls.__name__) + f"expected {layout.dim} amplitudes, but received {amplitudes.numel()}.")

        norm2 = float(amplitudes.abs().pow(2).sum().item())
        if abs(norm2 - 1.0) > NORMALISATION_TOLERANCE:
            raise ArgumentError(simonlib_err_header(obj_name=cls.__name__) + f"amplitudes must be normalised, but their squared norm is {norm2}.")

        return cls(layout, amplitudes.clone())

    @property
    def layout(self) -> RegisterLayout:
        return self._layout

    @property
    def n(self) -> int:
        return self._layout.n

    @property
    def amplitudes(self) -> torch.Tensor:
        return self._amplitudes

    @property
    def matrix(self) -> torch.Tensor:
        return self._amplitudes.view(self._layout.register_dim, self._layout.register_dim)

    @property
    def probabilities(self) -> torch.Tensor:
        return self._amplitudes.abs().pow(2)

    def norm2(self) -> float:
        return float(self.probabilities.sum().item())

    def amplitude(self, x: int, y: int) -> complex:
        return complex(self._amplitudes[self._layout.join(x, y)].item())

    def is_close(self, other: StateVector, atol: float = NORMALISATION_TOLERANCE) -> bool:
        if self._layout != other._layout:
            return False
        return bool(torch.all((self._amplitudes - other._amplitudes).abs() <= atol))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n={self.n})"


@dataclass(frozen=True)
class MeasurementOutcome:
    register:    Register
    value:       int          # the observed eigenvalue
    probability: float        # pre-measurement marginal probability of ``value``
    post_state:  StateVector


def walsh_hadamard(t: torch.Tensor, dim: int) -> torch.Tensor:
    r"""Apply :math:`H^{\otimes n}` along one dimension of a tensor.

    The size of dimension ``dim`` must be :math:`2^{n}`. The transform is
    computed with :math:`n` butterfly passes; the pass over bit :math:`j` maps
    each pair :math:`(u, w)` of entries whose indices differ only in bit
    :math:`j` to :math:`(u + w, u - w)`. The :math:`2^{-n/2}` normalisation is
    applied once at the end.
    """
    t = t.movedim(dim, 0)
    size = t.shape[0]
    rest = t.shape[1:]

    half = 1
    while half < size:
        t = t.reshape(size // (2 * half), 2, half, *rest)
        lo = t[:, 0]
        hi = t[:, 1]
        t = torch.stack((lo + hi, lo - hi), dim=1)
        half *= 2

    t = t.reshape(size, *rest) / math.sqrt(size)
    return t.movedim(0, dim).contiguous()


def zero_state(layout: RegisterLayout, capacity: Optional[int] = None) -> StateVector:
    """Create :math:`| 0 \\rangle_{a} | 0 \\rangle_{v}`."""
    check_capacity(layout.n, capacity)
    amplitudes = torch.zeros(layout.dim, dtype=AMPLITUDE_DTYPE)
    amplitudes[layout.join(0, 0)] = 1.0
    return StateVector(layout, amplitudes)


def hadamard_register(state: StateVector, register: RegisterSpecType) -> StateVector:
    register = resolve_registerspec(register)
    matrix = walsh_hadamard(state.matrix, dim=register.axis)
    return StateVector(state.layout, matrix.reshape(-1))


def apply_oracle(state: StateVector, f: Union[SimonFunction, CountingOracle]) -> StateVector:
    """Apply :math:`| x \\rangle_{a} | y \\rangle_{v} \\mapsto | x \\rangle_{a} | y \\oplus f(x) \\rangle_{v}`.

    When ``f`` is a ``CountingOracle``, the application is recorded as one
    (quantum) query.
    """
    if f.n != state.n:
        raise DimensionError(simonlib_err_header(obj_name='apply_oracle') + f"the oracle acts on {f.n}-qubit registers, but the state has {state.n}-qubit registers.")

    if isinstance(f, CountingOracle):
        f = f.query_superposition()

    # the output amplitude at (x, y) is the input amplitude at (x, y ^ f(x))
    dim = state.layout.register_dim
    rows = torch.arange(0, dim, dtype=torch.int64).unsqueeze(1)
    cols = torch.arange(0, dim, dtype=torch.int64).unsqueeze(0) ^ f.table_tensor.unsqueeze(1)
    matrix = state.matrix[rows, cols]

    return StateVector(state.layout, matrix.reshape(-1))


def marginal_distribution(state: StateVector, register: RegisterSpecType) -> torch.Tensor:
    """Return the ``float64`` outcome distribution of measuring ``register``."""
    register = resolve_registerspec(register)
    probabilities = state.matrix.abs().pow(2)
    return probabilities.sum(dim=register.other.axis)


def project_register(state: StateVector, register: RegisterSpecType, value: int) -> StateVector:
    """Collapse ``register`` onto ``value`` and renormalise."""
    register = resolve_registerspec(register)

    if not (0 <= value < state.layout.register_dim):
        raise ArgumentError(simonlib_err_header(obj_name='project_register') + f"register values must lie in [0, {state.layout.register_dim}), but received {value}.")

    matrix = torch.zeros_like(state.matrix)
    if register is Register.A:
        matrix[value, :] = state.matrix[value, :]
    else:
        matrix[:, value] = state.matrix[:, value]

    probability = float(matrix.abs().pow(2).sum().item())
    if probability == 0.0:
        raise ArgumentError(simonlib_err_header(obj_name='project_register') + f"value {value} has zero probability on register {register.value}.")

    matrix = matrix / math.sqrt(probability)
    return StateVector(state.layout, matrix.reshape(-1))


def sample_distribution(distribution: torch.Tensor, draw: float, obj_name: str = 'sample_distribution') -> int:
    """Invert the cumulative distribution of ``distribution`` at ``draw``.

    Value :math:`w` is returned exactly when :math:`\\sum_{w' < w} p(w') \\leq
    \\mathrm{draw} < \\sum_{w' \\leq w} p(w')`, so values with zero
    probability are never returned.
    """
    if not (0.0 <= draw < 1.0):
        raise ArgumentError(simonlib_err_header(obj_name=obj_name) + f"draws must lie in [0, 1), but received {draw}.")

    cdf = torch.cumsum(distribution, dim=0)
    value = int(torch.searchsorted(cdf, torch.tensor([draw], dtype=PROBABILITY_DTYPE), right=True).item())

    if value >= distribution.numel():
        # rounding left the total mass slightly below the draw
        value = int(torch.nonzero(distribution).flatten()[-1].item())
        warnings.warn(simonlib_wng_header(obj_name=obj_name) + f"draw {draw} exceeds the cumulative mass {float(cdf[-1].item())}; selecting the last value with non-zero probability.")

    return value


def measure_register(state: StateVector, register: RegisterSpecType, draw: float) -> MeasurementOutcome:
    """Measure ``register`` in the computational basis, selecting the outcome
    by inverse-CDF sampling of its marginal at ``draw``."""
    register = resolve_registerspec(register)

    marginal = marginal_distribution(state, register)
    value = sample_distribution(marginal, draw, obj_name='measure_register')

    return MeasurementOutcome(register=register,
                              value=value,
                              probability=float(marginal[value].item()),
                              post_state=project_register(state, register, value))


def conditional_amplitudes(state: StateVector, register: RegisterSpecType) -> Tuple[torch.Tensor, torch.Tensor, torch.Tensor]:
    """Collapse ``register`` onto each of its possible outcomes at once.

    Returns the outcomes with non-zero probability (ascending), their
    probabilities, and a matrix whose :math:`j`-th column holds the normalised
    amplitudes of the *other* register after observing the :math:`j`-th
    outcome. Since the measured register is left in a basis state, these
    columns fully describe the post-measurement states.
    """
    register = resolve_registerspec(register)

    marginal = marginal_distribution(state, register)
    values = torch.nonzero(marginal > 0.0).flatten()
    probabilities = marginal[values]

    matrix = state.matrix if register is Register.V else state.matrix.t()
    amplitudes = matrix[:, values] / probabilities.sqrt().to(dtype=AMPLITUDE_DTYPE).unsqueeze(0)

    return values, probabilities, amplitudes


def prepare_parallel_state(f: Union[SimonFunction, CountingOracle], capacity: Optional[int] = None) -> StateVector:
    """Reversibly compute ``f`` on all its arguments in superposition.

    The result is :math:`2^{-n/2} \\sum_{x} | x \\rangle_{a} | f(x) \\rangle_{v}`,
    i.e., ``hadamard_register`` on :math:`a` followed by ``apply_oracle``
    applied to ``zero_state``; the :math:`2^{n}` non-zero amplitudes are
    written directly.
    """
    layout = RegisterLayout(f.n)
    check_capacity(layout.n, capacity)

    if isinstance(f, CountingOracle):
        f = f.query_superposition()

    dim = layout.register_dim
    arguments = torch.arange(0, dim, dtype=torch.int64)
    amplitudes = torch.zeros(layout.dim, dtype=AMPLITUDE_DTYPE)
    amplitudes[(arguments << layout.n) | f.table_tensor] = torch.ones(dim, dtype=AMPLITUDE_DTYPE) / math.sqrt(dim)

    return StateVector(layout, amplitudes)


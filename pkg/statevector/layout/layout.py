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

r"""Describe how the two registers of Simon's algorithm share a basis.

The simulator holds two :math:`n`-qubit registers: the *argument* register
:math:`a` (qubits :math:`0, \dots, n-1`) and the *function-value* register
:math:`v` (qubits :math:`n, \dots, 2n-1`). Each joint computational basis
state :math:`| x \rangle_{a} | y \rangle_{v}` is identified by the integer

.. math::
   k = x 2^{n} + y \,,

i.e., register :math:`a` occupies the high-order bits. This convention is used
everywhere in SimonLib, including the amplitude tensors (which can be viewed as
:math:`2^{n} \times 2^{n}` matrices whose rows are indexed by :math:`x` and
whose columns are indexed by :math:`y`) and the files written to disk.

"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from ...utils import ArgumentError
from ...utils import simonlib_err_header


class Register(Enum):
    A = 'a'
    V = 'v'

    @property
    def axis(self) -> int:
        """The axis indexing this register in the matrix view of a state."""
        return 0 if self is Register.A else 1

    @property
    def other(self) -> 'Register':
        return Register.V if self is Register.A else Register.A


@dataclass(frozen=True)
class RegisterLayout:

    n: int  # number of qubits per register

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"requires registers of at least one qubit, but received n = {self.n}.")

    @property
    def register_a(self) -> range:
        return range(0, self.n)

    @property
    def register_v(self) -> range:
        return range(self.n, 2 * self.n)

    @property
    def n_qubits(self) -> int:
        return 2 * self.n

    @property
    def register_dim(self) -> int:
        return 2 ** self.n

    @property
    def dim(self) -> int:
        return 4 ** self.n

    def join(self, x: int, y: int) -> int:
        """Map the register components to the joint basis index."""
        if not (0 <= x < self.register_dim and 0 <= y < self.register_dim):
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"register components must lie in [0, {self.register_dim}), but received ({x}, {y}).")
        return (x << self.n) | y

    def split(self, k: int) -> Tuple[int, int]:
        """Map the joint basis index to the register components."""
        if not (0 <= k < self.dim):
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"joint basis indices must lie in [0, {self.dim}), but received {k}.")
        return k >> self.n, k & (self.register_dim - 1)


RegisterSpecType = Union[Register, str]


def resolve_registerspec(registerspec: RegisterSpecType) -> Register:
    """Canonicalise register specifications.

    Registers can be specified either as ``Register`` members or as their
    (case-insensitive) names, ``'a'`` and ``'v'``.
    """
    if isinstance(registerspec, Register):
        return registerspec

    elif isinstance(registerspec, str):
        try:
            return Register(registerspec.lower())
        except ValueError:
            raise ValueError(simonlib_err_header() + f"unsupported Register string specification: {registerspec}.")

    else:
        raise TypeError(simonlib_err_header() + f"unsupported Register specification type: {registerspec.__class__.__name__}.")

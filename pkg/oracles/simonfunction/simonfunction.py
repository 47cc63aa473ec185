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

r"""Functions satisfying the promise of Simon's (simplified) problem.

A function :math:`f \,:\, B^{n} \to B^{n}` satisfies the promise if there is
a non-zero hidden shift :math:`r` such that

.. math::
   f(x) = f(x') \iff x' \in \{ x, x \oplus r \} \,.

Each argument has exactly one collision partner, and the partners are
displaced by :math:`r`; the arguments are therefore partitioned into
:math:`2^{n-1}` cosets :math:`\{ x, x \oplus r \}`, each mapped to a distinct
value. The pairing is the bitwise XOR displacement, since it is the structure
for which the outcome :math:`z` of the final Hadamard-then-measure step
satisfies :math:`r \cdot z = 0` (mod 2). Arithmetic spacing
:math:`|x - x'| = r` is not supported.

Functions are represented by their explicit truth tables.

"""

from __future__ import annotations

from dataclasses import dataclass
import torch
from typing import Sequence, Tuple, Union

from ...utils import UnknownType, UNKNOWN
from ...utils import ArgumentError, InvalidShiftError, PromiseViolationError
from ...utils import simonlib_err_header


@dataclass(frozen=True)
class HiddenShift:

    r: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"requires registers of at least one qubit, but received n = {self.n}.")
        if self.r == 0:
            raise InvalidShiftError(simonlib_err_header(obj_name=self.__class__.__name__) + "the hidden shift must be non-zero.")
        if not (0 < self.r < 2 ** self.n):
            raise InvalidShiftError(simonlib_err_header(obj_name=self.__class__.__name__) + f"the hidden shift must lie in [1, {2 ** self.n}), but {self.r} was specified.")

    def to_bits(self) -> str:
        return format(self.r, f'0{self.n}b')


ShiftSpecType = Union[HiddenShift, int]


def resolve_shiftspec(shiftspec: ShiftSpecType, n: int) -> HiddenShift:
    if isinstance(shiftspec, HiddenShift):
        if shiftspec.n != n:
            raise ArgumentError(simonlib_err_header() + f"expected a shift over {n} bits, but received one over {shiftspec.n} bits.")
        return shiftspec
    return HiddenShift(int(shiftspec), n)


class SimonFunction(object):
    """The truth table of a function :math:`B^{n} \\to B^{n}`.

    Tables are immutable; the promise is not enforced at construction time
    (use ``verify_promise``), so that malformed functions can be represented
    and rejected explicitly.
    """

    def __init__(self,
                 n:     int,
                 table: Sequence[int],
                 shift: Union[HiddenShift, UnknownType] = UNKNOWN):

        if n < 1:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"requires registers of at least one qubit, but received n = {n}.")

        table = tuple(int(value) for value in table)
        if len(table) != 2 ** n:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"expected a table with {2 ** n} entries, but received {len(table)}.")

        out_of_range = [x for x, value in enumerate(table) if not (0 <= value < 2 ** n)]
        if len(out_of_range) > 0:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"table values must be {n}-bit strings, but the values at the following arguments are not: {out_of_range[:8]}.")

        if shift is not UNKNOWN and shift.n != n:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"the declared shift is over {shift.n} bits, but the table is over {n} bits.")

        self._n = n
        self._table = table
        self._shift = shift
        self._table_tensor = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def table(self) -> Tuple[int, ...]:
        return self._table

    @property
    def shift(self) -> Union[HiddenShift, UnknownType]:
        return self._shift

    @property
    def table_tensor(self) -> torch.Tensor:
        """The table as an ``int64`` tensor (used to permute amplitudes)."""
        if self._table_tensor is None:
            self._table_tensor = torch.tensor(self._table, dtype=torch.int64)
        return self._table_tensor

    def __len__(self) -> int:
        return len(self._table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimonFunction):
            return NotImplemented
        return (self._n == other._n) and (self._table == other._table) and (self._shift == other._shift)

    def __hash__(self) -> int:
        return hash((self._n, self._table))

    def __repr__(self) -> str:
        shift = 'unknown' if self._shift is UNKNOWN else self._shift.to_bits()
        return f"{self.__class__.__name__}(n={self._n}, shift={shift})"


def generate(n: int, r: ShiftSpecType, seed: int) -> SimonFunction:
    """Draw a random function satisfying the promise with shift ``r``.

    The cosets :math:`\\{ x, x \\oplus r \\}` are enumerated in ascending
    order of their smallest element, and are mapped to the first
    :math:`2^{n-1}` entries of a random permutation of :math:`B^{n}`; the
    resulting assignment is a uniformly random injection from cosets to
    values, and it is fully determined by ``(n, r, seed)``.
    """
    shift = resolve_shiftspec(r, n)

    generator = torch.Generator().manual_seed(seed)
    values = torch.randperm(2 ** n, generator=generator)[:2 ** (n - 1)].tolist()

    msb = 1 << (shift.r.bit_length() - 1)  # exactly one element of each coset has this bit cleared
    representatives = (x for x in range(0, 2 ** n) if not (x & msb))

    table = [0] * (2 ** n)
    for x, value in zip(representatives, values):
        table[x] = value
        table[x ^ shift.r] = value

    return SimonFunction(n, table, shift)


def random_shift(n: int, generator: torch.Generator) -> HiddenShift:
    """Draw a hidden shift uniformly from the non-zero :math:`n`-bit strings."""
    r = int(torch.randint(1, 2 ** n, (1,), generator=generator).item())
    return HiddenShift(r, n)


def reproduces_pairing(f: SimonFunction, r: int) -> bool:
    """Check that ``f(x) == f(x ^ r)`` for every argument ``x``."""
    if not (0 < r < 2 ** f.n):
        return False
    arguments = torch.arange(0, 2 ** f.n, dtype=torch.int64)
    table = f.table_tensor
    return bool(torch.all(table[arguments ^ r] == table))


def verify_promise(f: SimonFunction) -> HiddenShift:
    """Return the hidden shift of ``f``, or fail naming the first offending
    argument.

    The candidate shift is read off the collision partner of :math:`x = 0`;
    the promise then holds if and only if the candidate pairs every argument
    with an equal value and no value is taken more than twice.
    """
    table = f.table_tensor
    arguments = torch.arange(0, 2 ** f.n, dtype=torch.int64)

    partners = torch.nonzero(table == table[0]).flatten().tolist()
    if len(partners) != 2:
        kind = "has no collision partner" if len(partners) == 1 else f"collides with {len(partners) - 1} arguments"
        raise PromiseViolationError(simonlib_err_header(obj_name='verify_promise') + f"argument 0 {kind}; the promise requires exactly one.", x=0)
    r = partners[1]

    unpaired = torch.nonzero(table[arguments ^ r] != table).flatten()
    if unpaired.numel() > 0:
        x = int(unpaired[0].item())
        raise PromiseViolationError(simonlib_err_header(obj_name='verify_promise') + f"argument {x} and argument {x ^ r} take different values, so the shift {r} read at argument 0 does not pair them.", x=x)

    _, inverse, counts = torch.unique(table, return_inverse=True, return_counts=True)
    crowded = torch.nonzero(counts[inverse] != 2).flatten()
    if crowded.numel() > 0:
        x = int(crowded[0].item())
        raise PromiseViolationError(simonlib_err_header(obj_name='verify_promise') + f"argument {x} collides with {int(counts[inverse[x]].item()) - 1} arguments; the promise requires exactly one.", x=x)

    if f.shift is not UNKNOWN and f.shift.r != r:
        raise PromiseViolationError(simonlib_err_header(obj_name='verify_promise') + f"the table pairs arguments by {r}, but declares the shift {f.shift.r}.", x=0)

    return HiddenShift(r, f.n)

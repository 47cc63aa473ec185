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

r"""Linear constraints over :math:`\mathrm{GF}(2)` on the hidden shift.

Every outcome :math:`z` of the Hadamard-then-measure step satisfies
:math:`r \cdot z = 0` (mod 2). A ``ConstraintSystem`` accumulates such
outcomes as rows in echelon form and, once :math:`n - 1` independent rows are
available, the only non-zero solution of the system is :math:`r`.

Rows are stored as Python integers (bit :math:`i` is the coefficient of the
:math:`i`-th variable); each stored row is indexed by its leading bit (its
pivot), and no two stored rows share a pivot.

"""

from typing import Dict, List, Set, Tuple

from ...oracles import HiddenShift
from ...utils import BitString
from ...utils import ArgumentError, InsufficientRankError
from ...utils import simonlib_err_header


def inner_product_mod2(r: BitString, z: BitString) -> int:
    return bin(r & z).count('1') & 1


class ConstraintSystem(object):
    """An incrementally grown row-echelon basis over :math:`\\mathrm{GF}(2)`.

    Only one writer should update a system at a time.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"requires vectors of at least one bit, but received n = {n}.")
        self._n = n
        self._pivots: Dict[int, int] = {}  # leading bit -> row

    @property
    def n(self) -> int:
        return self._n

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def rows(self) -> Tuple[int, ...]:
        """The stored rows, by decreasing pivot."""
        return tuple(self._pivots[p] for p in sorted(self._pivots, reverse=True))

    def _check_vector(self, z: int) -> None:
        if not (0 <= z < 2 ** self._n):
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"vectors must lie in [0, {2 ** self._n}), but received {z}.")

    def reduce(self, z: BitString) -> BitString:
        """Return the residue of ``z`` against the stored rows."""
        self._check_vector(z)
        while z != 0:
            pivot = z.bit_length() - 1
            if pivot not in self._pivots:
                break
            z ^= self._pivots[pivot]
        return z

    def add_row(self, z: BitString) -> bool:
        """Add ``z`` to the system; return whether the rank increased."""
        residue = self.reduce(z)
        if residue == 0:
            return False
        self._pivots[residue.bit_length() - 1] = residue
        return True

    def _reduced_rows(self) -> Dict[int, int]:
        """Eliminate every pivot bit from all the rows but its own."""
        reduced = dict(self._pivots)
        for pivot in sorted(reduced):  # lower pivots first
            row = reduced[pivot]
            for other in reduced:
                if other != pivot and (reduced[other] >> pivot) & 1:
                    reduced[other] ^= row
        return reduced

    def null_space_basis(self) -> List[BitString]:
        """One basis vector per free variable.

        In reduced echelon form, row :math:`p` reads :math:`v_{p} =
        \\sum_{j \\text{ free}} c_{pj} v_{j}`; setting one free variable to one
        and the others to zero determines all the pivot variables.
        """
        reduced = self._reduced_rows()
        basis = []
        for free in (j for j in range(0, self._n) if j not in reduced):
            v = 1 << free
            for pivot, row in reduced.items():
                if (row >> free) & 1:
                    v |= 1 << pivot
            basis.append(v)
        return basis

    def null_space_nonzero(self) -> Set[int]:
        span = {0}
        for v in self.null_space_basis():
            span |= {s ^ v for s in span}
        span.discard(0)
        return span

    def solve_hidden_shift(self) -> HiddenShift:
        if self.rank < self._n - 1:
            raise InsufficientRankError(simonlib_err_header(obj_name=self.__class__.__name__) + f"the system has rank {self.rank}, but rank {self._n - 1} is needed to identify the shift; gather more samples.")

        solutions = self.null_space_nonzero()
        if len(solutions) == 0:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"the system has full rank {self._n}, so no non-zero shift satisfies it; some rows were not sampled from a function satisfying the promise.")

        return HiddenShift(solutions.pop(), self._n)


def add_row(system: ConstraintSystem, z: int) -> bool:
    return system.add_row(z)


def null_space_nonzero(system: ConstraintSystem) -> Set[int]:
    return system.null_space_nonzero()


def solve_hidden_shift(system: ConstraintSystem) -> HiddenShift:
    return system.solve_hidden_shift()

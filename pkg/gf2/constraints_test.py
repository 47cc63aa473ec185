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

import itertools
import torch
import unittest

from .constraints import ConstraintSystem, inner_product_mod2
from .constraints import add_row, null_space_nonzero, solve_hidden_shift
from ..utils import ArgumentError, InsufficientRankError


def _brute_force_null_space(n: int, rows) -> set:
    return {v for v in range(1, 2 ** n) if all(inner_product_mod2(v, z) == 0 for z in rows)}


class ConstraintSystemTest(unittest.TestCase):

    def test_inner_product(self):
        self.assertEqual(inner_product_mod2(3, 3), 0)
        self.assertEqual(inner_product_mod2(3, 1), 1)
        self.assertEqual(inner_product_mod2(5, 0), 0)

    def test_add_row(self):
        system = ConstraintSystem(3)
        self.assertTrue(add_row(system, 6))
        self.assertTrue(add_row(system, 3))
        self.assertFalse(add_row(system, 5))  # 6 ^ 3
        self.assertFalse(add_row(system, 0))
        self.assertEqual(system.rank, 2)
        self.assertRaises(ArgumentError, lambda: system.add_row(8))

    def test_null_space(self):
        system = ConstraintSystem(3)
        system.add_row(6)
        system.add_row(3)
        self.assertEqual(null_space_nonzero(system), {7})
        self.assertEqual(solve_hidden_shift(system).r, 7)

    def test_null_space_exhaustive(self):
        # every pair of 3-bit rows
        for rows in itertools.product(range(0, 8), repeat=2):
            system = ConstraintSystem(3)
            for z in rows:
                system.add_row(z)
            self.assertEqual(system.null_space_nonzero(), _brute_force_null_space(3, rows))
            self.assertEqual(len(system.null_space_basis()), 3 - system.rank)

    def test_insufficient_rank(self):
        system = ConstraintSystem(3)
        system.add_row(6)
        self.assertRaises(InsufficientRankError, lambda: system.solve_hidden_shift())
        self.assertTrue(issubclass(InsufficientRankError, RuntimeError))

    def test_full_rank(self):
        system = ConstraintSystem(2)
        system.add_row(1)
        system.add_row(2)
        self.assertEqual(system.null_space_nonzero(), set())
        self.assertRaises(ArgumentError, lambda: system.solve_hidden_shift())

    def test_one_bit(self):
        # the empty system already identifies the only non-zero shift
        self.assertEqual(ConstraintSystem(1).solve_hidden_shift().r, 1)

    def test_random_systems(self):
        generator = torch.Generator().manual_seed(0)
        for i in range(0, 100):
            n = i % 12 + 1
            num_rows = int(torch.randint(0, n + 3, (1,), generator=generator).item())
            rows = torch.randint(0, 2 ** n, (num_rows,), generator=generator).tolist()
            system = ConstraintSystem(n)
            for z in rows:
                system.add_row(z)
            expected = _brute_force_null_space(n, rows)
            self.assertEqual(system.null_space_nonzero(), expected)
            self.assertEqual(len(expected), 2 ** (n - system.rank) - 1)
            if system.rank == n - 1:
                self.assertEqual({system.solve_hidden_shift().r}, expected)

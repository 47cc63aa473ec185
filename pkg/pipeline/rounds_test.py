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

import torch
import unittest

from .rounds import run_round, run_round_reference
from .analysis import exact_z_distribution
from ..gf2 import ConstraintSystem, inner_product_mod2
from ..oracles import SimonFunction, CountingOracle, generate, random_shift
from ..utils import CapacityError


_F = SimonFunction(2, [1, 2, 2, 1])
_R = 3

_SEEDS = range(0, 20)


class RunRoundTest(unittest.TestCase):

    def test_outcomes_are_orthogonal_to_the_shift(self):
        f = generate(4, 11, 0)
        for measure_v in (True, False):
            rng = torch.Generator().manual_seed(0)
            for _ in _SEEDS:
                sample = run_round(f, measure_v, rng)
                self.assertEqual(inner_product_mod2(11, sample.z), 0)
                self.assertEqual(sample.v_measured, measure_v)

    def test_example(self):
        for seed in _SEEDS:
            sample = run_round(_F, True, torch.Generator().manual_seed(seed))
            self.assertIn(sample.z, (0, _R))
            self.assertIn(sample.v_value, (1, 2))
            self.assertEqual(sample.rank_after, 0 if sample.z == 0 else 1)

    def test_unmeasured(self):
        sample = run_round(_F, False, torch.Generator().manual_seed(0))
        self.assertIsNone(sample.v_value)

    def test_determinism(self):
        f = generate(3, 5, 1)
        a = [run_round(f, True, g) for g in [torch.Generator().manual_seed(9)] for _ in range(0, 5)]
        b = [run_round(f, True, g) for g in [torch.Generator().manual_seed(9)] for _ in range(0, 5)]
        self.assertEqual([s.z for s in a], [s.z for s in b])

    def test_shared_system(self):
        system = ConstraintSystem(2)
        oracle = CountingOracle(_F)
        rng = torch.Generator().manual_seed(3)
        for _ in range(0, 4):
            sample = run_round(oracle, True, rng, system=system)
            self.assertEqual(sample.rank_after, system.rank)
        self.assertEqual(oracle.quantum_queries, 4)
        self.assertEqual(oracle.classical_queries, 0)

    def test_capacity(self):
        self.assertRaises(CapacityError, lambda: run_round(_F, True, torch.Generator().manual_seed(0), capacity=1))


class ReferenceRoundTest(unittest.TestCase):

    def test_same_samples(self):
        generator = torch.Generator().manual_seed(0)
        for n in range(1, 7):
            f = generate(n, random_shift(n, generator), seed=n)
            for measure_v in (True, False):
                fast = torch.Generator().manual_seed(100 + n)
                dense = torch.Generator().manual_seed(100 + n)
                for _ in range(0, 25):
                    a = run_round(f, measure_v, fast)
                    b = run_round_reference(f, measure_v, dense)
                    self.assertEqual((a.z, a.v_value), (b.z, b.v_value))

    def test_reference_counts_queries(self):
        oracle = CountingOracle(_F)
        run_round_reference(oracle, False, torch.Generator().manual_seed(0))
        self.assertEqual(oracle.quantum_queries, 1)


class OutcomeStatisticsTest(unittest.TestCase):

    def test_frequencies(self):
        # every frequency lies within three standard errors of the exact probability
        num_rounds = 10 ** 4
        f = generate(3, 5, 0)
        for measure_v in (True, False):
            rng = torch.Generator().manual_seed(11)
            counts = torch.zeros(8, dtype=torch.float64)
            for _ in range(0, num_rounds):
                counts[run_round(f, measure_v, rng).z] += 1
            frequencies = counts / num_rounds
            expected = exact_z_distribution(f, measure_v)
            standard_errors = (expected * (1 - expected) / num_rounds).sqrt()
            self.assertTrue(torch.all((frequencies - expected).abs() <= 3 * standard_errors + 1e-12))

    def test_outcomes_never_violate_the_constraint(self):
        generator = torch.Generator().manual_seed(5)
        for n in range(2, 11):
            for i in range(0, 20):
                shift = random_shift(n, generator)
                f = generate(n, shift, seed=i)
                rng = torch.Generator().manual_seed(1000 * n + i)
                measure_v = (i % 4 != 0)
                for _ in range(0, 500):
                    self.assertEqual(inner_product_mod2(shift.r, run_round(f, measure_v, rng).z), 0)

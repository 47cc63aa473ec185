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

from .layout import Register
from .state import marginal_distribution, project_register, conditional_amplitudes, prepare_parallel_state
from .compact import parallel_amplitudes, value_distribution, collapsed_column
from .compact import occupied_columns, conditional_columns
from ..oracles import HiddenShift, SimonFunction, generate, random_shift
from ..utils import ArgumentError


_F = SimonFunction(2, [1, 2, 2, 1], HiddenShift(3, 2))

_ATOL = 1e-12


def _instances(max_n: int, seed: int):
    generator = torch.Generator().manual_seed(seed)
    for n in range(1, max_n + 1):
        for i in range(0, 3):
            yield generate(n, random_shift(n, generator), seed=i)


class CompactColumnsTest(unittest.TestCase):

    def test_example(self):
        self.assertTrue(torch.allclose(parallel_amplitudes(_F).real, torch.full((4,), 0.5, dtype=torch.float64), atol=_ATOL))
        self.assertEqual(value_distribution(_F).tolist(), [0.0, 0.5, 0.5, 0.0])

        values, columns = occupied_columns(_F)
        self.assertEqual(values.tolist(), [1, 2])
        self.assertEqual(tuple(columns.shape), (4, 2))
        self.assertEqual(torch.nonzero(columns[:, 0]).flatten().tolist(), [0, 3])
        self.assertEqual(torch.nonzero(columns[:, 1]).flatten().tolist(), [1, 2])

    def test_collapsed_column(self):
        self.assertEqual(torch.nonzero(collapsed_column(_F, 2)).flatten().tolist(), [1, 2])
        self.assertRaises(ArgumentError, lambda: collapsed_column(_F, 0))  # zero probability
        self.assertRaises(ArgumentError, lambda: collapsed_column(_F, 4))

    def test_agrees_with_statevector(self):
        for f in _instances(max_n=6, seed=0):
            state = prepare_parallel_state(f)
            distribution = value_distribution(f)
            self.assertTrue(torch.equal(distribution, marginal_distribution(state, Register.V)))

            for value in torch.nonzero(distribution).flatten().tolist():
                projected = project_register(state, Register.V, value).matrix[:, value]
                self.assertTrue(torch.equal(collapsed_column(f, value), projected))

            values, probabilities, amplitudes = conditional_columns(f)
            reference = conditional_amplitudes(state, Register.V)
            self.assertTrue(torch.equal(values, reference[0]))
            self.assertTrue(torch.allclose(probabilities, reference[1], atol=_ATOL))
            self.assertTrue(torch.allclose(amplitudes, reference[2], atol=_ATOL))

    def test_columns_are_normalised(self):
        for f in _instances(max_n=8, seed=1):
            _, _, amplitudes = conditional_columns(f)
            self.assertEqual(amplitudes.shape[1], 2 ** (f.n - 1))
            norms = amplitudes.abs().pow(2).sum(dim=0)
            self.assertTrue(torch.allclose(norms, torch.ones_like(norms), atol=_ATOL))

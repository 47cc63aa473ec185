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

import math
import torch
import unittest

from .layout import Register, RegisterLayout
from .state import StateVector
from .state import walsh_hadamard, zero_state, hadamard_register, apply_oracle
from .state import marginal_distribution, project_register, measure_register
from .state import conditional_amplitudes, prepare_parallel_state
from ..oracles import HiddenShift, SimonFunction, CountingOracle, generate, random_shift
from ..utils import ArgumentError, CapacityError, DimensionError


_N = 2
_TABLE = [1, 2, 2, 1]  # hidden shift 11
_F = SimonFunction(_N, _TABLE, HiddenShift(3, _N))

_ATOL = 1e-12


class StateVectorTest(unittest.TestCase):

    def test_zero_state(self):
        state = zero_state(RegisterLayout(_N))
        self.assertEqual(state.amplitudes.numel(), 16)
        self.assertEqual(state.amplitude(0, 0), 1.0)
        self.assertAlmostEqual(state.norm2(), 1.0, delta=_ATOL)

    def test_capacity(self):
        self.assertRaises(CapacityError, lambda: zero_state(RegisterLayout(3), capacity=2))

    def test_from_amplitudes(self):
        layout = RegisterLayout(1)
        state = StateVector.from_amplitudes(layout, torch.tensor([0.0, 1.0, 0.0, 0.0]))
        self.assertEqual(state.amplitude(0, 1), 1.0)
        self.assertRaises(DimensionError, lambda: StateVector.from_amplitudes(layout, torch.ones(3) / math.sqrt(3)))
        self.assertRaises(ArgumentError, lambda: StateVector.from_amplitudes(layout, torch.ones(4)))

    def test_walsh_hadamard(self):
        # compare against the explicit matrix (-1)^{popcount(i & j)} / 2^{n/2}
        n = 3
        size = 2 ** n
        h = torch.tensor([[(-1) ** bin(i & j).count('1') for j in range(size)] for i in range(size)], dtype=torch.float64) / math.sqrt(size)
        t = torch.randn(size, 5, dtype=torch.float64, generator=torch.Generator().manual_seed(0))
        self.assertTrue(torch.allclose(walsh_hadamard(t, dim=0), h @ t, atol=_ATOL))
        self.assertTrue(torch.allclose(walsh_hadamard(t.t(), dim=1), (h @ t).t(), atol=_ATOL))
        self.assertTrue(torch.allclose(walsh_hadamard(walsh_hadamard(t, dim=0), dim=0), t, atol=_ATOL))

    def test_hadamard_is_involution(self):
        state = prepare_parallel_state(_F)
        for register in (Register.A, Register.V):
            twice = hadamard_register(hadamard_register(state, register), register)
            self.assertTrue(twice.is_close(state))

    def test_parallel_state(self):
        state = prepare_parallel_state(_F)
        for x in range(0, 4):
            for y in range(0, 4):
                expected = 0.5 if _TABLE[x] == y else 0.0
                self.assertAlmostEqual(state.amplitude(x, y).real, expected, delta=_ATOL)

    def test_apply_oracle(self):
        state = prepare_parallel_state(_F)
        self.assertTrue(apply_oracle(apply_oracle(state, _F), _F).is_close(hadamard_register(zero_state(RegisterLayout(_N)), 'a')))
        other = SimonFunction(1, [0, 0])
        self.assertRaises(DimensionError, lambda: apply_oracle(state, other))

    def test_apply_oracle_counts_queries(self):
        oracle = CountingOracle(_F)
        prepare_parallel_state(oracle)
        self.assertEqual(oracle.quantum_queries, 1)
        self.assertEqual(oracle.classical_queries, 0)

    def test_marginals(self):
        state = prepare_parallel_state(_F)
        self.assertTrue(torch.allclose(marginal_distribution(state, Register.V), torch.tensor([0.0, 0.5, 0.5, 0.0], dtype=torch.float64), atol=_ATOL))
        self.assertTrue(torch.allclose(marginal_distribution(state, Register.A), torch.full((4,), 0.25, dtype=torch.float64), atol=_ATOL))


class MeasurementTest(unittest.TestCase):

    def test_inverse_cdf(self):
        state = prepare_parallel_state(_F)
        self.assertEqual(measure_register(state, Register.V, 0.25).value, 1)
        self.assertEqual(measure_register(state, Register.V, 0.75).value, 2)
        self.assertEqual(measure_register(state, Register.V, 0.0).value, 1)  # zero-probability values are never selected

    def test_post_state(self):
        state = prepare_parallel_state(_F)
        outcome = measure_register(state, Register.V, 0.25)
        self.assertAlmostEqual(outcome.probability, 0.5, delta=_ATOL)
        post = outcome.post_state
        self.assertAlmostEqual(post.norm2(), 1.0, delta=_ATOL)
        self.assertAlmostEqual(post.amplitude(0, 1).real, 1 / math.sqrt(2), delta=_ATOL)
        self.assertAlmostEqual(post.amplitude(3, 1).real, 1 / math.sqrt(2), delta=_ATOL)
        self.assertAlmostEqual(abs(post.amplitude(1, 2)), 0.0, delta=_ATOL)

    def test_hadamard_after_collapse(self):
        state = measure_register(prepare_parallel_state(_F), Register.V, 0.25).post_state
        state = hadamard_register(state, Register.A)
        self.assertTrue(torch.allclose(marginal_distribution(state, Register.A), torch.tensor([0.5, 0.0, 0.0, 0.5], dtype=torch.float64), atol=_ATOL))

    def test_invalid_draws(self):
        state = prepare_parallel_state(_F)
        self.assertRaises(ArgumentError, lambda: measure_register(state, Register.V, 1.0))
        self.assertRaises(ArgumentError, lambda: measure_register(state, Register.V, -0.1))

    def test_projection(self):
        state = prepare_parallel_state(_F)
        self.assertRaises(ArgumentError, lambda: project_register(state, Register.V, 0))  # zero probability
        self.assertRaises(ArgumentError, lambda: project_register(state, Register.V, 4))
        self.assertTrue(project_register(state, 'v', 2).is_close(measure_register(state, 'v', 0.75).post_state))

    def test_conditional_amplitudes(self):
        state = prepare_parallel_state(_F)
        values, probabilities, amplitudes = conditional_amplitudes(state, Register.V)
        self.assertEqual(values.tolist(), [1, 2])
        self.assertTrue(torch.allclose(probabilities, torch.tensor([0.5, 0.5], dtype=torch.float64), atol=_ATOL))
        self.assertEqual(tuple(amplitudes.shape), (4, 2))
        for j, value in enumerate(values.tolist()):
            self.assertTrue(torch.allclose(amplitudes[:, j], project_register(state, Register.V, value).matrix[:, value], atol=_ATOL))


def _random_state(n: int, generator: torch.Generator) -> StateVector:
    layout = RegisterLayout(n)
    amplitudes = torch.randn(layout.dim, dtype=torch.complex128, generator=generator)
    amplitudes = amplitudes / amplitudes.abs().pow(2).sum().sqrt()
    return StateVector.from_amplitudes(layout, amplitudes)


class RandomInvolutionTest(unittest.TestCase):

    _NUM_STATES = 100
    _MAX_N = 8

    def test_hadamard(self):
        generator = torch.Generator().manual_seed(0)
        for i in range(0, self._NUM_STATES):
            state = _random_state(i % self._MAX_N + 1, generator)
            for register in (Register.A, Register.V):
                twice = hadamard_register(hadamard_register(state, register), register)
                self.assertTrue(twice.is_close(state))

    def test_oracle(self):
        generator = torch.Generator().manual_seed(1)
        for i in range(0, self._NUM_STATES):
            n = i % self._MAX_N + 1
            state = _random_state(n, generator)
            f = generate(n, random_shift(n, generator), seed=i)
            once = apply_oracle(state, f)
            self.assertAlmostEqual(once.norm2(), 1.0, delta=1e-9)
            self.assertTrue(apply_oracle(once, f).is_close(state))


class ParallelStateTest(unittest.TestCase):

    def test_matches_circuit(self):
        generator = torch.Generator().manual_seed(2)
        for n in range(1, 7):
            f = generate(n, random_shift(n, generator), seed=n)
            circuit = apply_oracle(hadamard_register(zero_state(RegisterLayout(n)), Register.A), f)
            self.assertTrue(prepare_parallel_state(f).is_close(circuit))

    def test_capacity(self):
        self.assertRaises(CapacityError, lambda: prepare_parallel_state(_F, capacity=1))

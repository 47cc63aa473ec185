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

import unittest

from .counting import CountingOracle, evaluate
from .simonfunction import SimonFunction
from ..utils import ArgumentError


_F = SimonFunction(2, [1, 2, 2, 1])


class CountingOracleTest(unittest.TestCase):

    def test_counts(self):
        oracle = CountingOracle(_F)
        self.assertEqual(oracle.queries, 0)
        self.assertEqual(evaluate(oracle, 1), 2)
        self.assertEqual(oracle.evaluate(3), 1)
        self.assertIs(oracle.query_superposition(), _F)
        self.assertEqual(oracle.classical_queries, 2)
        self.assertEqual(oracle.quantum_queries, 1)
        self.assertEqual(oracle.queries, 2)  # quantum queries are counted separately
        oracle.reset()
        self.assertEqual(oracle.queries, 0)

    def test_out_of_range(self):
        oracle = CountingOracle(_F)
        self.assertRaises(ArgumentError, lambda: oracle.evaluate(4))
        self.assertEqual(oracle.queries, 0)  # rejected queries are not charged

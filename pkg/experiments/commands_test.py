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

import os
import tempfile
import unittest
import warnings

from .config import ExperimentConfig
from .commands import cmd_gen, cmd_simon, cmd_classical, cmd_verify, cmd_compare, cmd_sweep
from .reports import parse_cost_table, read_json_document
from ..oracles import HiddenShift, SimonFunction, dump_table, load_table, verify_promise
from ..pipeline import RunReport
from ..utils import ArgumentError, BudgetExhaustedError, CapacityError, InvalidShiftError, PromiseViolationError


_EXAMPLE = SimonFunction(2, [1, 2, 2, 1], HiddenShift(3, 2))
_INJECTIVE = SimonFunction(2, [0, 1, 2, 3])


class _TemporaryDirectoryTest(unittest.TestCase):

    def setUp(self):
        self._tmpdir = tempfile.TemporaryDirectory()
        self.tmpdir = self._tmpdir.name

    def tearDown(self):
        self._tmpdir.cleanup()

    def path(self, name: str) -> str:
        return os.path.join(self.tmpdir, name)

    def dump(self, f: SimonFunction, name: str) -> str:
        path = self.path(name)
        dump_table(f, path)
        return path


class GenTest(_TemporaryDirectoryTest):

    def test_gen(self):
        path = self.path('f.json')
        f = cmd_gen(2, 7, out_path=path)
        self.assertEqual(load_table(path), f)
        self.assertNotEqual(verify_promise(f).r, 0)

    def test_gen_is_deterministic(self):
        cmd_gen(2, 7, out_path=self.path('a.json'))
        cmd_gen(2, 7, out_path=self.path('b.json'))
        with open(self.path('a.json'), 'rb') as a, open(self.path('b.json'), 'rb') as b:
            self.assertEqual(a.read(), b.read())

    def test_gen_with_shift(self):
        self.assertEqual(cmd_gen(5, 0, r=0x13).shift.r, 0x13)
        self.assertRaises(InvalidShiftError, lambda: cmd_gen(2, 7, r=0))

    def test_gen_rejects_invalid_widths(self):
        self.assertRaises(ArgumentError, lambda: cmd_gen(0, 7))
        self.assertRaises(CapacityError, lambda: cmd_gen(40, 7))
        self.assertRaises(CapacityError, lambda: cmd_gen(3, 7, capacity=2))
        self.assertEqual(cmd_gen(3, 7, capacity=3).n, 3)


class SimonTest(_TemporaryDirectoryTest):

    def test_example(self):
        path = self.dump(_EXAMPLE, 'f.json')
        for seed in range(0, 5):
            report = cmd_simon(path, seed, report_path=self.path('report.json'))
            self.assertTrue(report.success)
            self.assertEqual(report.recovered, verify_promise(_EXAMPLE))
            self.assertEqual(RunReport.from_dict(read_json_document(self.path('report.json'))), report)

    def test_budget_exhausted_writes_partial_report(self):
        path = self.dump(cmd_gen(3, 1), 'f.json')
        report_path = self.path('report.json')
        self.assertRaises(BudgetExhaustedError, lambda: cmd_simon(path, 0, max_rounds=1, report_path=report_path))
        self.assertFalse(read_json_document(report_path)['success'])

    def test_promise_violation(self):
        path = self.dump(_INJECTIVE, 'f.json')
        self.assertRaises(PromiseViolationError, lambda: cmd_simon(path, 0))

    def test_capacity(self):
        path = self.dump(cmd_gen(3, 1), 'f.json')
        self.assertRaises(CapacityError, lambda: cmd_simon(path, 0, capacity=2))

    def test_reported_seed(self):
        path = self.dump(_EXAMPLE, 'f.json')
        self.assertEqual(cmd_simon(path, -1).seed, -1)
        self.assertEqual(cmd_simon(path, 3).seed, 3)


class ClassicalTest(_TemporaryDirectoryTest):

    def test_scan(self):
        result = cmd_classical(self.dump(_EXAMPLE, 'f.json'), 'scan', report_path=self.path('result.json'))
        self.assertEqual(result.queries, 3)
        self.assertEqual(read_json_document(self.path('result.json'))['queries'], 3)

    def test_birthday(self):
        path = self.dump(_EXAMPLE, 'f.json')
        for seed in range(0, 5):
            self.assertLessEqual(cmd_classical(path, 'birthday', seed=seed).queries, 3)

    def test_unknown_strategy(self):
        self.assertRaises(ValueError, lambda: cmd_classical(self.dump(_EXAMPLE, 'f.json'), 'grover'))


class VerifyTest(_TemporaryDirectoryTest):

    def test_example(self):
        summary = cmd_verify(self.dump(_EXAMPLE, 'f.json'), report_path=self.path('summary.json'))
        self.assertTrue(summary.passed)
        self.assertEqual(summary.r, HiddenShift(3, 2))
        self.assertTrue(read_json_document(self.path('summary.json'))['passed'])
        self.assertEqual(len(summary.checks()), 3)

    def test_injective(self):
        summary = cmd_verify(self.dump(_INJECTIVE, 'f.json'))
        self.assertFalse(summary.passed)
        self.assertFalse(summary.promise_passed)
        self.assertIsNone(summary.equivalence)
        self.assertEqual(summary.to_dict()['distillation'], None)

    def test_zero_tolerance_warns(self):
        path = self.dump(_EXAMPLE, 'f.json')
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            cmd_verify(path, tolerance=0.0)
        self.assertTrue(any('tolerance' in str(w.message) for w in caught))

    def test_capacity(self):
        path = self.dump(cmd_gen(3, 1), 'f.json')
        self.assertRaises(CapacityError, lambda: cmd_verify(path, capacity=2))


class CompareTest(_TemporaryDirectoryTest):

    def test_single_trial(self):
        reports, summary = cmd_compare(ExperimentConfig(n=4, seed=3, trials=1))
        self.assertEqual(len(reports), 1)
        self.assertEqual(summary, reports[0].to_dict())

    def test_determinism(self):
        for format_ in ('json', 'csv'):
            a = self.path(f'a.{format_}')
            b = self.path(f'b.{format_}')
            cmd_compare(ExperimentConfig(n=4, seed=11, trials=5, format=format_, output_path=a))
            cmd_compare(ExperimentConfig(n=4, seed=11, trials=5, format=format_, output_path=b))
            with open(a, 'rb') as fa, open(b, 'rb') as fb:
                self.assertEqual(fa.read(), fb.read())

    def test_formats_agree(self):
        cmd_compare(ExperimentConfig(n=3, seed=2, trials=4, birthday_repeats=3, format='json', output_path=self.path('costs.json')))
        cmd_compare(ExperimentConfig(n=3, seed=2, trials=4, birthday_repeats=3, format='csv', output_path=self.path('costs.csv')))
        with open(self.path('costs.json'), 'r') as fp:
            from_json = parse_cost_table(fp.read(), 'json')
        with open(self.path('costs.csv'), 'r') as fp:
            from_csv = parse_cost_table(fp.read(), 'csv')
        self.assertEqual(from_json, from_csv)

    def test_strategy_subset(self):
        reports, summary = cmd_compare(ExperimentConfig(n=3, trials=2, strategies=('scan',)))
        self.assertTrue(all(r.quantum_rounds is None and r.classical_birthday_queries is None for r in reports))
        self.assertIsNone(summary['quantum_success'])

    def test_scaling(self):
        # at n = 8 the quantum arm needs about n rounds, the birthday search far more queries
        reports, summary = cmd_compare(ExperimentConfig(n=8, seed=0, trials=100))
        self.assertTrue(all(r.quantum_success for r in reports))
        self.assertLessEqual(summary['quantum_rounds'], 12)
        self.assertGreaterEqual(summary['classical_birthday_queries'], 8)
        self.assertEqual(summary['printout_terms'], 256)


class SweepTest(_TemporaryDirectoryTest):

    def test_sweep(self):
        path = self.path('sweep.json')
        summaries = cmd_sweep((2, 3, 4), ExperimentConfig(n=2, trials=3, output_path=path))
        self.assertEqual([s['n'] for s in summaries], [2, 3, 4])
        self.assertEqual(len(read_json_document(path)['sweep']), 3)

    def test_sweep_validates_every_width(self):
        self.assertRaises(CapacityError, lambda: cmd_sweep((2, 5), ExperimentConfig(n=2, capacity=4)))

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

"""Instrumented access to a ``SimonFunction``.

Both arms of the benchmark pay for the function in the same currency: oracle
queries. A classical query evaluates :math:`f` at one argument; a quantum
query applies the reversible oracle :math:`| x \\rangle | y \\rangle \\mapsto
| x \\rangle | y \\oplus f(x) \\rangle` once, to a whole superposition.

"""

from ..simonfunction import SimonFunction
from ...utils import ArgumentError
from ...utils import simonlib_err_header


class CountingOracle(object):
    """Wrap a ``SimonFunction`` and count the queries issued against it.

    The counters are not protected against concurrent updates: each thread
    should own its oracle.
    """

    def __init__(self, inner: SimonFunction):
        self._inner = inner
        self._classical_queries = 0
        self._quantum_queries = 0

    @property
    def inner(self) -> SimonFunction:
        return self._inner

    @property
    def n(self) -> int:
        return self._inner.n

    @property
    def queries(self) -> int:
        """Number of calls to ``evaluate`` since construction or the last reset.

        Applications of the reversible oracle are counted separately, by
        ``quantum_queries``.
        """
        return self._classical_queries

    @property
    def classical_queries(self) -> int:
        return self._classical_queries

    @property
    def quantum_queries(self) -> int:
        return self._quantum_queries

    def evaluate(self, x: int) -> int:
        if not (0 <= x < 2 ** self.n):
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"arguments must lie in [0, {2 ** self.n}), but received {x}.")
        self._classical_queries += 1
        return self._inner.table[x]

    def query_superposition(self) -> SimonFunction:
        """Record one application of the reversible oracle and hand out the
        function to apply."""
        self._quantum_queries += 1
        return self._inner

    def reset(self) -> None:
        self._classical_queries = 0
        self._quantum_queries = 0


def evaluate(oracle: CountingOracle, x: int) -> int:
    return oracle.evaluate(x)

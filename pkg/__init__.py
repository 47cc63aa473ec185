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

"""SimonLib: a package to simulate Simon's algorithm and to benchmark it.

The SimonLib package partitions its abstractions into the following namespaces:
* the ``statevector`` sub-package implements a dense simulator of the two
  :math:`n`-qubit registers the algorithm uses (Hadamard transforms, oracle
  applications and partial measurements), together with column-wise views of
  the parallel-computation state that the rounds run on;
* the ``oracles`` sub-package implements the functions satisfying Simon's
  promise, the query-counting wrapper and the function-table file format;
* the ``gf2`` sub-package implements the linear algebra mod 2 needed to turn
  the measured outcomes into the hidden shift;
* the ``pipeline`` sub-package assembles the rounds of the algorithm, the
  recovery loop and the exact analyses of the measurement statistics;
* the ``baselines`` sub-package implements the classical collision searches
  and the cost model that compares them to the quantum arm;
* the ``experiments`` sub-package exposes all of the above as reproducible,
  file-backed commands.

There is also a ``utils`` sub-package, but since it is meant for developers I
do not include it in the list above.

"""

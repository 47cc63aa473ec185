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

"""Classical collision search against an instrumented oracle.

Without quantum measurement, finding the two arguments that share a value
means searching the function's values for a repetition. Two searchers are
provided:

* ``scan``: query :math:`x = 0, 1, 2, \\dots` and stop at the first repeated
  value; by the pigeonhole principle over the :math:`2^{n-1}` values, at most
  :math:`2^{n-1} + 1` queries are needed;
* ``birthday``: query uniformly random arguments, skipping (without querying)
  arguments already queried, and stop at the first repeated value; the median
  cost grows like :math:`2^{n/2}`.

Both return the colliding pair, which by the promise differs by the hidden
shift, together with the number of queries it took.

"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
import inspect
import torch
from typing import Any, ClassVar, Dict, Tuple, Type, Union

from ...oracles import CountingOracle
from ...utils import PromiseViolationError
from ...utils import simonlib_err_header


@dataclass(frozen=True)
class CollisionResult:
    n:        int
    x1:       int
    x2:       int
    queries:  int
    strategy: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n':        self.n,
            'x1':       self.x1,
            'x2':       self.x2,
            'queries':  self.queries,
            'strategy': self.strategy,
        }

    @classmethod
    def from_dict(cls, document: Dict[str, Any]) -> CollisionResult:
        return cls(**{k: document[k] for k in ('n', 'x1', 'x2', 'queries', 'strategy')})


def scan_collision(oracle: CountingOracle) -> CollisionResult:
    start = oracle.queries
    seen: Dict[int, int] = {}  # value -> argument

    for x in range(0, 2 ** oracle.n):
        value = oracle.evaluate(x)
        if value in seen:
            return CollisionResult(n=oracle.n, x1=seen[value], x2=x, queries=oracle.queries - start, strategy='scan')
        seen[value] = x

    raise PromiseViolationError(simonlib_err_header(obj_name='scan_collision') + f"queried all {2 ** oracle.n} arguments without finding a collision.", x=2 ** oracle.n - 1)


def birthday_collision(oracle: CountingOracle, rng: torch.Generator) -> CollisionResult:
    start = oracle.queries
    n_arguments = 2 ** oracle.n
    queried: Dict[int, int] = {}  # argument -> value
    seen: Dict[int, int] = {}     # value -> argument

    while len(queried) < n_arguments:
        x = int(torch.randint(0, n_arguments, (1,), generator=rng).item())
        if x in queried:
            continue  # membership is checked before querying, so repeats are free
        value = oracle.evaluate(x)
        if value in seen:
            return CollisionResult(n=oracle.n, x1=seen[value], x2=x, queries=oracle.queries - start, strategy='birthday')
        queried[x] = value
        seen[value] = x

    raise PromiseViolationError(simonlib_err_header(obj_name='birthday_collision') + f"queried all {n_arguments} arguments without finding a collision.", x=n_arguments - 1)


class CollisionSearcher(object):

    name: ClassVar[str] = ''
    default_kwargs: ClassVar[Dict[str, Any]] = {}

    def __init__(self):
        super().__init__()

    def search(self, oracle: CountingOracle) -> CollisionResult:
        raise NotImplementedError

    def __call__(self, oracle: CountingOracle) -> CollisionResult:
        return self.search(oracle)


class ScanCollisionSearcher(CollisionSearcher):

    name = 'scan'
    default_kwargs = {}

    def __init__(self):
        super().__init__()

    def search(self, oracle: CountingOracle) -> CollisionResult:
        return scan_collision(oracle)


class BirthdayCollisionSearcher(CollisionSearcher):

    name = 'birthday'
    default_kwargs = {'seed': 0}

    def __init__(self, seed: int):
        super().__init__()
        self._seed = seed

    @property
    def seed(self) -> int:
        return self._seed

    def search(self, oracle: CountingOracle) -> CollisionResult:
        # a fresh generator per search, so that repeated searches are reproducible
        rng = torch.Generator().manual_seed(self._seed)
        return birthday_collision(oracle, rng)


CollisionStrategies = Enum('CollisionStrategies',
                           [
                               ('SCAN',     ScanCollisionSearcher),
                               ('BIRTHDAY', BirthdayCollisionSearcher),
                           ])


CollisionStrategySpecType = Union[CollisionSearcher, Tuple[str, Dict[str, Any]], str]


def _try_get_collisionsearcher_class(strategyname: str) -> Type[CollisionSearcher]:
    try:
        return getattr(CollisionStrategies, strategyname).value
    except AttributeError:
        caller_name = inspect.getouterframes(inspect.currentframe())[1].function
        raise ValueError(simonlib_err_header(obj_name=caller_name) + f"does not support the following collision strategy: {strategyname.lower()}; supported strategies are {[s.name.lower() for s in CollisionStrategies]}.")


def resolve_tuple_collisionstrategyspec(strategyspec: Tuple[str, Dict[str, Any]]) -> CollisionSearcher:

    strategyname, user_kwargs = strategyspec
    searcher_class = _try_get_collisionsearcher_class(strategyname.upper())

    kwargs = searcher_class.default_kwargs.copy()
    kwargs.update(user_kwargs)

    supported_keys = set(searcher_class.default_kwargs.keys())
    unsupported_keys = set(kwargs.keys()).difference(supported_keys)
    if len(unsupported_keys) > 0:
        raise ValueError(simonlib_err_header() + f"{searcher_class.__name__} only supports keys {supported_keys}, but I also found these: {unsupported_keys}.")

    return searcher_class(**kwargs)


def resolve_collisionstrategyspec(strategyspec: CollisionStrategySpecType) -> CollisionSearcher:
    """Canonicalise collision search specifications.

    Searchers can be passed as ready-made ``CollisionSearcher`` objects, as
    strategy names (``'scan'``, ``'birthday'``; default arguments apply), or as
    ``(name, kwargs)`` pairs.
    """
    if isinstance(strategyspec, CollisionSearcher):
        return strategyspec
    elif isinstance(strategyspec, tuple):
        return resolve_tuple_collisionstrategyspec(strategyspec)
    elif isinstance(strategyspec, str):
        return resolve_tuple_collisionstrategyspec((strategyspec, {}))
    else:
        raise TypeError(simonlib_err_header() + f"unsupported collision strategy specification type: {strategyspec.__class__.__name__}.")

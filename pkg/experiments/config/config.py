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

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from ...utils import get_capacity_bound
from ...utils import ArgumentError, CapacityError
from ...utils import simonlib_err_header


class Arm(Enum):
    QUANTUM  = 'quantum'
    SCAN     = 'scan'
    BIRTHDAY = 'birthday'


ALL_ARMS = tuple(arm.value for arm in Arm)


class ReportFormat(Enum):
    JSON = 'json'
    CSV  = 'csv'


ReportFormatSpecType = Union[ReportFormat, str]


def resolve_reportformatspec(formatspec: ReportFormatSpecType) -> ReportFormat:
    if isinstance(formatspec, ReportFormat):
        return formatspec
    elif isinstance(formatspec, str):
        try:
            return ReportFormat(formatspec.lower())
        except ValueError:
            raise ArgumentError(simonlib_err_header() + f"unsupported report format: {formatspec}; supported formats are {[f.value for f in ReportFormat]}.")
    else:
        raise TypeError(simonlib_err_header() + f"unsupported report format specification type: {formatspec.__class__.__name__}.")


@dataclass(frozen=True)
class ExperimentConfig:
    """The parameters of a (reproducible) comparison experiment.

    Two runs with equal configurations write byte-identical reports.
    """
    n:                int
    seed:             int = 0
    trials:           int = 1
    measure_v:        bool = True
    strategies:       Tuple[str, ...] = ALL_ARMS
    output_path:      Optional[str] = None
    format:           ReportFormatSpecType = ReportFormat.JSON
    max_rounds:       Optional[int] = None
    birthday_repeats: int = 1
    capacity:         Optional[int] = None

    def __post_init__(self):

        if self.n < 1:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"requires registers of at least one qubit, but received n = {self.n}.")
        bound = get_capacity_bound(self.capacity)
        if self.n > bound:
            raise CapacityError(simonlib_err_header(obj_name=self.__class__.__name__) + f"registers of {self.n} qubits exceed the capacity bound of {bound} qubits.")

        if self.trials < 1:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"requires at least one trial, but received {self.trials}.")
        if self.birthday_repeats < 1:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"requires at least one birthday search per trial, but received {self.birthday_repeats}.")
        if self.max_rounds is not None and self.max_rounds < 1:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"requires a budget of at least one round, but received {self.max_rounds}.")

        strategies = set(s.lower() for s in self.strategies)
        unknown = strategies.difference(ALL_ARMS)
        if len(unknown) > 0:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + f"unsupported strategies: {sorted(unknown)}; supported strategies are {list(ALL_ARMS)}.")
        if len(strategies) == 0:
            raise ArgumentError(simonlib_err_header(obj_name=self.__class__.__name__) + "requires at least one strategy.")

        # canonical order, so that equal sets give equal configurations
        object.__setattr__(self, 'strategies', tuple(arm for arm in ALL_ARMS if arm in strategies))
        object.__setattr__(self, 'format', resolve_reportformatspec(self.format))

    def runs(self, arm: Arm) -> bool:
        return arm.value in self.strategies

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

"""The error families raised by SimonLib.

All of them derive from Python's built-in exceptions, so that code catching
``ValueError`` or ``RuntimeError`` keeps working; the sub-classes only exist to
let callers (in particular the command-line interface, which maps them to exit
codes) tell the failure modes apart.

"""

from typing import Any


class CapacityError(ValueError):
    """The register width exceeds the configured memory bound."""
    pass


class DimensionError(ValueError):
    """Two objects describe registers of different widths."""
    pass


class ArgumentError(ValueError):
    """An argument lies outside its admissible range."""
    pass


class InvalidShiftError(ValueError):
    """A hidden shift is zero or does not fit the register."""
    pass


class PromiseViolationError(ValueError):

    def __init__(self, message: str, x: int):
        super().__init__(message)
        self.x = x  # the first argument whose collision structure breaks the promise


class TableFormatError(ValueError):
    """A document on disk does not follow the expected format."""
    pass


class InsufficientRankError(RuntimeError):
    pass


class BudgetExhaustedError(RuntimeError):

    def __init__(self, message: str, report: Any):
        super().__init__(message)
        self.report = report  # the partial ``RunReport`` collected before giving up

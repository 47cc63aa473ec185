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
from typing import Optional

from .messages import simonlib_err_header
from .exceptions import ArgumentError, CapacityError


# 4^12 complex128 amplitudes take 256 MiB; each intermediate copy as much again
DEFAULT_CAPACITY = 12
CAPACITY_ENVVAR = 'SIMONLIB_MAX_QUBITS'


def get_capacity_bound(capacity: Optional[int] = None) -> int:
    """Resolve the largest admissible register width.

    An explicit ``capacity`` takes precedence over the ``SIMONLIB_MAX_QUBITS``
    environment variable, which in turn takes precedence over the default.
    The environment is read at every call.
    """
    if capacity is None:
        envvalue = os.getenv(CAPACITY_ENVVAR)
        if envvalue is None:
            return DEFAULT_CAPACITY
        try:
            capacity = int(envvalue)
        except ValueError:
            raise ArgumentError(simonlib_err_header() + f"environment variable {CAPACITY_ENVVAR} must hold an integer, but holds {envvalue!r}.")

    if capacity < 1:
        raise ArgumentError(simonlib_err_header() + f"the capacity bound must be a positive integer, but {capacity} was specified.")

    return capacity


def check_capacity(n: int, capacity: Optional[int] = None) -> None:
    bound = get_capacity_bound(capacity)
    if n > bound:
        raise CapacityError(simonlib_err_header() + f"registers of {n} qubits exceed the capacity bound of {bound} qubits (set {CAPACITY_ENVVAR} to raise it).")

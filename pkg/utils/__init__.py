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

from .aliases import UnknownType, UNKNOWN, BitString
from .messages import simonlib_log, simonlib_log_header, simonlib_wng_header, simonlib_err_header
from .exceptions import CapacityError, DimensionError, ArgumentError, InvalidShiftError
from .exceptions import PromiseViolationError, TableFormatError
from .exceptions import InsufficientRankError, BudgetExhaustedError
from .capacity import DEFAULT_CAPACITY, CAPACITY_ENVVAR, get_capacity_bound, check_capacity

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

from .state import AMPLITUDE_DTYPE, PROBABILITY_DTYPE, NORMALISATION_TOLERANCE
from .state import StateVector, MeasurementOutcome
from .state import walsh_hadamard
from .state import zero_state, hadamard_register, apply_oracle
from .state import marginal_distribution, project_register, sample_distribution, measure_register
from .state import conditional_amplitudes, prepare_parallel_state

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

from typing import NewType


# for information that is not yet available (e.g., the hidden shift of a
# function table loaded from a file that does not declare it)
UnknownType = NewType('UnknownType', type(None))
UNKNOWN = UnknownType(None)

# n-bit strings are carried around as Python integers; the string
# b_{n-1} ... b_{0} maps to the integer \sum_{i} b_{i} 2^{i}
BitString = NewType('BitString', int)

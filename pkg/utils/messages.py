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

"""Uniform prefixes for everything SimonLib tells its users.

Errors and warnings carry the prefix in their message; informational logs are
written to stderr by ``simonlib_log``, since the command-line interface
reserves stdout for the documents it produces.

"""

from functools import partial
import sys


_SIMONLIB_LOG_HEADER = "[SimonLib] "
_SIMONLIB_WNG_HEADER = "[SimonLib warning] "
_SIMONLIB_ERR_HEADER = "[SimonLib error] "


def simonlib_msg_header(header: str, obj_name: str = "") -> str:
    """Prefix ``header`` to the (optional) name of the function or object
    class emitting the message."""
    return header if obj_name == "" else f"{header}{obj_name}: "


simonlib_log_header = partial(simonlib_msg_header, header=_SIMONLIB_LOG_HEADER)
simonlib_wng_header = partial(simonlib_msg_header, header=_SIMONLIB_WNG_HEADER)
simonlib_err_header = partial(simonlib_msg_header, header=_SIMONLIB_ERR_HEADER)


def simonlib_log(message: str, obj_name: str = "") -> None:
    print(simonlib_log_header(obj_name=obj_name) + message, file=sys.stderr)

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

"""Read and write function tables.

A function-table document is a JSON object

.. code-block:: json

   {"n": 2, "table": ["1", "2", "2", "1"], "r": "3"}

where every table entry (and the optional hidden shift ``r``) is a lowercase
hexadecimal string zero-padded to :math:`\\lceil n / 4 \\rceil` digits.

"""

import json
import jsonschema
import os
from typing import Any, Dict, Union

from ..simonfunction import HiddenShift, SimonFunction
from ...utils import UNKNOWN
from ...utils import TableFormatError
from ...utils import simonlib_err_header


_HEX_PATTERN = '^[0-9a-f]+$'

TABLE_SCHEMA = {
    'type': 'object',
    'properties': {
        'n':     {'type': 'integer', 'minimum': 1},
        'table': {'type': 'array', 'items': {'type': 'string', 'pattern': _HEX_PATTERN}},
        'r':     {'type': 'string', 'pattern': _HEX_PATTERN},
    },
    'required': ['n', 'table'],
    'additionalProperties': False,
}


def hex_digits(n: int) -> int:
    return (n + 3) // 4


def format_hex(value: int, n: int) -> str:
    return format(value, f'0{hex_digits(n)}x')


def parse_hex(string: str, n: int) -> int:
    if len(string) != hex_digits(n):
        raise TableFormatError(simonlib_err_header() + f"{n}-bit values must be written with {hex_digits(n)} hexadecimal digits, but found {string!r}.")
    value = int(string, 16)
    if value >= 2 ** n:
        raise TableFormatError(simonlib_err_header() + f"value {string!r} does not fit in {n} bits.")
    return value


def table_to_document(f: SimonFunction) -> Dict[str, Any]:
    document = {
        'n':     f.n,
        'table': [format_hex(value, f.n) for value in f.table],
    }
    if f.shift is not UNKNOWN:
        document['r'] = format_hex(f.shift.r, f.n)
    return document


def table_from_document(document: Any) -> SimonFunction:

    try:
        jsonschema.validate(instance=document, schema=TABLE_SCHEMA)
    except jsonschema.ValidationError as e:
        raise TableFormatError(simonlib_err_header() + f"malformed function-table document: {e.message}.")

    n = document['n']
    # the schema accepts integral floats such as 2.0
    if isinstance(n, bool) or not isinstance(n, int):
        raise TableFormatError(simonlib_err_header() + f"the register width must be an integer, but received {n!r}.")

    if len(document['table']) != 2 ** n:
        raise TableFormatError(simonlib_err_header() + f"a table over {n} bits must have {2 ** n} entries, but has {len(document['table'])}.")

    table = [parse_hex(value, n) for value in document['table']]
    if 'r' in document:
        try:
            shift = HiddenShift(parse_hex(document['r'], n), n)
        except ValueError as e:
            raise TableFormatError(str(e))
    else:
        shift = UNKNOWN

    return SimonFunction(n, table, shift)


def dump_table(f: SimonFunction, path: Union[os.PathLike, str]) -> None:
    with open(path, 'w') as fp:
        fp.write(json.dumps(table_to_document(f), indent=2) + '\n')


def load_table(path: Union[os.PathLike, str]) -> SimonFunction:
    try:
        with open(path, 'r') as fp:
            document = json.load(fp)
    except json.JSONDecodeError as e:
        raise TableFormatError(simonlib_err_header() + f"{path} is not a JSON document ({e}).")
    return table_from_document(document)

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

"""Serialise experiment results.

JSON is the canonical format of every document. Cost tables also have a CSV
projection with a fixed column order: ``trial`` first, then the fields of
``CostReport`` in declaration order. Absent values are written as ``null``
(JSON) or as empty cells (CSV).

"""

import io
import json
import os
import pandas as pd
from tabulate import tabulate
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..config import ReportFormat, ReportFormatSpecType, resolve_reportformatspec
from ...baselines import CostReport
from ...baselines.costmodel import median
from ...utils import TableFormatError
from ...utils import simonlib_err_header


SUMMARY_LABEL = 'median'


def render_json(document: Any) -> str:
    return json.dumps(document, indent=2) + '\n'


def write_text(text: str, path: Union[os.PathLike, str]) -> None:
    with open(path, 'w', newline='') as fp:
        fp.write(text)


def write_json_document(document: Any, path: Union[os.PathLike, str]) -> None:
    write_text(render_json(document), path)


def read_json_document(path: Union[os.PathLike, str]) -> Any:
    try:
        with open(path, 'r') as fp:
            return json.load(fp)
    except json.JSONDecodeError as e:
        raise TableFormatError(simonlib_err_header() + f"{path} is not a JSON document ({e}).")


def summarise_cost_reports(reports: Sequence[CostReport]) -> Dict[str, Any]:
    """Collapse per-trial cost reports into a single summary record.

    Constant columns keep their value; varying numeric columns are replaced
    by their median; the success flag is the conjunction over the trials.
    """
    summary = {}
    for name in CostReport.columns():
        values = [getattr(r, name) for r in reports if getattr(r, name) is not None]
        if len(values) == 0:
            summary[name] = None
        elif name == 'quantum_success':
            summary[name] = all(values)
        elif all(v == values[0] for v in values):
            summary[name] = values[0]
        else:
            summary[name] = median(values)
    return summary


def cost_table_columns() -> List[str]:
    return ['trial'] + CostReport.columns()


def cost_table_records(reports: Sequence[CostReport], summary: Dict[str, Any]) -> List[Dict[str, Any]]:
    records = [{'trial': i, **r.to_dict()} for i, r in enumerate(reports)]
    records.append({'trial': SUMMARY_LABEL, **summary})
    return records


def render_table(records: Sequence[Dict[str, Any]], columns: Sequence[str], formatspec: ReportFormatSpecType, key: str) -> str:
    format_ = resolve_reportformatspec(formatspec)
    if format_ is ReportFormat.JSON:
        return render_json({key: [{c: r[c] for c in columns} for r in records]})
    else:
        frame = pd.DataFrame(list(records), columns=list(columns), dtype=object)  # ``object`` keeps integers and ``None`` as they are
        return frame.to_csv(index=False, lineterminator='\n')


def render_cost_table(reports: Sequence[CostReport], summary: Dict[str, Any], formatspec: ReportFormatSpecType) -> str:
    return render_table(cost_table_records(reports, summary), cost_table_columns(), formatspec, key='rows')


def _parse_csv_cell(cell: str) -> Any:
    if cell == '':
        return None
    if cell in ('True', 'False'):
        return cell == 'True'
    for type_ in (int, float):
        try:
            return type_(cell)
        except ValueError:
            pass
    return cell


def parse_table(text: str, formatspec: ReportFormatSpecType, key: str) -> List[Dict[str, Any]]:
    """Read back the records written by ``render_table``."""
    format_ = resolve_reportformatspec(formatspec)
    if format_ is ReportFormat.JSON:
        try:
            return json.loads(text)[key]
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise TableFormatError(simonlib_err_header() + f"malformed {key} table: {e}.")
    else:
        frame = pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)
        return [{c: _parse_csv_cell(v) for c, v in row.items()} for row in frame.to_dict(orient='records')]


def parse_cost_table(text: str, formatspec: ReportFormatSpecType) -> Tuple[List[Dict[str, Any]], Dict[str, Any]]:
    records = parse_table(text, formatspec, key='rows')
    if len(records) == 0 or records[-1]['trial'] != SUMMARY_LABEL:
        raise TableFormatError(simonlib_err_header() + f"cost tables must end with the '{SUMMARY_LABEL}' row.")
    return records[:-1], records[-1]


def render_console_table(records: Sequence[Dict[str, Any]], columns: Optional[Sequence[str]] = None) -> str:
    columns = list(records[0].keys()) if columns is None else list(columns)
    rows = [['' if r[c] is None else r[c] for c in columns] for r in records]
    return tabulate(rows, headers=columns, tablefmt='github')

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

from .reports import SUMMARY_LABEL
from .reports import render_json, write_text, write_json_document, read_json_document
from .reports import summarise_cost_reports
from .reports import cost_table_columns, cost_table_records
from .reports import render_table, render_cost_table, parse_table, parse_cost_table
from .reports import render_console_table

# pylint: disable=g-bad-file-header
# Copyright 2026 The gsmppm Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or  implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ============================================================================
"""A simple logger that pretty-prints result rows."""

import numbers
from typing import Any, Optional, Sequence

from absl import logging
from gsmppm.logging import base


class Logger(base.Logger):
  """Writes rows to the terminal, through absl logging if requested."""

  def __init__(self,
               gsmppm_id: str = '',
               pretty_print: bool = True,
               absl_logging: bool = False,
               columns: Optional[Sequence[str]] = None):
    self._prefix = f'[{gsmppm_id}] ' if gsmppm_id else ''
    self._pretty_print = pretty_print
    self._columns = columns
    self._print_fn = logging.info if absl_logging else print

  def write(self, data: base.Row):
    if self._pretty_print:
      data = self._prefix + pretty_dict(data, self._columns)
    self._print_fn(data)


def pretty_dict(data: base.Row, columns: Optional[Sequence[str]] = None) -> str:
  """Formats a row as `k1 = v1 | ... | kn = vn`.

  Keys listed in `columns` come first in that order; the rest follow sorted.
  """
  leading = [k for k in columns or () if k in data]
  keys = leading + sorted(set(data) - set(leading))
  return ' | '.join(f'{key} = {value_format(data[key])}' for key in keys)


def value_format(value: Any) -> str:
  """Integers verbatim, error rates in scientific notation, others 0.4f."""
  if isinstance(value, (bool, numbers.Integral)):
    return str(value)
  if isinstance(value, numbers.Real):
    if value != 0 and abs(value) < 1e-3:
      return f'{value:0.3e}'
    return f'{value:0.4f}'
  return str(value)

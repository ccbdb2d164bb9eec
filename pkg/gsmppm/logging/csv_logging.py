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
"""Logging of result rows to CSV files."""

import os
from typing import Any, Mapping, Optional, Sequence

from gsmppm.logging import base
import pandas as pd

SAFE_SEPARATOR = '-'
INITIAL_SEPARATOR = '_-_'
GSMPPM_PREFIX = 'gsmppm_id' + INITIAL_SEPARATOR
# Same as gsmppm.sweep.SEPARATOR, which imports the experiments.
ID_SEPARATOR = '/'


def write_csv(path: str,
              rows: Sequence[Mapping[str, Any]],
              columns: Optional[Sequence[str]] = None):
  """Writes `rows` to `path` with a fixed column order."""
  df = pd.DataFrame(list(rows), columns=list(columns) if columns else None)
  df.to_csv(path, index=False)


def filename_for_id(gsmppm_id: str) -> str:
  # The '/' in ids is not safe in file names.
  safe_id = gsmppm_id.replace(ID_SEPARATOR, SAFE_SEPARATOR)
  return f'{GSMPPM_PREFIX}{safe_id}.csv'


class Logger(base.Logger):
  """Saves rows to a CSV file via pandas.

  Each gsmppm_id logs to its own file inside `results_dir`; use a fresh
  directory per run. The whole file is rewritten on each `write`, which is
  cheap at one row per SNR point or table job.
  """

  def __init__(self,
               gsmppm_id: str,
               results_dir: str = '/tmp/gsmppm',
               overwrite: bool = False,
               columns: Optional[Sequence[str]] = None):
    os.makedirs(results_dir, exist_ok=True)
    save_path = os.path.join(results_dir, filename_for_id(gsmppm_id))
    if os.path.exists(save_path) and not overwrite:
      raise ValueError(
          f'File {save_path} already exists. Specify a different '
          'directory, or set overwrite=True to overwrite existing data.')
    self._data = []
    self._columns = columns
    self._save_path = save_path

  @property
  def save_path(self) -> str:
    return self._save_path

  def write(self, data: Mapping[str, Any]):
    """Adds a row to the internal list of data and saves to CSV."""
    self._data.append(dict(data))
    write_csv(self._save_path, self._data, self._columns)

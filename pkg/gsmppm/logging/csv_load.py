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
"""Read functionality for CSV results written by `csv_logging`."""

import glob
import os
from typing import List, Tuple

from absl import logging
from gsmppm import errors
from gsmppm import sweep
from gsmppm.logging import csv_logging
from gsmppm.logging import logging_utils
import pandas as pd


def id_from_filename(name: str) -> str:
  stem = name[:-len('.csv')] if name.endswith('.csv') else name
  file_id = stem.split(csv_logging.INITIAL_SEPARATOR, 1)[1]
  experiment, _, index = file_id.rpartition(csv_logging.SAFE_SEPARATOR)
  return f'{experiment}{sweep.SEPARATOR}{index}'


def load_one_result_set(results_dir: str) -> pd.DataFrame:
  """Returns the results stored in `results_dir` with sweep metadata."""
  data = []
  for file_path in sorted(glob.glob(os.path.join(results_dir, '*.csv'))):
    _, name = os.path.split(file_path)
    if not name.startswith(csv_logging.GSMPPM_PREFIX):
      logging.warning('Skipping %s; use a fresh folder for gsmppm results.',
                      file_path)
      continue
    df = pd.read_csv(file_path)
    df['gsmppm_id'] = id_from_filename(name)
    df['results_dir'] = results_dir
    data.append(df)
  if not data:
    raise errors.ConfigError(f'No gsmppm results found in {results_dir}.')
  df = pd.concat(data, sort=False)
  return logging_utils.join_metadata(df)


def load_gsmppm(
    results_dirs: logging_utils.PathCollection
) -> Tuple[pd.DataFrame, List[str]]:
  """Returns the results of one or more runs as a single DataFrame."""
  return logging_utils.load_multiple_runs(
      path_collection=results_dirs,
      single_load_fn=load_one_result_set,
  )

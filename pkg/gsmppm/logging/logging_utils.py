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
"""Helpers to join sweep metadata onto loaded results."""

import copy
from typing import Any, Callable, List, Mapping, Sequence, Tuple, Union

from gsmppm import sweep
import pandas as pd


def join_metadata(df: pd.DataFrame) -> pd.DataFrame:
  """Returns `df` with sweep settings joined on gsmppm_id."""
  if 'gsmppm_id' not in df.columns:
    raise ValueError('Results have no gsmppm_id column.')
  metadata = copy.deepcopy(dict(sweep.SETTINGS))

  data = []
  for gsmppm_id, settings in metadata.items():
    params = {
        'gsmppm_id': gsmppm_id,
        'experiment': gsmppm_id.split(sweep.SEPARATOR)[0],
    }
    params.update({k: v for k, v in settings.items() if k not in df.columns})
    data.append(params)
  return pd.merge(df, pd.DataFrame(data), on='gsmppm_id')


PathCollection = Union[str, Sequence[str], Mapping[str, Any]]
SingleLoadFn = Callable[[str], pd.DataFrame]


def load_multiple_runs(
    path_collection: PathCollection,
    single_load_fn: SingleLoadFn) -> Tuple[pd.DataFrame, List[str]]:
  """Loads several result directories into one DataFrame.

  Args:
    path_collection: a single path, a sequence of paths, or a mapping from run
      name to path.
    single_load_fn: loads the results stored under one path.

  Returns:
    The concatenated results with a `run_name` column, and the list of columns
    that identify one set of results.
  """
  if isinstance(path_collection, str):
    path_collection = {path_collection: path_collection}
  if not isinstance(path_collection, Mapping):
    path_collection = {path: path for path in path_collection}

  data = []
  for name, path in path_collection.items():
    df = single_load_fn(path)
    df['run_name'] = name
    data.append(df)
  return pd.concat(data, sort=False), ['run_name']

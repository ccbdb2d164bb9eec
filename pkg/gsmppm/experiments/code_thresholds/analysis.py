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
"""Analysis for code_thresholds."""

from gsmppm.experiments.code_thresholds import sweep
from gsmppm.utils import plotting
import pandas as pd
import plotnine as gg

TAGS = sweep.TAGS
REFERENCE = 'i-pldpc'


def threshold_table(df: pd.DataFrame) -> pd.DataFrame:
  """Thresholds per pattern and code, with gaps to the reference code."""
  return plotting.gap_table(df, 'threshold_db', 'code', REFERENCE)


def best_code(df: pd.DataFrame) -> pd.Series:
  """The code with the lowest threshold for every pattern."""
  table = df.pivot_table(index='pattern', columns='code',
                         values='threshold_db', aggfunc='mean')
  return table.idxmin(axis=1)


def score(df: pd.DataFrame) -> float:
  """Fraction of patterns where the reference code has the lowest threshold."""
  return float((best_code(df) == REFERENCE).mean())


def plot_thresholds(df: pd.DataFrame) -> gg.ggplot:
  p = plotting.plot_bars(df, 'threshold_db', 'code')
  return p + gg.ylab('PEXIT threshold (dB)')

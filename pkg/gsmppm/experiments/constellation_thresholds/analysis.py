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
"""Analysis for constellation_thresholds."""

from typing import Sequence

from gsmppm.experiments.constellation_thresholds import sweep
from gsmppm.utils import plotting
import pandas as pd
import plotnine as gg

TAGS = sweep.TAGS
REFERENCE = 'adm'
# Expected ordering of thresholds, lowest first.
ORDER = ('adm', 'optimized', 'natural')


def threshold_table(df: pd.DataFrame) -> pd.DataFrame:
  """Thresholds per pattern and constellation, with gaps to ADM."""
  return plotting.gap_table(df, 'threshold_db', 'constellation', REFERENCE)


def ordering_holds(df: pd.DataFrame,
                   order: Sequence[str] = ORDER) -> pd.Series:
  """Per pattern, whether thresholds increase strictly along `order`."""
  table = df.pivot_table(index='pattern', columns='constellation',
                         values='threshold_db', aggfunc='mean')
  values = table[list(order)]
  return (values.diff(axis=1).iloc[:, 1:] > 0).all(axis=1)


def score(df: pd.DataFrame) -> float:
  """Fraction of patterns whose thresholds follow `ORDER`."""
  return float(ordering_holds(df).mean())


def plot_thresholds(df: pd.DataFrame) -> gg.ggplot:
  p = plotting.plot_bars(df, 'threshold_db', 'constellation')
  return p + gg.ylab('PEXIT threshold (dB)')

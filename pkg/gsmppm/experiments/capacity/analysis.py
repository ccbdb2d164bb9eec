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
"""Analysis for capacity."""

from typing import Optional, Sequence

from gsmppm.constellations import base
from gsmppm.experiments.capacity import sweep
from gsmppm.utils import plotting
import pandas as pd
import plotnine as gg

TAGS = sweep.TAGS
REFERENCE = 'adm'
# Target rate as a fraction of the m bits per symbol.
RATE_FRACTION = 0.5


def required_snr(df: pd.DataFrame,
                 fraction: float = RATE_FRACTION,
                 value_col: str = 'c_bicm') -> pd.DataFrame:
  """SNR at which `value_col` reaches `fraction * m`, per curve."""
  data = []
  for (constellation, pattern), sub_df in df.groupby(['constellation',
                                                      'pattern']):
    sub_df = sub_df.sort_values('snr_db')
    target = fraction * base.ModulationPattern.parse(pattern).m
    data.append({
        'constellation': constellation,
        'pattern': pattern,
        'required_snr_db': plotting.snr_at_target(
            sub_df.snr_db.values, sub_df[value_col].values, target),
    })
  return pd.DataFrame(data)


def gap_table(df: pd.DataFrame,
              fraction: float = RATE_FRACTION) -> pd.DataFrame:
  """Required SNR per pattern with gaps relative to ADM."""
  return plotting.gap_table(required_snr(df, fraction), 'required_snr_db',
                            'constellation', REFERENCE)


def plot_capacity(df: pd.DataFrame,
                  value_col: str = 'c_bicm',
                  sweep_vars: Optional[Sequence[str]] = ('pattern',)
                  ) -> gg.ggplot:
  p = plotting.plot_curves(df, value_col, 'constellation',
                           list(sweep_vars) if sweep_vars else None)
  return p + gg.ylab('capacity (bits per symbol)')

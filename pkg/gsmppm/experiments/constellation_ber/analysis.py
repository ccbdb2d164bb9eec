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
"""Analysis for constellation_ber."""

from typing import Optional, Sequence

from gsmppm.experiments.constellation_ber import sweep
from gsmppm.utils import plotting
import pandas as pd
import plotnine as gg

TAGS = sweep.TAGS
REFERENCE = 'adm'
TARGET_BER = 1e-4


def required_snr(df: pd.DataFrame, target: float = TARGET_BER) -> pd.DataFrame:
  """SNR at which each BER curve crosses `target`, in log-BER."""
  return plotting.required_snr(df, 'ber', target,
                               ('constellation', 'pattern'), log_scale=True)


def gain_table(df: pd.DataFrame, target: float = TARGET_BER) -> pd.DataFrame:
  """Per pattern, how much more SNR each constellation needs than ADM."""
  return plotting.gap_table(required_snr(df, target), 'required_snr_db',
                            'constellation', REFERENCE)


def plot_ber(df: pd.DataFrame,
             sweep_vars: Optional[Sequence[str]] = ('pattern',)) -> gg.ggplot:
  p = plotting.plot_curves(df, 'ber', 'constellation',
                           list(sweep_vars) if sweep_vars else None,
                           log_y=True)
  p += gg.geom_hline(gg.aes(yintercept=TARGET_BER), linetype='dashed',
                     alpha=0.4, size=1.75)
  return p + gg.ylab('BER')

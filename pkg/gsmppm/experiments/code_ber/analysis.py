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
"""Analysis for code_ber."""

from typing import Optional, Sequence

from gsmppm.experiments.code_ber import sweep
from gsmppm.experiments.constellation_ber import analysis as constellation_ber_analysis
from gsmppm.utils import plotting
import pandas as pd
import plotnine as gg

TAGS = sweep.TAGS
REFERENCE = 'i-pldpc'
TARGET_BER = constellation_ber_analysis.TARGET_BER


def required_snr(df: pd.DataFrame, target: float = TARGET_BER) -> pd.DataFrame:
  return plotting.required_snr(df, 'ber', target, ('code', 'pattern'),
                               log_scale=True)


def gain_table(df: pd.DataFrame, target: float = TARGET_BER) -> pd.DataFrame:
  """Per pattern, how much more SNR each code needs than the reference."""
  return plotting.gap_table(required_snr(df, target), 'required_snr_db',
                            'code', REFERENCE)


def plot_ber(df: pd.DataFrame,
             sweep_vars: Optional[Sequence[str]] = ('pattern',)) -> gg.ggplot:
  p = plotting.plot_curves(df, 'ber', 'code',
                           list(sweep_vars) if sweep_vars else None,
                           log_y=True)
  p += gg.geom_hline(gg.aes(yintercept=TARGET_BER), linetype='dashed',
                     alpha=0.4, size=1.75)
  return p + gg.ylab('BER')

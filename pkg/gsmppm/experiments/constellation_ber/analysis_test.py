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
"""Tests for gsmppm.experiments.constellation_ber.analysis."""

from absl.testing import absltest
from gsmppm.experiments.constellation_ber import analysis
import pandas as pd
import plotnine as gg


def _curves():
  return pd.DataFrame({
      'constellation': ['adm'] * 3 + ['natural'] * 3,
      'pattern': ['p'] * 6,
      'snr_db': [-3., -2.5, -2.] * 2,
      'ber': [1e-2, 1e-4, 1e-6, 1e-1, 1e-3, 1e-5],
  })


class AnalysisTest(absltest.TestCase):

  def test_gain(self):
    required = analysis.required_snr(_curves())
    self.assertAlmostEqual(required.required_snr_db[0], -2.5)
    self.assertAlmostEqual(required.required_snr_db[1], -2.25)
    gains = analysis.gain_table(_curves())
    self.assertAlmostEqual(gains.loc['p', 'gap_natural'], 0.25)

  def test_plot(self):
    self.assertIsInstance(analysis.plot_ber(_curves()), gg.ggplot)


if __name__ == '__main__':
  absltest.main()

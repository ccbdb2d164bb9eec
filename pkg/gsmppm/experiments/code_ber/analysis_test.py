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
"""Tests for gsmppm.experiments.code_ber.analysis."""

from absl.testing import absltest
from gsmppm.experiments.code_ber import analysis
import pandas as pd


class AnalysisTest(absltest.TestCase):

  def test_gain(self):
    df = pd.DataFrame({
        'code': ['i-pldpc'] * 2 + ['ar4ja-r12'] * 2,
        'pattern': ['p'] * 4,
        'snr_db': [-3., -2., -2.5, -1.5],
        'ber': [1e-3, 1e-5, 1e-3, 1e-5],
    })
    gains = analysis.gain_table(df)
    self.assertAlmostEqual(gains.loc['p', 'gap_ar4ja-r12'], 0.5)


if __name__ == '__main__':
  absltest.main()

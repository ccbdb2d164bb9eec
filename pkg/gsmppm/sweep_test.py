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
"""Tests for gsmppm.sweep."""

from absl.testing import absltest
from gsmppm import sweep
from gsmppm.experiments.code_thresholds import sweep as code_thresholds_sweep
from gsmppm.simulation import table


class SweepTest(absltest.TestCase):

  def test_sweep_contents(self):
    test_id = 'code_thresholds/0'
    test_id_1 = 'code_thresholds/1'

    self.assertIn(test_id, sweep.CODE_THRESHOLDS)
    self.assertIn(test_id, sweep.SWEEP)
    self.assertIn(test_id, sweep.TESTING)
    self.assertNotIn(test_id_1, sweep.TESTING)
    self.assertLen(sweep.CODE_THRESHOLDS, len(code_thresholds_sweep.SETTINGS))
    self.assertIn(test_id, sweep.TAGS['threshold'])
    self.assertEqual(sweep.KINDS[test_id], 'threshold')

  def test_ber_experiments_excluded_from_testing(self):
    self.assertNotIn('code_ber/0', sweep.TESTING)
    self.assertNotIn('constellation_ber/0', sweep.TESTING)
    self.assertIn('capacity/0', sweep.TESTING)

  def test_experiment_sizes(self):
    self.assertLen(sweep.CONSTELLATION_THRESHOLDS, 12)
    self.assertLen(sweep.CODE_THRESHOLDS, 12)
    self.assertLen(sweep.CAPACITY, 8)
    self.assertLen(sweep.CONSTELLATION_BER, 8)
    self.assertLen(sweep.CODE_BER, 8)
    self.assertLen(sweep.SWEEP, 48)

  def test_settings_are_table_jobs(self):
    for gsmppm_id in sweep.SWEEP:
      settings = sweep.SETTINGS[gsmppm_id]
      self.assertEqual(set(settings), set(table.Job._fields))
      self.assertIn(sweep.KINDS[gsmppm_id], table.KINDS)
      table.TableSpec.from_dict(dict(sweep.OPTIONS[gsmppm_id]))

  def test_sweep_immutable(self):
    with self.assertRaises(TypeError):
      # pytype: disable=attribute-error
      # pytype: disable=unsupported-operands
      sweep.CODE_THRESHOLDS[0] = 'new_gsmppm_id'
      sweep.SWEEP[0] = 'new_gsmppm_id'
      sweep.TESTING[0] = 'new_gsmppm_id'
      sweep.TAGS['new_tag'] = 42
      # pytype: enable=unsupported-operands
      # pytype: enable=attribute-error


if __name__ == '__main__':
  absltest.main()

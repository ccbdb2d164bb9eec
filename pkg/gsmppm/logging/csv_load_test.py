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
"""Tests for gsmppm.logging.csv_load."""

import random
import sys

from absl import flags
from absl.testing import absltest
from gsmppm import errors
from gsmppm.logging import csv_load
from gsmppm.logging import csv_logging

FLAGS = flags.FLAGS
_NUM_WRITES = 10


def generate_results(gsmppm_id, results_dir):
  logger = csv_logging.Logger(gsmppm_id, results_dir)
  for i in range(_NUM_WRITES):
    bits = 1800 * (i + 1)
    bit_errors = random.randrange(bits)
    logger.write(dict(snr_db=-3. + 0.25 * i, bit_errors=bit_errors, bits=bits,
                      frames=i + 1, frame_errors=i, ber=bit_errors / bits,
                      fer=i / (i + 1), seconds=0.5))


class CsvLoadTest(absltest.TestCase):

  def setUp(self):
    super().setUp()
    try:
      flags.FLAGS.test_tmpdir
    except flags.UnparsedFlagAccessError:
      # Need to initialize flags when running `pytest`.
      flags.FLAGS(sys.argv)

  def test_logger(self):
    results_dir = self.create_tempdir().full_path
    generate_results(gsmppm_id='constellation_ber/0', results_dir=results_dir)
    generate_results(gsmppm_id='constellation_ber/5', results_dir=results_dir)

    df = csv_load.load_one_result_set(results_dir=results_dir)
    self.assertLen(df, _NUM_WRITES * 2)

    # Sweep settings are joined on the id.
    for column in ('gsmppm_id', 'experiment', 'code', 'constellation',
                   'pattern'):
      self.assertIn(column, df.columns)
    self.assertEqual(set(df.gsmppm_id),
                     {'constellation_ber/0', 'constellation_ber/5'})
    self.assertEqual(set(df.constellation), {'adm', 'natural'})

  def test_multiple_runs(self):
    dirs = {}
    for name in ('first', 'second'):
      dirs[name] = self.create_tempdir(name).full_path
      generate_results('code_ber/1', dirs[name])
    df, sweep_vars = csv_load.load_gsmppm(dirs)
    self.assertEqual(sweep_vars, ['run_name'])
    self.assertEqual(set(df.run_name), {'first', 'second'})
    self.assertLen(df, 2 * _NUM_WRITES)

  def test_empty_directory(self):
    with self.assertRaises(errors.ConfigError):
      csv_load.load_one_result_set(self.create_tempdir().full_path)

  def test_id_from_filename(self):
    name = csv_logging.filename_for_id('code_thresholds/11')
    self.assertEqual(name, 'gsmppm_id_-_code_thresholds-11.csv')
    self.assertEqual(csv_load.id_from_filename(name), 'code_thresholds/11')


if __name__ == '__main__':
  absltest.main()

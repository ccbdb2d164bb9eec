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
"""Tests for gsmppm.logging.terminal_logging."""

from absl.testing import absltest
from absl.testing import parameterized
from gsmppm.logging import terminal_logging


class TerminalLoggingTest(parameterized.TestCase):

  @parameterized.parameters(
      (3, '3'),
      (True, 'True'),
      (0.5, '0.5000'),
      (0., '0.0000'),
      (2.5e-5, '2.500e-05'),
      ('adm', 'adm'),
  )
  def test_value_format(self, value, expected):
    self.assertEqual(terminal_logging.value_format(value), expected)

  def test_pretty_dict_sorts_keys(self):
    text = terminal_logging.pretty_dict({'snr_db': -3., 'bit_errors': 12})
    self.assertEqual(text, 'bit_errors = 12 | snr_db = -3.0000')

  def test_pretty_dict_column_order(self):
    row = {'seed': 0, 'ber': 1e-4, 'snr_db': -2.}
    text = terminal_logging.pretty_dict(row, columns=('snr_db', 'ber'))
    self.assertEqual(text, 'snr_db = -2.0000 | ber = 1.000e-04 | seed = 0')

  def test_writes_through_print_fn(self):
    lines = []
    logger = terminal_logging.Logger('code_ber/0')
    logger._print_fn = lines.append
    written = logger.write_all([{'ber': 0.25}, {'ber': 0.}])
    self.assertEqual(written, 2)
    self.assertEqual(lines, ['[code_ber/0] ber = 0.2500',
                             '[code_ber/0] ber = 0.0000'])


if __name__ == '__main__':
  absltest.main()

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
"""Tests for gsmppm.utils.pool."""

from absl.testing import absltest
from gsmppm.utils import pool


def _square(x):
  return x * x


class MapOrderedTest(absltest.TestCase):

  def test_in_process(self):
    self.assertEqual(pool.map_ordered(_square, [3, 1, 2]), [9, 1, 4])

  def test_worker_processes_keep_order(self):
    items = list(range(20))
    self.assertEqual(pool.map_ordered(_square, items, num_processes=2),
                     [x * x for x in items])


if __name__ == '__main__':
  absltest.main()

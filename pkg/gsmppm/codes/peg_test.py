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
"""Tests for gsmppm.codes.peg."""

import os

from absl.testing import absltest
from absl.testing import parameterized
from gsmppm import errors
from gsmppm.codes import base_matrix
from gsmppm.codes import peg
import mock
import numpy as np


def _block_sums(code, bm):
  """Row and column sums of every (i, j) block of the lifted matrix."""
  t = code.lift_factor
  h = code.h.toarray()
  for i in range(bm.p_c):
    for j in range(bm.p_v):
      block = h[i * t:(i + 1) * t, j * t:(j + 1) * t]
      yield bm.b[i, j], block.sum(axis=0), block.sum(axis=1)


class PegLiftTest(parameterized.TestCase):

  @parameterized.parameters('i-pldpc', 'ar4ja-r12', 'regular-36')
  def test_lifting_preserves_block_degrees(self, name):
    bm = base_matrix.builtin_code(name)
    code = peg.peg_lift(bm, 48, seed=1)
    self.assertEqual(code.h.shape, (48 * bm.p_c, 48 * bm.p_v))
    self.assertLessEqual(code.h.max(), 1)
    for expected, col_sums, row_sums in _block_sums(code, bm):
      np.testing.assert_array_equal(col_sums, expected)
      np.testing.assert_array_equal(row_sums, expected)

  def test_i_pldpc_full_length(self):
    bm = base_matrix.builtin_code('i-pldpc')
    code = peg.peg_lift(bm, 600, seed=0)
    self.assertEqual(code.n, 4200)
    self.assertEqual(code.num_checks, 2400)
    self.assertEqual(code.s, 3600)
    np.testing.assert_array_equal(code.punctured, np.arange(1800, 2400))
    np.testing.assert_array_equal(code.column_degrees(),
                                  np.repeat(bm.column_degrees(), 600))
    np.testing.assert_array_equal(code.row_degrees(),
                                  np.repeat(bm.row_degrees(), 600))
    self.assertEqual(code.four_cycles(), 0)

  def test_regular_without_four_cycles(self):
    code = peg.peg_lift(base_matrix.builtin_code('regular-36'), 300, seed=4)
    np.testing.assert_array_equal(code.column_degrees(), 3)
    np.testing.assert_array_equal(code.row_degrees(), 6)
    self.assertEqual(code.four_cycles(), 0)

  def test_deterministic_per_seed(self):
    bm = base_matrix.builtin_code('ar4ja-r12')
    a = peg.peg_lift(bm, 32, seed=7)
    b = peg.peg_lift(bm, 32, seed=7)
    c = peg.peg_lift(bm, 32, seed=8)
    self.assertEqual((a.h != b.h).nnz, 0)
    self.assertGreater((a.h != c.h).nnz, 0)

  def test_lift_factor_too_small(self):
    with self.assertRaises(errors.ParameterError):
      peg.peg_lift(base_matrix.builtin_code('regular-36'), 2)

  def test_minimal_lift_factor(self):
    code = peg.peg_lift(base_matrix.builtin_code('regular-36'), 3)
    self.assertLessEqual(code.h.max(), 1)
    np.testing.assert_array_equal(code.column_degrees(), 3)

  def test_cache_round_trip(self):
    cache_dir = self.create_tempdir().full_path
    bm = base_matrix.builtin_code('i-pldpc')
    first = peg.lift_cached(bm, 16, seed=2, cache_dir=cache_dir)
    self.assertTrue(os.path.exists(peg.cache_path(cache_dir, bm, 16, 2)))
    second = peg.lift_cached(bm, 16, seed=2, cache_dir=cache_dir)
    self.assertEqual((first.h != second.h).nnz, 0)
    np.testing.assert_array_equal(first.punctured, second.punctured)

  def test_cache_key_covers_matrix_and_punctures(self):
    cache_dir = self.create_tempdir().full_path
    first = base_matrix.BaseMatrix.create([[1, 2, 1], [1, 1, 2]],
                                          name='user')
    other = base_matrix.BaseMatrix.create([[2, 1, 1], [1, 1, 2]],
                                          name='user')
    punctured = base_matrix.BaseMatrix.create([[1, 2, 1], [1, 1, 2]],
                                              punctured=(0,), name='user')
    paths = {peg.cache_path(cache_dir, bm, 16, 0)
             for bm in (first, other, punctured)}
    self.assertLen(paths, 3)
    self.assertEqual(peg.cache_path(cache_dir, first, 16, 0),
                     peg.cache_path(cache_dir, first, 16, 0))

  def test_cache_does_not_mix_same_named_matrices(self):
    cache_dir = self.create_tempdir().full_path
    first = base_matrix.BaseMatrix.create([[1, 2, 1], [1, 1, 2]],
                                          name='user')
    other = base_matrix.BaseMatrix.create([[2, 1, 1], [1, 1, 2]],
                                          name='user')
    peg.lift_cached(first, 8, cache_dir=cache_dir)
    code = peg.lift_cached(other, 8, cache_dir=cache_dir)
    for expected, col_sums, row_sums in _block_sums(code, other):
      np.testing.assert_array_equal(col_sums, expected)
      np.testing.assert_array_equal(row_sums, expected)

  def test_degree_profile(self):
    bm = base_matrix.builtin_code('i-pldpc')
    cols, rows = peg.degree_profile(peg.peg_lift(bm, 8))
    np.testing.assert_array_equal(cols, bm.column_degrees())
    np.testing.assert_array_equal(rows, bm.row_degrees())


class LiftedCodeTest(absltest.TestCase):

  def test_four_cycle_count(self):
    code = peg.LiftedCode.from_parity_check([[1, 1, 0], [1, 1, 1], [0, 0, 1]])
    self.assertEqual(code.four_cycles(), 1)

  def test_unbroken_four_cycles_are_reported(self):
    # One copy per type leaves no partner to swap with.
    graph = peg._Graph(2, 2, 2, 2)
    for v in range(2):
      for c in range(2):
        graph.add(v, c)
    with mock.patch.object(peg.logging, 'warning') as warning:
      peg._break_four_cycles(graph, np.zeros(2, dtype=np.int64), 1,
                             np.random.default_rng(0))
    warning.assert_called_once()
    self.assertEqual(warning.call_args[0][1], 1)

  def test_transmitted_positions(self):
    code = peg.LiftedCode.from_parity_check([[1, 1, 1, 0], [0, 1, 1, 1]],
                                            punctured=[2])
    np.testing.assert_array_equal(code.transmitted, [0, 1, 3])
    self.assertEqual(code.s, 3)


if __name__ == '__main__':
  absltest.main()

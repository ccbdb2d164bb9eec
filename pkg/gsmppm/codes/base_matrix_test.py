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
"""Tests for gsmppm.codes.base_matrix."""

import fractions
import os

from absl.testing import absltest
from absl.testing import parameterized
from gsmppm import errors
from gsmppm.codes import base_matrix
import numpy as np

_B_I = [[1, 0, 0, 2, 0, 0, 0],
        [0, 1, 1, 3, 1, 1, 0],
        [0, 0, 1, 1, 2, 2, 1],
        [0, 1, 0, 2, 0, 0, 2]]


def _variant(changes, punctured=(3,)):
  b = np.array(_B_I)
  for (i, j), value in changes.items():
    b[i, j] = value
  return base_matrix.BaseMatrix.create(b, punctured)


class BuiltinTest(parameterized.TestCase):

  def test_i_pldpc(self):
    bm = base_matrix.builtin_code('i-pldpc')
    np.testing.assert_array_equal(bm.b, _B_I)
    self.assertEqual(bm.punctured, (3,))
    self.assertEqual(bm.num_edges, 22)
    self.assertEqual(bm.t_hint, 600)
    self.assertEqual(base_matrix.effective_rate(bm), fractions.Fraction(1, 2))

  def test_ar4ja(self):
    bm = base_matrix.builtin_code('ar4ja-r12')
    self.assertEqual(bm.b.shape, (3, 5))
    self.assertEqual(bm.punctured, (1,))
    self.assertEqual(base_matrix.effective_rate(bm), fractions.Fraction(1, 2))
    self.assertEqual(int(bm.column_degrees()[1]), bm.column_degrees().max())

  def test_regular(self):
    bm = base_matrix.builtin_code('regular-36')
    np.testing.assert_array_equal(bm.column_degrees(), [3, 3])
    np.testing.assert_array_equal(bm.row_degrees(), [6])
    self.assertEqual(bm.punctured, ())

  @parameterized.parameters('i-pldpc', 'ar4ja-r12', 'regular-36')
  def test_builtin_yields_1800_info_bits(self, name):
    bm = base_matrix.builtin_code(name)
    self.assertEqual((bm.p_v - bm.p_c) * bm.t_hint, 1800)

  def test_unknown(self):
    with self.assertRaises(errors.ParameterError):
      base_matrix.builtin_code('turbo')

  def test_read_only(self):
    bm = base_matrix.builtin_code('i-pldpc')
    with self.assertRaises(ValueError):
      bm.b[0, 0] = 3


class RateTest(absltest.TestCase):

  def test_unpunctured(self):
    bm = base_matrix.BaseMatrix.create([[1, 2, 1, 1]])
    self.assertEqual(base_matrix.effective_rate(bm), fractions.Fraction(3, 4))

  def test_nonpositive_rate(self):
    bm = base_matrix.BaseMatrix.create([[1, 1], [1, 1]])
    with self.assertRaises(errors.ParameterError):
      base_matrix.effective_rate(bm)


class DesignConstraintTest(parameterized.TestCase):

  def test_b_i_passes(self):
    report = base_matrix.check_design_constraints(
        base_matrix.builtin_code('i-pldpc'))
    self.assertTrue(report.passed)
    self.assertEmpty(report.violations)

  def test_ar4ja_passes_shape_generic_rules(self):
    report = base_matrix.check_design_constraints(
        base_matrix.builtin_code('ar4ja-r12'))
    self.assertTrue(report.passed)

  @parameterized.named_parameters(
      ('precoding', {}, (), 'precoding'),
      ('degree_two', {(3, 1): 2, (1, 2): 2}, (3,), 'degree_two'),
      ('parallel_edges', {(1, 3): 4}, (3,), 'parallel_edges'),
      ('column_sums', {(2, 6): 2}, (3,), 'column_sums'),
  )
  def test_single_rule_violation(self, changes, punctured, rule):
    report = base_matrix.check_design_constraints(_variant(changes, punctured))
    self.assertFalse(report.passed)
    self.assertEqual(report.rules(), (rule,))

  def test_three_degree_two_nodes(self):
    bm = base_matrix.BaseMatrix.create(
        [[1, 0, 0, 2, 0, 0],
         [0, 1, 1, 3, 1, 1],
         [0, 0, 1, 1, 1, 2],
         [0, 1, 0, 2, 0, 0]], punctured=(3,))
    report = base_matrix.check_design_constraints(bm)
    self.assertEqual(report.rules(), ('degree_two',))

  def test_equal_but_small_column_sums(self):
    bm = base_matrix.BaseMatrix.create(
        [[1, 0, 0, 2, 0, 0, 0],
         [0, 1, 1, 3, 1, 1, 1],
         [0, 0, 1, 1, 1, 1, 1],
         [0, 1, 0, 2, 0, 0, 0]], punctured=(3,))
    report = base_matrix.check_design_constraints(bm)
    self.assertIn('column_sums', report.rules())


class TextFormatTest(absltest.TestCase):

  def test_format_then_parse(self):
    bm = base_matrix.builtin_code('ar4ja-r12')
    parsed = base_matrix.parse_base_matrix(
        base_matrix.format_base_matrix(bm), 'ar4ja-r12')
    np.testing.assert_array_equal(parsed.b, bm.b)
    self.assertEqual(parsed.punctured, bm.punctured)
    self.assertEqual(parsed.t_hint, bm.t_hint)

  def test_comments_and_empty_puncture_list(self):
    bm = base_matrix.parse_base_matrix('# toy\n1 2 4\n3 3\npunctured:\n')
    self.assertEqual(bm.punctured, ())
    self.assertEqual(bm.t_hint, 4)

  def test_shape_mismatch(self):
    with self.assertRaises(errors.ConfigError):
      base_matrix.parse_base_matrix('2 3 1\n1 1 1\n')

  def test_bad_trailer(self):
    with self.assertRaises(errors.ConfigError):
      base_matrix.parse_base_matrix('1 2 1\n3 3\nshortened: 1\n')

  def test_negative_entry(self):
    with self.assertRaises(errors.ConfigError):
      base_matrix.parse_base_matrix('1 2 1\n3 -1\n')

  def test_save_and_load(self):
    path = os.path.join(absltest.get_default_test_tmpdir(), 'toy.txt')
    bm = base_matrix.BaseMatrix.create([[2, 1, 1]], punctured=(0,), t_hint=8)
    base_matrix.save_base_matrix(bm, path)
    loaded = base_matrix.load_base_matrix(path)
    self.assertEqual(loaded.name, 'toy')
    self.assertEqual(loaded.punctured, (0,))
    np.testing.assert_array_equal(loaded.b, bm.b)

  def test_missing_file(self):
    with self.assertRaises(errors.ConfigError):
      base_matrix.load_base_matrix('/nonexistent/base.txt')

  def test_resolve_code(self):
    self.assertEqual(base_matrix.resolve_code('ar4ja-r12').name, 'ar4ja-r12')
    path = os.path.join(absltest.get_default_test_tmpdir(), 'resolved.txt')
    base_matrix.save_base_matrix(
        base_matrix.BaseMatrix.create([[3, 3]], t_hint=4), path)
    self.assertEqual(base_matrix.resolve_code(path).name, 'resolved')
    with self.assertRaises(errors.ConfigError):
      base_matrix.resolve_code('turbo')


if __name__ == '__main__':
  absltest.main()

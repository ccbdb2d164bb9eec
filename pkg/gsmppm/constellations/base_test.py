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
"""Tests for gsmppm.constellations.base."""

import itertools

from absl.testing import absltest
from absl.testing import parameterized
from gsmppm import errors
from gsmppm.constellations import base
from gsmppm.constellations import natural
import numpy as np
from scipy import special


def _sym(text):
  return base.MppmSymbol.from_string(text)


class EnumerateMppmTest(parameterized.TestCase):

  @parameterized.parameters((5, 2, 10), (7, 2, 21), (8, 2, 28), (6, 3, 20))
  def test_size(self, l, l_a, expected):
    self.assertLen(base.enumerate_mppm(l, l_a), expected)

  def test_tiny(self):
    self.assertEqual([str(s) for s in base.enumerate_mppm(2, 1)], ['10', '01'])

  def test_first_symbol_packs_pulses_left(self):
    self.assertEqual(str(base.enumerate_mppm(7, 2)[0]), '1100000')

  def test_exhaustive_sizes_and_order(self):
    for l in range(2, 13):
      for l_a in range(1, l // 2 + 1):
        symbols = base.enumerate_mppm(l, l_a)
        self.assertLen(symbols, special.comb(l, l_a, exact=True))
        strings = [str(s) for s in symbols]
        self.assertEqual(strings, sorted(strings, reverse=True))
        self.assertTrue(all(s.num_pulses == l_a for s in symbols))

  @parameterized.parameters((5, 3), (5, 0), (1, 1))
  def test_invalid_bounds(self, l, l_a):
    with self.assertRaises(errors.ParameterError):
      base.enumerate_mppm(l, l_a)


class HammingTest(absltest.TestCase):

  def test_examples(self):
    self.assertEqual(base.hamming_symbols(_sym('10100'), _sym('01100')), 2)
    self.assertEqual(base.hamming_symbols(_sym('11000'), _sym('00011')), 4)
    self.assertEqual(base.hamming_symbols(_sym('10100'), _sym('10100')), 0)

  def test_length_mismatch(self):
    with self.assertRaises(errors.ParameterError):
      base.hamming_symbols(_sym('1010'), _sym('10100'))

  def test_bound_reached_iff_disjoint(self):
    symbols = base.enumerate_mppm(6, 2)
    for a, b in itertools.combinations(symbols, 2):
      distance = base.hamming_symbols(a, b)
      self.assertLessEqual(distance, 4)
      disjoint = not any(x and y for x, y in zip(a.slots, b.slots))
      self.assertEqual(distance == 4, disjoint)

  def test_distance_matrix_matches_pairwise(self):
    symbols = base.enumerate_mppm(5, 2)
    matrix = base.distance_matrix(symbols)
    for i, j in itertools.product(range(len(symbols)), repeat=2):
      self.assertEqual(matrix[i, j],
                       base.hamming_symbols(symbols[i], symbols[j]))


class PatternTest(parameterized.TestCase):

  def test_derived_counts(self):
    pattern = base.ModulationPattern.parse('4,4,2,5,2,32')
    self.assertEqual(pattern.n_s, 6)
    self.assertEqual(pattern.n_e, 4)
    self.assertEqual(pattern.n_idle, 2)
    self.assertEqual(pattern.m_max, 10)
    self.assertEqual(pattern.m_cap, 8)
    self.assertEqual(pattern.m, 5)
    self.assertEqual(str(pattern), '4,4,2,5,2,32')
    pattern.check()

  @parameterized.parameters('4,4,2,5,2,16', '4,4,3,7,2,64', '4,4,2,5,3,32',
                            '4,4,2,5,2')
  def test_invalid(self, text):
    with self.assertRaises(errors.ParameterError):
      base.ModulationPattern.parse(text).check()

  def test_relaxed_admits_ppm(self):
    base.ModulationPattern(1, 1, 1, 2, 1, 2).check(strict=False)


class BitsTest(absltest.TestCase):

  def test_labels_bits_inverse(self):
    labels = np.arange(32)
    bits = base.labels_to_bits(labels, 5)
    self.assertEqual(bits.shape, (32, 5))
    np.testing.assert_array_equal(bits[6], [0, 0, 1, 1, 0])
    np.testing.assert_array_equal(base.bits_to_labels(bits.ravel(), 5), labels)

  def test_indivisible(self):
    with self.assertRaises(errors.ParameterError):
      base.bits_to_labels(np.zeros(7), 5)


class ValidateTest(absltest.TestCase):

  def setUp(self):
    super().setUp()
    self.pattern = base.ModulationPattern.parse('4,4,2,5,2,32')
    self.entries = list(natural.natural_constellation(self.pattern).entries)

  def _kinds(self, entries):
    c = base.GsmppmConstellation(self.pattern, entries)
    return [v.kind for v in base.validate_constellation(c)]

  def test_duplicate_label(self):
    entries = self.entries[:-1] + [self.entries[-1]._replace(label=0)]
    kinds = self._kinds(entries)
    self.assertEqual(kinds.count('duplicate label'), 1)

  def test_incomplete(self):
    kinds = self._kinds(self.entries[:-1])
    self.assertEqual(kinds, ['label space incomplete'])

  def test_duplicate_symbol_in_group(self):
    entries = list(self.entries)
    entries[1] = entries[1]._replace(symbol=entries[0].symbol)
    self.assertIn('duplicate symbol in group', self._kinds(entries))

  def test_bad_symbol_and_group(self):
    entries = list(self.entries)
    entries[2] = entries[2]._replace(symbol=_sym('11100'))
    entries[3] = entries[3]._replace(group=base.AntennaGroup((2, 1)))
    kinds = self._kinds(entries)
    self.assertIn('invalid symbol', kinds)
    self.assertIn('invalid group', kinds)

  def test_tx_matrix(self):
    entry = base.ConstellationEntry(0, base.AntennaGroup((1, 2)),
                                    _sym('10100'))
    x = base.build_tx_matrix(entry, self.pattern)
    np.testing.assert_array_equal(x[0], [1, 0, 1, 0, 0])
    np.testing.assert_array_equal(x[1], [1, 0, 1, 0, 0])
    np.testing.assert_array_equal(x[2:], 0)


class GroupsTest(absltest.TestCase):

  def test_canonical(self):
    groups = [g.indices for g in base.canonical_groups(4, 2)]
    self.assertEqual(groups, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])

  def test_effective_and_additional(self):
    pattern = base.ModulationPattern.parse('4,4,2,5,2,32')
    effective = base.effective_groups(pattern)
    self.assertEqual([g.indices for g in effective],
                     [(1, 2), (3, 4), (1, 4), (2, 3)])
    extra = base.additional_groups(pattern, effective, 2)
    self.assertEqual([g.indices for g in extra], [(1, 3), (2, 4)])

  def test_override_validation(self):
    pattern = base.ModulationPattern.parse('4,4,2,5,2,32')
    with self.assertRaises(errors.ParameterError):
      base.effective_groups(pattern, [(1, 2), (1, 2), (1, 3), (1, 4)])
    with self.assertRaises(errors.ParameterError):
      base.effective_groups(pattern, [(1, 2), (3, 4), (1, 4), (2, 5)])


if __name__ == '__main__':
  absltest.main()

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
"""Tests for gsmppm.codes.encoder."""

import itertools

from absl.testing import absltest
from gsmppm import errors
from gsmppm.codes import base_matrix
from gsmppm.codes import encoder
from gsmppm.codes import peg
import numpy as np

_HAMMING = [[1, 1, 0, 1, 1, 0, 0],
            [1, 0, 1, 1, 0, 1, 0],
            [0, 1, 1, 1, 0, 0, 1]]


class EncoderTest(absltest.TestCase):

  def test_hamming_codebook(self):
    code = peg.LiftedCode.from_parity_check(_HAMMING)
    enc = encoder.Encoder(code)
    self.assertEqual(enc.k, 4)
    words = set()
    for bits in itertools.product((0, 1), repeat=4):
      codeword = enc.encode(np.array(bits))
      self.assertFalse(encoder.syndrome(code, codeword).any())
      np.testing.assert_array_equal(enc.info_from_codeword(codeword), bits)
      words.add(codeword.tobytes())
    self.assertLen(words, 16)

  def test_lifted_code(self):
    enc = encoder.lift_full_rank(base_matrix.builtin_code('i-pldpc'), 600)
    self.assertEqual(enc.k, 1800)
    generator = np.random.default_rng(0)
    u = generator.integers(0, 2, size=enc.k)
    codeword = enc.encode(u)
    self.assertFalse(encoder.syndrome(enc.code, codeword).any())
    self.assertLen(enc.transmitted(codeword), 3600)
    self.assertEqual(3600 % 5, 0)

  def test_zero_and_linearity(self):
    enc = encoder.lift_full_rank(base_matrix.builtin_code('ar4ja-r12'), 40)
    self.assertFalse(enc.encode(np.zeros(enc.k, dtype=int)).any())
    generator = np.random.default_rng(1)
    a, b = generator.integers(0, 2, size=(2, enc.k))
    np.testing.assert_array_equal(enc.encode(a ^ b),
                                  enc.encode(a) ^ enc.encode(b))

  def test_batch_encoding(self):
    enc = encoder.lift_full_rank(base_matrix.builtin_code('regular-36'), 20)
    u = np.random.default_rng(2).integers(0, 2, size=(5, enc.k))
    codewords = enc.encode(u)
    self.assertEqual(codewords.shape, (5, enc.code.n))
    for codeword in codewords:
      self.assertFalse(encoder.syndrome(enc.code, codeword).any())

  def test_rank_deficient(self):
    code = peg.LiftedCode.from_parity_check([[1, 1, 0], [1, 1, 0]])
    with self.assertRaises(errors.RankDeficientError):
      encoder.Encoder(code)

  def test_wrong_length(self):
    enc = encoder.Encoder(peg.LiftedCode.from_parity_check(_HAMMING))
    with self.assertRaises(errors.ParameterError):
      enc.encode(np.zeros(5, dtype=int))


if __name__ == '__main__':
  absltest.main()

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
"""Systematic encoding of lifted codes by GF(2) elimination.

The parity-check matrix is brought to reduced row-echelon form once, working
on bit-packed rows. Pivot columns carry parity and the remaining columns carry
information, so every codeword satisfies c[pivots] = A c[info] (mod 2) where A
is the reduced matrix restricted to the information columns.
"""

from typing import Optional, Tuple

from absl import logging
from gsmppm import errors
from gsmppm.codes import base_matrix
from gsmppm.codes import peg
import numpy as np


def _row_reduce(h: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
  """Returns (packed RREF rows, pivot columns) of a dense 0/1 matrix."""
  num_rows, num_cols = h.shape
  packed = np.packbits(h.astype(np.uint8), axis=1)
  pivots = []
  row = 0
  for col in range(num_cols):
    if row == num_rows:
      break
    byte, shift = divmod(col, 8)
    column = (packed[:, byte] >> (7 - shift)) & 1
    candidates = np.flatnonzero(column[row:]) + row
    if not candidates.size:
      continue
    pivot = candidates[0]
    if pivot != row:
      packed[[row, pivot]] = packed[[pivot, row]]
      column[[row, pivot]] = column[[pivot, row]]
    others = np.flatnonzero(column)
    others = others[others != row]
    packed[others] ^= packed[row]
    pivots.append(col)
    row += 1
  return packed[:row], np.array(pivots, dtype=np.int64)


class Encoder:
  """Systematic encoder for a full-rank lifted code."""

  def __init__(self, code: peg.LiftedCode):
    self._code = code
    n = code.n
    packed, pivots = _row_reduce(code.h.toarray())
    if len(pivots) < code.num_checks:
      raise errors.RankDeficientError(
          f'Parity-check matrix has rank {len(pivots)} < {code.num_checks}.')
    reduced = np.unpackbits(packed, axis=1, count=n)
    info = np.setdiff1d(np.arange(n), pivots)
    self._pivots = pivots
    self._info = info
    # Float products of 0/1 matrices are exact well below 2^24.
    self._parity = reduced[:, info].astype(np.float32)

  @property
  def code(self) -> peg.LiftedCode:
    return self._code

  @property
  def k(self) -> int:
    return len(self._info)

  @property
  def info_positions(self) -> np.ndarray:
    return self._info

  def encode(self, info_bits: np.ndarray) -> np.ndarray:
    """Maps (..., k) information bits to (..., n) codewords, pre-puncture."""
    u = np.asarray(info_bits, dtype=np.uint8)
    if u.shape[-1] != self.k:
      raise errors.ParameterError(
          f'Expected {self.k} information bits, got {u.shape[-1]}.')
    codeword = np.zeros(u.shape[:-1] + (self._code.n,), dtype=np.uint8)
    codeword[..., self._info] = u
    parity = (u.astype(np.float32) @ self._parity.T) % 2
    codeword[..., self._pivots] = parity.astype(np.uint8)
    return codeword

  def transmitted(self, codeword: np.ndarray) -> np.ndarray:
    """Drops punctured positions; the result has length s."""
    return np.asarray(codeword)[..., self._code.transmitted]

  def info_from_codeword(self, codeword: np.ndarray) -> np.ndarray:
    return np.asarray(codeword)[..., self._info]


def encode(code: peg.LiftedCode, info_bits: np.ndarray) -> np.ndarray:
  return Encoder(code).encode(info_bits)


def syndrome(code: peg.LiftedCode, codeword: np.ndarray) -> np.ndarray:
  return (code.h @ np.asarray(codeword, dtype=np.int64)) % 2


def lift_full_rank(bm: base_matrix.BaseMatrix,
                   t: int,
                   seed: int = 0,
                   max_attempts: int = 8,
                   cache_dir: Optional[str] = None) -> Encoder:
  """Lifts `bm` and returns an encoder, re-lifting until H has full rank."""
  for attempt in range(max_attempts):
    code = peg.lift_cached(bm, t, seed + attempt, cache_dir)
    try:
      return Encoder(code)
    except errors.RankDeficientError as e:
      logging.warning('Rejecting lift of %s with seed %d: %s', bm.name,
                      seed + attempt, e)
  raise errors.RankDeficientError(
      f'No full-rank lift of {bm.name} by {t} in {max_attempts} seeds.')

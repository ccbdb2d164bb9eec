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
"""Flooding belief-propagation decoding with puncturing.

Messages live on edge arrays in check-major order so that check updates are
segment reductions and variable updates are bincounts. Punctured positions
enter with channel LLR 0. LLRs are log P(0) / P(1).
"""

from typing import NamedTuple, Optional

from gsmppm import errors
from gsmppm.codes import peg
import numpy as np

MODES = ('sum-product', 'min-sum')
MIN_SUM_SCALE = 0.75
_MAX_MAGNITUDE = 30.
_TINY = 1e-12


class DecodeResult(NamedTuple):
  info_bits: Optional[np.ndarray]
  codeword: np.ndarray
  iterations: int
  converged: bool
  posterior: np.ndarray


def _phi(x: np.ndarray) -> np.ndarray:
  """phi(x) = -log tanh(x / 2), its own inverse on (0, inf)."""
  x = np.clip(x, _TINY, _MAX_MAGNITUDE)
  return -np.log(np.tanh(x / 2.))


class Decoder:
  """BP decoder bound to one code; reusable across frames."""

  def __init__(self, code: peg.LiftedCode,
               info_positions: Optional[np.ndarray] = None,
               mode: str = 'sum-product',
               scale: float = MIN_SUM_SCALE):
    if mode not in MODES:
      raise errors.ParameterError(f'Unknown mode {mode!r}; expected {MODES}.')
    h = code.h.tocsr()
    h.sort_indices()
    if (np.diff(h.indptr) == 0).any():
      raise errors.ParameterError('Parity-check matrix has an empty row.')
    self._code = code
    self._info = info_positions
    self._mode = mode
    self._scale = scale
    self._h = h
    self._starts = h.indptr[:-1]
    self._edge_check = np.repeat(np.arange(h.shape[0]), np.diff(h.indptr))
    self._edge_var = h.indices.astype(np.int64)

  @property
  def code(self) -> peg.LiftedCode:
    return self._code

  def _segment_sum(self, values):
    return np.add.reduceat(values, self._starts)

  def _check_update(self, v2c: np.ndarray) -> np.ndarray:
    negative = v2c < 0
    parity = self._segment_sum(negative.astype(np.int64)) % 2
    sign = np.where((parity[self._edge_check] ^ negative) == 1, -1., 1.)
    magnitude = np.abs(v2c)
    zero = magnitude == 0.
    zeros = self._segment_sum(zero.astype(np.int64))
    # Any other zero input forces a zero output.
    blocked = (zeros[self._edge_check] - zero) > 0

    if self._mode == 'sum-product':
      terms = _phi(magnitude)
      total = self._segment_sum(terms)
      out = _phi(np.maximum(total[self._edge_check] - terms, _TINY))
    else:
      min1 = np.minimum.reduceat(magnitude, self._starts)
      is_min = magnitude == min1[self._edge_check]
      masked = np.where(is_min, np.inf, magnitude)
      min2 = np.minimum.reduceat(masked, self._starts)
      ties = self._segment_sum(is_min.astype(np.int64)) > 1
      min2 = np.where(ties, min1, min2)
      out = self._scale * np.where(is_min, min2[self._edge_check],
                                   min1[self._edge_check])
      out = np.where(np.isfinite(out), out, 0.)
    return np.where(blocked, 0., sign * out)

  def decode(self, llrs: np.ndarray, max_iter: int = 100,
             early_stop: bool = True) -> DecodeResult:
    """Decodes one frame.

    Args:
      llrs: channel LLRs of the s transmitted positions, in order.
      max_iter: iteration cap, at least 1.
      early_stop: stop once the hard decision satisfies every check and no
        posterior is exactly zero.

    Returns:
      The decision, with info bits if the decoder knows their positions.
    """
    code = self._code
    llrs = np.asarray(llrs, dtype=float)
    if llrs.shape != (code.s,):
      raise errors.ParameterError(
          f'Expected {code.s} LLRs, got shape {llrs.shape}.')
    if max_iter < 1:
      raise errors.ParameterError(f'max_iter must be >= 1, got {max_iter}.')
    channel = np.zeros(code.n)
    channel[code.transmitted] = llrs
    channel = np.clip(channel, -_MAX_MAGNITUDE, _MAX_MAGNITUDE)

    c2v = np.zeros(len(self._edge_var))
    converged = False
    iteration = 0
    posterior = channel
    hard = np.zeros(code.n, dtype=np.uint8)
    for iteration in range(1, max_iter + 1):
      v2c = posterior[self._edge_var] - c2v
      c2v = self._check_update(v2c)
      posterior = channel + np.bincount(self._edge_var, weights=c2v,
                                        minlength=code.n)
      hard = (posterior < 0).astype(np.uint8)
      converged = (not (posterior == 0.).any() and
                   not ((self._h @ hard.astype(np.int64)) % 2).any())
      if converged and early_stop:
        break
    info = hard[self._info] if self._info is not None else None
    return DecodeResult(info, hard, iteration, converged, posterior)


def bp_decode(code: peg.LiftedCode, llrs: np.ndarray, max_iter: int = 100,
              mode: str = 'sum-product',
              info_positions: Optional[np.ndarray] = None) -> DecodeResult:
  return Decoder(code, info_positions, mode).decode(llrs, max_iter)

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
"""GSMPPM modulation and soft/hard demodulation.

LLRs follow the convention LLR = log P(b=0 | y) / P(b=1 | y), so a positive
value favours bit 0. All detectors assume perfect channel knowledge and
evaluate the Gaussian metric

    d_k = || y - (P_t / sqrt(N_a)) H x_k ||^2

for every one of the 2^m constellation entries, summed over receive antennas
and slots. Inputs may carry arbitrary leading batch dimensions.
"""

from typing import NamedTuple

from gsmppm import errors
from gsmppm.channel import turbulence
from gsmppm.constellations import base
import numpy as np
from scipy import special


class LlrFrame(NamedTuple):
  """Per-coded-bit LLRs of one frame, in transmission order."""
  values: np.ndarray

  @classmethod
  def from_symbols(cls, llrs: np.ndarray) -> 'LlrFrame':
    """Flattens (num_symbols, m) detector output, MSB of each label first."""
    values = np.asarray(llrs, dtype=float).reshape(-1)
    if not np.all(np.isfinite(values)):
      raise errors.ParameterError('LLRs must be finite.')
    return cls(values)


def modulate(bits: np.ndarray,
             c: base.GsmppmConstellation) -> base.ConstellationEntry:
  """Maps one m-bit word (MSB first) to its constellation entry."""
  bits = np.asarray(bits)
  if bits.shape != (c.m,):
    raise errors.ParameterError(f'Expected {c.m} bits, got shape {bits.shape}.')
  return c.entry(int(base.bits_to_labels(bits, c.m)[0]))


def modulate_labels(labels: np.ndarray,
                    c: base.GsmppmConstellation) -> np.ndarray:
  """Unscaled transmit matrices (..., n_tx, l) for integer labels."""
  return c.tx_matrices()[np.asarray(labels, dtype=np.int64)]


def symbol_metrics(y: np.ndarray, h: np.ndarray, c: base.GsmppmConstellation,
                   power: turbulence.PowerConfig) -> np.ndarray:
  """Squared-distance metrics of shape (..., 2^m), one per entry."""
  y = np.asarray(y, dtype=float)
  h = np.asarray(h, dtype=float)
  tx = c.tx_matrices()
  if y.shape[-1] != tx.shape[-1] or h.shape[-1] != tx.shape[-2]:
    raise errors.ParameterError(
        f'Received shape {y.shape} and channel shape {h.shape} do not match '
        f'transmit matrices of shape {tx.shape[1:]}.')
  # Direct ||y - a H X||^2; the expanded form cancels badly at low SNR.
  diff = y[..., None, :, :] - power.amplitude * (h[..., None, :, :] @ tx)
  return (diff**2).sum(axis=(-2, -1))


def _scaled_metrics(y, h, c, power, noise_sigma):
  if noise_sigma <= 0:
    raise errors.ParameterError(
        'noise_sigma must be positive; use demap_hard for noiseless input.')
  return symbol_metrics(y, h, c, power) / (2. * noise_sigma**2)


def llrs_from_metrics(scaled: np.ndarray, bits: np.ndarray,
                      exact: bool = False) -> np.ndarray:
  """Bitwise LLRs (..., m) from metrics already divided by 2 sigma^2."""
  ones = bits.astype(bool)
  expanded = scaled[..., :, None]
  if exact:
    log_p = -expanded
    log_p0 = special.logsumexp(np.where(~ones, log_p, -np.inf), axis=-2)
    log_p1 = special.logsumexp(np.where(ones, log_p, -np.inf), axis=-2)
    return log_p0 - log_p1
  min1 = np.where(ones, expanded, np.inf).min(axis=-2)
  min0 = np.where(~ones, expanded, np.inf).min(axis=-2)
  return min1 - min0


def max_log_map_llr(y: np.ndarray, h: np.ndarray, c: base.GsmppmConstellation,
                    power: turbulence.PowerConfig,
                    noise_sigma: float) -> np.ndarray:
  """Max-log-MAP LLRs (..., m)."""
  scaled = _scaled_metrics(y, h, c, power, noise_sigma)
  return llrs_from_metrics(scaled, c.label_bits())


def exact_map_llr(y: np.ndarray, h: np.ndarray, c: base.GsmppmConstellation,
                  power: turbulence.PowerConfig,
                  noise_sigma: float) -> np.ndarray:
  """Exact bitwise posterior LLRs under uniform priors."""
  scaled = _scaled_metrics(y, h, c, power, noise_sigma)
  return llrs_from_metrics(scaled, c.label_bits(), exact=True)


def demap_hard(y: np.ndarray, h: np.ndarray, c: base.GsmppmConstellation,
               power: turbulence.PowerConfig) -> np.ndarray:
  """Minimum-distance labels; ties resolve to the smallest label."""
  metrics = symbol_metrics(y, h, c, power)
  labels = np.array([e.label for e in c.entries], dtype=np.int64)
  return labels[np.argmin(metrics, axis=-1)]

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
"""Lognormal weak-turbulence MIMO channel for GSMPPM transmission.

Each gain h_ij satisfies ln(h_ij) ~ N(2 mu, 4 sigma_x^2) with mu = -sigma_x^2.
With `normalize=True` the gains are rescaled by exp(-2 sigma_x^2) so that
E[h^2] = 1 exactly. The received slot matrix is

    y = (P_t / sqrt(N_a)) * H @ x + w,    w ~ N(0, sigma^2).
"""

from typing import NamedTuple, Optional, Tuple

from gsmppm import errors
from gsmppm.constellations import base
import numpy as np

# Largest log-amplitude std in the weak-turbulence regime (sigma_I^2 < 1).
MAX_SIGMA_X = float(np.sqrt(np.log(2.) / 4.))

COHERENCE_MODES = ('symbol', 'codeword')


class FadingParams(NamedTuple):
  """Lognormal fading parameters."""
  sigma_x: float
  normalize: bool = True

  @property
  def mu(self) -> float:
    return -self.sigma_x**2

  @property
  def scintillation_index(self) -> float:
    """sigma_I, from sigma_x^2 = ln(1 + sigma_I^2) / 4."""
    return float(np.sqrt(np.expm1(4. * self.sigma_x**2)))

  def check(self):
    if not 0. <= self.sigma_x < MAX_SIGMA_X:
      raise errors.ParameterError(
          f'sigma_x must lie in [0, {MAX_SIGMA_X:.4f}), got {self.sigma_x}.')


class FadingDraw(NamedTuple):
  """Channel gains of shape (..., n_rx, n_tx)."""
  h: np.ndarray


class PowerConfig(NamedTuple):
  """Average/peak power bookkeeping for an MPPM frame."""
  p_avg: float
  tau: float
  gamma: float
  p_peak: float
  n_a: int

  @classmethod
  def for_pattern(cls, pattern: base.ModulationPattern,
                  p_avg: float = 1.) -> 'PowerConfig':
    tau = pattern.l_a / pattern.l
    return cls(p_avg=p_avg, tau=tau, gamma=1. / tau, p_peak=p_avg / tau,
               n_a=pattern.n_a)

  @property
  def amplitude(self) -> float:
    """Per-antenna pulse amplitude P_t / sqrt(N_a)."""
    return self.p_peak / np.sqrt(self.n_a)


def sample_fading(params: FadingParams,
                  n_rx: int,
                  n_tx: int,
                  generator: np.random.Generator,
                  batch: Tuple[int, ...] = ()) -> FadingDraw:
  """Draws i.i.d. lognormal gains with shape `batch + (n_rx, n_tx)`."""
  params.check()
  log_h = generator.normal(2. * params.mu, 2. * params.sigma_x,
                           size=tuple(batch) + (n_rx, n_tx))
  if params.normalize:
    log_h -= 2. * params.sigma_x**2
  return FadingDraw(np.exp(log_h))


def sample_frame_fading(params: FadingParams,
                        n_rx: int,
                        n_tx: int,
                        num_symbols: int,
                        generator: np.random.Generator,
                        coherence: str = 'symbol') -> FadingDraw:
  """Gains for a frame: one draw per symbol, or one shared by the codeword."""
  if coherence == 'symbol':
    return sample_fading(params, n_rx, n_tx, generator, (num_symbols,))
  if coherence == 'codeword':
    draw = sample_fading(params, n_rx, n_tx, generator)
    return FadingDraw(np.broadcast_to(draw.h, (num_symbols, n_rx, n_tx)))
  raise errors.ParameterError(
      f'Unknown coherence mode {coherence!r}; expected {COHERENCE_MODES}.')


def build_tx_vector(entry: base.ConstellationEntry,
                    pattern: base.ModulationPattern) -> np.ndarray:
  """Returns the unscaled n_tx x l transmit matrix of `entry`."""
  return base.build_tx_matrix(entry, pattern)


def noiseless_output(x: np.ndarray, h: np.ndarray,
                     power: PowerConfig) -> np.ndarray:
  """(P_t / sqrt(N_a)) * H @ x, broadcasting over leading dimensions."""
  if h.shape[-1] != x.shape[-2]:
    raise errors.ParameterError(
        f'Channel with {h.shape[-1]} inputs cannot carry {x.shape[-2]} '
        'antenna rows.')
  return power.amplitude * (h @ x)


def apply_channel(x: np.ndarray,
                  h: np.ndarray,
                  power: PowerConfig,
                  noise_sigma: float,
                  generator: Optional[np.random.Generator] = None) -> np.ndarray:
  """Returns y = (P_t / sqrt(N_a)) * H @ x + w."""
  y = noiseless_output(np.asarray(x, dtype=float), np.asarray(h, dtype=float),
                       power)
  if noise_sigma < 0:
    raise errors.ParameterError(f'noise_sigma must be >= 0, got {noise_sigma}.')
  if noise_sigma > 0:
    if generator is None:
      raise errors.ParameterError('A generator is required when noise > 0.')
    y = y + generator.normal(0., noise_sigma, size=y.shape)
  return y


def snr_to_noise_sigma(snr_db: float, rate: float, m: int, l_a: int,
                       p_peak: float) -> float:
  """Noise std from SNR = l_a * P_t^2 / (2 R m sigma^2)."""
  if rate <= 0 or m <= 0 or l_a <= 0 or p_peak <= 0:
    raise errors.ParameterError('rate, m, l_a and p_peak must be positive.')
  variance = l_a * p_peak**2 / (2. * rate * m * 10.**(snr_db / 10.))
  return float(np.sqrt(variance))

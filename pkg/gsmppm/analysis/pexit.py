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
"""Protograph EXIT (PEXIT) analysis with a detector-aware channel.

The channel seen by the decoder is summarized by the mutual information
between each label bit and its detector LLR, estimated by Monte Carlo. The
default LLRs are exact bitwise posteriors, so the average over bit positions
is the BICM capacity per coded bit; max-log-MAP LLRs overstate their own
reliability and are kept as an option.
Messages are modelled as consistent Gaussian LLRs whose mutual information is
the J function, so every edge of the protograph carries one MI value:

    VN -> CN: J( sqrt( sum_s b_sj J^-1(I_c(s, j))^2 - J^-1(I_c(i, j))^2
                       + J^-1(I_ch(j))^2 ) )
    CN -> VN: 1 - J( sqrt( sum_s b_is J^-1(1 - I_v(i, s))^2
                           - J^-1(1 - I_v(i, j))^2 ) )
    APP:      J( sqrt( sum_s b_sj J^-1(I_c(s, j))^2 + J^-1(I_ch(j))^2 ) )

Punctured columns see I_ch = 0. The decoding threshold is the smallest SNR
at which every APP value reaches 1 - 1e-6.
"""

import functools
from typing import NamedTuple, Optional, Tuple

from absl import logging
from gsmppm import errors
from gsmppm import modem
from gsmppm.channel import turbulence
from gsmppm.codes import base_matrix
from gsmppm.constellations import base
from gsmppm.utils import rng
import numpy as np

# Closed-form J approximation and its exact inverse.
H1, H2, H3 = 0.3073, 0.8935, 1.1064

MI_CONVERGED = 1. - 1e-6
DEFAULT_MAX_ITER = 1000
STRICT_MAX_ITER = 100
SNR_RANGE = (-8., 4.)
UPPER_LIMIT_DB = 10.
LOWER_LIMIT_DB = -30.
MIN_DETECTOR_SAMPLES = 10_000
DEFAULT_DETECTOR_SAMPLES = 20_000
MODES = ('average', 'mixture')
LLR_KINDS = ('exact', 'max_log')

_MI_MAX = 1. - 1e-12
_BATCH = 4096


def j_function(sigma):
  """MI of a consistent Gaussian LLR with standard deviation `sigma`."""
  sigma = np.asarray(sigma, dtype=float)
  if (sigma < 0).any():
    raise errors.ParameterError('sigma must be >= 0.')
  return (1. - 2.**(-H1 * sigma**(2. * H2)))**H3


def j_inverse(mi):
  """Inverse of `j_function`; MI = 1 maps to inf."""
  mi = np.asarray(mi, dtype=float)
  if ((mi < 0) | (mi > 1)).any():
    raise errors.ParameterError('mi must lie in [0, 1].')
  with np.errstate(divide='ignore'):
    return (-np.log2(1. - mi**(1. / H3)) / H1)**(1. / (2. * H2))


def _sigma_sq(mi):
  return j_inverse(np.clip(mi, 0., _MI_MAX))**2


class DetectorExitProfile(NamedTuple):
  snr_db: float
  i_ch: Tuple[float, ...]
  average: float
  n_samples: int


class DetectorSampler:
  """Fixed draws of label, fading and unit noise, reused at every SNR."""

  def __init__(self, c: base.GsmppmConstellation,
               fading: turbulence.FadingParams,
               n_samples: int = DEFAULT_DETECTOR_SAMPLES, seed: int = 0,
               rate: float = 0.5, p_avg: float = 1., llr: str = 'exact'):
    if n_samples < MIN_DETECTOR_SAMPLES:
      raise errors.ParameterError(
          f'n_samples must be >= {MIN_DETECTOR_SAMPLES}, got {n_samples}.')
    if llr not in LLR_KINDS:
      raise errors.ParameterError(
          f'Unknown LLR kind {llr!r}; expected {LLR_KINDS}.')
    c.require_valid()
    pattern = c.pattern
    generator = rng.stream(seed, rng.DETECTOR_EXIT)
    self._c = c
    self._rate = rate
    self._demap = (modem.exact_map_llr if llr == 'exact'
                   else modem.max_log_map_llr)
    self._power = turbulence.PowerConfig.for_pattern(pattern, p_avg)
    labels = generator.integers(0, len(c), size=n_samples)
    self._h = turbulence.sample_fading(fading, pattern.n_rx, pattern.n_tx,
                                       generator, (n_samples,)).h
    self._clean = turbulence.noiseless_output(
        modem.modulate_labels(labels, c), self._h, self._power)
    self._noise = generator.standard_normal(self._clean.shape)
    # +1 where the transmitted bit is 0, matching the LLR sign convention.
    self._signs = 1. - 2. * c.label_bits()[labels]
    self._profiles = {}

  @property
  def n_samples(self) -> int:
    return len(self._signs)

  def profile(self, snr_db: float) -> DetectorExitProfile:
    snr_db = float(snr_db)
    if snr_db in self._profiles:
      return self._profiles[snr_db]
    sigma = turbulence.snr_to_noise_sigma(snr_db, self._rate, self._c.m,
                                          self._c.pattern.l_a,
                                          self._power.p_peak)
    loss = np.zeros(self._c.m)
    for start in range(0, self.n_samples, _BATCH):
      window = slice(start, start + _BATCH)
      y = self._clean[window] + sigma * self._noise[window]
      llrs = self._demap(y, self._h[window], self._c, self._power, sigma)
      loss += np.logaddexp(0., -self._signs[window] * llrs).sum(axis=0)
    i_ch = np.clip(1. - loss / (self.n_samples * np.log(2.)), 0., 1.)
    profile = DetectorExitProfile(snr_db, tuple(float(v) for v in i_ch),
                                  float(i_ch.mean()), self.n_samples)
    self._profiles[snr_db] = profile
    return profile


@functools.lru_cache(maxsize=32)
def detector_sampler(c: base.GsmppmConstellation,
                     fading: turbulence.FadingParams,
                     n_samples: int = DEFAULT_DETECTOR_SAMPLES, seed: int = 0,
                     rate: float = 0.5, p_avg: float = 1.,
                     llr: str = 'exact') -> DetectorSampler:
  return DetectorSampler(c, fading, n_samples, seed, rate, p_avg, llr)


def detector_exit(c: base.GsmppmConstellation,
                  fading: turbulence.FadingParams,
                  snr_db: float,
                  n_samples: int = DEFAULT_DETECTOR_SAMPLES,
                  seed: int = 0,
                  rate: float = 0.5,
                  p_avg: float = 1.,
                  llr: str = 'exact') -> DetectorExitProfile:
  """Per-bit-position MI between label bits and detector LLRs."""
  return detector_sampler(c, fading, n_samples, seed, rate, p_avg,
                          llr).profile(snr_db)


class PexitTrace(NamedTuple):
  app: np.ndarray  # (iterations, p_v) a-posteriori MI per column.
  iterations: int
  converged: bool


def pexit_recursion(bm: base_matrix.BaseMatrix,
                    channel_mi,
                    max_iter: int = DEFAULT_MAX_ITER,
                    record: bool = False) -> PexitTrace:
  """Runs the PEXIT recursion for fixed per-column channel MI.

  Args:
    bm: base matrix; punctured columns get channel MI 0.
    channel_mi: scalar or length-p_v array of channel MI per column.
    max_iter: iteration cap.
    record: keep the APP MI of every iteration instead of the last only.

  Returns:
    The APP trajectory and whether every column reached `MI_CONVERGED`.
  """
  b = bm.b.astype(float)
  edges = bm.b > 0
  channel = np.broadcast_to(np.asarray(channel_mi, dtype=float),
                            (bm.p_v,)).copy()
  channel[list(bm.punctured)] = 0.
  sigma_ch = _sigma_sq(channel)
  from_checks = np.zeros_like(b)
  history = []
  app = np.zeros(bm.p_v)
  converged = False
  iteration = 0
  for iteration in range(1, max_iter + 1):
    s_c = np.where(edges, _sigma_sq(from_checks), 0.)
    total_v = (b * s_c).sum(axis=0) + sigma_ch
    to_checks = np.where(
        edges, j_function(np.sqrt(np.maximum(total_v - s_c, 0.))), 0.)

    t = np.where(edges, _sigma_sq(1. - to_checks), 0.)
    total_c = (b * t).sum(axis=1, keepdims=True)
    from_checks = np.where(
        edges, 1. - j_function(np.sqrt(np.maximum(total_c - t, 0.))), 0.)

    s_c = np.where(edges, _sigma_sq(from_checks), 0.)
    app = j_function(np.sqrt((b * s_c).sum(axis=0) + sigma_ch))
    if record:
      history.append(app)
    if (app >= MI_CONVERGED).all():
      converged = True
      break
  trajectory = np.array(history) if record else app[None]
  return PexitTrace(trajectory, iteration, converged)


def channel_mi_per_column(bm: base_matrix.BaseMatrix,
                          profile: DetectorExitProfile,
                          mode: str = 'average') -> np.ndarray:
  """Channel MI for every column (punctured entries are overwritten later).

  'average' gives every column the mean over bit positions. 'mixture'
  assigns the per-position values round-robin over the transmitted columns.
  """
  if mode == 'average':
    return np.full(bm.p_v, profile.average)
  if mode == 'mixture':
    values = np.zeros(bm.p_v)
    for k, j in enumerate(bm.transmitted_columns()):
      values[j] = profile.i_ch[k % len(profile.i_ch)]
    return values
  raise errors.ParameterError(f'Unknown mode {mode!r}; expected {MODES}.')


class PexitOptions(NamedTuple):
  """Knobs of the threshold search."""
  max_iter: int = DEFAULT_MAX_ITER
  tolerance_db: float = 0.01
  snr_range: Tuple[float, float] = SNR_RANGE
  n_samples: int = DEFAULT_DETECTOR_SAMPLES
  seed: int = 0
  mode: str = 'average'
  p_avg: float = 1.
  llr: str = 'exact'

  @classmethod
  def strict(cls, **kwargs) -> 'PexitOptions':
    """The 100-iteration setting matching the BP iteration cap."""
    return cls(max_iter=STRICT_MAX_ITER, **kwargs)


class ThresholdResult(NamedTuple):
  threshold_db: float
  iterations: int
  converged: bool
  bracket_width: float
  lower_db: float
  upper_db: float


def pexit_threshold(bm: base_matrix.BaseMatrix,
                    c: base.GsmppmConstellation,
                    fading: turbulence.FadingParams,
                    options: Optional[PexitOptions] = None) -> ThresholdResult:
  """Bisects the PEXIT decoding threshold over SNR.

  The lower bracket never converges and the upper bracket always does. The
  upper end is raised to 10 dB if needed and the lower end is lowered in 4 dB
  steps down to -30 dB.

  Args:
    bm: base matrix with punctured columns marked.
    c: constellation.
    fading: fading parameters.
    options: search options.

  Returns:
    The bracket midpoint as threshold.

  Raises:
    AnalysisError: if no SNR up to 10 dB converges.
  """
  options = options or PexitOptions()
  rate = float(base_matrix.effective_rate(bm))
  sampler = detector_sampler(c, fading, options.n_samples, options.seed, rate,
                             options.p_avg, options.llr)

  def run(snr_db):
    profile = sampler.profile(snr_db)
    mi = channel_mi_per_column(bm, profile, options.mode)
    return pexit_recursion(bm, mi, options.max_iter)

  lo, hi = options.snr_range
  upper = run(hi)
  if not upper.converged:
    hi = max(hi, UPPER_LIMIT_DB)
    upper = run(hi)
    if not upper.converged:
      raise errors.AnalysisError(
          f'PEXIT for {bm.name} on {c.name} does not converge at {hi} dB.')
  lower = run(lo)
  while lower.converged:
    if lo - 4. < LOWER_LIMIT_DB:
      raise errors.AnalysisError(
          f'PEXIT for {bm.name} converges down to {lo} dB.')
    hi, upper = lo, lower
    lo -= 4.
    lower = run(lo)
  while hi - lo > options.tolerance_db:
    mid = 0.5 * (lo + hi)
    trace = run(mid)
    if trace.converged:
      hi, upper = mid, trace
    else:
      lo = mid
  result = ThresholdResult(0.5 * (lo + hi), upper.iterations, True, hi - lo,
                           lo, hi)
  logging.info('PEXIT threshold of %s on %s: %.3f dB.', bm.name, c.name,
               result.threshold_db)
  return result


def mi_threshold(bm: base_matrix.BaseMatrix,
                 max_iter: int = DEFAULT_MAX_ITER,
                 tolerance: float = 1e-4) -> float:
  """Smallest uniform channel MI at which the recursion converges."""
  lo, hi = 0., 1.
  while hi - lo > tolerance:
    mid = 0.5 * (lo + hi)
    if pexit_recursion(bm, mid, max_iter).converged:
      hi = mid
    else:
      lo = mid
  return hi

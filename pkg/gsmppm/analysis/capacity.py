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
"""Constellation-constrained capacities and energy efficiency.

For a constellation Omega of 2^m entries, uniform inputs and perfect channel
knowledge,

    C_CM   = m - E[ log2( sum_{r in Omega} p(y|r,H) / p(y|x,H) ) ]
    C_BICM = m - sum_k E[ log2( sum_{r in Omega} p(y|r,H) /
                                sum_{r in Omega_k^b} p(y|r,H) ) ]

where Omega_k^b holds the entries whose k-th label bit equals the transmitted
bit b. Both expectations are estimated over the same draws of input, fading
and noise. Draws are generated in fixed batches from streams keyed by the
batch index, so two constellations of the same pattern evaluated with the same
seed see identical randomness.
"""

import functools
from typing import List, NamedTuple, Sequence, Tuple

from gsmppm import errors
from gsmppm import modem
from gsmppm.channel import turbulence
from gsmppm.constellations import base
from gsmppm.utils import pool
from gsmppm.utils import rng
import numpy as np
from scipy import special

DEFAULT_SAMPLES = 200_000
DEFAULT_RATE = 0.5
MIN_SAMPLES = 1000
SNR_RANGE = (-20., 40.)

_BATCH = 4096
_LN2 = np.log(2.)


class CapacityPoint(NamedTuple):
  snr_db: float
  c_cm: float
  c_bicm: float
  stderr_cm: float
  stderr_bicm: float
  n_samples: int
  seed: int


class SchemeDescriptor(NamedTuple):
  """Parameters of a modulation scheme for the energy-efficiency formulas."""
  scheme: str
  n_tx: int
  l: int
  rate: float
  n_a: int = 1
  l_a: int = 1
  p_avg: float = 1.
  peak_powers: Tuple[float, ...] = ()


def _batch_terms(index: int, c: base.GsmppmConstellation,
                 fading: turbulence.FadingParams, sigma: float, seed: int,
                 size: int, p_avg: float) -> Tuple[np.ndarray, np.ndarray]:
  """Per-sample CM and BICM loss terms (in bits) for one batch."""
  pattern = c.pattern
  generator = rng.stream(seed, rng.CAPACITY, index)
  power = turbulence.PowerConfig.for_pattern(pattern, p_avg)
  labels = generator.integers(0, len(c), size=size)
  h = turbulence.sample_fading(fading, pattern.n_rx, pattern.n_tx, generator,
                               (size,)).h
  noise = generator.standard_normal((size, pattern.n_rx, pattern.l))
  y = turbulence.noiseless_output(modem.modulate_labels(labels, c), h,
                                  power) + sigma * noise

  log_p = -modem.symbol_metrics(y, h, c, power) / (2. * sigma**2)
  log_total = special.logsumexp(log_p, axis=1)
  cm = (log_total - log_p[np.arange(size), labels]) / _LN2

  bits = c.label_bits()
  match = bits[None, :, :] == bits[labels][:, None, :]
  log_match = special.logsumexp(
      np.where(match, log_p[:, :, None], -np.inf), axis=1)
  bicm = ((log_total[:, None] - log_match) / _LN2).sum(axis=1)
  return cm, bicm


def estimate_capacity(c: base.GsmppmConstellation,
                      fading: turbulence.FadingParams,
                      snr_db: float,
                      n_samples: int = DEFAULT_SAMPLES,
                      seed: int = 0,
                      rate: float = DEFAULT_RATE,
                      p_avg: float = 1.,
                      workers: int = 1) -> CapacityPoint:
  """Estimates both capacities at one SNR.

  Args:
    c: a valid constellation.
    fading: lognormal fading parameters; sigma_x = 0 disables fading.
    snr_db: SNR as defined by `turbulence.snr_to_noise_sigma`.
    n_samples: Monte-Carlo sample count, at least 1000.
    seed: root seed.
    rate: code rate entering the SNR definition.
    p_avg: average transmit power.
    workers: process count for batch evaluation.

  Returns:
    The capacity estimates with their standard errors.
  """
  if n_samples < MIN_SAMPLES:
    raise errors.ParameterError(
        f'n_samples must be >= {MIN_SAMPLES}, got {n_samples}.')
  c.require_valid()
  power = turbulence.PowerConfig.for_pattern(c.pattern, p_avg)
  sigma = turbulence.snr_to_noise_sigma(snr_db, rate, c.m, c.pattern.l_a,
                                        power.p_peak)
  sizes = [_BATCH] * (n_samples // _BATCH)
  if n_samples % _BATCH:
    sizes.append(n_samples % _BATCH)
  run = functools.partial(_run_batch, c=c, fading=fading, sigma=sigma,
                          seed=seed, p_avg=p_avg)
  results = pool.map_ordered(run, list(enumerate(sizes)), workers)
  cm = np.concatenate([r[0] for r in results])
  bicm = np.concatenate([r[1] for r in results])
  root_n = np.sqrt(n_samples)
  return CapacityPoint(
      snr_db=float(snr_db),
      c_cm=float(c.m - cm.mean()),
      c_bicm=float(c.m - bicm.mean()),
      stderr_cm=float(cm.std(ddof=1) / root_n),
      stderr_bicm=float(bicm.std(ddof=1) / root_n),
      n_samples=n_samples,
      seed=seed)


def _run_batch(index_and_size, **kwargs):
  index, size = index_and_size
  return _batch_terms(index, size=size, **kwargs)


def cm_capacity(c, fading, snr_db, n_samples=DEFAULT_SAMPLES, seed=0,
                **kwargs) -> CapacityPoint:
  """CM capacity; the BICM field is filled from the same draws."""
  return estimate_capacity(c, fading, snr_db, n_samples, seed, **kwargs)


def bicm_capacity(c, fading, snr_db, n_samples=DEFAULT_SAMPLES, seed=0,
                  **kwargs) -> CapacityPoint:
  """BICM capacity; the CM field is filled from the same draws."""
  return estimate_capacity(c, fading, snr_db, n_samples, seed, **kwargs)


def capacity_sweep(c: base.GsmppmConstellation,
                   fading: turbulence.FadingParams,
                   snr_grid: Sequence[float],
                   **kwargs) -> List[CapacityPoint]:
  return [estimate_capacity(c, fading, snr, **kwargs) for snr in snr_grid]


def rate_to_snr(c: base.GsmppmConstellation,
                fading: turbulence.FadingParams,
                target_bits: float,
                tolerance_db: float = 0.01,
                snr_range: Tuple[float, float] = SNR_RANGE,
                **kwargs) -> float:
  """Bisects the SNR at which the BICM capacity reaches `target_bits`.

  Every evaluation reuses the same seed, so the estimated curve is a smooth
  function of SNR and the bisection is well defined.

  Args:
    c: a valid constellation.
    fading: fading parameters.
    target_bits: capacity target in bits per channel use.
    tolerance_db: bracket width at exit.
    snr_range: initial bracket in dB.
    **kwargs: forwarded to `estimate_capacity`.

  Returns:
    The midpoint of the final bracket.

  Raises:
    BracketError: if the target is not reached inside `snr_range`.
  """
  if not 0. < target_bits < c.m:
    raise errors.BracketError(
        f'Target {target_bits} bits is unreachable for m = {c.m}.')
  lo, hi = snr_range

  def capacity(snr_db):
    return estimate_capacity(c, fading, snr_db, **kwargs).c_bicm

  if not capacity(lo) < target_bits < capacity(hi):
    raise errors.BracketError(
        f'Target {target_bits} bits not bracketed in [{lo}, {hi}] dB.')
  while hi - lo > tolerance_db:
    mid = 0.5 * (lo + hi)
    if capacity(mid) < target_bits:
      lo = mid
    else:
      hi = mid
  return 0.5 * (lo + hi)


def _floor_log2(value: float) -> int:
  return int(np.floor(np.log2(value) + 1e-12))


def energy_efficiency(d: SchemeDescriptor) -> float:
  """Information bits per unit symbol energy.

  Supported schemes (all with average power `p_avg`):
    gsmppm: R (floor(log2 N_s) + floor(log2 M_max)) / (l_a P_t^2),
      P_t = P_a l / l_a.
    gsppm: R (N_tx + floor(log2 l)) / P_t^2, P_t = P_a l.
    gsm_mpapm: A R floor(log2(N_s M_max A)) / (l_a sum_i P_ti^2) for the A
      peak powers P_ti.

  Args:
    d: the scheme descriptor.

  Returns:
    The energy efficiency.
  """
  n_s = special.comb(d.n_tx, d.n_a, exact=True)
  m_max = special.comb(d.l, d.l_a, exact=True)
  if d.scheme == 'gsmppm':
    p_t = d.p_avg * d.l / d.l_a
    bits = _floor_log2(n_s) + _floor_log2(m_max)
    return d.rate * bits / (d.l_a * p_t**2)
  if d.scheme == 'gsppm':
    p_t = d.p_avg * d.l
    return d.rate * (d.n_tx + _floor_log2(d.l)) / p_t**2
  if d.scheme == 'gsm_mpapm':
    if not d.peak_powers:
      raise errors.ParameterError('gsm_mpapm needs peak_powers.')
    levels = len(d.peak_powers)
    bits = _floor_log2(n_s * m_max * levels)
    return (levels * d.rate * bits /
            (d.l_a * sum(p**2 for p in d.peak_powers)))
  raise errors.ParameterError(f'Unknown scheme {d.scheme!r}.')

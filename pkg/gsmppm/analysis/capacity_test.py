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
"""Tests for gsmppm.analysis.capacity."""

from absl.testing import absltest
from absl.testing import parameterized
from gsmppm import errors
from gsmppm.analysis import capacity
from gsmppm.channel import turbulence
from gsmppm.constellations import base
from gsmppm.constellations import natural
import numpy as np

_NO_FADING = turbulence.FadingParams(0.)
_WEAK = turbulence.FadingParams(0.1)


def _binary_ppm():
  return natural.natural_constellation(base.ModulationPattern(1, 1, 1, 2, 1, 2))


def _binary_awgn_capacity(amplitude: float, sigma: float) -> float:
  """Binary antipodal input capacity by Gauss-Hermite quadrature."""
  nodes, weights = np.polynomial.hermite_e.hermegauss(120)
  y = amplitude + sigma * nodes
  loss = np.logaddexp(0., -2. * amplitude * y / sigma**2) / np.log(2.)
  return 1. - float(np.dot(weights, loss) / np.sqrt(2. * np.pi))


class CapacityTest(parameterized.TestCase):

  @parameterized.parameters(-3., 0., 4.)
  def test_binary_ppm_matches_quadrature(self, snr_db):
    c = _binary_ppm()
    point = capacity.estimate_capacity(c, _NO_FADING, snr_db,
                                       n_samples=40_000, seed=3)
    power = turbulence.PowerConfig.for_pattern(c.pattern)
    sigma = turbulence.snr_to_noise_sigma(snr_db, capacity.DEFAULT_RATE, 1, 1,
                                          power.p_peak)
    # Two slots, one pulse: the points differ by A in each slot, which is
    # antipodal signalling with amplitude A / sqrt(2).
    expected = _binary_awgn_capacity(power.amplitude / np.sqrt(2.), sigma)
    self.assertAlmostEqual(point.c_cm, expected, delta=0.02)
    # With m = 1 both capacities coincide sample by sample.
    self.assertAlmostEqual(point.c_cm, point.c_bicm, places=9)

  def test_high_and_low_snr_limits(self):
    c = natural.natural_constellation(base.ModulationPattern.parse(
        '4,4,2,5,2,32'))
    high = capacity.estimate_capacity(c, _WEAK, 30., n_samples=2000)
    low = capacity.estimate_capacity(c, _WEAK, -40., n_samples=2000)
    self.assertAlmostEqual(high.c_cm, 5., delta=0.05)
    self.assertAlmostEqual(high.c_bicm, 5., delta=0.05)
    self.assertLess(low.c_cm, 0.05)
    self.assertLess(low.c_bicm, 0.05)

  def test_bicm_never_exceeds_cm(self):
    c = natural.natural_constellation(base.ModulationPattern.parse(
        '4,4,2,5,2,32'))
    for snr in (-5., 0., 5.):
      point = capacity.estimate_capacity(c, _WEAK, snr, n_samples=4000)
      self.assertLessEqual(point.c_bicm,
                           point.c_cm + 3. * point.stderr_bicm)

  def test_stderr_shrinks_with_samples(self):
    c = natural.natural_constellation(base.ModulationPattern.parse(
        '4,4,2,5,2,32'))
    small = capacity.estimate_capacity(c, _WEAK, 0., n_samples=4000)
    large = capacity.estimate_capacity(c, _WEAK, 0., n_samples=16000)
    self.assertBetween(large.stderr_cm / small.stderr_cm, 0.35, 0.65)

  def test_same_seed_is_reproducible(self):
    c = _binary_ppm()
    a = capacity.estimate_capacity(c, _NO_FADING, 0., n_samples=5000, seed=9)
    b = capacity.estimate_capacity(c, _NO_FADING, 0., n_samples=5000, seed=9)
    self.assertEqual(a, b)

  def test_workers_do_not_change_estimate(self):
    c = _binary_ppm()
    a = capacity.estimate_capacity(c, _NO_FADING, 0., n_samples=10_000)
    b = capacity.estimate_capacity(c, _NO_FADING, 0., n_samples=10_000,
                                   workers=2)
    self.assertAlmostEqual(a.c_cm, b.c_cm, places=12)

  def test_sweep_is_monotone_in_snr(self):
    c = _binary_ppm()
    points = capacity.capacity_sweep(c, _NO_FADING, [-6., 0., 6.],
                                     n_samples=8000)
    values = [p.c_bicm for p in points]
    self.assertEqual(values, sorted(values))

  def test_too_few_samples(self):
    with self.assertRaises(errors.ParameterError):
      capacity.estimate_capacity(_binary_ppm(), _NO_FADING, 0., n_samples=10)

  def test_rate_to_snr_hits_target(self):
    c = _binary_ppm()
    snr = capacity.rate_to_snr(c, _NO_FADING, 0.5, tolerance_db=0.05,
                               n_samples=4000)
    point = capacity.estimate_capacity(c, _NO_FADING, snr, n_samples=4000)
    self.assertAlmostEqual(point.c_bicm, 0.5, delta=0.01)

  def test_rate_to_snr_unreachable(self):
    with self.assertRaises(errors.BracketError):
      capacity.rate_to_snr(_binary_ppm(), _NO_FADING, 1.5, n_samples=1000)


class EnergyEfficiencyTest(absltest.TestCase):

  def test_gsmppm(self):
    d = capacity.SchemeDescriptor('gsmppm', n_tx=4, l=5, rate=0.5, n_a=2,
                                  l_a=2)
    self.assertAlmostEqual(capacity.energy_efficiency(d), 0.2, places=12)

  def test_gsppm(self):
    d = capacity.SchemeDescriptor('gsppm', n_tx=4, l=5, rate=0.5)
    self.assertAlmostEqual(capacity.energy_efficiency(d), 0.12, places=12)

  def test_gsm_mpapm(self):
    d = capacity.SchemeDescriptor('gsm_mpapm', n_tx=4, l=5, rate=0.5, n_a=2,
                                  l_a=2, peak_powers=(1., 4.))
    value = capacity.energy_efficiency(d)
    self.assertAlmostEqual(value, 3. / 17., places=12)
    self.assertAlmostEqual(value, 0.18, places=2)

  def test_gsmppm_is_most_efficient(self):
    values = [
        capacity.energy_efficiency(capacity.SchemeDescriptor(
            'gsmppm', n_tx=4, l=5, rate=0.5, n_a=2, l_a=2)),
        capacity.energy_efficiency(capacity.SchemeDescriptor(
            'gsm_mpapm', n_tx=4, l=5, rate=0.5, n_a=2, l_a=2,
            peak_powers=(1., 4.))),
        capacity.energy_efficiency(capacity.SchemeDescriptor(
            'gsppm', n_tx=4, l=5, rate=0.5)),
    ]
    self.assertEqual(values, sorted(values, reverse=True))

  def test_unknown_scheme(self):
    with self.assertRaises(errors.ParameterError):
      capacity.energy_efficiency(capacity.SchemeDescriptor('qam', 4, 5, 0.5))


if __name__ == '__main__':
  absltest.main()

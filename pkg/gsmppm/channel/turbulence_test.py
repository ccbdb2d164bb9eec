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
"""Tests for gsmppm.channel.turbulence."""

from absl.testing import absltest
from absl.testing import parameterized
from gsmppm import errors
from gsmppm.channel import turbulence
from gsmppm.constellations import base
from gsmppm.utils import rng
import numpy as np
from scipy import stats


class FadingTest(parameterized.TestCase):

  @parameterized.parameters(0.2, 0.3, 0.4)
  def test_normalized_second_moment(self, sigma_x):
    params = turbulence.FadingParams(sigma_x)
    generator = rng.stream(0, round(sigma_x * 10))
    h = turbulence.sample_fading(params, 10, 10, generator, batch=(10**4,)).h
    squares = h.ravel()**2
    stderr = squares.std() / np.sqrt(squares.size)
    self.assertLess(abs(squares.mean() - 1.), 3 * stderr)

  def test_scintillation_index(self):
    self.assertAlmostEqual(
        turbulence.FadingParams(0.3).scintillation_index, 0.66, delta=0.01)

  def test_tiny_sigma_gives_unit_gains(self):
    h = turbulence.sample_fading(turbulence.FadingParams(1e-6), 4, 4,
                                 rng.stream(1)).h
    np.testing.assert_allclose(h, 1., rtol=1e-4)

  def test_unnormalized_matches_lognormal(self):
    params = turbulence.FadingParams(0.3, normalize=False)
    h = turbulence.sample_fading(params, 1, 1, rng.stream(2),
                                 batch=(10**5,)).h.ravel()
    reference = stats.lognorm(s=2 * params.sigma_x,
                              scale=np.exp(2 * params.mu))
    self.assertGreater(stats.kstest(h, reference.cdf).pvalue, 1e-3)

  def test_weak_turbulence_bound(self):
    with self.assertRaises(errors.ParameterError):
      turbulence.FadingParams(0.45).check()

  def test_codeword_coherence_shares_draw(self):
    draw = turbulence.sample_frame_fading(turbulence.FadingParams(0.3), 4, 4, 5,
                                          rng.stream(3), coherence='codeword')
    self.assertEqual(draw.h.shape, (5, 4, 4))
    np.testing.assert_array_equal(draw.h[0], draw.h[4])
    with self.assertRaises(errors.ParameterError):
      turbulence.sample_frame_fading(turbulence.FadingParams(0.3), 4, 4, 5,
                                     rng.stream(3), coherence='slot')


class ChannelTest(absltest.TestCase):

  def setUp(self):
    super().setUp()
    self.pattern = base.ModulationPattern.parse('4,4,2,5,2,32')
    self.power = turbulence.PowerConfig.for_pattern(self.pattern)
    self.entry = base.ConstellationEntry(
        0, base.AntennaGroup((1, 2)), base.MppmSymbol.from_string('10100'))

  def test_power_config(self):
    self.assertAlmostEqual(self.power.p_peak, 2.5)
    self.assertAlmostEqual(self.power.p_peak * self.power.tau, self.power.p_avg)

  def test_tx_vector(self):
    x = turbulence.build_tx_vector(self.entry, self.pattern)
    np.testing.assert_array_equal(x[:2], [[1, 0, 1, 0, 0]] * 2)
    np.testing.assert_array_equal(x[2:], 0)

  def test_symbol_energy(self):
    x = turbulence.build_tx_vector(self.entry, self.pattern)
    scaled = self.power.amplitude * x
    self.assertAlmostEqual((scaled**2).sum(), self.pattern.l_a *
                           self.power.p_peak**2)
    self.assertAlmostEqual((scaled[:, 0]**2).sum(), self.power.p_peak**2)

  def test_noiseless_identity_channel(self):
    x = turbulence.build_tx_vector(self.entry, self.pattern)
    y = turbulence.apply_channel(x, np.eye(4), self.power, 0.)
    np.testing.assert_allclose(y, self.power.amplitude * x)

  def test_zero_input_gives_noise(self):
    y = turbulence.apply_channel(np.zeros((4, 5000)), np.ones((4, 4)),
                                 self.power, 0.7, rng.stream(4))
    self.assertAlmostEqual(y.var(), 0.49, delta=0.02)

  def test_scalar_channel(self):
    power = turbulence.PowerConfig(p_avg=1., tau=0.5, gamma=2., p_peak=2.,
                                   n_a=1)
    y = turbulence.apply_channel(np.ones((1, 1)), np.ones((1, 1)), power, 0.)
    self.assertAlmostEqual(y[0, 0], 2.)

  def test_linearity(self):
    x = turbulence.build_tx_vector(self.entry, self.pattern)
    h = np.abs(rng.stream(5).normal(size=(4, 4)))
    y1 = turbulence.apply_channel(x, h, self.power, 0.)
    y3 = turbulence.apply_channel(3. * x, h, self.power, 0.)
    np.testing.assert_allclose(y3, 3. * y1)

  def test_dimension_mismatch(self):
    with self.assertRaises(errors.ParameterError):
      turbulence.apply_channel(np.zeros((3, 5)), np.ones((4, 4)), self.power,
                               0.)


class SnrTest(absltest.TestCase):

  def test_reference_value(self):
    sigma = turbulence.snr_to_noise_sigma(0., 0.5, 5, 2, 2.5)
    self.assertAlmostEqual(sigma**2, 2 * 2.5**2 / (2 * 0.5 * 5))
    self.assertAlmostEqual(sigma**2, 2.5)

  def test_three_db_halves_variance(self):
    a = turbulence.snr_to_noise_sigma(1., 0.5, 5, 2, 2.5)
    b = turbulence.snr_to_noise_sigma(1. + 10 * np.log10(2.), 0.5, 5, 2, 2.5)
    self.assertAlmostEqual(b**2, a**2 / 2)

  def test_high_snr(self):
    self.assertLess(turbulence.snr_to_noise_sigma(200., 0.5, 5, 2, 2.5), 1e-9)


if __name__ == '__main__':
  absltest.main()

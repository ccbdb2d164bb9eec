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
"""Tests for gsmppm.simulation.harness."""

from absl.testing import absltest
from absl.testing import parameterized
from gsmppm import errors
from gsmppm.logging import base as logging_base
from gsmppm.simulation import config as config_lib
from gsmppm.simulation import harness
import numpy as np

_SMALL = config_lib.ExperimentConfig(
    pattern='4,4,2,5,2,32',
    constellation='published',
    code='regular-36',
    lift_factor=60,
    min_frame_errors=50,
    max_frames=40,
    chunk_frames=10,
    snr_db=(-2., 0.),
    seed=11)


class _ListLogger(logging_base.Logger):

  def __init__(self):
    self.rows = []

  def write(self, data):
    self.rows.append(dict(data))


def _counts(points):
  return [p._replace(seconds=0.) for p in points]


class HarnessTest(parameterized.TestCase):

  def test_high_snr_is_error_free(self):
    cfg = config_lib.ExperimentConfig(
        pattern='4,4,2,5,2,32', constellation='adm', code='i-pldpc',
        snr_db=(6.,), min_frame_errors=50, max_frames=50, seed=1)
    point, = harness.run_ber(cfg)
    self.assertEqual(point.frames, 50)
    self.assertEqual(point.bits, 50 * 1800)
    self.assertEqual(point.bit_errors, 0)
    self.assertEqual(point.ber, 0.)

  def test_coin_flip_regime(self):
    cfg = _SMALL._replace(lift_factor=150, snr_db=(-30.,), max_frames=1000,
                          chunk_frames=20)
    point, = harness.run_ber(cfg)
    # Every frame fails, so the run stops at the first chunk past 50 errors.
    self.assertEqual(point.frames, 60)
    self.assertEqual(point.frame_errors, 60)
    self.assertBetween(point.ber, 0.4, 0.6)
    self.assertEqual(point.ber, point.bit_errors / point.bits)
    self.assertEqual(point.fer, 1.)

  @parameterized.product(
      pattern=('4,4,2,5,2,32', '4,4,2,6,2,32', '4,4,2,7,2,64', '4,4,2,8,2,64'),
      code=('i-pldpc', 'ar4ja-r12', 'regular-36'))
  def test_noiseless_loop(self, pattern, code):
    cfg = _SMALL._replace(pattern=pattern, code=code, lift_factor=30)
    outcomes = harness.noiseless_check(cfg, num_frames=100)
    self.assertLen(outcomes, 100)
    self.assertEqual(sum(o.bit_errors for o in outcomes), 0)

  def test_noiseless_loop_adm(self):
    cfg = _SMALL._replace(constellation='adm', code='i-pldpc', lift_factor=30)
    outcomes = harness.noiseless_check(cfg, num_frames=100)
    self.assertEqual(sum(o.bit_errors for o in outcomes), 0)

  def test_deterministic(self):
    first = harness.run_ber(_SMALL)
    second = harness.run_ber(_SMALL)
    self.assertEqual(_counts(first), _counts(second))
    self.assertEqual([p.snr_db for p in first], [-2., 0.])

  def test_worker_count_does_not_change_counts(self):
    single = harness.run_ber(_SMALL)
    parallel = harness.run_ber(_SMALL._replace(workers=2))
    self.assertEqual(_counts(single), _counts(parallel))

  def test_seed_changes_frames(self):
    system = harness.build_system(_SMALL)
    other = harness.build_system(_SMALL._replace(seed=12))
    _, info_a, pi_a, _ = harness._random_frame(system, 0, 0)
    _, info_b, pi_b, _ = harness._random_frame(other, 0, 0)
    self.assertFalse(np.array_equal(info_a, info_b))
    self.assertFalse(np.array_equal(pi_a.permutation, pi_b.permutation))

  def test_fixed_interleaver_runs(self):
    point, = harness.run_ber(
        _SMALL._replace(interleaver='fixed', snr_db=(8.,), max_frames=10))
    self.assertEqual(point.frames, 10)
    self.assertLess(point.ber, 0.05)

  def test_logger_receives_rows(self):
    logger = _ListLogger()
    harness.run_ber(_SMALL, logger=logger)
    self.assertLen(logger.rows, 2)
    self.assertEqual(tuple(logger.rows[0]), harness.BER_COLUMNS)

  def test_invalid_config(self):
    with self.assertRaises(errors.ConfigError):
      harness.run_ber(_SMALL._replace(lift_factor=31))

  def test_adm_curve_below_natural(self):
    cfg = config_lib.ExperimentConfig(
        pattern='4,4,2,5,2,32', code='i-pldpc', lift_factor=150,
        snr_db=(-2., -1., 0.), min_frame_errors=40, max_frames=200,
        chunk_frames=20, seed=5)
    curves = {
        name: harness.run_ber(cfg._replace(constellation=name))
        for name in ('adm', 'natural')
    }
    self.assertLess(sum(p.ber for p in curves['adm']),
                    sum(p.ber for p in curves['natural']))
    self.assertLessEqual(curves['adm'][-1].ber, curves['natural'][-1].ber)

  def test_spans_cover_chunk(self):
    spans = harness._spans(1, 20, 7, 3)
    self.assertEqual(spans, [(1, 20, 3), (1, 23, 2), (1, 25, 2)])
    self.assertEqual(harness._spans(0, 0, 1, 4), [(0, 0, 1)])


if __name__ == '__main__':
  absltest.main()

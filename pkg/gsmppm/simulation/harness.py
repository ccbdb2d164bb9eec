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
"""Monte-Carlo BER simulation of a PLDPC-coded GSMPPM link.

Each frame runs

    info bits -> encode -> puncture -> interleave -> modulate -> fading
    -> noise -> max-log-MAP -> deinterleave -> BP decode

with every random draw taken from streams keyed by (seed, SNR index, frame
index). Frames are simulated in chunks of `chunk_frames` and the stopping rule
is only evaluated between chunks, so the emitted counts do not depend on the
number of worker processes.
"""

import functools
import time
from typing import List, NamedTuple, Optional, Sequence, Tuple

from absl import logging
from gsmppm import modem
from gsmppm.channel import turbulence
from gsmppm.codes import base_matrix
from gsmppm.codes import decoder
from gsmppm.codes import encoder
from gsmppm.constellations import base
from gsmppm.constellations import factory
from gsmppm.logging import base as logging_base
from gsmppm.simulation import config as config_lib
from gsmppm.simulation import interleaver
from gsmppm.utils import pool
from gsmppm.utils import rng
import numpy as np

BER_COLUMNS = ('snr_db', 'bit_errors', 'bits', 'frames', 'frame_errors', 'ber',
               'fer', 'seconds')

# LLR magnitude given to hard decisions in the noiseless loop.
_NOISELESS_LLR = 20.


class BerPoint(NamedTuple):
  """Exact error counters at one SNR."""
  snr_db: float
  bit_errors: int
  bits: int
  frames: int
  frame_errors: int
  ber: float
  fer: float
  seconds: float


class FrameOutcome(NamedTuple):
  bit_errors: int
  frame_error: bool
  iterations: int


class System(NamedTuple):
  """A configuration resolved into the objects a frame needs."""
  config: config_lib.ExperimentConfig
  constellation: base.GsmppmConstellation
  encoder: encoder.Encoder
  decoder: decoder.Decoder
  power: turbulence.PowerConfig
  rate: float

  @property
  def pattern(self) -> base.ModulationPattern:
    return self.constellation.pattern

  @property
  def s(self) -> int:
    return self.encoder.code.s

  def noise_sigma(self, snr_db: float) -> float:
    p = self.pattern
    return turbulence.snr_to_noise_sigma(snr_db, self.rate, p.m, p.l_a,
                                         self.power.p_peak)


def build_system(config: config_lib.ExperimentConfig) -> System:
  """Validates `config` and builds its constellation, code and decoder."""
  config.validate()
  pattern = config.modulation_pattern
  c = factory.make_constellation(pattern, config.constellation,
                                 config.constellation_file, config.design_seed)
  bm = config.load_base_matrix()
  enc = encoder.lift_full_rank(bm, config.t, config.lift_seed,
                               cache_dir=config.cache_dir)
  dec = decoder.Decoder(enc.code, enc.info_positions, config.decoder_mode)
  rate = float(base_matrix.effective_rate(bm))
  logging.info('Built %s + %s (%s, k=%d, s=%d, rate %.4f) for %s.', bm.name,
               c.name, pattern, enc.k, enc.code.s, rate, pattern)
  return System(config, c, enc, dec, turbulence.PowerConfig.for_pattern(pattern),
                rate)


# Worker processes rebuild the system once per process.
_cached_system = functools.lru_cache(maxsize=4)(build_system)


def _random_frame(system: System, snr_index: int, frame_index: int):
  cfg = system.config
  generator = rng.stream(cfg.seed, rng.FRAME, snr_index, frame_index)
  info = generator.integers(0, 2, size=system.encoder.k, dtype=np.uint8)
  coded = system.encoder.transmitted(system.encoder.encode(info))
  pi = interleaver.frame_interleaver(system.s, cfg.seed, snr_index,
                                     frame_index, cfg.interleaver)
  labels = base.bits_to_labels(pi.interleave(coded), system.pattern.m)
  return generator, info, pi, labels


def _tally(system: System, info: np.ndarray, llrs: np.ndarray) -> FrameOutcome:
  result = system.decoder.decode(llrs, system.config.t_bp)
  bit_errors = int(np.count_nonzero(result.info_bits != info))
  return FrameOutcome(bit_errors, bit_errors > 0, result.iterations)


def simulate_frame(system: System, snr_index: int,
                   frame_index: int) -> FrameOutcome:
  """Runs one frame at `config.snr_db[snr_index]`."""
  cfg = system.config
  c = system.constellation
  generator, info, pi, labels = _random_frame(system, snr_index, frame_index)
  x = modem.modulate_labels(labels, c)
  h = turbulence.sample_frame_fading(cfg.fading, c.pattern.n_rx,
                                     c.pattern.n_tx, len(labels), generator,
                                     cfg.coherence).h
  sigma = system.noise_sigma(cfg.snr_db[snr_index])
  y = turbulence.apply_channel(x, h, system.power, sigma, generator)
  frame = modem.LlrFrame.from_symbols(
      modem.max_log_map_llr(y, h, c, system.power, sigma))
  return _tally(system, info, pi.deinterleave(frame.values))


def simulate_noiseless_frame(system: System, frame_index: int) -> FrameOutcome:
  """One frame with fading but no noise, detected by hard decisions."""
  cfg = system.config
  c = system.constellation
  generator, info, pi, labels = _random_frame(system, 0, frame_index)
  h = turbulence.sample_frame_fading(cfg.fading, c.pattern.n_rx,
                                     c.pattern.n_tx, len(labels), generator,
                                     cfg.coherence).h
  y = turbulence.apply_channel(modem.modulate_labels(labels, c), h,
                               system.power, 0.)
  detected = modem.demap_hard(y, h, c, system.power)
  bits = base.labels_to_bits(detected, c.m).reshape(-1)
  llrs = _NOISELESS_LLR * (1. - 2. * pi.deinterleave(bits))
  return _tally(system, info, llrs)


def _run_span(cfg: config_lib.ExperimentConfig,
              span: Tuple[int, int, int]) -> List[FrameOutcome]:
  snr_index, first, count = span
  system = _cached_system(cfg)
  return [simulate_frame(system, snr_index, first + i) for i in range(count)]


def _spans(snr_index: int, first: int, count: int,
           workers: int) -> List[Tuple[int, int, int]]:
  sizes = [len(part) for part in np.array_split(np.arange(count), workers)]
  spans, start = [], first
  for size in sizes:
    if size:
      spans.append((snr_index, start, size))
    start += size
  return spans


def run_point(cfg: config_lib.ExperimentConfig, snr_index: int) -> BerPoint:
  """Simulates one SNR point until its stopping rule fires."""
  system = _cached_system(cfg)
  start = time.perf_counter()
  frames = frame_errors = bit_errors = 0
  run_fn = functools.partial(_run_span, cfg)
  while frames < cfg.max_frames and frame_errors < cfg.min_frame_errors:
    count = min(cfg.chunk_frames, cfg.max_frames - frames)
    spans = _spans(snr_index, frames, count, cfg.workers)
    for outcomes in pool.map_ordered(run_fn, spans, cfg.workers):
      bit_errors += sum(o.bit_errors for o in outcomes)
      frame_errors += sum(o.frame_error for o in outcomes)
    frames += count
  bits = frames * system.encoder.k
  return BerPoint(
      snr_db=float(cfg.snr_db[snr_index]),
      bit_errors=bit_errors,
      bits=bits,
      frames=frames,
      frame_errors=frame_errors,
      ber=bit_errors / bits,
      fer=frame_errors / frames,
      seconds=time.perf_counter() - start)


def run_ber(cfg: config_lib.ExperimentConfig,
            logger: Optional[logging_base.Logger] = None) -> List[BerPoint]:
  """Simulates every SNR of `cfg` in grid order.

  Args:
    cfg: the experiment configuration; validated before anything runs.
    logger: optional sink receiving one row per SNR point.

  Returns:
    One `BerPoint` per SNR, in the order of `cfg.snr_db`.
  """
  _cached_system(cfg)
  points = []
  for snr_index, snr_db in enumerate(cfg.snr_db):
    point = run_point(cfg, snr_index)
    logging.info('SNR %.2f dB: %d/%d bit errors, %d/%d frame errors.', snr_db,
                 point.bit_errors, point.bits, point.frame_errors, point.frames)
    if logger is not None:
      logger.write(point._asdict())
    points.append(point)
  return points


def noiseless_check(cfg: config_lib.ExperimentConfig,
                    num_frames: int = 100) -> Sequence[FrameOutcome]:
  system = _cached_system(cfg)
  return [simulate_noiseless_frame(system, i) for i in range(num_frames)]

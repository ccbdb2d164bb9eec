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
"""Random bit interleaver between the encoder and the modulator."""

from typing import NamedTuple

from gsmppm import errors
from gsmppm.utils import rng
import numpy as np


class Interleaver(NamedTuple):
  """Position i of the interleaved frame carries input bit permutation[i]."""
  permutation: np.ndarray

  @classmethod
  def random(cls, length: int,
             generator: np.random.Generator) -> 'Interleaver':
    if length < 1:
      raise errors.ParameterError(f'length must be >= 1, got {length}.')
    return cls(generator.permutation(length))

  @property
  def length(self) -> int:
    return len(self.permutation)

  def interleave(self, values: np.ndarray) -> np.ndarray:
    values = np.asarray(values)
    self._check(values)
    return values[..., self.permutation]

  def deinterleave(self, values: np.ndarray) -> np.ndarray:
    values = np.asarray(values)
    self._check(values)
    out = np.empty_like(values)
    out[..., self.permutation] = values
    return out

  def inverse(self) -> 'Interleaver':
    return Interleaver(np.argsort(self.permutation))

  def _check(self, values):
    if values.shape[-1] != self.length:
      raise errors.ParameterError(
          f'Interleaver of length {self.length} got {values.shape[-1]} values.')


def frame_interleaver(length: int, seed: int, snr_index: int, frame_index: int,
                      mode: str = 'per-frame') -> Interleaver:
  """The interleaver of one frame; the 'fixed' mode reuses frame 0's."""
  if mode == 'fixed':
    snr_index, frame_index = 0, 0
  elif mode != 'per-frame':
    raise errors.ParameterError(f'Unknown interleaver mode {mode!r}.')
  generator = rng.stream(seed, rng.INTERLEAVER, snr_index, frame_index)
  return Interleaver.random(length, generator)

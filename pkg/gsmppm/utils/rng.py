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
"""Seeded counter-based random streams.

Every stochastic routine in gsmppm takes an explicit `np.random.Generator`.
Streams are keyed by a root seed plus a tuple of integers (for example the SNR
index and frame index of a BER run), so any single draw can be regenerated
without replaying the draws that preceded it.
"""

import numpy as np

# Stream purposes, used as the first key so that unrelated consumers of the same
# root seed never share a stream.
ADM_SEARCH = 1
PEG_LIFT = 2
CAPACITY = 3
DETECTOR_EXIT = 4
BASE_SEARCH = 5
INTERLEAVER = 6
FRAME = 7


def stream(seed: int, *keys: int) -> np.random.Generator:
  """Returns a Philox generator for `seed` and the integer `keys`."""
  if seed < 0:
    raise ValueError(f'seed must be non-negative, got {seed}.')
  seed_sequence = np.random.SeedSequence(
      entropy=seed, spawn_key=tuple(int(k) for k in keys))
  return np.random.Generator(np.random.Philox(seed_sequence))

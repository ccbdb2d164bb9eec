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
"""The natural-mapping GSMPPM constellation used as a baseline."""

from typing import Optional, Sequence

from gsmppm.constellations import base


def natural_constellation(
    pattern: base.ModulationPattern,
    effective: Optional[Sequence[Sequence[int]]] = None,
) -> base.GsmppmConstellation:
  """Returns the conventional constellation for `pattern`.

  The leading `m_t` label bits index the effective groups and the trailing
  `m_sig` bits index the first `M` symbols of `enumerate_mppm`. Idle groups and
  the remaining `M_max - M` symbols are never used.

  Args:
    pattern: the modulation pattern.
    effective: optional override of the effective antenna groups.

  Returns:
    The natural constellation.
  """
  pattern.check(strict=False)
  groups = base.effective_groups(pattern, effective)
  symbols = base.enumerate_mppm(pattern.l, pattern.l_a)[:pattern.m_cap]
  entries = []
  for label in range(pattern.m_s):
    spatial, signal = divmod(label, pattern.m_cap)
    entries.append(base.ConstellationEntry(label, groups[spatial],
                                           symbols[signal]))
  return base.GsmppmConstellation(pattern, entries, name='natural')

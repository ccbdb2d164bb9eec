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
"""Published ADM label tables for the four reference modulation patterns.

Each table lists the symbol taken by the i-th label of every xi subset (Psi_A)
and of every zeta subset (Psi_B); the same positional template is shared by
all subsets of a kind.
"""

from gsmppm import errors
from gsmppm.constellations import adm
from gsmppm.constellations import base
import immutabledict

PUBLISHED_TEMPLATES = immutabledict.immutabledict({
    '4,4,2,5,2,32': (
        ('10100', '01100', '10010', '00110', '10001', '01001'),
        ('11000', '01010', '00101', '00011'),
    ),
    '4,4,2,6,2,32': (
        ('110000', '001001', '010100', '001100', '100010', '000011'),
        ('010001', '001010', '000101', '000110'),
    ),
    '4,4,2,7,2,64': (
        ('0000011', '0010001', '0001010', '1001000', '0100010', '0110000',
         '1000010', '1100000', '0000101', '0010100', '0001100'),
        ('0010010', '0001001', '0011000', '1000001', '1010000', '0000110',
         '0100001', '0101000', '0100100', '1000100'),
    ),
    '4,4,2,8,2,64': (
        ('00100100', '00110000', '00001010', '00010010', '10000100',
         '10010000', '00001100', '10001000', '01000001', '00100001',
         '01000010'),
        ('10100000', '01010000', '01001000', '01100000', '00101000',
         '10000010', '00010100', '00010001', '00000101', '00000011'),
    ),
})


def published_constellation(
    pattern: base.ModulationPattern) -> base.GsmppmConstellation:
  """Returns the published ADM table for one of the reference patterns."""
  key = str(pattern)
  if key not in PUBLISHED_TEMPLATES:
    raise errors.ParameterError(
        f'No published table for {pattern}; known: '
        f'{sorted(PUBLISHED_TEMPLATES)}.')
  psi_a, psi_b = (tuple(base.MppmSymbol.from_string(s) for s in t)
                  for t in PUBLISHED_TEMPLATES[key])
  params = adm.select_adm_params(pattern)
  partition = adm.partition_labels(params, pattern)
  groups_e = base.effective_groups(pattern)
  groups_a = base.additional_groups(pattern, groups_e, params.n_add)
  entries = []
  for groups, subsets, template in ((groups_e, partition.xi_subsets, psi_a),
                                    (groups_a, partition.zeta_subsets, psi_b)):
    for group, subset in zip(groups, subsets):
      entries.extend(
          base.ConstellationEntry(label, group, template[position])
          for position, label in enumerate(subset))
  metadata = {
      'd_a': adm.average_distance(psi_a),
      'd_b': adm.average_distance(psi_b),
  }
  return base.GsmppmConstellation(pattern, entries, name='published',
                                  metadata=metadata)

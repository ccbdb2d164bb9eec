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
"""JSON serialization of constellations and their design reports.

Files are written with sorted keys and a trailing newline so that saving a
loaded constellation reproduces the original bytes.
"""

import json
import os
from typing import Any, Mapping

from gsmppm import errors
from gsmppm.constellations import base


def to_dict(c: base.GsmppmConstellation) -> Mapping[str, Any]:
  m = c.m
  return {
      'name': c.name,
      'pattern': dict(zip(base.PATTERN_FIELDS, c.pattern)),
      'entries': [{
          'label': format(e.label, f'0{m}b'),
          'group': list(e.group.indices),
          'symbol': str(e.symbol),
      } for e in c.entries],
  }


def to_json(c: base.GsmppmConstellation) -> str:
  return json.dumps(to_dict(c), sort_keys=True, indent=2) + '\n'


def from_dict(data: Mapping[str, Any]) -> base.GsmppmConstellation:
  """Builds a constellation from its dictionary form."""
  try:
    pattern = base.ModulationPattern(
        **{k: int(data['pattern'][k]) for k in base.PATTERN_FIELDS})
    entries = [
        base.ConstellationEntry(
            label=int(item['label'], 2),
            group=base.AntennaGroup(tuple(int(i) for i in item['group'])),
            symbol=base.MppmSymbol.from_string(item['symbol']))
        for item in data['entries']
    ]
  except (KeyError, TypeError, ValueError) as e:
    raise errors.ConfigError(f'Malformed constellation data: {e}') from e
  pattern.check(strict=False)
  return base.GsmppmConstellation(
      pattern, entries, name=data.get('name', 'custom'))


def from_json(text: str) -> base.GsmppmConstellation:
  try:
    data = json.loads(text)
  except json.JSONDecodeError as e:
    raise errors.ConfigError(f'Constellation file is not JSON: {e}') from e
  return from_dict(data)


def save(c: base.GsmppmConstellation, path: str):
  with open(path, 'w') as f:
    f.write(to_json(c))


def load(path: str) -> base.GsmppmConstellation:
  if not os.path.exists(path):
    raise errors.ConfigError(f'Constellation file {path} not found.')
  with open(path) as f:
    return from_json(f.read())


def save_report(report: Mapping[str, Any], path: str):
  """Writes the sidecar design report next to a constellation file."""
  with open(path, 'w') as f:
    f.write(json.dumps(report, sort_keys=True, indent=2) + '\n')

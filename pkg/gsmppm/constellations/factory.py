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
"""Builds a constellation from a named source."""

from typing import Optional, Sequence

from gsmppm import errors
from gsmppm.constellations import adm
from gsmppm.constellations import base
from gsmppm.constellations import io
from gsmppm.constellations import natural
from gsmppm.constellations import published

SOURCES = ('adm', 'optimized', 'natural', 'published', 'file')


def make_constellation(
    pattern: base.ModulationPattern,
    source: str = 'adm',
    path: Optional[str] = None,
    seed: int = 0,
    effective: Optional[Sequence[Sequence[int]]] = None,
) -> base.GsmppmConstellation:
  """Returns the constellation of kind `source` for `pattern`.

  Args:
    pattern: the modulation pattern.
    source: one of `SOURCES`. 'file' loads the JSON written by `io.save` and
      requires `path`.
    path: constellation JSON file, only read for the 'file' source.
    seed: seed of the sub-constellation local search.
    effective: optional override of the effective antenna groups.

  Returns:
    The constellation, already checked against its pattern.
  """
  if source == 'adm':
    c = adm.build_adm(pattern, effective, seed=seed)
  elif source == 'optimized':
    c = adm.build_optimized(pattern, effective, seed=seed)
  elif source == 'natural':
    c = natural.natural_constellation(pattern, effective)
  elif source == 'published':
    c = published.published_constellation(pattern)
  elif source == 'file':
    if path is None:
      raise errors.ConfigError('The file source needs a constellation path.')
    c = io.load(path)
    if c.pattern != pattern:
      raise errors.ConfigError(
          f'Constellation in {path} is for {c.pattern}, not {pattern}.')
  else:
    raise errors.ConfigError(
        f'Unknown constellation source {source!r}; expected {SOURCES}.')
  c.require_valid()
  return c

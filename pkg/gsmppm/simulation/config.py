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
"""Experiment configuration for BER simulations.

A configuration is a JSON object whose keys are the fields of
`ExperimentConfig`. Omitted keys take their defaults; unknown keys are an
error. Example:

    {
      "pattern": "4,4,2,5,2,32",
      "constellation": "adm",
      "code": "ar4ja-r12",
      "sigma_x": 0.3,
      "snr_db": [-3.0, -2.5, -2.0],
      "seed": 7
    }
"""

import hashlib
import json
import os
from typing import Any, Mapping, NamedTuple, Optional, Tuple

from gsmppm import errors
from gsmppm.channel import turbulence
from gsmppm.codes import base_matrix
from gsmppm.codes import decoder
from gsmppm.constellations import base
from gsmppm.constellations import factory

INTERLEAVER_MODES = ('per-frame', 'fixed')
MIN_FRAME_ERRORS = 50


class ExperimentConfig(NamedTuple):
  """Everything that determines the bytes a BER run emits."""
  pattern: str = '4,4,2,5,2,32'
  constellation: str = 'adm'
  constellation_file: Optional[str] = None
  design_seed: int = 0
  code: str = 'i-pldpc'
  code_file: Optional[str] = None
  lift_factor: Optional[int] = None
  lift_seed: int = 0
  cache_dir: Optional[str] = None
  sigma_x: float = 0.3
  normalize: bool = True
  coherence: str = 'symbol'
  snr_db: Tuple[float, ...] = (-3., -2.5, -2.)
  min_frame_errors: int = 100
  max_frames: int = 200_000
  t_bp: int = 100
  decoder_mode: str = 'sum-product'
  interleaver: str = 'per-frame'
  seed: int = 0
  chunk_frames: int = 50
  workers: int = 1

  @classmethod
  def from_dict(cls, data: Mapping[str, Any]) -> 'ExperimentConfig':
    unknown = sorted(set(data) - set(cls._fields))
    if unknown:
      raise errors.ConfigError(f'Unknown configuration keys: {unknown}.')
    values = dict(data)
    if 'snr_db' in values:
      try:
        values['snr_db'] = tuple(float(v) for v in values['snr_db'])
      except (TypeError, ValueError) as e:
        raise errors.ConfigError(f'snr_db must be a list of numbers: {e}') from e
    return cls(**values)

  @classmethod
  def from_json(cls, text: str) -> 'ExperimentConfig':
    try:
      data = json.loads(text)
    except json.JSONDecodeError as e:
      raise errors.ConfigError(f'Configuration is not JSON: {e}') from e
    if not isinstance(data, dict):
      raise errors.ConfigError('Configuration must be a JSON object.')
    return cls.from_dict(data)

  def to_dict(self):
    data = self._asdict()
    data['snr_db'] = list(self.snr_db)
    return data

  def to_json(self) -> str:
    return json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n'

  def digest(self) -> str:
    """SHA-256 of the canonical JSON form, without worker count or cache."""
    data = self.to_dict()
    del data['workers'], data['cache_dir']
    canonical = json.dumps(data, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode()).hexdigest()

  @property
  def modulation_pattern(self) -> base.ModulationPattern:
    return base.ModulationPattern.parse(self.pattern)

  @property
  def fading(self) -> turbulence.FadingParams:
    return turbulence.FadingParams(self.sigma_x, self.normalize)

  def load_base_matrix(self) -> base_matrix.BaseMatrix:
    if self.code_file is not None:
      return base_matrix.load_base_matrix(self.code_file)
    return base_matrix.resolve_code(self.code)

  @property
  def t(self) -> int:
    """Lift factor, falling back to the base matrix's recommended value."""
    if self.lift_factor is not None:
      return self.lift_factor
    hint = self.load_base_matrix().t_hint
    if hint is None:
      raise errors.ConfigError(
          f'Code {self.code!r} has no recommended lift factor; set one.')
    return hint

  def validate(self) -> 'ExperimentConfig':
    """Raises `ConfigError` on any inconsistency; returns self otherwise."""
    try:
      pattern = self.modulation_pattern
      pattern.check(strict=False)
      self.fading.check()
    except errors.ParameterError as e:
      raise errors.ConfigError(str(e)) from e
    if self.constellation not in factory.SOURCES:
      raise errors.ConfigError(
          f'Unknown constellation {self.constellation!r}; expected '
          f'{factory.SOURCES}.')
    if self.constellation == 'file' and self.constellation_file is None:
      raise errors.ConfigError('constellation "file" needs constellation_file.')
    if self.coherence not in turbulence.COHERENCE_MODES:
      raise errors.ConfigError(
          f'Unknown coherence {self.coherence!r}; expected '
          f'{turbulence.COHERENCE_MODES}.')
    if self.decoder_mode not in decoder.MODES:
      raise errors.ConfigError(
          f'Unknown decoder_mode {self.decoder_mode!r}; expected '
          f'{decoder.MODES}.')
    if self.interleaver not in INTERLEAVER_MODES:
      raise errors.ConfigError(
          f'Unknown interleaver {self.interleaver!r}; expected '
          f'{INTERLEAVER_MODES}.')
    if not self.snr_db:
      raise errors.ConfigError('snr_db must not be empty.')
    if any(b <= a for a, b in zip(self.snr_db, self.snr_db[1:])):
      raise errors.ConfigError(
          f'snr_db must be strictly increasing, got {list(self.snr_db)}.')
    if self.min_frame_errors < MIN_FRAME_ERRORS:
      raise errors.ConfigError(
          f'min_frame_errors must be >= {MIN_FRAME_ERRORS}, got '
          f'{self.min_frame_errors}.')
    for name in ('max_frames', 't_bp', 'chunk_frames', 'workers'):
      if getattr(self, name) < 1:
        raise errors.ConfigError(f'{name} must be >= 1.')
    if self.seed < 0 or self.lift_seed < 0 or self.design_seed < 0:
      raise errors.ConfigError('Seeds must be non-negative.')

    bm = self.load_base_matrix()
    t = self.t
    if t < 1:
      raise errors.ConfigError(f'lift_factor must be >= 1, got {t}.')
    s = (bm.p_v - len(bm.punctured)) * t
    if s % pattern.m:
      raise errors.ConfigError(
          f'Transmitted length {s} of {bm.name} lifted by {t} is not a '
          f'multiple of m = {pattern.m}.')
    return self


def load_config(path: str) -> ExperimentConfig:
  if not os.path.exists(path):
    raise errors.ConfigError(f'config not found: {path}')
  with open(path) as f:
    return ExperimentConfig.from_json(f.read())

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
"""Batch driver for threshold, capacity and BER tables.

A table is the cross product codes x constellations x patterns of one job
kind. `run_table` writes one CSV with a row per result and a manifest JSON
recording the package version, git revision, seed, configuration digest and
the status of every job. A failing job is recorded in the manifest and the
remaining jobs still run.
"""

import functools
import hashlib
import json
import os
import subprocess
from typing import Any, Dict, List, Mapping, NamedTuple, Optional, Tuple

from absl import logging
from gsmppm import _metadata
from gsmppm import errors
from gsmppm.analysis import capacity
from gsmppm.analysis import pexit
from gsmppm.channel import turbulence
from gsmppm.codes import base_matrix
from gsmppm.constellations import base
from gsmppm.constellations import factory
from gsmppm.logging import csv_logging
from gsmppm.simulation import config as config_lib
from gsmppm.simulation import harness
from gsmppm.utils import pool
import immutabledict
import pandas as pd

KINDS = ('threshold', 'capacity', 'ber')
FORMATS = ('csv', 'json')

JOB_COLUMNS = ('code', 'constellation', 'pattern', 'seed')
RESULT_COLUMNS = immutabledict.immutabledict({
    'threshold': ('threshold_db', 'iterations', 'converged', 'bracket_width'),
    'capacity': ('snr_db', 'c_cm', 'c_bicm', 'stderr_cm', 'stderr_bicm'),
    'ber': harness.BER_COLUMNS,
})

REFERENCE_PATTERNS = ('4,4,2,5,2,32', '4,4,2,6,2,32', '4,4,2,7,2,64',
                      '4,4,2,8,2,64')


class Job(NamedTuple):
  code: str
  constellation: str
  pattern: str

  @property
  def job_id(self) -> str:
    return f'{self.code}:{self.constellation}:{self.pattern}'


class JobResult(NamedTuple):
  job: Job
  rows: Tuple[Dict[str, Any], ...]
  error: Optional[str] = None

  @property
  def status(self) -> str:
    return 'failed' if self.error else 'ok'


class TableSpec(NamedTuple):
  """One table: a job kind and the axes of its cross product."""
  name: str = 'table'
  kind: str = 'threshold'
  codes: Tuple[str, ...] = ('ar4ja-r12',)
  constellations: Tuple[str, ...] = ('adm', 'natural')
  patterns: Tuple[str, ...] = REFERENCE_PATTERNS
  sigma_x: float = 0.3
  seed: int = 0
  design_seed: int = 0
  n_samples: int = pexit.DEFAULT_DETECTOR_SAMPLES
  tolerance_db: float = 0.01
  max_iter: int = pexit.DEFAULT_MAX_ITER
  mode: str = 'average'
  llr: str = 'exact'
  snr_db: Tuple[float, ...] = ()
  ber: Mapping[str, Any] = immutabledict.immutabledict()

  @classmethod
  def from_dict(cls, data: Mapping[str, Any]) -> 'TableSpec':
    unknown = sorted(set(data) - set(cls._fields))
    if unknown:
      raise errors.ConfigError(f'Unknown table keys: {unknown}.')
    values = dict(data)
    for key in ('codes', 'constellations', 'patterns'):
      if key in values:
        values[key] = tuple(str(v) for v in values[key])
    if 'snr_db' in values:
      values['snr_db'] = tuple(float(v) for v in values['snr_db'])
    if 'ber' in values:
      values['ber'] = immutabledict.immutabledict(values['ber'])
    return cls(**values)

  @classmethod
  def from_json(cls, text: str) -> 'TableSpec':
    try:
      data = json.loads(text)
    except json.JSONDecodeError as e:
      raise errors.ConfigError(f'Table configuration is not JSON: {e}') from e
    if not isinstance(data, dict):
      raise errors.ConfigError('Table configuration must be a JSON object.')
    return cls.from_dict(data)

  def to_dict(self) -> Dict[str, Any]:
    data = self._asdict()
    for key in ('codes', 'constellations', 'patterns', 'snr_db'):
      data[key] = list(data[key])
    data['ber'] = dict(self.ber)
    return data

  def digest(self) -> str:
    canonical = json.dumps(self.to_dict(), sort_keys=True,
                           separators=(',', ':'))
    return hashlib.sha256(canonical.encode()).hexdigest()

  def validate(self) -> 'TableSpec':
    if self.kind not in KINDS:
      raise errors.ConfigError(
          f'Unknown table kind {self.kind!r}; expected {KINDS}.')
    if not self.constellations or not self.patterns:
      raise errors.ConfigError('A table needs constellations and patterns.')
    if self.kind != 'capacity' and not self.codes:
      raise errors.ConfigError(f'A {self.kind} table needs codes.')
    if self.kind != 'threshold' and not self.snr_db:
      raise errors.ConfigError(f'A {self.kind} table needs an snr_db grid.')
    for source in self.constellations:
      if source not in factory.SOURCES or source == 'file':
        raise errors.ConfigError(f'Unsupported constellation {source!r}.')
    if self.mode not in pexit.MODES:
      raise errors.ConfigError(
          f'Unknown PEXIT mode {self.mode!r}; expected {pexit.MODES}.')
    if self.llr not in pexit.LLR_KINDS:
      raise errors.ConfigError(
          f'Unknown LLR kind {self.llr!r}; expected {pexit.LLR_KINDS}.')
    if self.seed < 0 or self.design_seed < 0:
      raise errors.ConfigError('Seeds must be non-negative.')
    unknown = sorted(set(self.ber) - set(config_lib.ExperimentConfig._fields))
    if unknown:
      raise errors.ConfigError(f'Unknown ber settings: {unknown}.')
    return self

  def jobs(self) -> Tuple[Job, ...]:
    codes = ('',) if self.kind == 'capacity' else self.codes
    return tuple(Job(code, source, pattern)
                 for code in codes
                 for source in self.constellations
                 for pattern in self.patterns)

  @property
  def columns(self) -> Tuple[str, ...]:
    return JOB_COLUMNS + RESULT_COLUMNS[self.kind]

  def pexit_options(self) -> pexit.PexitOptions:
    return pexit.PexitOptions(max_iter=self.max_iter,
                              tolerance_db=self.tolerance_db,
                              n_samples=self.n_samples, seed=self.seed,
                              mode=self.mode, llr=self.llr)

  def ber_config(self, job: Job) -> config_lib.ExperimentConfig:
    data = dict(self.ber)
    data.update(pattern=job.pattern, constellation=job.constellation,
                code=job.code, sigma_x=self.sigma_x, seed=self.seed,
                design_seed=self.design_seed, snr_db=self.snr_db)
    return config_lib.ExperimentConfig.from_dict(data)


def load_table_spec(path: str) -> TableSpec:
  if not os.path.exists(path):
    raise errors.ConfigError(f'config not found: {path}')
  with open(path) as f:
    return TableSpec.from_json(f.read())


def run_job(spec: TableSpec, job: Job) -> List[Dict[str, Any]]:
  """Runs one job and returns its result rows, without job columns."""
  pattern = base.ModulationPattern.parse(job.pattern)
  fading = turbulence.FadingParams(spec.sigma_x)
  if spec.kind == 'ber':
    points = harness.run_ber(spec.ber_config(job).validate())
    return [p._asdict() for p in points]
  c = factory.make_constellation(pattern, job.constellation,
                                 seed=spec.design_seed)
  if spec.kind == 'threshold':
    bm = base_matrix.resolve_code(job.code)
    result = pexit.pexit_threshold(bm, c, fading, spec.pexit_options())
    return [{k: getattr(result, k) for k in RESULT_COLUMNS['threshold']}]
  points = capacity.capacity_sweep(c, fading, spec.snr_db,
                                   n_samples=spec.n_samples, seed=spec.seed)
  return [{k: getattr(p, k) for k in RESULT_COLUMNS['capacity']}
          for p in points]


def _run_safely(spec: TableSpec, job: Job) -> JobResult:
  try:
    rows = run_job(spec, job)
  except (ValueError, RuntimeError) as e:
    logging.warning('Job %s failed: %s', job.job_id, e)
    return JobResult(job, (), f'{type(e).__name__}: {e}')
  prefix = dict(job._asdict(), seed=spec.seed)
  return JobResult(job, tuple(dict(prefix, **row) for row in rows))


def git_revision() -> str:
  """The checked-out git commit of the package, or 'unknown'."""
  try:
    output = subprocess.run(
        ['git', 'rev-parse', 'HEAD'], capture_output=True, text=True,
        check=True, cwd=os.path.dirname(os.path.abspath(__file__)))
  except (OSError, subprocess.CalledProcessError):
    return 'unknown'
  return output.stdout.strip() or 'unknown'


class TableResult(NamedTuple):
  csv_path: str
  manifest_path: str
  results: Tuple[JobResult, ...]

  @property
  def rows(self) -> List[Dict[str, Any]]:
    return [row for r in self.results for row in r.rows]

  @property
  def failures(self) -> List[JobResult]:
    return [r for r in self.results if r.error]


def manifest(spec: TableSpec, results: Tuple[JobResult, ...]) -> Dict[str, Any]:
  return {
      'name': spec.name,
      'kind': spec.kind,
      'version': _metadata.__version__,
      'git_hash': git_revision(),
      'seed': spec.seed,
      'config_digest': spec.digest(),
      'config': spec.to_dict(),
      'jobs': [{
          'job_id': r.job.job_id,
          'seed': spec.seed,
          'status': r.status,
          'rows': len(r.rows),
          'error': r.error,
      } for r in results],
  }


def write_rows(path: str, rows: List[Dict[str, Any]], columns: Tuple[str, ...],
               fmt: str = 'csv'):
  """Writes result rows as CSV, or as a JSON list of records."""
  if fmt == 'csv':
    csv_logging.write_csv(path, rows, columns)
  else:
    pd.DataFrame(rows, columns=list(columns)).to_json(
        path, orient='records', indent=2)


def run_table(spec: TableSpec,
              out_dir: str,
              workers: int = 1,
              overwrite: bool = False,
              show_progress: bool = False,
              fmt: str = 'csv') -> TableResult:
  """Runs every job of `spec` and writes `<name>.<fmt>` plus its manifest.

  Args:
    spec: the table to run.
    out_dir: output directory, created if needed.
    workers: processes running jobs concurrently.
    overwrite: whether existing outputs may be replaced.
    show_progress: print a banner and a progress bar.
    fmt: 'csv' or 'json' records.

  Returns:
    The output paths and the per-job results.
  """
  spec.validate()
  if fmt not in FORMATS:
    raise errors.ConfigError(f'Unknown format {fmt!r}; expected {FORMATS}.')
  os.makedirs(out_dir, exist_ok=True)
  csv_path = os.path.join(out_dir, f'{spec.name}.{fmt}')
  manifest_path = os.path.join(out_dir, f'{spec.name}.manifest.json')
  for path in (csv_path, manifest_path):
    if os.path.exists(path) and not overwrite:
      raise errors.ConfigError(
          f'File {path} already exists. Specify a different directory, or '
          'set overwrite=True to overwrite existing data.')

  run_fn = functools.partial(_run_safely, spec)
  results = tuple(pool.map_ordered(run_fn, spec.jobs(), workers,
                                   description='table jobs',
                                   show_progress=show_progress))
  rows = [row for r in results for row in r.rows]
  write_rows(csv_path, rows, spec.columns, fmt)
  with open(manifest_path, 'w') as f:
    f.write(json.dumps(manifest(spec, results), sort_keys=True, indent=2) +
            '\n')
  failed = sum(1 for r in results if r.error)
  logging.info('Table %s: %d rows, %d of %d jobs failed.', spec.name,
               len(rows), failed, len(results))
  return TableResult(csv_path, manifest_path, results)

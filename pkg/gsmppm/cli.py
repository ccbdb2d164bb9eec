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
"""Command-line entry point.

    gsmppm <design|capacity|threshold|search|ber|table> [--flags]

Results go to --out. Errors are reported as one JSON object on stderr; the
exit status is 1 for invalid input and 2 for runtime failures.
"""

import json
import os
import sys
from typing import Sequence

from absl import app
from absl import flags
from absl import logging
from gsmppm import _metadata
from gsmppm import errors
from gsmppm.analysis import pexit
from gsmppm.analysis import search
from gsmppm.channel import turbulence
from gsmppm.codes import base_matrix
from gsmppm.constellations import base
from gsmppm.constellations import factory
from gsmppm.constellations import io
from gsmppm.simulation import config as config_lib
from gsmppm.simulation import harness
from gsmppm.simulation import table
import termcolor

COMMANDS = ('design', 'capacity', 'threshold', 'search', 'ber', 'table')

flags.DEFINE_string('config', None, 'JSON configuration file.')
flags.DEFINE_integer('seed', None, 'Root seed; overrides the configuration.')
flags.DEFINE_string('out', 'gsmppm_results',
                    'Output directory, or the constellation file for design.')
flags.DEFINE_integer('workers', 1, 'Worker processes.')
flags.DEFINE_enum('format', 'csv', table.FORMATS, 'Result file format.')
flags.DEFINE_boolean('overwrite', False, 'Replace existing result files.')
flags.DEFINE_string('pattern', '4,4,2,5,2,32',
                    'Modulation pattern N_tx,N_rx,N_a,l,l_a,M_s.')
flags.DEFINE_enum('constellation', 'adm', factory.SOURCES,
                  'Constellation source.')
flags.DEFINE_string('constellation_file', None,
                    'Constellation JSON for --constellation=file.')
flags.DEFINE_string('code', 'i-pldpc', 'Bundled code name or base matrix file.')
flags.DEFINE_float('sigma_x', 0.3, 'Log-amplitude standard deviation.')
flags.DEFINE_list('snr_db', ['-4', '-2', '0', '2', '4'], 'SNR grid in dB.')
flags.DEFINE_integer('n_samples', pexit.DEFAULT_DETECTOR_SAMPLES,
                     'Monte-Carlo samples for capacity and PEXIT.')
flags.DEFINE_float('tolerance_db', 0.01, 'Threshold bisection tolerance.')
flags.DEFINE_enum('llr', 'exact', pexit.LLR_KINDS,
                  'Detector LLRs whose mutual information drives PEXIT.')
flags.DEFINE_enum('search_mode', 'sample', search.SEARCH_MODES,
                  'Base-matrix search mode.')
flags.DEFINE_integer('budget', 64, 'Base-matrix search proposals.')
flags.DEFINE_integer('top_k', 5, 'Base-matrix search candidates kept.')

FLAGS = flags.FLAGS


def _seed(default: int = 0) -> int:
  return default if FLAGS.seed is None else FLAGS.seed


def _flag_table(name: str, kind: str) -> table.TableSpec:
  """A one-job table described by the command-line flags."""
  if FLAGS.config:
    spec = table.load_table_spec(FLAGS.config)
    return spec._replace(seed=_seed(spec.seed))
  if FLAGS.constellation == 'file':
    raise errors.ConfigError(
        f'{name} needs a named constellation source, not a file.')
  return table.TableSpec(
      name=name,
      kind=kind,
      codes=(FLAGS.code,) if kind != 'capacity' else (),
      constellations=(FLAGS.constellation,),
      patterns=(FLAGS.pattern,),
      sigma_x=FLAGS.sigma_x,
      seed=_seed(),
      n_samples=FLAGS.n_samples,
      tolerance_db=FLAGS.tolerance_db,
      llr=FLAGS.llr,
      snr_db=tuple(float(v) for v in FLAGS.snr_db) if kind != 'threshold'
      else ())


def _run_table(spec: table.TableSpec) -> int:
  result = table.run_table(spec, FLAGS.out, FLAGS.workers, FLAGS.overwrite,
                           show_progress=FLAGS.workers > 1, fmt=FLAGS.format)
  termcolor.cprint(f'Wrote {result.csv_path}.', color='green', attrs=['bold'])
  if result.failures:
    raise errors.AnalysisError(
        f'{len(result.failures)} of {len(result.results)} jobs failed; see '
        f'{result.manifest_path}.')
  return 0


def _design() -> int:
  pattern = base.ModulationPattern.parse(FLAGS.pattern)
  c = factory.make_constellation(pattern, FLAGS.constellation,
                                 FLAGS.constellation_file, _seed())
  path = FLAGS.out
  if not path.endswith('.json'):
    os.makedirs(path, exist_ok=True)
    path = os.path.join(path, f'{c.name}_{pattern}.json'.replace(',', '-'))
  if os.path.exists(path) and not FLAGS.overwrite:
    with open(path) as f:
      unchanged = f.read() == io.to_json(c)
    if not unchanged:
      raise errors.ConfigError(
          f'File {path} already exists with different content; pass '
          '--overwrite to replace it.')
    logging.info('%s is already up to date.', path)
  io.save(c, path)
  report = dict(c.metadata, pattern=str(pattern), name=c.name)
  io.save_report(report, os.path.splitext(path)[0] + '.report.json')
  termcolor.cprint(f'Wrote {path}.', color='green', attrs=['bold'])
  return 0


def _search() -> int:
  pattern = base.ModulationPattern.parse(FLAGS.pattern)
  c = factory.make_constellation(pattern, FLAGS.constellation,
                                 FLAGS.constellation_file)
  options = pexit.PexitOptions(tolerance_db=FLAGS.tolerance_db,
                               n_samples=FLAGS.n_samples, seed=_seed(),
                               llr=FLAGS.llr)
  ranked = search.search_base_matrix(
      search.initial_template(), c, turbulence.FadingParams(FLAGS.sigma_x),
      budget=FLAGS.budget, seed=_seed(), mode=FLAGS.search_mode,
      top_k=FLAGS.top_k, options=options, workers=FLAGS.workers)
  rows = [{
      'rank': rank,
      'threshold_db': candidate.threshold.threshold_db,
      'base_matrix': ';'.join(' '.join(str(v) for v in row)
                              for row in candidate.base.b),
      'punctured': ' '.join(str(j + 1) for j in candidate.base.punctured),
  } for rank, candidate in enumerate(ranked, start=1)]
  os.makedirs(FLAGS.out, exist_ok=True)
  path = os.path.join(FLAGS.out, f'search.{FLAGS.format}')
  table.write_rows(path, rows, ('rank', 'threshold_db', 'base_matrix',
                                'punctured'), FLAGS.format)
  base_matrix.save_base_matrix(ranked[0].base,
                               os.path.join(FLAGS.out, 'best_base_matrix.txt'))
  termcolor.cprint(f'Wrote {path}.', color='green', attrs=['bold'])
  return 0


def _ber() -> int:
  if FLAGS.config:
    cfg = config_lib.load_config(FLAGS.config)
  else:
    cfg = config_lib.ExperimentConfig(
        pattern=FLAGS.pattern, constellation=FLAGS.constellation,
        constellation_file=FLAGS.constellation_file, code=FLAGS.code,
        sigma_x=FLAGS.sigma_x, snr_db=tuple(float(v) for v in FLAGS.snr_db))
  cfg = cfg._replace(seed=_seed(cfg.seed), workers=FLAGS.workers).validate()
  os.makedirs(FLAGS.out, exist_ok=True)
  path = os.path.join(FLAGS.out, f'ber.{FLAGS.format}')
  if os.path.exists(path) and not FLAGS.overwrite:
    raise errors.ConfigError(f'File {path} already exists.')
  points = harness.run_ber(cfg)
  table.write_rows(path, [p._asdict() for p in points], harness.BER_COLUMNS,
                   FLAGS.format)
  manifest = {
      'version': _metadata.__version__,
      'git_hash': table.git_revision(),
      'seed': cfg.seed,
      'config_digest': cfg.digest(),
      'config': cfg.to_dict(),
  }
  with open(os.path.join(FLAGS.out, 'ber.manifest.json'), 'w') as f:
    f.write(json.dumps(manifest, sort_keys=True, indent=2) + '\n')
  termcolor.cprint(f'Wrote {path}.', color='green', attrs=['bold'])
  return 0


def _dispatch(command: str) -> int:
  if command == 'design':
    return _design()
  if command == 'capacity':
    return _run_table(_flag_table('capacity', 'capacity'))
  if command == 'threshold':
    return _run_table(_flag_table('threshold', 'threshold'))
  if command == 'search':
    return _search()
  if command == 'ber':
    return _ber()
  if not FLAGS.config:
    raise errors.ConfigError('table needs --config.')
  spec = table.load_table_spec(FLAGS.config)
  return _run_table(spec._replace(seed=_seed(spec.seed)))


def _report(error: Exception) -> None:
  sys.stderr.write(json.dumps({'error': type(error).__name__,
                               'message': str(error)}) + '\n')


def run(argv: Sequence[str]) -> int:
  """Runs the subcommand in `argv[1]` with flags already parsed."""
  if len(argv) != 2 or argv[1] not in COMMANDS:
    _report(errors.ConfigError(
        f'Expected exactly one command from {COMMANDS}, got {list(argv[1:])}.'))
    return 1
  try:
    return _dispatch(argv[1])
  except ValueError as e:
    _report(e)
    return 1
  except RuntimeError as e:
    logging.exception('Command %s failed.', argv[1])
    _report(e)
    return 2


def cli(argv: Sequence[str]) -> int:
  """Parses flags from `argv` and runs the subcommand; returns the status."""
  try:
    remaining = FLAGS(list(argv))
  except flags.Error as e:
    _report(e)
    return 1
  return run(remaining)


def main(argv):
  sys.exit(run(argv))


def entry_point():
  app.run(main)


if __name__ == '__main__':
  app.run(main)

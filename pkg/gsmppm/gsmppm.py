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
"""Functions to load and run gsmppm experiments by gsmppm_id."""

from typing import Any, Dict, List, Mapping, Optional, Tuple

from gsmppm import errors
from gsmppm import sweep
from gsmppm.logging import base
from gsmppm.logging import csv_logging
from gsmppm.logging import terminal_logging
from gsmppm.simulation import table
import termcolor

LOGGING_MODES = ('csv', 'terminal')


def unpack_gsmppm_id(gsmppm_id: str) -> Tuple[str, int]:
  """Returns the experiment name and setting index given a gsmppm_id."""
  parts = gsmppm_id.split(sweep.SEPARATOR)
  if len(parts) != 2 or not parts[1].isdigit():
    raise errors.ConfigError(f'Malformed gsmppm_id {gsmppm_id!r}.')
  return parts[0], int(parts[1])


def load(experiment_name: str,
         settings: Mapping[str, Any],
         kind: str,
         options: Optional[Mapping[str, Any]] = None,
         seed: int = 0) -> table.TableSpec:
  """Returns the one-job table running `settings` with `options`."""
  data = dict(options or {})
  data.update(
      name=experiment_name,
      kind=kind,
      codes=(settings['code'],) if settings.get('code') else (),
      constellations=(settings['constellation'],),
      patterns=(settings['pattern'],),
      seed=seed)
  return table.TableSpec.from_dict(data).validate()


def load_from_id(gsmppm_id: str, seed: int = 0) -> table.TableSpec:
  """Returns the one-job table of a gsmppm_id."""
  if gsmppm_id not in sweep.SETTINGS:
    raise errors.ConfigError(
        f'Unknown gsmppm_id {gsmppm_id!r}; see gsmppm.sweep.SWEEP.')
  experiment_name, _ = unpack_gsmppm_id(gsmppm_id)
  spec = load(experiment_name, sweep.SETTINGS[gsmppm_id],
              sweep.KINDS[gsmppm_id], sweep.OPTIONS[gsmppm_id], seed)
  termcolor.cprint(
      f'Loaded gsmppm_id: {gsmppm_id}.', color='blue', attrs=['bold'])
  return spec


def _make_logger(gsmppm_id: str, spec: table.TableSpec, logging_mode: str,
                 save_path: str, overwrite: bool) -> base.Logger:
  if logging_mode == 'csv':
    termcolor.cprint(
        f'Logging results to CSV file for each gsmppm_id in {save_path}.',
        color='yellow', attrs=['bold'])
    return csv_logging.Logger(gsmppm_id, save_path, overwrite,
                              columns=table.RESULT_COLUMNS[spec.kind])
  if logging_mode == 'terminal':
    return terminal_logging.Logger(gsmppm_id, absl_logging=True,
                                   columns=table.RESULT_COLUMNS[spec.kind])
  raise errors.ConfigError(
      f'Unrecognised logging_mode {logging_mode!r}. Must be one of '
      f'{LOGGING_MODES}.')


def run_and_record(gsmppm_id: str,
                   save_path: str = '/tmp/gsmppm',
                   logging_mode: str = 'csv',
                   overwrite: bool = False,
                   seed: int = 0,
                   **overrides) -> List[Dict[str, Any]]:
  """Runs the job of `gsmppm_id` and logs its result rows.

  Rows hold result columns only; `csv_load` joins the sweep settings back on
  the gsmppm_id when the results are loaded.

  Args:
    gsmppm_id: for example 'code_thresholds/0'.
    save_path: results directory for CSV logging.
    logging_mode: 'csv' or 'terminal'.
    overwrite: whether an existing CSV file may be replaced.
    seed: root seed of the job.
    **overrides: `TableSpec` fields replacing the experiment options, for
      example a shorter `snr_db` grid.

  Returns:
    The logged rows.
  """
  spec = load_from_id(gsmppm_id, seed)._replace(**overrides).validate()
  logger = _make_logger(gsmppm_id, spec, logging_mode, save_path, overwrite)
  job, = spec.jobs()
  try:
    rows = table.run_job(spec, job)
  except (ValueError, RuntimeError) as e:
    termcolor.cprint(f'{gsmppm_id} failed: {e}', color='red', attrs=['bold'])
    raise
  written = logger.write_all(rows)
  termcolor.cprint(f'Finished {gsmppm_id}: {written} rows.', color='green',
                   attrs=['bold'])
  return rows

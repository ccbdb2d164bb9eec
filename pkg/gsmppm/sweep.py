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
"""This module exposes the gsmppm experiment definitions as gsmppm_ids.

Each gsmppm_id is a human readable string in the format:

    experiment_name/i

where i is the index of the setting in that experiment's sweep.py file. A
setting names one code, one constellation source and one modulation pattern.

To iterate over the gsmppm_ids for all experiments, use `sweep.SWEEP`.

To iterate over the gsmppm_ids for a single experiment, use
`sweep.<EXPERIMENT_NAME>`. For example, `sweep.CODE_THRESHOLDS`.

To iterate over the gsmppm_ids sharing a tag, use `sweep.TAGS[<TAG>]`. For
example, `sweep.TAGS['threshold']`.
"""

from typing import Any, Dict, Mapping, Tuple

from gsmppm.experiments.capacity import sweep as capacity_sweep
from gsmppm.experiments.code_ber import sweep as code_ber_sweep
from gsmppm.experiments.code_thresholds import sweep as code_thresholds_sweep
from gsmppm.experiments.constellation_ber import sweep as constellation_ber_sweep
from gsmppm.experiments.constellation_thresholds import sweep as constellation_thresholds_sweep

import immutabledict

# Common types aliases.
GsmppmId = str  # Experiment ids are strings, e.g. 'code_thresholds/2'.
Tag = str  # Experiment tags are strings, e.g. 'threshold'.
Settings = Dict[str, Any]  # Code, constellation and pattern of one job.

# gsmppm_ids are strings of the form {experiment_name}{SEPARATOR}{index}.
SEPARATOR = '/'
# Exclude experiment names ending with the following from the testing sweep.
IGNORE_FOR_TESTING = ('_ber',)

_SETTINGS = {}
_SWEEP = []
_TAGS = {}
_TESTING = []
_KINDS = {}
_OPTIONS = {}


def _parse_sweep(experiment_package) -> Tuple[GsmppmId, ...]:
  """Returns the gsmppm_ids for each experiment package."""
  results = []
  # package.__name__ is something like 'gsmppm.experiments.capacity.sweep'
  experiment_name = experiment_package.__name__.split('.')[-2]
  eligible_for_test_sweep = not any(experiment_name.endswith(s)
                                    for s in IGNORE_FOR_TESTING)

  for i, setting in enumerate(experiment_package.SETTINGS):
    gsmppm_id = f'{experiment_name}{SEPARATOR}{i}'
    if i == 0 and eligible_for_test_sweep:
      _TESTING.append(gsmppm_id)
    results.append(gsmppm_id)
    _SETTINGS[gsmppm_id] = setting
    _KINDS[gsmppm_id] = experiment_package.KIND
    _OPTIONS[gsmppm_id] = experiment_package.OPTIONS

  for tag in experiment_package.TAGS:
    _TAGS.setdefault(tag, []).extend(results)
  _SWEEP.extend(results)
  return tuple(results)


# gsmppm_ids broken down by experiment.
CAPACITY = _parse_sweep(capacity_sweep)
CODE_BER = _parse_sweep(code_ber_sweep)
CODE_THRESHOLDS = _parse_sweep(code_thresholds_sweep)
CONSTELLATION_BER = _parse_sweep(constellation_ber_sweep)
CONSTELLATION_THRESHOLDS = _parse_sweep(constellation_thresholds_sweep)

# Mapping from gsmppm_id to the settings of its single job.
SETTINGS: Mapping[GsmppmId,
                  Settings] = immutabledict.immutabledict(**_SETTINGS)

# Tuple containing all gsmppm_ids.
SWEEP: Tuple[GsmppmId, ...] = tuple(_SWEEP)

# Mapping from tag (e.g. 'ber') to the gsmppm_ids with that tag.
TAGS: Mapping[Tag, Tuple[GsmppmId, ...]] = immutabledict.immutabledict(
    **{k: tuple(v) for k, v in _TAGS.items()})

# Tuple containing a representative subset of gsmppm_ids used for smoke tests.
TESTING: Tuple[GsmppmId, ...] = tuple(_TESTING)

# Mapping from gsmppm_id to its job kind: 'threshold', 'capacity' or 'ber'.
KINDS: Mapping[GsmppmId, str] = immutabledict.immutabledict(**_KINDS)

# Mapping from gsmppm_id to the table options its experiment runs with.
OPTIONS: Mapping[GsmppmId, Mapping[str, Any]] = immutabledict.immutabledict(
    **_OPTIONS)

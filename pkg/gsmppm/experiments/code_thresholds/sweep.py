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
"""Sweep definition for code_thresholds experiment."""

from gsmppm.experiments.constellation_thresholds import sweep as thresholds_sweep

KIND = 'threshold'
CODES = ('i-pldpc', 'ar4ja-r12', 'regular-36')
OPTIONS = thresholds_sweep.OPTIONS

_settings = []
for code in CODES:
  for pattern in thresholds_sweep.PATTERNS:
    _settings.append({'code': code, 'constellation': 'adm',
                      'pattern': pattern})

SETTINGS = tuple(_settings)
TAGS = ('threshold', 'code')

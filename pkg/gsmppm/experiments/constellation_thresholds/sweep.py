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
"""Sweep definition for constellation_thresholds experiment.

PEXIT thresholds of one code on every constellation of the reference
patterns.
"""

KIND = 'threshold'
PATTERNS = ('4,4,2,5,2,32', '4,4,2,6,2,32', '4,4,2,7,2,64', '4,4,2,8,2,64')
CONSTELLATIONS = ('adm', 'optimized', 'natural')
OPTIONS = {'n_samples': 100_000, 'tolerance_db': 0.01, 'sigma_x': 0.3}

_settings = []
for constellation in CONSTELLATIONS:
  for pattern in PATTERNS:
    _settings.append({'code': 'ar4ja-r12', 'constellation': constellation,
                      'pattern': pattern})

SETTINGS = tuple(_settings)
TAGS = ('threshold', 'constellation')

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
"""Exception types raised across gsmppm.

Validation failures derive from `ValueError` and runtime failures from
`RuntimeError`; the command-line entry point maps these two families to exit
statuses 1 and 2 respectively.
"""


class ParameterError(ValueError):
  """An argument lies outside the range an operation accepts."""


class InfeasibleError(ValueError):
  """No parameter choice satisfies the requested design constraints."""


class ConfigError(ValueError):
  """An experiment configuration is missing, malformed or inconsistent."""


class BudgetError(RuntimeError):
  """A search would exceed its configured evaluation budget."""


class BracketError(RuntimeError):
  """A bisection could not bracket its target value."""


class AnalysisError(RuntimeError):
  """A PEXIT analysis failed to converge where convergence is required."""


class SearchError(RuntimeError):
  """A base-matrix search produced no feasible candidate."""


class RankDeficientError(RuntimeError):
  """A lifted parity-check matrix does not have full row rank."""

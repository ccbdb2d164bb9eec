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
"""Sinks for result rows.

A row is a flat mapping from column name to a scalar: one SNR point of a BER
run, one threshold, or one capacity point.
"""

import abc
from typing import Any, Iterable, Mapping

Row = Mapping[str, Any]


class Logger(abc.ABC):
  """Receives result rows one at a time."""

  @abc.abstractmethod
  def write(self, data: Row):
    """Writes one row to the destination."""

  def write_all(self, rows: Iterable[Row]) -> int:
    """Writes every row in order and returns how many were written."""
    count = 0
    for row in rows:
      self.write(row)
      count += 1
    return count

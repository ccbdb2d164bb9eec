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
"""Protograph base matrices, their text format and design-constraint checks.

A base matrix B = (b_ij) of size p_c x p_v describes a protograph: b_ij
parallel edges join check type i and variable type j. Punctured columns mark
variable types whose lifted bits are never transmitted.

The text format is

    # comment lines
    p_c p_v T_hint
    <p_c rows of p_v integers>
    punctured: j1 j2 ...          (1-indexed, possibly empty)
"""

import fractions
import os
from typing import NamedTuple, Optional, Sequence, Tuple

from gsmppm import errors
import immutabledict
import numpy as np

_DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')

BUILTIN_FILES = immutabledict.immutabledict({
    'i-pldpc': 'i_pldpc.txt',
    'ar4ja-r12': 'ar4ja_r12.txt',
    'regular-36': 'regular_36.txt',
})

MAX_PARALLEL_EDGES = 3
# Rule names reported by `check_design_constraints`.
RULES = ('precoding', 'degree_two', 'parallel_edges', 'column_sums')


class BaseMatrix(NamedTuple):
  """A protograph with its punctured columns (0-indexed)."""
  b: np.ndarray
  punctured: Tuple[int, ...] = ()
  name: str = 'custom'
  t_hint: Optional[int] = None

  @classmethod
  def create(cls, b: Sequence[Sequence[int]], punctured: Sequence[int] = (),
             name: str = 'custom', t_hint: Optional[int] = None):
    """Builds a validated base matrix with a read-only integer array."""
    array = np.array(b, dtype=np.int64)
    if array.ndim != 2 or array.size == 0:
      raise errors.ParameterError(f'Base matrix must be 2-D, got {array.shape}.')
    if (array < 0).any():
      raise errors.ParameterError('Base matrix entries must be >= 0.')
    punctured = tuple(sorted(set(int(j) for j in punctured)))
    if any(not 0 <= j < array.shape[1] for j in punctured):
      raise errors.ParameterError(
          f'Punctured columns {punctured} out of range for {array.shape[1]} '
          'columns.')
    if (array.sum(axis=0) == 0).any() or (array.sum(axis=1) == 0).any():
      raise errors.ParameterError('Base matrix has an empty row or column.')
    array.setflags(write=False)
    return cls(array, punctured, name, t_hint)

  @property
  def p_c(self) -> int:
    return self.b.shape[0]

  @property
  def p_v(self) -> int:
    return self.b.shape[1]

  @property
  def num_edges(self) -> int:
    return int(self.b.sum())

  def column_degrees(self) -> np.ndarray:
    return self.b.sum(axis=0)

  def row_degrees(self) -> np.ndarray:
    return self.b.sum(axis=1)

  def transmitted_columns(self) -> Tuple[int, ...]:
    return tuple(j for j in range(self.p_v) if j not in self.punctured)

  def key(self) -> bytes:
    """Stable bytes used to order and deduplicate matrices."""
    return self.b.astype(np.int8).tobytes()


def parse_base_matrix(text: str, name: str = 'custom') -> BaseMatrix:
  """Parses the text format; raises `ConfigError` on malformed input."""
  lines = [line.split('#', 1)[0].strip() for line in text.splitlines()]
  lines = [line for line in lines if line]
  try:
    p_c, p_v, t_hint = (int(v) for v in lines[0].split())
    rows = [[int(v) for v in line.split()] for line in lines[1:1 + p_c]]
    tail = lines[1 + p_c:]
  except (IndexError, ValueError) as e:
    raise errors.ConfigError(f'Malformed base matrix {name!r}: {e}') from e
  if len(rows) != p_c or any(len(r) != p_v for r in rows):
    raise errors.ConfigError(
        f'Base matrix {name!r} does not have shape {p_c} x {p_v}.')
  punctured = []
  if tail:
    head, _, values = tail[0].partition(':')
    if head.strip() != 'punctured' or len(tail) > 1:
      raise errors.ConfigError(
          f'Base matrix {name!r} has trailing content {tail!r}.')
    try:
      punctured = [int(v) - 1 for v in values.split()]
    except ValueError as e:
      raise errors.ConfigError(f'Bad punctured list in {name!r}.') from e
  try:
    return BaseMatrix.create(rows, punctured, name, t_hint)
  except errors.ParameterError as e:
    raise errors.ConfigError(str(e)) from e


def format_base_matrix(bm: BaseMatrix, t_hint: Optional[int] = None) -> str:
  t = t_hint or bm.t_hint or 1
  lines = [f'{bm.p_c} {bm.p_v} {t}']
  lines += [' '.join(str(v) for v in row) for row in bm.b]
  lines.append(('punctured: ' + ' '.join(str(j + 1) for j in bm.punctured))
               .rstrip())
  return '\n'.join(lines) + '\n'


def load_base_matrix(path: str) -> BaseMatrix:
  if not os.path.exists(path):
    raise errors.ConfigError(f'Base matrix file {path} does not exist.')
  name = os.path.splitext(os.path.basename(path))[0]
  with open(path) as f:
    return parse_base_matrix(f.read(), name)


def save_base_matrix(bm: BaseMatrix, path: str):
  with open(path, 'w') as f:
    f.write(format_base_matrix(bm))


def builtin_code(name: str) -> BaseMatrix:
  """Returns one of the bundled base matrices by name."""
  if name not in BUILTIN_FILES:
    raise errors.ParameterError(
        f'Unknown code {name!r}; expected one of {sorted(BUILTIN_FILES)}.')
  bm = load_base_matrix(os.path.join(_DATA_DIR, BUILTIN_FILES[name]))
  return bm._replace(name=name)


def resolve_code(name_or_path: str) -> BaseMatrix:
  """A bundled code by name, or a base matrix file by path."""
  if name_or_path in BUILTIN_FILES:
    return builtin_code(name_or_path)
  if os.path.exists(name_or_path):
    return load_base_matrix(name_or_path)
  raise errors.ConfigError(
      f'{name_or_path!r} is neither a bundled code {sorted(BUILTIN_FILES)} '
      'nor a base matrix file.')


def effective_rate(bm: BaseMatrix) -> fractions.Fraction:
  """(p_v - p_c) / (p_v - #punctured)."""
  numerator = bm.p_v - bm.p_c
  denominator = bm.p_v - len(bm.punctured)
  if numerator <= 0 or denominator <= 0:
    raise errors.ParameterError(
        f'Base matrix {bm.name!r} of shape {bm.b.shape} with '
        f'{len(bm.punctured)} punctured columns has no positive rate.')
  return fractions.Fraction(numerator, denominator)


class DesignViolation(NamedTuple):
  rule: str
  message: str


class DesignReport(NamedTuple):
  violations: Tuple[DesignViolation, ...]

  @property
  def passed(self) -> bool:
    return not self.violations

  def rules(self) -> Tuple[str, ...]:
    return tuple(v.rule for v in self.violations)


def _has_precoding(bm: BaseMatrix) -> bool:
  """A check joined only to a degree-1 VN and the top-degree punctured VN."""
  degrees = bm.column_degrees()
  top = degrees.max()
  for row in bm.b:
    columns = np.flatnonzero(row)
    if len(columns) != 2:
      continue
    single = [j for j in columns if degrees[j] == 1]
    rest = [j for j in columns if degrees[j] != 1]
    if (len(single) == 1 and len(rest) == 1 and rest[0] in bm.punctured and
        degrees[rest[0]] == top):
      return True
  return False


def check_design_constraints(bm: BaseMatrix) -> DesignReport:
  """Evaluates the base-matrix design rules and reports every failure.

  Rules:
    precoding: some check node connects only a degree-1 VN and the punctured
      VN of highest degree.
    degree_two: the number of degree-2 VNs lies in [1, p_c / 2].
    parallel_edges: no entry exceeds 3.
    column_sums: for 4 x 7 matrices, columns 5 to 7 have equal sums above 2.

  Args:
    bm: the base matrix.

  Returns:
    A report listing every violated rule.
  """
  violations = []
  if not _has_precoding(bm):
    violations.append(DesignViolation(
        'precoding', 'No check joins a degree-1 VN with the highest-degree '
        'punctured VN.'))
  num_two = int((bm.column_degrees() == 2).sum())
  if not 1 <= num_two <= bm.p_c / 2:
    violations.append(DesignViolation(
        'degree_two', f'{num_two} degree-2 VNs, need 1 to {bm.p_c // 2}.'))
  if bm.b.max() > MAX_PARALLEL_EDGES:
    violations.append(DesignViolation(
        'parallel_edges',
        f'Entry {bm.b.max()} exceeds {MAX_PARALLEL_EDGES} parallel edges.'))
  if bm.b.shape == (4, 7):
    sums = bm.column_degrees()[4:]
    if len(set(sums.tolist())) != 1 or sums[0] <= 2:
      violations.append(DesignViolation(
          'column_sums',
          f'Columns 5-7 have sums {sums.tolist()}, need equal sums above 2.'))
  return DesignReport(tuple(violations))

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
"""Core GSMPPM types: MPPM symbols, antenna groups and constellations.

A GSMPPM symbol is carried jointly by the choice of an activated group of
`n_a` transmit antennas (the spatial domain) and by an MPPM slot pattern of
length `l` with `l_a` pulses (the signal domain). A constellation is a table
mapping every `m`-bit label to one (group, symbol) pair. Labels are stored as
integers and rendered most-significant-bit first.
"""

import itertools
from typing import Dict, Iterator, Mapping, NamedTuple, Optional, Sequence, Tuple

from gsmppm import errors
import immutabledict
import numpy as np
from scipy import special

PATTERN_FIELDS = ('n_tx', 'n_rx', 'n_a', 'l', 'l_a', 'm_s')

# Effective groups chosen for the published (N_tx, N_a) configurations. All other
# configurations take the first N_e groups of the canonical enumeration.
REFERENCE_EFFECTIVE_GROUPS = immutabledict.immutabledict({
    (4, 2): ((1, 2), (3, 4), (1, 4), (2, 3)),
})


def _floor_log2(value: int) -> int:
  return int(value).bit_length() - 1


class MppmSymbol(NamedTuple):
  """A length-`l` slot pattern; 1 marks a pulsed slot."""
  slots: Tuple[int, ...]

  @classmethod
  def from_string(cls, text: str) -> 'MppmSymbol':
    if not text or set(text) - {'0', '1'}:
      raise errors.ParameterError(f'Invalid MPPM symbol string {text!r}.')
    return cls(tuple(int(c) for c in text))

  @property
  def length(self) -> int:
    return len(self.slots)

  @property
  def num_pulses(self) -> int:
    return sum(self.slots)

  def __str__(self) -> str:
    return ''.join(str(s) for s in self.slots)


class AntennaGroup(NamedTuple):
  """Sorted 1-based indices of the simultaneously activated antennas."""
  indices: Tuple[int, ...]

  def __str__(self) -> str:
    return '(' + ','.join(str(i) for i in self.indices) + ')'


class ModulationPattern(NamedTuple):
  """The tuple (N_tx, N_rx, N_a, l, l_a, M_s) describing a GSMPPM scheme."""
  n_tx: int
  n_rx: int
  n_a: int
  l: int
  l_a: int
  m_s: int

  @classmethod
  def parse(cls, text: str) -> 'ModulationPattern':
    """Parses '4,4,2,5,2,32' style strings."""
    parts = [p.strip() for p in text.strip().strip('()').split(',')]
    if len(parts) != len(PATTERN_FIELDS):
      raise errors.ParameterError(
          f'Pattern {text!r} must have {len(PATTERN_FIELDS)} fields '
          f'{PATTERN_FIELDS}.')
    try:
      values = [int(p) for p in parts]
    except ValueError as e:
      raise errors.ParameterError(f'Pattern {text!r} is not integral.') from e
    return cls(*values)

  def __str__(self) -> str:
    return ','.join(str(v) for v in self)

  @property
  def n_s(self) -> int:
    """Number of possible activated antenna groups."""
    return int(special.comb(self.n_tx, self.n_a, exact=True))

  @property
  def n_e(self) -> int:
    """Number of effective groups, the largest power of two <= n_s."""
    return 1 << _floor_log2(self.n_s)

  @property
  def n_idle(self) -> int:
    return self.n_s - self.n_e

  @property
  def m_max(self) -> int:
    """Size of the full MPPM symbol set."""
    return int(special.comb(self.l, self.l_a, exact=True))

  @property
  def m_cap(self) -> int:
    """Number of MPPM symbols used by a conventional constellation."""
    return 1 << _floor_log2(self.m_max)

  @property
  def m_t(self) -> int:
    return _floor_log2(self.n_s)

  @property
  def m_sig(self) -> int:
    return _floor_log2(self.m_max)

  @property
  def m(self) -> int:
    """Bits per GSMPPM symbol."""
    return self.m_t + self.m_sig

  def check(self, strict: bool = True):
    """Raises `ParameterError` unless the pattern is well formed.

    Args:
      strict: if True, enforce 2 <= n_a <= n_tx/2 and 2 <= l_a <= l/2. The
        relaxed mode admits single-antenna and PPM-like toy patterns.
    """
    if any(v < 1 for v in self):
      raise errors.ParameterError(f'Pattern {self} has non-positive fields.')
    if strict:
      if not 2 <= self.n_a <= self.n_tx / 2:
        raise errors.ParameterError(
            f'Pattern {self}: need 2 <= n_a <= n_tx/2, got n_a={self.n_a}.')
      if not 2 <= self.l_a <= self.l / 2:
        raise errors.ParameterError(
            f'Pattern {self}: need 2 <= l_a <= l/2, got l_a={self.l_a}.')
      if self.n_s < 2:
        raise errors.ParameterError(f'Pattern {self}: n_s must be >= 2.')
    else:
      if self.n_a > self.n_tx or self.l_a >= self.l:
        raise errors.ParameterError(f'Pattern {self} is degenerate.')
    if self.m_max < 2:
      raise errors.ParameterError(f'Pattern {self}: m_max must be >= 2.')
    if self.m_s != 1 << self.m:
      raise errors.ParameterError(
          f'Pattern {self}: m_s must equal 2^m = {1 << self.m}.')


class ConstellationEntry(NamedTuple):
  label: int
  group: AntennaGroup
  symbol: MppmSymbol


class Violation(NamedTuple):
  """One failed constellation invariant."""
  kind: str
  labels: Tuple[int, ...]
  message: str


def enumerate_mppm(l: int, l_a: int) -> Tuple[MppmSymbol, ...]:
  """Returns all C(l, l_a) symbols, pulses packed leftmost first."""
  if l < 2 or not 1 <= l_a <= l / 2:
    raise errors.ParameterError(
        f'Need 1 <= l_a <= l/2 and l >= 2, got l={l}, l_a={l_a}.')
  symbols = []
  for positions in itertools.combinations(range(l), l_a):
    slots = [0] * l
    for p in positions:
      slots[p] = 1
    symbols.append(MppmSymbol(tuple(slots)))
  return tuple(symbols)


def hamming_symbols(a: MppmSymbol, b: MppmSymbol) -> int:
  if len(a.slots) != len(b.slots):
    raise errors.ParameterError(
        f'Symbol lengths differ: {a.length} vs {b.length}.')
  return sum(x != y for x, y in zip(a.slots, b.slots))


def distance_matrix(symbols: Sequence[MppmSymbol]) -> np.ndarray:
  """Pairwise Hamming distances as an integer matrix."""
  slots = np.array([s.slots for s in symbols], dtype=np.int64)
  return (slots[:, None, :] != slots[None, :, :]).sum(axis=-1)


def hamming_labels(a: int, b: int) -> int:
  return bin(int(a) ^ int(b)).count('1')


def labels_to_bits(labels: np.ndarray, m: int) -> np.ndarray:
  """Expands integer labels to an (..., m) bit array, MSB first."""
  labels = np.asarray(labels, dtype=np.int64)
  shifts = np.arange(m - 1, -1, -1)
  return ((labels[..., None] >> shifts) & 1).astype(np.uint8)


def bits_to_labels(bits: np.ndarray, m: int) -> np.ndarray:
  """Packs a flat bit sequence into integer labels, MSB first."""
  bits = np.asarray(bits, dtype=np.int64)
  if bits.shape[-1] % m:
    raise errors.ParameterError(
        f'Bit count {bits.shape[-1]} is not divisible by m={m}.')
  words = bits.reshape(bits.shape[:-1] + (-1, m))
  return words @ (1 << np.arange(m - 1, -1, -1))


def canonical_groups(n_tx: int, n_a: int) -> Tuple[AntennaGroup, ...]:
  """All groups in lexicographic order of their sorted index tuples."""
  return tuple(
      AntennaGroup(c) for c in itertools.combinations(range(1, n_tx + 1), n_a))


def effective_groups(
    pattern: ModulationPattern,
    override: Optional[Sequence[Sequence[int]]] = None,
) -> Tuple[AntennaGroup, ...]:
  """Returns the N_e groups that carry a full power-of-two symbol set."""
  if override is None:
    default = REFERENCE_EFFECTIVE_GROUPS.get((pattern.n_tx, pattern.n_a))
    if default is None:
      return canonical_groups(pattern.n_tx, pattern.n_a)[:pattern.n_e]
    override = default
  groups = tuple(AntennaGroup(tuple(sorted(g))) for g in override)
  valid = set(canonical_groups(pattern.n_tx, pattern.n_a))
  if len(groups) != pattern.n_e or len(set(groups)) != len(groups):
    raise errors.ParameterError(
        f'Need {pattern.n_e} distinct effective groups, got {override}.')
  for group in groups:
    if group not in valid:
      raise errors.ParameterError(f'Group {group} is not valid for {pattern}.')
  return groups


def additional_groups(pattern: ModulationPattern,
                      effective: Sequence[AntennaGroup],
                      n_add: int) -> Tuple[AntennaGroup, ...]:
  """Returns the first `n_add` non-effective groups in canonical order."""
  idle = [g for g in canonical_groups(pattern.n_tx, pattern.n_a)
          if g not in set(effective)]
  if n_add > len(idle):
    raise errors.InfeasibleError(
        f'{pattern} has only {len(idle)} idle groups, {n_add} requested.')
  return tuple(idle[:n_add])


class GsmppmConstellation:
  """An immutable label -> (antenna group, MPPM symbol) table."""

  def __init__(self,
               pattern: ModulationPattern,
               entries: Sequence[ConstellationEntry],
               name: str = 'custom',
               metadata: Optional[Mapping[str, object]] = None):
    self._pattern = pattern
    self._entries = tuple(sorted(entries, key=lambda e: e.label))
    self._name = name
    self._metadata = immutabledict.immutabledict(metadata or {})
    self._by_label: Dict[int, ConstellationEntry] = {}
    for entry in self._entries:
      self._by_label.setdefault(entry.label, entry)
    self._tx = None
    self._bits = None

  @property
  def pattern(self) -> ModulationPattern:
    return self._pattern

  @property
  def entries(self) -> Tuple[ConstellationEntry, ...]:
    return self._entries

  @property
  def name(self) -> str:
    return self._name

  @property
  def metadata(self) -> Mapping[str, object]:
    return self._metadata

  @property
  def m(self) -> int:
    return self._pattern.m

  def __len__(self) -> int:
    return len(self._entries)

  def __iter__(self) -> Iterator[ConstellationEntry]:
    return iter(self._entries)

  def entry(self, label: int) -> ConstellationEntry:
    try:
      return self._by_label[int(label)]
    except KeyError as e:
      raise errors.ParameterError(f'Label {label} is not mapped.') from e

  def groups(self) -> Tuple[AntennaGroup, ...]:
    """Distinct groups in order of first appearance by label."""
    return tuple(dict.fromkeys(e.group for e in self._entries))

  def symbols_for(self, group: AntennaGroup) -> Tuple[MppmSymbol, ...]:
    return tuple(e.symbol for e in self._entries if e.group == group)

  def label_bits(self) -> np.ndarray:
    """A read-only (len, m) array holding each entry's label bits."""
    if self._bits is None:
      bits = labels_to_bits(np.array([e.label for e in self._entries]), self.m)
      bits.setflags(write=False)
      self._bits = bits
    return self._bits

  def tx_matrices(self) -> np.ndarray:
    """A read-only (len, n_tx, l) array of unscaled transmit matrices."""
    if self._tx is None:
      tx = np.stack([build_tx_matrix(e, self._pattern) for e in self._entries])
      tx.setflags(write=False)
      self._tx = tx
    return self._tx

  def require_valid(self):
    violations = validate_constellation(self)
    if violations:
      raise errors.ParameterError(
          f'Constellation {self._name!r} is invalid: {violations[0].message}')


def build_tx_matrix(entry: ConstellationEntry,
                    pattern: ModulationPattern) -> np.ndarray:
  """Rows of the activated antennas carry the slot pattern, others are zero."""
  x = np.zeros((pattern.n_tx, pattern.l))
  for index in entry.group.indices:
    x[index - 1] = entry.symbol.slots
  return x


def validate_constellation(c: GsmppmConstellation) -> Tuple[Violation, ...]:
  """Checks every constellation invariant and returns all violations."""
  pattern = c.pattern
  size = 1 << pattern.m
  violations = []

  seen = {}
  for entry in c.entries:
    if not 0 <= entry.label < size:
      violations.append(Violation(
          'label out of range', (entry.label,),
          f'Label {entry.label} lies outside [0, {size}).'))
    if entry.label in seen:
      violations.append(Violation(
          'duplicate label', (entry.label,),
          f'Label {entry.label} is mapped more than once.'))
    seen[entry.label] = entry

    symbol = entry.symbol
    if symbol.length != pattern.l or symbol.num_pulses != pattern.l_a:
      violations.append(Violation(
          'invalid symbol', (entry.label,),
          f'Symbol {symbol} of label {entry.label} is not an '
          f'({pattern.l}, {pattern.l_a}) MPPM symbol.'))
    indices = entry.group.indices
    if (len(indices) != pattern.n_a or list(indices) != sorted(set(indices)) or
        not all(1 <= i <= pattern.n_tx for i in indices)):
      violations.append(Violation(
          'invalid group', (entry.label,),
          f'Group {entry.group} of label {entry.label} is not a sorted set of '
          f'{pattern.n_a} antennas in [1, {pattern.n_tx}].'))

  missing = sorted(set(range(size)) - set(seen))
  if missing:
    violations.append(Violation(
        'label space incomplete', tuple(missing),
        f'{len(missing)} labels of [0, {size}) are unmapped.'))

  by_point = {}
  for entry in c.entries:
    key = (entry.group, entry.symbol)
    if key in by_point and by_point[key] != entry.label:
      violations.append(Violation(
          'duplicate symbol in group', (by_point[key], entry.label),
          f'Labels {by_point[key]} and {entry.label} share symbol '
          f'{entry.symbol} on group {entry.group}.'))
    by_point.setdefault(key, entry.label)
  return tuple(violations)

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
"""Asymmetric dual-mode (ADM) constellation design.

An ADM constellation keeps the `N_e` effective antenna groups of a conventional
GSMPPM scheme but gives each of them only `M_A` symbols (sub-constellation
Psi_A). The labels freed this way are carried by `N_add` otherwise idle groups
using a disjoint sub-constellation Psi_B of `M_B` symbols. Both
sub-constellations are chosen to maximize their average Hamming distance and
are then labelled so that symbols with disjoint supports receive labels far
apart in Hamming distance.
"""

import itertools
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from absl import logging
from gsmppm import errors
from gsmppm.constellations import base
from gsmppm.utils import rng
import numpy as np
from scipy import special

DEFAULT_BUDGET = 10**7
DEFAULT_RESTARTS = 64
DEFAULT_RELABEL_RESTARTS = 16
# Tied subsets of maximal average distance compared by their labelling.
DEFAULT_TIES = 128

# Rows of candidate subsets scored per vectorized step of the exhaustive search.
_CHUNK = 1 << 14
# Label sets up to this size are relabelled by exhaustive permutation search.
_EXHAUSTIVE_RELABEL = 8


class AdmParams(NamedTuple):
  n_add: int
  m_a: int
  m_b: int
  m_max: int
  m: int
  m_cap: int


class LabelPartition(NamedTuple):
  xi_subsets: Tuple[Tuple[int, ...], ...]
  zeta_subsets: Tuple[Tuple[int, ...], ...]


class SubsetResult(NamedTuple):
  symbols: Tuple[base.MppmSymbol, ...]
  distance: float
  mode: str


def select_adm_params(pattern: base.ModulationPattern) -> AdmParams:
  """Selects (M_A, M_B, N_add) by the iterative ADM parameter search.

  `M_A` starts at ceil(M_s / N_s) and `N_add` counts down from the number of
  idle groups; every time `N_add` is exhausted it is reset and `M_A` grows by
  one. The first triple with M_B >= 1, M_A > M_B, M_A + M_B <= M_max and
  M_A < M is returned.

  Args:
    pattern: a strictly valid modulation pattern with at least one idle group.

  Returns:
    The selected parameters.

  Raises:
    InfeasibleError: if the pattern has no idle group, fewer than three MPPM
      symbols, or no triple is found within M_max increments.
  """
  pattern.check()
  if pattern.n_idle < 1:
    raise errors.InfeasibleError(f'{pattern} has no idle antenna group.')
  if pattern.m_max < 3:
    raise errors.InfeasibleError(f'{pattern} needs M_max >= 3.')

  m_s, n_s, n_e = pattern.m_s, pattern.n_s, pattern.n_e
  n_add = n_s - n_e
  i = 0
  while i <= pattern.m_max:
    m_a = -(-m_s // n_s) + i
    m_b = -(-(m_s - n_e * m_a) // n_add)
    if (m_b >= 1 and m_a > m_b and m_a + m_b <= pattern.m_max and
        m_a < pattern.m_cap):
      return AdmParams(n_add=n_add, m_a=m_a, m_b=m_b, m_max=pattern.m_max,
                       m=pattern.m, m_cap=pattern.m_cap)
    n_add -= 1
    if n_add == 0:
      n_add = n_s - n_e
      i += 1
  raise errors.InfeasibleError(f'No feasible ADM parameters for {pattern}.')


def partition_labels(params: AdmParams,
                     pattern: base.ModulationPattern) -> LabelPartition:
  """Splits the label space between effective and additional groups."""
  big_m, m_a, n_add = params.m_cap, params.m_a, params.n_add
  xi = tuple(
      tuple(range(lam * big_m, lam * big_m + m_a)) for lam in range(pattern.n_e))
  if n_add == 0:
    return LabelPartition(xi_subsets=xi, zeta_subsets=())

  if big_m - m_a == n_add and pattern.n_e <= params.m_b:
    # One label per block: the mu-th spare label of every block.
    zeta = tuple(
        tuple(beta * big_m + m_a + mu for beta in range(pattern.n_e))
        for mu in range(n_add))
  else:
    remaining = [
        label for lam in range(pattern.n_e)
        for label in range(lam * big_m + m_a, (lam + 1) * big_m)
    ]
    zeta = tuple(
        tuple(int(x) for x in chunk)
        for chunk in np.array_split(np.array(remaining, dtype=np.int64), n_add))
  labels = [label for subset in xi + zeta for label in subset]
  if sorted(labels) != list(range(pattern.n_e * big_m)):
    raise errors.InfeasibleError(
        f'Label subsets for {params} do not tile the label space.')
  return LabelPartition(xi_subsets=xi, zeta_subsets=zeta)


def average_distance(symbols: Sequence[base.MppmSymbol]) -> float:
  """Mean Hamming distance over ordered pairs of distinct symbols."""
  k = len(symbols)
  if k < 2:
    return 0.
  return float(base.distance_matrix(symbols).sum()) / (k * (k - 1))


def _tie_break_rank(phi: Sequence[base.MppmSymbol]) -> np.ndarray:
  """Rank of each symbol of `phi` in ascending slot-string order."""
  order = sorted(range(len(phi)), key=lambda i: str(phi[i]))
  rank = np.empty(len(phi), dtype=np.int64)
  rank[order] = np.arange(len(phi))
  return rank


def _ordered(rows: np.ndarray, rank: np.ndarray) -> np.ndarray:
  """Drops duplicate rows and sorts the rest by their sorted slot strings."""
  rows = np.sort(rows, axis=1)
  keys = np.sort(rank[rows], axis=1)
  # Unique rows come back in lexicographic order.
  _, first = np.unique(keys, axis=0, return_index=True)
  return rows[first]


def _exhaustive(distances: np.ndarray, k: int, rank: np.ndarray,
                limit: int) -> Tuple[np.ndarray, int]:
  """Returns up to `limit` best-scoring `k`-subsets in tie-break order."""
  n = len(distances)
  combos = itertools.combinations(range(n), k)
  best_score, best = -1, np.empty((0, k), dtype=np.int64)
  while True:
    chunk = np.array(list(itertools.islice(combos, _CHUNK)), dtype=np.int64)
    if not chunk.size:
      break
    scores = distances[chunk[:, :, None], chunk[:, None, :]].sum(axis=(1, 2))
    top = int(scores.max())
    if top < best_score:
      continue
    tied = chunk[scores == top]
    if top > best_score:
      best_score, best = top, tied
    else:
      best = np.concatenate([best, tied])
    best = _ordered(best, rank)[:limit]
  return best, best_score


def _local_search(distances: np.ndarray, k: int, rank: np.ndarray,
                  seed: int, restarts: int,
                  limit: int) -> Tuple[np.ndarray, int]:
  """Steepest-ascent single-swap search with seeded random restarts."""
  n = len(distances)
  generator = rng.stream(seed, rng.ADM_SEARCH, n, k)
  best_score, best = -1, []
  for _ in range(restarts):
    inside = np.zeros(n, dtype=bool)
    inside[generator.choice(n, size=k, replace=False)] = True
    while True:
      ins, outs = np.flatnonzero(inside), np.flatnonzero(~inside)
      if not outs.size:
        break
      row_sums = distances[:, ins].sum(axis=1)
      gain = (row_sums[outs][None, :] - distances[np.ix_(ins, outs)] -
              row_sums[ins][:, None])
      flat = int(np.argmax(gain))
      if gain.flat[flat] <= 0:
        break
      a, b = divmod(flat, outs.size)
      inside[ins[a]], inside[outs[b]] = False, True
    subset = np.flatnonzero(inside)
    score = int(distances[np.ix_(subset, subset)].sum())
    if score > best_score:
      best_score, best = score, [subset]
    elif score == best_score:
      best.append(subset)
  return _ordered(np.stack(best), rank)[:limit], best_score


def subset_candidates(phi: Sequence[base.MppmSymbol],
                      k: int,
                      budget: int = DEFAULT_BUDGET,
                      seed: int = 0,
                      allow_local_search: bool = True,
                      restarts: int = DEFAULT_RESTARTS,
                      limit: int = 1) -> Tuple[SubsetResult, ...]:
  """Returns up to `limit` `k`-subsets of `phi` of maximal average distance.

  Subsets tie on distance far more often than not. They are returned in
  ascending order of their sorted list of slot strings, so the first one is
  the canonical choice. The search is exhaustive when C(|phi|, k) fits in
  `budget` and a seeded local search otherwise; the latter only returns the
  distinct optima its restarts reached.

  Args:
    phi: candidate symbols.
    k: subset size.
    budget: largest number of subsets scored exhaustively.
    seed: root seed of the local search.
    allow_local_search: whether to fall back to local search over budget.
    restarts: number of local-search restarts.
    limit: largest number of tied subsets returned.

  Returns:
    The chosen subsets, each as symbols in `phi` order with their average
    distance and the search mode.

  Raises:
    ParameterError: if `k` is not in [1, |phi|] or `limit` < 1.
    BudgetError: if the budget is exceeded and local search is disabled.
  """
  phi = tuple(phi)
  if not 1 <= k <= len(phi):
    raise errors.ParameterError(f'Cannot pick {k} of {len(phi)} symbols.')
  if limit < 1:
    raise errors.ParameterError(f'limit must be >= 1, got {limit}.')
  if k == len(phi):
    return (SubsetResult(phi, average_distance(phi), 'trivial'),)

  distances = base.distance_matrix(phi).astype(np.int32)
  rank = _tie_break_rank(phi)
  count = int(special.comb(len(phi), k, exact=True))
  if count <= budget:
    mode = 'exhaustive'
    rows, _ = _exhaustive(distances, k, rank, limit)
  elif allow_local_search:
    mode = 'local_search'
    logging.info('Searching %d of %d symbols locally (%d subsets > budget %d).',
                 k, len(phi), count, budget)
    rows, _ = _local_search(distances, k, rank, seed, restarts, limit)
  else:
    raise errors.BudgetError(
        f'{count} candidate subsets exceed the budget of {budget}.')
  results = []
  for row in rows:
    symbols = tuple(phi[i] for i in sorted(row))
    results.append(SubsetResult(symbols, average_distance(symbols), mode))
  return tuple(results)


def select_subset(phi: Sequence[base.MppmSymbol],
                  k: int,
                  budget: int = DEFAULT_BUDGET,
                  seed: int = 0,
                  allow_local_search: bool = True,
                  restarts: int = DEFAULT_RESTARTS) -> SubsetResult:
  """Returns the canonical `k`-subset of `phi` with maximal average distance.

  Ties are broken towards the lexicographically smallest sorted list of slot
  strings. See `subset_candidates` for the search itself.
  """
  return subset_candidates(phi, k, budget=budget, seed=seed,
                           allow_local_search=allow_local_search,
                           restarts=restarts)[0]


def select_sub_A(phi: Sequence[base.MppmSymbol], m_a: int,
                 **kwargs) -> SubsetResult:  # pylint: disable=invalid-name
  """Chooses Psi_A from the full symbol set."""
  return select_subset(phi, m_a, **kwargs)


def select_sub_B(residual: Sequence[base.MppmSymbol], m_b: int,
                 **kwargs) -> SubsetResult:  # pylint: disable=invalid-name
  """Chooses Psi_B from the symbols left after removing Psi_A."""
  return select_subset(residual, m_b, **kwargs)


def relabel_objective(assignment: Mapping[int, base.MppmSymbol],
                      l_a: int) -> int:
  """Sum of label distances over symbol pairs with disjoint supports."""
  items = sorted(assignment.items())
  total = 0
  for (label_i, sym_i), (label_j, sym_j) in itertools.combinations(items, 2):
    if base.hamming_symbols(sym_i, sym_j) == 2 * l_a:
      total += base.hamming_labels(label_i, label_j)
  return total


def _greedy_assignment(far: np.ndarray, label_distance: np.ndarray) -> np.ndarray:
  """Pairs far-apart symbols with the farthest free labels first."""
  n = len(far)
  perm = np.full(n, -1, dtype=np.int64)
  free = np.ones(n, dtype=bool)
  for i, j in zip(*np.nonzero(np.triu(far, 1))):
    if perm[i] >= 0 and perm[j] >= 0:
      continue
    if perm[i] < 0 and perm[j] < 0:
      masked = np.where(np.outer(free, free) & ~np.eye(n, dtype=bool),
                        label_distance, -1)
      a, b = divmod(int(np.argmax(masked)), n)
      perm[i], perm[j] = a, b
      free[[a, b]] = False
    else:
      known, unknown = (i, j) if perm[i] >= 0 else (j, i)
      masked = np.where(free, label_distance[perm[known]], -1)
      b = int(np.argmax(masked))
      perm[unknown] = b
      free[b] = False
  for i in np.flatnonzero(perm < 0):
    b = int(np.flatnonzero(free)[0])
    perm[i] = b
    free[b] = False
  return perm


def _score(perm: np.ndarray, far: np.ndarray,
           label_distance: np.ndarray) -> int:
  return int((far * label_distance[np.ix_(perm, perm)]).sum()) // 2


def _swap_gains(perm: np.ndarray, far: np.ndarray,
                label_distance: np.ndarray) -> np.ndarray:
  """Objective change of exchanging the labels of every pair of symbols."""
  held = label_distance[np.ix_(perm, perm)]
  cross = far @ held.T
  diag = np.diag(cross)
  return (cross + cross.T - diag[:, None] - diag[None, :] +
          2 * far * held)


def _refine_by_swaps(perm: np.ndarray, far: np.ndarray,
                     label_distance: np.ndarray) -> np.ndarray:
  perm = perm.copy()
  while True:
    gains = np.triu(_swap_gains(perm, far, label_distance), 1)
    flat = int(np.argmax(gains))
    if gains.flat[flat] <= 0:
      return perm
    p, q = divmod(flat, len(perm))
    perm[[p, q]] = perm[[q, p]]


def relabel_max_distance(symbols: Sequence[base.MppmSymbol],
                         labels: Sequence[int],
                         l_a: int,
                         restarts: int = DEFAULT_RELABEL_RESTARTS
                        ) -> Dict[int, base.MppmSymbol]:
  """Assigns `labels` to `symbols` so far-apart symbols get far-apart labels.

  The objective is the sum of label Hamming distances over symbol pairs with
  disjoint supports (distance 2 * l_a). Small sets are solved exactly by
  permutation search. Larger ones start from a greedy assignment, which hands
  each far pair the free label pair of largest distance, plus `restarts`
  seeded random assignments; each start is refined by steepest label swaps and
  the best result wins, the earliest on ties.

  Args:
    symbols: the sub-constellation.
    labels: one label subset of the same size.
    l_a: pulses per symbol.
    restarts: random starts of the swap search for large sets.

  Returns:
    A label -> symbol mapping.
  """
  symbols, labels = tuple(symbols), tuple(int(x) for x in labels)
  if len(symbols) != len(labels):
    raise errors.ParameterError(
        f'{len(symbols)} symbols cannot take {len(labels)} labels.')
  n = len(symbols)
  if n <= 1:
    return dict(zip(labels, symbols))

  far = (base.distance_matrix(symbols) == 2 * l_a).astype(np.int64)
  label_distance = np.array(
      [[base.hamming_labels(a, b) for b in labels] for a in labels],
      dtype=np.int64)

  if n <= _EXHAUSTIVE_RELABEL:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    rows, cols = np.nonzero(np.triu(far, 1))
    scores = label_distance[perms[:, rows], perms[:, cols]].sum(axis=1)
    perm = perms[int(np.argmax(scores))]
  else:
    generator = rng.stream(0, rng.ADM_SEARCH, 0, n)
    starts = [_greedy_assignment(far, label_distance)]
    starts += [generator.permutation(n) for _ in range(restarts)]
    best_score, perm = -1, None
    for start in starts:
      refined = _refine_by_swaps(start, far, label_distance)
      score = _score(refined, far, label_distance)
      if score > best_score:
        best_score, perm = score, refined
  return {labels[perm[i]]: symbols[i] for i in range(n)}


def _assign(subsets: Sequence[Sequence[int]],
            groups: Sequence[base.AntennaGroup],
            template: Sequence[base.MppmSymbol]):
  """Copies one positional label->symbol template onto every subset."""
  entries = []
  for group, subset in zip(groups, subsets):
    for position, label in enumerate(subset):
      entries.append(base.ConstellationEntry(label, group, template[position]))
  return entries


def _labelled(symbols: Sequence[base.MppmSymbol], subset: Sequence[int],
              l_a: int) -> Tuple[List[base.MppmSymbol], int]:
  """Positional template of `symbols` on `subset` and its relabel objective."""
  assignment = relabel_max_distance(symbols, subset, l_a)
  return ([assignment[label] for label in subset],
          relabel_objective(assignment, l_a))


def _best_labelled(candidates: Sequence[SubsetResult], subset: Sequence[int],
                   l_a: int):
  """Keeps the tied subsets whose labelling scores highest, in order."""
  labelled = [_labelled(c.symbols[:len(subset)], subset, l_a)
              for c in candidates]
  top = max(score for _, score in labelled)
  return [(c, template, score)
          for c, (template, score) in zip(candidates, labelled) if score == top]


def build_adm(pattern: base.ModulationPattern,
              effective: Optional[Sequence[Sequence[int]]] = None,
              budget: int = DEFAULT_BUDGET,
              seed: int = 0,
              allow_local_search: bool = True,
              ties: int = DEFAULT_TIES) -> base.GsmppmConstellation:
  """Builds the ADM constellation for `pattern`.

  Psi_A and Psi_B are drawn from the `ties` best subsets of equal average
  distance; among those, the pair whose labellings give far-apart symbols the
  largest label distance is kept, Psi_A first.
  """
  params = select_adm_params(pattern)
  partition = partition_labels(params, pattern)
  groups_e = base.effective_groups(pattern, effective)
  groups_a = base.additional_groups(pattern, groups_e, params.n_add)
  search = dict(budget=budget, seed=seed, allow_local_search=allow_local_search,
                limit=ties)

  xi_0 = partition.xi_subsets[0]
  zeta_0 = partition.zeta_subsets[0]
  phi = base.enumerate_mppm(pattern.l, pattern.l_a)
  best = None
  for sub_a, template_a, score_a in _best_labelled(
      subset_candidates(phi, params.m_a, **search), xi_0, pattern.l_a):
    chosen = set(sub_a.symbols)
    residual = tuple(s for s in phi if s not in chosen)
    sub_b, template_b, score_b = _best_labelled(
        subset_candidates(residual, params.m_b, **search), zeta_0,
        pattern.l_a)[0]
    if best is None or score_b > best[-1]:
      best = (sub_a, template_a, score_a, sub_b, template_b, score_b)
  sub_a, template_a, score_a, sub_b, template_b, score_b = best

  entries = _assign(partition.xi_subsets, groups_e, template_a)
  entries += _assign(partition.zeta_subsets, groups_a, template_b)
  metadata = {
      'pattern': str(pattern),
      'n_add': params.n_add,
      'm_a': params.m_a,
      'm_b': params.m_b,
      'd_a': sub_a.distance,
      'd_b': sub_b.distance,
      'search_a': sub_a.mode,
      'search_b': sub_b.mode,
      'psi_a': [str(s) for s in sub_a.symbols],
      'psi_b': [str(s) for s in sub_b.symbols],
      'relabel_a': score_a,
      'relabel_b': score_b,
      'seed': seed,
  }
  logging.info('Built ADM constellation for %s: M_A=%d M_B=%d N_add=%d.',
               pattern, params.m_a, params.m_b, params.n_add)
  return base.GsmppmConstellation(pattern, entries, name='adm',
                                  metadata=metadata)


def build_optimized(pattern: base.ModulationPattern,
                    effective: Optional[Sequence[Sequence[int]]] = None,
                    budget: int = DEFAULT_BUDGET,
                    seed: int = 0,
                    allow_local_search: bool = True,
                    ties: int = DEFAULT_TIES) -> base.GsmppmConstellation:
  """Builds the ADM special case N_add = 0, M_A = M, M_B = 0."""
  pattern.check()
  params = AdmParams(n_add=0, m_a=pattern.m_cap, m_b=0, m_max=pattern.m_max,
                     m=pattern.m, m_cap=pattern.m_cap)
  partition = partition_labels(params, pattern)
  groups_e = base.effective_groups(pattern, effective)
  phi = base.enumerate_mppm(pattern.l, pattern.l_a)
  candidates = subset_candidates(phi, params.m_a, budget=budget, seed=seed,
                                 allow_local_search=allow_local_search,
                                 limit=ties)
  sub_a, template_a, score_a = _best_labelled(
      candidates, partition.xi_subsets[0], pattern.l_a)[0]
  entries = _assign(partition.xi_subsets, groups_e, template_a)
  metadata = {
      'pattern': str(pattern),
      'n_add': 0,
      'm_a': params.m_a,
      'm_b': 0,
      'd_a': sub_a.distance,
      'd_b': 0.,
      'search_a': sub_a.mode,
      'search_b': 'none',
      'psi_a': [str(s) for s in sub_a.symbols],
      'psi_b': [],
      'relabel_a': score_a,
      'seed': seed,
  }
  return base.GsmppmConstellation(pattern, entries, name='optimized',
                                  metadata=metadata)

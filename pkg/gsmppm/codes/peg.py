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
"""Progressive-edge-growth lifting of protographs.

Every base edge (i, j) of multiplicity b_ij becomes b_ij * T lifted edges so
that each copy of check type i receives exactly b_ij edges from copies of
variable type j and no lifted pair is connected twice. Edges are placed one at
a time, variable copies in order of increasing base degree. Each new edge of a
variable node goes to an admissible check that is unreached by, or deepest in,
the breadth-first tree grown from that node (girth-greedy PEG). Ties fall to
the check with most remaining slots for that variable type, then to the
lowest current degree, then to the seeded generator.

When the last copies of a type find every admissible check already adjacent,
one edge of an earlier copy is moved to free a slot (parallel-edge
separation).

Lifted variable index j * T + t is copy t of base column j; check index
i * T + t likewise.
"""

import hashlib
import os
from typing import NamedTuple, Optional, Sequence, Tuple

from absl import logging
from gsmppm import errors
from gsmppm.codes import base_matrix
from gsmppm.utils import rng
import numpy as np
from scipy import sparse

MAX_ATTEMPTS = 8


class LiftedCode(NamedTuple):
  """A binary parity-check matrix with its punctured positions."""
  h: sparse.csr_matrix
  lift_factor: int
  punctured: np.ndarray
  base: Optional[base_matrix.BaseMatrix] = None
  seed: Optional[int] = None

  @classmethod
  def from_parity_check(cls, h, punctured: Sequence[int] = ()):
    """Wraps an explicit parity-check matrix, e.g. a small test code."""
    matrix = sparse.csr_matrix(np.asarray(h, dtype=np.uint8))
    return cls(matrix, 1, np.array(sorted(punctured), dtype=np.int64))

  @property
  def n(self) -> int:
    return self.h.shape[1]

  @property
  def num_checks(self) -> int:
    return self.h.shape[0]

  @property
  def transmitted(self) -> np.ndarray:
    mask = np.ones(self.n, dtype=bool)
    mask[self.punctured] = False
    return np.flatnonzero(mask)

  @property
  def s(self) -> int:
    """Transmitted length."""
    return self.n - len(self.punctured)

  def column_degrees(self) -> np.ndarray:
    return np.asarray(self.h.sum(axis=0)).ravel()

  def row_degrees(self) -> np.ndarray:
    return np.asarray(self.h.sum(axis=1)).ravel()

  def four_cycles(self) -> int:
    """Number of check pairs sharing two or more variables."""
    return _overlapping_pairs(self.h)


def _overlapping_pairs(h: sparse.csr_matrix) -> int:
  h = h.astype(np.int32)
  overlap = sparse.triu(h @ h.T, k=1)
  return int((overlap.data > 1).sum())


class _Graph:
  """Padded adjacency lists grown during PEG."""

  def __init__(self, num_vars, num_checks, var_degree, check_degree):
    self.var_adj = np.full((num_vars, max(var_degree, 1)), -1, dtype=np.int64)
    self.check_adj = np.full((num_checks, max(check_degree, 1)), -1,
                             dtype=np.int64)
    self.var_deg = np.zeros(num_vars, dtype=np.int64)
    self.check_deg = np.zeros(num_checks, dtype=np.int64)

  def add(self, v, c):
    self.var_adj[v, self.var_deg[v]] = c
    self.var_deg[v] += 1
    self.check_adj[c, self.check_deg[c]] = v
    self.check_deg[c] += 1

  def remove(self, v, c):
    for adj, deg, node, other in ((self.var_adj, self.var_deg, v, c),
                                  (self.check_adj, self.check_deg, c, v)):
      row = adj[node]
      k = int(np.flatnonzero(row[:deg[node]] == other)[0])
      row[k:deg[node] - 1] = row[k + 1:deg[node]].copy()
      row[deg[node] - 1] = -1
      deg[node] -= 1

  def checks_of(self, v):
    return self.var_adj[v, :self.var_deg[v]]

  def unreached(self, v, candidates):
    """Candidates outside the BFS tree of `v` at the depth where it stalls."""
    reached = np.zeros(len(self.check_adj), dtype=bool)
    frontier = self.checks_of(v)
    reached[frontier] = True
    while True:
      unreached = candidates & ~reached
      variables = self.check_adj[frontier].ravel()
      variables = np.unique(variables[variables >= 0])
      checks = self.var_adj[variables].ravel()
      checks = np.unique(checks[checks >= 0])
      checks = checks[~reached[checks]]
      if not checks.size:
        return unreached
      reached[checks] = True
      if not (candidates & ~reached).any():
        return unreached
      frontier = checks


def _lift_once(bm: base_matrix.BaseMatrix, t: int,
               generator: np.random.Generator) -> sparse.csr_matrix:
  b = bm.b
  p_c, p_v = b.shape
  graph = _Graph(p_v * t, p_c * t, int(b.sum(axis=0).max()),
                 int(b.sum(axis=1).max()))
  # slots[c, j]: edges check c still expects from variable type j.
  slots = np.repeat(b, t, axis=0).copy()
  check_type = np.repeat(np.arange(p_c), t)
  order = np.argsort(b.sum(axis=0), kind='stable')

  for j in order:
    for copy in range(t):
      v = j * t + copy
      demands = [i for i in range(p_c) for _ in range(b[i, j])]
      for step in range(len(demands)):
        candidates = (slots[:, j] > 0) & (check_type == demands[step])
        candidates[graph.checks_of(v)] = False
        if not candidates.any():
          _separate(graph, slots, check_type, demands[step], j, v, t,
                    generator)
          continue
        pool = candidates if step == 0 else graph.unreached(v, candidates)
        pool = np.flatnonzero(pool)
        pool = pool[slots[pool, j] == slots[pool, j].max()]
        pool = pool[graph.check_deg[pool] == graph.check_deg[pool].min()]
        c = int(generator.choice(pool))
        graph.add(v, c)
        slots[c, j] -= 1
  _break_four_cycles(graph, check_type, t, generator)
  return _to_csr(graph, (p_c * t, p_v * t))


def _to_csr(graph, shape):
  rows = np.repeat(np.arange(shape[0]), graph.check_deg)
  cols = graph.check_adj[graph.check_adj >= 0]
  data = np.ones(len(rows), dtype=np.uint8)
  return sparse.csr_matrix((data, (rows, cols)), shape=shape)


def _closes_four_cycle(graph, v, c):
  """Whether edge (v, c) would share two checks between v and a neighbour."""
  neighbours = set(graph.check_adj[c, :graph.check_deg[c]].tolist()) - {v}
  for other in graph.checks_of(v).tolist():
    row = graph.check_adj[other, :graph.check_deg[other]].tolist()
    if neighbours.intersection(row):
      return True
  return False


def _break_four_cycles(graph, check_type, t, generator, max_rounds=10,
                       max_partners=256):
  """Swaps endpoints of edges on 4-cycles within their (i, j) block.

  Edge (v, c) on a 4-cycle and edge (w, d) with d of the same type as c and
  w of the same type as v become (v, d) and (w, c) when neither new edge
  closes a 4-cycle. Block degrees are unchanged.
  """
  shape = (len(graph.check_adj), len(graph.var_adj))
  for _ in range(max_rounds):
    h = _to_csr(graph, shape).astype(np.int32)
    overlap = sparse.triu(h @ h.T, k=1).tocoo()
    bad = overlap.data > 1
    if not bad.any():
      return
    logging.debug('Breaking %d four-cycles.', int(bad.sum()))
    for c1, c2 in zip(overlap.row[bad].tolist(), overlap.col[bad].tolist()):
      first = graph.check_adj[c1, :graph.check_deg[c1]]
      shared = np.intersect1d(first, graph.check_adj[c2, :graph.check_deg[c2]])
      if len(shared) < 2:
        continue
      v = int(shared[0])
      j = v // t
      partners = generator.permutation(np.arange(j * t, (j + 1) * t))
      for w in partners[:max_partners].tolist():
        if w == v or c2 in graph.checks_of(w):
          continue
        for d in graph.checks_of(w).tolist():
          if check_type[d] != check_type[c2] or d in graph.checks_of(v):
            continue
          graph.remove(v, c2)
          graph.remove(w, d)
          if (not _closes_four_cycle(graph, v, d) and
              not _closes_four_cycle(graph, w, c2)):
            graph.add(v, d)
            graph.add(w, c2)
            break
          graph.add(v, c2)
          graph.add(w, d)
        else:
          continue
        break
  remaining = _overlapping_pairs(_to_csr(graph, shape))
  if remaining:
    logging.warning('%d check pairs still share two variables after %d '
                    'rounds of four-cycle breaking.', remaining, max_rounds)


def _separate(graph, slots, check_type, row_type, j, v, t, generator):
  """Frees a slot for `v` by moving an edge of another copy of type `j`.

  Every check of type `row_type` with a free slot for `j` is already adjacent
  to `v`. Pick such a check `c`, and an earlier copy `w` joined to some check
  `d` of that type which `v` does not touch while `w` does not touch `c`. The
  edge (w, d) becomes (w, c) and `v` takes (v, d).
  """
  free = np.flatnonzero((slots[:, j] > 0) & (check_type == row_type))
  if not free.size:
    raise errors.InfeasibleError(f'No slot left for variable type {j}.')
  c = int(free[0])
  mine = set(graph.checks_of(v).tolist())
  for w in generator.permutation(np.arange(j * t, (j + 1) * t)):
    if w == v or c in set(graph.checks_of(w).tolist()):
      continue
    for d in graph.checks_of(w).tolist():
      if check_type[d] == row_type and d not in mine:
        graph.remove(w, d)
        graph.add(w, c)
        graph.add(v, d)
        slots[c, j] -= 1
        return
  raise errors.InfeasibleError(
      f'Could not separate parallel edges for variable {v}.')


def peg_lift(bm: base_matrix.BaseMatrix, t: int, seed: int = 0) -> LiftedCode:
  """Lifts `bm` by a factor `t` with PEG placement.

  Args:
    bm: base matrix.
    t: lifting factor; at least the largest entry of `bm`.
    seed: root seed. Attempt a uses stream (seed, PEG_LIFT, a).

  Returns:
    The lifted code with every copy of a punctured column punctured.

  Raises:
    ParameterError: if `t` is too small.
    InfeasibleError: if every attempt fails to place all edges.
  """
  if t < max(int(bm.b.max()), 1):
    raise errors.ParameterError(
        f'Lifting factor {t} is below the largest base entry {bm.b.max()}.')
  for attempt in range(MAX_ATTEMPTS):
    generator = rng.stream(seed, rng.PEG_LIFT, attempt)
    try:
      h = _lift_once(bm, t, generator)
    except errors.InfeasibleError as e:
      logging.warning('PEG attempt %d for %s failed: %s', attempt, bm.name, e)
      continue
    punctured = np.concatenate(
        [np.arange(j * t, (j + 1) * t) for j in bm.punctured] or
        [np.zeros(0, dtype=np.int64)]).astype(np.int64)
    logging.info('Lifted %s by %d (seed %d): %d x %d.', bm.name, t, seed,
                 *h.shape)
    return LiftedCode(h, t, punctured, bm, seed)
  raise errors.InfeasibleError(
      f'PEG lifting of {bm.name} by {t} failed {MAX_ATTEMPTS} times.')


def cache_path(cache_dir: str, bm: base_matrix.BaseMatrix, t: int,
               seed: int) -> str:
  """Cache file of one lift, keyed by the matrix and its punctured columns."""
  digest = hashlib.sha256()
  digest.update(np.asarray(bm.b.shape, dtype=np.int64).tobytes())
  digest.update(bm.key())
  digest.update(np.asarray(bm.punctured, dtype=np.int64).tobytes())
  return os.path.join(
      cache_dir, f'{bm.name}_T{t}_seed{seed}_{digest.hexdigest()[:16]}.npz')


def lift_cached(bm: base_matrix.BaseMatrix, t: int, seed: int = 0,
                cache_dir: Optional[str] = None) -> LiftedCode:
  """`peg_lift`, reusing a parity-check matrix stored under `cache_dir`."""
  if cache_dir is None:
    return peg_lift(bm, t, seed)
  path = cache_path(cache_dir, bm, t, seed)
  if os.path.exists(path):
    h = sparse.load_npz(path).tocsr()
    if h.shape == (bm.p_c * t, bm.p_v * t):
      punctured = np.array([j * t + c for j in bm.punctured for c in range(t)],
                           dtype=np.int64)
      return LiftedCode(h, t, punctured, bm, seed)
    logging.warning('Ignoring cached code %s with shape %s.', path, h.shape)
  code = peg_lift(bm, t, seed)
  os.makedirs(cache_dir, exist_ok=True)
  sparse.save_npz(path, code.h)
  return code


def degree_profile(code: LiftedCode) -> Tuple[np.ndarray, np.ndarray]:
  """Column and row degrees of the lifted base types, for diagnostics."""
  if code.base is None:
    return code.column_degrees(), code.row_degrees()
  t = code.lift_factor
  cols = code.column_degrees().reshape(code.base.p_v, t)
  rows = code.row_degrees().reshape(code.base.p_c, t)
  return cols[:, 0], rows[:, 0]

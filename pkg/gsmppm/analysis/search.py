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
"""Constrained search over protograph base matrices ranked by PEXIT threshold.

A template fixes some entries of a base matrix and leaves the others free to
take values from a small alphabet. Candidates are instantiated either by
seeded sampling or as the single-entry neighbourhood of a start matrix, then
filtered by the design constraints and ranked by decoding threshold. Ties go
to the lexicographically smaller matrix bytes.
"""

import functools
from typing import List, NamedTuple, Optional, Sequence, Tuple

from absl import logging
from gsmppm import errors
from gsmppm.analysis import pexit
from gsmppm.channel import turbulence
from gsmppm.codes import base_matrix
from gsmppm.constellations import base
from gsmppm.utils import pool
from gsmppm.utils import rng
import numpy as np

FREE = -1
SEARCH_MODES = ('sample', 'neighborhood')

# Fixed left block of the 4 x 7 initial matrix; columns 4 to 7 are free and
# column 4 is punctured.
_INITIAL_FIXED = (
    (1, 0, 0, FREE, FREE, FREE, FREE),
    (0, 1, 1, FREE, FREE, FREE, FREE),
    (0, 0, 1, FREE, FREE, FREE, FREE),
    (0, 1, 0, FREE, FREE, FREE, FREE),
)


class BaseTemplate(NamedTuple):
  """Fixed entries, with `FREE` marking entries drawn from `values`."""
  fixed: np.ndarray
  values: Tuple[int, ...] = (0, 1, 2, 3)
  punctured: Tuple[int, ...] = (3,)
  name: str = 'template'

  @property
  def free_positions(self) -> Tuple[Tuple[int, int], ...]:
    return tuple(zip(*(v.tolist() for v in np.nonzero(self.fixed == FREE))))

  def instantiate(self, free_values: Sequence[int],
                  name: str = 'candidate') -> base_matrix.BaseMatrix:
    b = np.array(self.fixed, dtype=np.int64)
    for (i, j), value in zip(self.free_positions, free_values):
      b[i, j] = value
    return base_matrix.BaseMatrix.create(b, self.punctured, name)

  def contains(self, bm: base_matrix.BaseMatrix) -> bool:
    if bm.b.shape != self.fixed.shape or bm.punctured != self.punctured:
      return False
    fixed = self.fixed != FREE
    free_ok = np.isin(bm.b[~fixed], self.values).all()
    return bool((bm.b[fixed] == self.fixed[fixed]).all() and free_ok)


def initial_template() -> BaseTemplate:
  return BaseTemplate(np.array(_INITIAL_FIXED, dtype=np.int64),
                      name='initial')


class SearchCandidate(NamedTuple):
  base: base_matrix.BaseMatrix
  threshold: pexit.ThresholdResult


def _try_instantiate(template, free_values):
  try:
    return template.instantiate(free_values)
  except errors.ParameterError:
    return None


def enumerate_candidates(
    template: BaseTemplate,
    budget: int,
    seed: int = 0,
    mode: str = 'sample',
    start: Optional[base_matrix.BaseMatrix] = None,
) -> List[base_matrix.BaseMatrix]:
  """Returns the distinct feasible candidates among `budget` proposals."""
  if budget < 1:
    raise errors.ParameterError(f'budget must be >= 1, got {budget}.')
  positions = template.free_positions
  proposals = []
  if mode == 'sample':
    generator = rng.stream(seed, rng.BASE_SEARCH)
    draws = generator.choice(np.array(template.values),
                             size=(budget, len(positions)))
    proposals = [_try_instantiate(template, row) for row in draws]
  elif mode == 'neighborhood':
    start = start or base_matrix.builtin_code('i-pldpc')
    if not template.contains(start):
      raise errors.ParameterError(
          f'Start matrix {start.name!r} does not fit template '
          f'{template.name!r}.')
    origin = [int(start.b[i, j]) for i, j in positions]
    proposals.append(_try_instantiate(template, origin))
    for k in range(len(positions)):
      for value in template.values:
        if value != origin[k]:
          proposals.append(_try_instantiate(
              template, origin[:k] + [value] + origin[k + 1:]))
    proposals = proposals[:budget]
  else:
    raise errors.ParameterError(
        f'Unknown search mode {mode!r}; expected {SEARCH_MODES}.')

  seen = set()
  feasible = []
  for bm in proposals:
    if bm is None or bm.key() in seen:
      continue
    seen.add(bm.key())
    if base_matrix.check_design_constraints(bm).passed:
      feasible.append(bm._replace(name=f'candidate-{len(feasible)}'))
  logging.info('%d of %d proposals are feasible.', len(feasible),
               len(proposals))
  return feasible


def _evaluate(bm, c, fading, options):
  try:
    return pexit.pexit_threshold(bm, c, fading, options)
  except errors.AnalysisError as e:
    logging.warning('Skipping %s: %s', bm.name, e)
    return None


def search_base_matrix(template: BaseTemplate,
                       c: base.GsmppmConstellation,
                       fading: turbulence.FadingParams,
                       budget: int = 64,
                       seed: int = 0,
                       mode: str = 'sample',
                       start: Optional[base_matrix.BaseMatrix] = None,
                       top_k: int = 5,
                       options: Optional[pexit.PexitOptions] = None,
                       workers: int = 1) -> List[SearchCandidate]:
  """Ranks feasible template instantiations by PEXIT threshold.

  Args:
    template: the base-matrix template.
    c: constellation used for the detector channel.
    fading: fading parameters.
    budget: number of proposals (sampled or taken from the neighbourhood).
    seed: root seed for sampling.
    mode: 'sample' or 'neighborhood'.
    start: neighbourhood centre, the I-PLDPC matrix by default.
    top_k: number of candidates returned.
    options: PEXIT options shared by all candidates.
    workers: process count for candidate evaluation.

  Returns:
    Up to `top_k` candidates, best threshold first.

  Raises:
    SearchError: if no proposal is feasible or none can be analyzed.
  """
  candidates = enumerate_candidates(template, budget, seed, mode, start)
  if not candidates:
    raise errors.SearchError(
        f'No feasible candidate among {budget} proposals of '
        f'{template.name!r}.')
  run = functools.partial(_evaluate, c=c, fading=fading, options=options)
  thresholds = pool.map_ordered(run, candidates, workers,
                                description='candidates')
  ranked = [SearchCandidate(bm, result)
            for bm, result in zip(candidates, thresholds) if result is not None]
  if not ranked:
    raise errors.SearchError('No feasible candidate reached a threshold.')
  ranked.sort(key=lambda r: (r.threshold.threshold_db, r.base.key()))
  return ranked[:top_k]

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
"""Order-preserving process pool used by Monte-Carlo loops and table jobs."""

from concurrent import futures
import multiprocessing
from typing import Callable, List, Optional, Sequence, TypeVar

import termcolor
import tqdm

T = TypeVar('T')
R = TypeVar('R')


def map_ordered(
    run_fn: Callable[[T], R],
    items: Sequence[T],
    num_processes: Optional[int] = 1,
    description: str = 'jobs',
    show_progress: bool = False,
) -> List[R]:
  """Maps `run_fn` over `items` and returns results in input order.

  With `num_processes == 1` the map runs in-process, which keeps single-worker
  runs free of pickling constraints. `run_fn` must be picklable otherwise.

  Args:
    run_fn: function applied to every item.
    items: inputs.
    num_processes: worker count; None means one per CPU.
    description: label used in the banner and the progress bar.
    show_progress: whether to print a banner and a tqdm progress bar.

  Returns:
    `[run_fn(item) for item in items]`.
  """
  num_processes = num_processes or multiprocessing.cpu_count()
  if show_progress:
    message = """
    Experiment info
    ---------------
    Num {description}: {num_items}
    Num worker processes: {num_processes}
    """.format(description=description, num_items=len(items),
               num_processes=num_processes)
    termcolor.cprint(message, color='blue', attrs=['bold'])

  progress_bar = tqdm.tqdm(total=len(items), disable=not show_progress)
  results = []
  if num_processes == 1:
    mapped = map(run_fn, items)
    pool = None
  else:
    pool = futures.ProcessPoolExecutor(num_processes)
    mapped = pool.map(run_fn, items)
  try:
    for index, result in enumerate(mapped):
      results.append(result)
      description_text = '[Last finished: {} {}]'.format(description, index)
      progress_bar.set_description(
          termcolor.colored(description_text, color='green'))
      progress_bar.update()
  finally:
    progress_bar.close()
    if pool is not None:
      pool.shutdown()
  return results

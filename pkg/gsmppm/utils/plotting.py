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
"""Common plotting and analysis code.

Plots use plotnine, a python implementation of ggplot, and are returned as
`ggplot` objects for the experiment analysis modules to refine and save.
"""

from typing import Optional, Sequence

from absl import logging
import numpy as np
import pandas as pd
import plotnine as gg

# Updates the theme to preferred default settings
gg.theme_set(gg.theme_bw(base_size=18, base_family='serif'))
gg.theme_update(figure_size=(12, 8), panel_spacing_x=0.5, panel_spacing_y=0.5)

FIVE_COLOURS = [
    '#313695',  # DARK BLUE
    '#74add1',  # LIGHT BLUE
    '#4daf4a',  # GREEN
    '#f46d43',  # ORANGE
    '#d73027',  # RED
] * 10

CATEGORICAL_COLOURS = ([
    '#313695',  # DARK BLUE
    '#74add1',  # LIGHT BLUE
    '#4daf4a',  # GREEN
    '#f46d43',  # ORANGE
    '#d73027',  # RED
    '#984ea3',  # PURPLE
    '#f781bf',  # PINK
    '#ffc832',  # YELLOW
    '#000000',  # BLACK
]) * 100


def snr_at_target(snr_db: Sequence[float],
                  values: Sequence[float],
                  target: float,
                  log_scale: bool = False) -> float:
  """SNR at which a monotone curve crosses `target`, by linear interpolation.

  Args:
    snr_db: SNR grid, in increasing order.
    values: curve values on the grid; BER decreases with SNR, capacity
      increases.
    target: crossing level.
    log_scale: interpolate log10 of the values, as for error rates. Zero error
      rates are skipped.

  Returns:
    The interpolated SNR, or NaN if the curve never crosses `target`.
  """
  snr = np.asarray(snr_db, dtype=float)
  y = np.asarray(values, dtype=float)
  if log_scale:
    keep = y > 0
    snr, y, target = snr[keep], np.log10(y[keep]), np.log10(target)
  hits = np.flatnonzero(y == target)
  if hits.size:
    return float(snr[hits[0]])
  if len(y) < 2:
    return np.nan
  above = y >= target
  for i in range(len(y) - 1):
    if above[i] != above[i + 1]:
      if y[i + 1] == y[i]:
        return float(snr[i])
      fraction = (target - y[i]) / (y[i + 1] - y[i])
      return float(snr[i] + fraction * (snr[i + 1] - snr[i]))
  return np.nan


def required_snr(df: pd.DataFrame,
                 value_col: str,
                 target: float,
                 group_cols: Sequence[str],
                 log_scale: bool = False) -> pd.DataFrame:
  """One `required_snr_db` per group, from curves stored as rows of `df`."""
  data = []
  for key, sub_df in df.groupby(list(group_cols)):
    sub_df = sub_df.sort_values('snr_db')
    key = key if isinstance(key, tuple) else (key,)
    row = dict(zip(group_cols, key))
    row['required_snr_db'] = snr_at_target(
        sub_df.snr_db.values, sub_df[value_col].values, target, log_scale)
    data.append(row)
  return pd.DataFrame(data, columns=list(group_cols) + ['required_snr_db'])


def gap_table(df: pd.DataFrame,
              value_col: str,
              compare_col: str,
              reference: str,
              index_col: str = 'pattern') -> pd.DataFrame:
  """Pivots `value_col` and adds `gap_<x>` = x - reference for every x."""
  table = df.pivot_table(index=index_col, columns=compare_col,
                         values=value_col, aggfunc='mean')
  if reference not in table.columns:
    raise ValueError(f'Reference {reference!r} not in {list(table.columns)}.')
  for column in list(table.columns):
    if column != reference:
      table[f'gap_{column}'] = table[column] - table[reference]
  return table


_MAX_PANELS = 12
_PANEL_SIZE = (5, 4)


def facet_sweep_plot(base_plot: gg.ggplot,
                     sweep_vars: Optional[Sequence[str]] = None,
                     ncol: int = 3) -> gg.ggplot:
  """Facets `base_plot` by `sweep_vars`, sizing the figure to the panel grid."""
  panels = 1
  if sweep_vars:
    panels = len(base_plot.data[list(sweep_vars)].drop_duplicates())
    base_plot += gg.facet_wrap(sweep_vars, ncol=ncol, labeller='label_both')
  if panels > _MAX_PANELS:
    logging.warning('Faceting %d panels at once is more than recommended.',
                    panels)
  cols = min(panels, ncol)
  rows = -(-panels // cols)
  fig_size = (_PANEL_SIZE[0] * cols + 2, _PANEL_SIZE[1] * rows + 1)
  return base_plot + gg.theme(figure_size=fig_size, panel_spacing_x=0.5,
                              panel_spacing_y=0.5)


def plot_curves(df_in: pd.DataFrame,
                y_col: str,
                group_col: str,
                sweep_vars: Optional[Sequence[str]] = None,
                log_y: bool = False) -> gg.ggplot:
  """Line-and-point curves of `y_col` against SNR, one colour per group."""
  df = df_in.copy()
  if log_y:
    df = df[df[y_col] > 0]
  group_name = group_col.replace('_', ' ')
  df[group_name] = df[group_col].astype('category')
  p = (gg.ggplot(df)
       + gg.aes(x='snr_db', y=y_col, group=group_name, colour=group_name)
       + gg.geom_line(size=1.5, alpha=0.75)
       + gg.geom_point(size=2.5)
       + gg.scale_colour_manual(values=FIVE_COLOURS)
       + gg.xlab('SNR (dB)'))
  if log_y:
    p += gg.scale_y_log10()
  return facet_sweep_plot(p, sweep_vars)


def plot_bars(df_in: pd.DataFrame,
              y_col: str,
              group_col: str,
              x_col: str = 'pattern') -> gg.ggplot:
  """Dodged bars of `y_col` per `x_col`, one fill per group."""
  df = df_in.copy()
  group_name = group_col.replace('_', ' ')
  df[group_name] = df[group_col].astype('category')
  p = (gg.ggplot(df)
       + gg.aes(x=x_col, y=y_col, fill=group_name)
       + gg.geom_bar(stat='identity', position='dodge')
       + gg.scale_fill_manual(values=FIVE_COLOURS)
       + gg.theme(axis_text_x=gg.element_text(angle=30, hjust=1)))
  return facet_sweep_plot(p)

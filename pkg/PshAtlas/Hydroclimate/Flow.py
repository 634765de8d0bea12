"""
Contains the streamflow statistics and the streamflow series reader.
"""
from typing import Dict
from typing import Tuple
import logging

import numpy as np
import pandas as pd

from PshAtlas import LayerError


LOGGER = logging.getLogger(__name__)

FLOW_PERCENTILES = (10, 50, 90)


def flow_statistics(series) -> Tuple[float, float, float, float]:
    """
    The low, median and high flow percentiles and the mean flow. Percentiles
    interpolate linearly between closest ranks.

    >>> flow_statistics([0, 10])
    (1.0, 5.0, 9.0, 5.0)
    >>> [round(value, 6) for value in flow_statistics(range(1, 101))]
    [10.9, 50.5, 90.1, 50.5]

    :param series: Streamflow samples in m³/s.
    :return:       ``(q10, q50, q90, qavg)``.
    :raises ValueError: If the series is empty or has negative values.
    """
    values = np.asarray(series, dtype=np.float64)
    if values.size == 0:
        raise ValueError('empty streamflow series')
    if not np.isfinite(values).all() or (values < 0).any():
        raise ValueError('streamflow must be finite and not negative')
    q10, q50, q90 = np.percentile(values, FLOW_PERCENTILES)
    return float(q10), float(q50), float(q90), float(values.mean())


def read_flow_series(path) -> Dict[int, np.ndarray]:
    """
    Reads a long-format streamflow table with the columns ``point_id`` and
    ``value``. Samples keep their order within each river point.

    :param path: The CSV file.
    :return:     River point id to its samples.
    :raises LayerError: If the file can't be read or is malformed.
    """
    try:
        frame = pd.read_csv(path)
    except (OSError, ValueError) as error:
        raise LayerError('cannot read streamflow table ({})'.format(error),
                         str(path))

    missing = {'point_id', 'value'} - set(frame.columns)
    if missing:
        raise LayerError('missing column(s) {}'.format(
            ', '.join(sorted(missing))), str(path))
    try:
        ids = pd.to_numeric(frame['point_id'])
        values = pd.to_numeric(frame['value'])
    except (TypeError, ValueError) as error:
        raise LayerError('non-numeric entry ({})'.format(error), str(path))
    if ids.isna().any() or (ids != ids.round()).any():
        raise LayerError('point_id must be an integer', str(path))
    if values.isna().any() or (values < 0).any():
        bad = int(np.flatnonzero((values.isna() | (values < 0)).to_numpy())[0])
        # +2 for the header and 1-based lines
        raise LayerError('missing or negative flow value', str(path),
                         line=bad + 2)

    table = pd.DataFrame({'point_id': ids.astype(np.int64),
                          'value': values.astype(np.float64)})
    series = {int(point): group['value'].to_numpy()
              for point, group in table.groupby('point_id', sort=True)}
    LOGGER.info('read streamflow of %d river points from %s', len(series),
                path)
    return series

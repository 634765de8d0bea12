"""
Contains the extraction of flat-land reservoir candidates.
"""
from typing import List
import logging

import numpy as np
from scipy.ndimage import label

from PshAtlas import LayerError
from PshAtlas.GeoData.RasterGrid import RasterGrid
from PshAtlas.GeoData.SchemeConfig import SchemeConfig
from PshAtlas.Interfaces import CandidateKind
from PshAtlas.Interfaces.ReservoirCandidate import ReservoirCandidate


LOGGER = logging.getLogger(__name__)

# 8-connectivity
CONNECTIVITY = np.ones((3, 3), dtype=bool)


def flat_mask(slope: RasterGrid, dem: RasterGrid,
              cfg: SchemeConfig) -> np.ndarray:
    """
    Marks the cells gentle and low enough to host an excavated reservoir.
    """
    return (slope.valid_mask & dem.valid_mask &
            (slope.values < cfg.slope_threshold_pct) &
            (dem.values <= cfg.elevation_cap_m))


def extract_flatlands(slope: RasterGrid, dem: RasterGrid,
                      cfg: SchemeConfig) -> List[ReservoirCandidate]:
    """
    Labels 8-connected components of flat cells below the elevation cap and
    returns one FlatLand candidate per component large enough. Candidate ids
    are assigned from 1 in the order components are first met scanning rows
    from south to north.

    :param slope: Percent slope grid.
    :param dem:   The elevation grid the slope was derived from.
    :param cfg:   The SchemeConfig.
    :return:      The candidates, ordered by id.
    :raises LayerError: If the grids aren't co-registered.
    """
    if not slope.same_geometry(dem):
        raise LayerError('slope and dem grids are not co-registered', 'slope')

    labels, count = label(flat_mask(slope, dem, cfg), structure=CONNECTIVITY)
    if count == 0:
        return []

    xs, ys = dem.cell_centers()
    flat_labels = labels.ravel()
    columns = np.broadcast_to(xs, dem.shape).ravel()
    rows = np.broadcast_to(ys[:, None], dem.shape).ravel()
    length = count + 1
    cells = np.bincount(flat_labels, minlength=length)
    elevation_sum = np.bincount(flat_labels, weights=dem.values.ravel(),
                                minlength=length)
    x_sum = np.bincount(flat_labels, weights=columns, minlength=length)
    y_sum = np.bincount(flat_labels, weights=rows, minlength=length)

    cell_area = dem.cellsize ** 2
    candidates = []
    for component in range(1, count + 1):
        area = cells[component] * cell_area
        if area < cfg.min_area_m2:
            LOGGER.debug('discarded flat land component %d reason=area '
                         'area_m2=%.1f', component, area)
            continue
        candidates.append(ReservoirCandidate(
            id=len(candidates) + 1,
            kind=CandidateKind.FLAT_LAND,
            x=float(x_sum[component] / cells[component]),
            y=float(y_sum[component] / cells[component]),
            elevation_m=float(elevation_sum[component] / cells[component]),
            surface_area_m2=float(area)))

    LOGGER.info('extracted %d flat land candidates from %d components',
                len(candidates), count)
    return candidates

"""
Contains the densification of the river network into on-river storage
points.
"""
from math import floor
from typing import List
import logging

import numpy as np
import shapely
from shapely.geometry import LineString

from PshAtlas.GeoData.RasterGrid import RasterGrid
from PshAtlas.GeoData.SchemeConfig import SchemeConfig
from PshAtlas.GeoData.VectorLayer import VectorLayer
from PshAtlas.Interfaces import CandidateKind
from PshAtlas.Interfaces.ReservoirCandidate import ReservoirCandidate
from PshAtlas.Terrain.Sampling import sample_elevation


LOGGER = logging.getLogger(__name__)

# relative slack for lengths that are a multiple of the interval
LENGTH_TOLERANCE = 1e-9


def chainages(line: LineString, interval: float) -> np.ndarray:
    """
    The distances along the line points are placed at: 0, interval,
    2 * interval, ... up to the line length.

    >>> chainages(LineString([(0, 0), (3500, 0)]), 1000.0).tolist()
    [0.0, 1000.0, 2000.0, 3000.0]
    >>> chainages(LineString([(0, 0), (999, 0)]), 1000.0).tolist()
    [0.0]
    """
    count = floor(line.length / interval * (1 + LENGTH_TOLERANCE)) + 1
    return np.arange(count, dtype=np.float64) * interval


def densify_river_points(rivers: VectorLayer, dem: RasterGrid,
                         cfg: SchemeConfig) -> List[ReservoirCandidate]:
    """
    Places RiverPoint candidates every ``river_interval_m`` meters along each
    polyline, starting at its first vertex. Points on NODATA, off the DEM or
    above the elevation cap are dropped. Ids are assigned from 1 ordered by
    feature id, then chainage.

    :param rivers: Polyline layer of the river network.
    :param dem:    The elevation grid.
    :param cfg:    The SchemeConfig.
    :return:       The river points ordered by id.
    """
    candidates = []
    for feature in sorted(rivers, key=lambda feature: feature.id):
        distances = chainages(feature.geometry, cfg.river_interval_m)
        points = shapely.line_interpolate_point(feature.geometry, distances)
        for chainage, point in zip(distances, points):
            x, y = float(shapely.get_x(point)), float(shapely.get_y(point))
            if not dem.contains(x, y):
                LOGGER.info('discarded river %d point at %.1f m '
                            'reason=extent', feature.id, chainage)
                continue
            try:
                elevation = sample_elevation(dem, (x, y))
            except ValueError:
                LOGGER.info('discarded river %d point at %.1f m '
                            'reason=nodata', feature.id, chainage)
                continue
            if elevation > cfg.elevation_cap_m:
                LOGGER.info('discarded river %d point at %.1f m '
                            'reason=elevation elevation_m=%.1f', feature.id,
                            chainage, elevation)
                continue
            candidates.append(ReservoirCandidate(
                id=len(candidates) + 1,
                kind=CandidateKind.RIVER_POINT,
                x=x,
                y=y,
                elevation_m=elevation,
                source_id=feature.id,
                chainage_m=float(chainage)))

    LOGGER.info('placed %d river points on %d rivers', len(candidates),
                len(rivers))
    return candidates

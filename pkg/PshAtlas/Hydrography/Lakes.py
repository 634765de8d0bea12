"""
Contains the construction of lake reservoir candidates.
"""
from typing import List
import logging

from PshAtlas import LayerError
from PshAtlas.GeoData.RasterGrid import RasterGrid
from PshAtlas.GeoData.SchemeConfig import SchemeConfig
from PshAtlas.GeoData.VectorLayer import VectorLayer
from PshAtlas.GeoData.VectorLayer import polygon_area
from PshAtlas.Interfaces import CandidateKind
from PshAtlas.Interfaces.ReservoirCandidate import ReservoirCandidate
from PshAtlas.Terrain.Sampling import mean_polygon_elevation


LOGGER = logging.getLogger(__name__)


def lake_candidates(lakes: VectorLayer, dem: RasterGrid,
                    cfg: SchemeConfig) -> List[ReservoirCandidate]:
    """
    Turns lake polygons into Lake candidates. A lake is kept if its planar
    area reaches the minimum area, its area centroid lies on the DEM and its
    mean elevation doesn't exceed the elevation cap. Candidates keep the
    feature id.

    :param lakes: Polygon layer of lakes.
    :param dem:   The elevation grid.
    :param cfg:   The SchemeConfig.
    :return:      The kept candidates ordered by id.
    :raises LayerError: If a polygon has zero area.
    """
    candidates = []
    for feature in sorted(lakes, key=lambda feature: feature.id):
        polygon = feature.geometry
        area = polygon_area(polygon)
        if area <= 0:
            raise LayerError('polygon with zero area (feature {})'.format(
                feature.id), 'lakes')
        if area < cfg.min_area_m2:
            LOGGER.info('discarded lake %d reason=area area_m2=%.1f',
                        feature.id, area)
            continue

        centroid = polygon.centroid
        if not dem.contains(centroid.x, centroid.y):
            LOGGER.info('discarded lake %d reason=extent', feature.id)
            continue
        try:
            elevation = mean_polygon_elevation(dem, polygon)
        except ValueError:
            LOGGER.info('discarded lake %d reason=nodata', feature.id)
            continue
        if elevation > cfg.elevation_cap_m:
            LOGGER.info('discarded lake %d reason=elevation elevation_m=%.1f',
                        feature.id, elevation)
            continue

        candidates.append(ReservoirCandidate(
            id=feature.id,
            kind=CandidateKind.LAKE,
            x=float(centroid.x),
            y=float(centroid.y),
            elevation_m=elevation,
            surface_area_m2=area,
            source_id=feature.id))

    LOGGER.info('kept %d of %d lakes', len(candidates), len(lakes))
    return candidates

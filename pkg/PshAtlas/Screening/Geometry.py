"""
Contains the planar proximity and containment tests used for screening.
"""
from typing import Optional
from typing import Tuple

import numpy as np
import shapely
from shapely.geometry import Point

from PshAtlas.GeoData.VectorLayer import VectorLayer


def _nearest(point: Tuple[float, float], layer: VectorLayer) -> float:
    if len(layer) == 0:
        raise ValueError('distance to an empty {} layer'.format(layer.kind))
    return float(np.min(shapely.distance(layer.geometries, Point(point))))


def distance_to_polylines(point: Tuple[float, float],
                          lines: VectorLayer) -> float:
    """
    Minimum Euclidean distance from a point to any segment of the layer.

    >>> from shapely.geometry import LineString
    >>> from PshAtlas.GeoData.VectorLayer import Feature
    >>> from PshAtlas.Interfaces import GeometryKind
    >>> road = VectorLayer(GeometryKind.POLYLINE,
    ...                    [Feature(1, LineString([(-50, 0), (50, 0)]))])
    >>> distance_to_polylines((0, 100), road)
    100.0
    >>> distance_to_polylines((150, 0), road)
    100.0

    :raises ValueError: If the layer has no features.
    """
    return _nearest(point, lines)


def distance_to_points(point: Tuple[float, float],
                       points: VectorLayer) -> float:
    """
    Distance from a point to the nearest feature of a point layer.

    :raises ValueError: If the layer has no features.
    """
    return _nearest(point, points)


def nearest_distance(point: Tuple[float, float],
                     *layers: Optional[VectorLayer]) -> float:
    """
    Distance to the nearest feature over several layers. Missing and empty
    layers contribute infinity.

    >>> nearest_distance((0, 0), None)
    inf
    """
    distances = [_nearest(point, layer) for layer in layers
                 if layer is not None and len(layer) > 0]
    return min(distances, default=float('inf'))


def point_in_protected_area(point: Tuple[float, float],
                            areas: Optional[VectorLayer]) -> bool:
    """
    Whether the point lies in any polygon of the layer. Points on a polygon
    boundary count as inside; points in a hole don't.

    >>> from PshAtlas.GeoData.VectorLayer import Feature
    >>> from PshAtlas.Interfaces import GeometryKind
    >>> from shapely.geometry import Polygon
    >>> park = VectorLayer(GeometryKind.POLYGON, [Feature(1, Polygon(
    ...     [(0, 0), (100, 0), (100, 100), (0, 100)]))])
    >>> point_in_protected_area((50, 50), park)
    True
    >>> point_in_protected_area((100, 50), park)
    True
    >>> point_in_protected_area((150, 50), park)
    False
    """
    if areas is None or len(areas) == 0:
        return False
    return bool(shapely.intersects(areas.geometries, Point(point)).any())

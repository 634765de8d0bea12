"""
Contains the vector layer abstraction and the feature-collection parser.
"""
from dataclasses import dataclass
from typing import Iterator
from typing import List
from typing import Optional
from typing import Union
import json

import numpy as np
import shapely
from shapely.geometry import LineString
from shapely.geometry import Point
from shapely.geometry import Polygon
from shapely.geometry.base import BaseGeometry

from PshAtlas import LayerError
from PshAtlas.GeoData import read_text
from PshAtlas.Interfaces import GeometryKind


@dataclass(frozen=True)
class Feature:
    """
    One geometry of a vector layer.

    :param id:       Integer feature id, unique within the layer.
    :param geometry: The shapely geometry in planar meters.
    :param name:     Optional feature name.
    """
    id: int
    geometry: BaseGeometry
    name: Optional[str] = None


class VectorLayer:
    """
    An ordered collection of features sharing one geometry kind.

    >>> layer = VectorLayer(GeometryKind.POINT, [Feature(1, Point(0, 0))])
    >>> len(layer)
    1
    >>> layer.ids
    [1]
    """

    def __init__(self, kind: GeometryKind, features: List[Feature]):
        """
        :raises ValueError: If feature ids are not unique.
        """
        seen = set()
        for feature in features:
            if feature.id in seen:
                raise ValueError('duplicate feature id {}'.format(feature.id))
            seen.add(feature.id)
        self.kind = kind
        self.features = tuple(features)
        self._geometries = None

    @classmethod
    def empty(cls, kind: GeometryKind) -> 'VectorLayer':
        """
        Creates a layer without features.
        """
        return cls(kind, [])

    @property
    def ids(self) -> List[int]:
        return [feature.id for feature in self.features]

    @property
    def geometries(self) -> np.ndarray:
        """
        The geometries as array, usable with vectorized shapely functions.
        """
        if self._geometries is None:
            self._geometries = np.array(
                [feature.geometry for feature in self.features],
                dtype=object)
        return self._geometries

    def __len__(self):
        return len(self.features)

    def __iter__(self) -> Iterator[Feature]:
        return iter(self.features)

    def __repr__(self):  # dont cover
        return '<{} object({}, {} features) at {}>'.format(
            self.__class__.__name__, self.kind, len(self), hex(id(self)))


def _coordinate(value, where):
    if (not isinstance(value, (list, tuple)) or len(value) < 2 or
            not all(isinstance(part, (int, float)) and
                    not isinstance(part, bool) for part in value[:2])):
        raise ValueError('invalid coordinate {!r} in {}'.format(value, where))
    return (float(value[0]), float(value[1]))


def _ring(coordinates, where):
    ring = [_coordinate(value, where) for value in coordinates]
    if len(ring) < 4:
        raise ValueError('polygon ring with fewer than 4 vertices in '
                         '{}'.format(where))
    if ring[0] != ring[-1]:
        raise ValueError('unclosed ring in {}'.format(where))
    return ring


def _geometry(kind: GeometryKind, geometry: dict, where: str):
    if not isinstance(geometry, dict):
        raise ValueError('missing geometry in {}'.format(where))
    if geometry.get('type') != kind.geojson_type:
        raise ValueError('{} geometry in {} layer ({})'.format(
            geometry.get('type'), kind, where))
    coordinates = geometry.get('coordinates')
    if not isinstance(coordinates, list):
        raise ValueError('missing coordinates in {}'.format(where))

    if kind is GeometryKind.POINT:
        return Point(_coordinate(coordinates, where))
    if kind is GeometryKind.POLYLINE:
        vertices = [_coordinate(value, where) for value in coordinates]
        if len(vertices) < 2:
            raise ValueError('degenerate polyline in {}'.format(where))
        return LineString(vertices)
    if not coordinates:
        raise ValueError('polygon without rings in {}'.format(where))
    rings = [_ring(ring, where) for ring in coordinates]
    return Polygon(rings[0], rings[1:])


def parse_vector_layer(doc: Union[str, dict], kind: GeometryKind,
                       source: str='') -> VectorLayer:
    """
    Parses a feature-collection document into a layer of the given kind.
    Every feature needs an integer ``id`` property; a ``name`` property is
    optional.

    >>> doc = {'type': 'FeatureCollection', 'features': [
    ...     {'type': 'Feature', 'properties': {'id': 1},
    ...      'geometry': {'type': 'Polygon', 'coordinates': [
    ...          [[0, 0], [100, 0], [100, 100], [0, 100], [0, 0]]]}}]}
    >>> layer = parse_vector_layer(doc, GeometryKind.POLYGON)
    >>> layer.features[0].geometry.area
    10000.0

    :param doc:    The document, as text or already decoded.
    :param kind:   The GeometryKind all features must have.
    :param source: Name used in diagnostics.
    :raises LayerError:
        On malformed documents, mixed geometry types, unclosed rings,
        degenerate polylines or duplicate feature ids.
    """
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except ValueError as error:
            raise LayerError('invalid JSON ({})'.format(error), source)
    if not isinstance(doc, dict) or doc.get('type') != 'FeatureCollection':
        raise LayerError('not a feature collection', source)
    if not isinstance(doc.get('features'), list):
        raise LayerError('feature collection without features list', source)

    features = []
    for index, item in enumerate(doc['features']):
        where = 'feature #{}'.format(index)
        try:
            if not isinstance(item, dict):
                raise ValueError('malformed {}'.format(where))
            properties = item.get('properties') or {}
            fid = properties.get('id')
            if not isinstance(fid, int) or isinstance(fid, bool):
                raise ValueError('missing integer id property in {}'.format(
                    where))
            where = 'feature {}'.format(fid)
            geometry = _geometry(kind, item.get('geometry'), where)
        except ValueError as error:
            raise LayerError(str(error), source)
        name = properties.get('name')
        features.append(Feature(fid, geometry,
                                None if name is None else str(name)))

    try:
        return VectorLayer(kind, features)
    except ValueError as error:
        raise LayerError(str(error), source)


def read_vector_layer(path: str, kind: GeometryKind) -> VectorLayer:
    """
    Reads a feature-collection file.

    :raises LayerError: If the file can't be read or parsed.
    """
    return parse_vector_layer(read_text(path), kind, source=str(path))


def polygon_area(polygon: Polygon) -> float:
    """
    Planar (shoelace) area of a polygon, holes subtracted.

    >>> polygon_area(Polygon([(0, 0), (300, 0), (300, 300), (0, 300)]))
    90000.0
    """
    return float(shapely.area(polygon))

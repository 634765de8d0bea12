import json

from shapely.geometry import Point

from PshAtlas import LayerError
from PshAtlas.GeoData.VectorLayer import Feature
from PshAtlas.GeoData.VectorLayer import VectorLayer
from PshAtlas.GeoData.VectorLayer import parse_vector_layer
from PshAtlas.GeoData.VectorLayer import polygon_area
from PshAtlas.GeoData.VectorLayer import read_vector_layer
from PshAtlas.Interfaces import GeometryKind

from tests import PshAtlasTestCase
from tests import feature_collection
from tests import rectangle


class VectorLayerTest(PshAtlasTestCase):

    def test_duplicate_ids(self):
        with self.assertRaisesRegex(ValueError, 'duplicate feature id 7'):
            VectorLayer(GeometryKind.POINT, [Feature(7, Point(0, 0)),
                                             Feature(7, Point(1, 1))])

    def test_empty(self):
        layer = VectorLayer.empty(GeometryKind.POLYGON)
        self.assertEqual(len(layer), 0)
        self.assertEqual(layer.geometries.shape, (0,))


class ParseVectorLayerTest(PshAtlasTestCase):

    def test_square_polygon(self):
        doc = feature_collection('Polygon', [rectangle(0, 0, 100, 100)])
        layer = parse_vector_layer(json.dumps(doc), GeometryKind.POLYGON)
        self.assertEqual(layer.kind, GeometryKind.POLYGON)
        self.assertEqual(len(layer), 1)
        self.assertEqual(polygon_area(layer.features[0].geometry), 10000.0)

    def test_names_and_holes(self):
        ring = rectangle(0, 0, 100, 100)[0]
        hole = [[40, 40], [60, 40], [60, 60], [40, 60], [40, 40]]
        doc = feature_collection('Polygon', [[ring, hole]], ids=[3])
        doc['features'][0]['properties']['name'] = 'Rara'
        layer = parse_vector_layer(doc, GeometryKind.POLYGON)
        self.assertEqual(layer.ids, [3])
        self.assertEqual(layer.features[0].name, 'Rara')
        self.assertEqual(polygon_area(layer.features[0].geometry), 9600.0)

    def test_degenerate_polyline(self):
        doc = feature_collection('LineString', [[[0, 0]]])
        with self.assertRaisesRegex(LayerError, 'degenerate polyline'):
            parse_vector_layer(doc, GeometryKind.POLYLINE)

    def test_duplicate_id(self):
        doc = feature_collection('Point', [[0, 0], [1, 1]], ids=[7, 7])
        with self.assertRaisesRegex(LayerError, 'duplicate feature id 7'):
            parse_vector_layer(doc, GeometryKind.POINT, 'substations')

    def test_unclosed_ring(self):
        doc = feature_collection('Polygon', [[[[0, 0], [1, 0], [1, 1],
                                               [0, 1]]]])
        with self.assertRaisesRegex(LayerError, 'unclosed ring'):
            parse_vector_layer(doc, GeometryKind.POLYGON)

    def test_short_ring(self):
        doc = feature_collection('Polygon', [[[[0, 0], [1, 0], [0, 0]]]])
        with self.assertRaisesRegex(LayerError, 'fewer than 4 vertices'):
            parse_vector_layer(doc, GeometryKind.POLYGON)

    def test_mixed_types(self):
        doc = feature_collection('Point', [[0, 0]])
        doc['features'].append(
            feature_collection('LineString', [[[0, 0], [1, 1]]],
                               ids=[2])['features'][0])
        with self.assertRaisesRegex(LayerError, 'LineString geometry in '
                                                'Point layer'):
            parse_vector_layer(doc, GeometryKind.POINT)

    def test_missing_id(self):
        doc = feature_collection('Point', [[0, 0]])
        doc['features'][0]['properties'] = {'id': '1'}
        with self.assertRaisesRegex(LayerError, 'missing integer id'):
            parse_vector_layer(doc, GeometryKind.POINT)

    def test_not_a_collection(self):
        with self.assertRaisesRegex(LayerError, 'not a feature collection'):
            parse_vector_layer({'type': 'Feature'}, GeometryKind.POINT)
        with self.assertRaisesRegex(LayerError, 'invalid JSON'):
            parse_vector_layer('{', GeometryKind.POINT)

    def test_read_names_file(self):
        path = self.write_text('roads.geojson', '[]')
        with self.assertRaises(LayerError) as context:
            read_vector_layer(str(path), GeometryKind.POLYLINE)
        self.assertEqual(context.exception.layer, str(path))

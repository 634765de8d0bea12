from PshAtlas import LayerError
from PshAtlas.Hydroclimate.Flow import flow_statistics
from PshAtlas.Hydroclimate.Flow import read_flow_series

from tests import PshAtlasTestCase


class FlowStatisticsTest(PshAtlasTestCase):

    def test_singleton(self):
        self.assertEqual(flow_statistics([10]), (10.0, 10.0, 10.0, 10.0))

    def test_interpolation(self):
        q10, q50, q90, qavg = flow_statistics(list(range(1, 101)))
        self.assertAlmostEqual(q10, 10.9)
        self.assertAlmostEqual(q50, 50.5)
        self.assertAlmostEqual(q90, 90.1)
        self.assertEqual(qavg, 50.5)

    def test_order_irrelevant(self):
        self.assertEqual(flow_statistics([10, 0]), flow_statistics([0, 10]))

    def test_invalid(self):
        with self.assertRaisesRegex(ValueError, 'empty'):
            flow_statistics([])
        with self.assertRaisesRegex(ValueError, 'not negative'):
            flow_statistics([1, -1])
        with self.assertRaises(ValueError):
            flow_statistics([1, float('nan')])


class ReadFlowSeriesTest(PshAtlasTestCase):

    def test_grouped_by_point(self):
        path = self.write_text('flow.csv', 'point_id,value\n2,1.5\n1,3\n'
                                           '2,2.5\n')
        series = read_flow_series(path)
        self.assertEqual(sorted(series), [1, 2])
        self.assertEqual(series[1].tolist(), [3.0])
        self.assertEqual(series[2].tolist(), [1.5, 2.5])

    def test_extra_columns_ignored(self):
        path = self.write_text('flow.csv', 'date,value,point_id\n'
                                           '2001-01-01,4,7\n')
        self.assertEqual(read_flow_series(path)[7].tolist(), [4.0])

    def test_negative_value(self):
        path = self.write_text('flow.csv', 'point_id,value\n1,1\n1,-2\n')
        with self.assertRaises(LayerError) as context:
            read_flow_series(path)
        self.assertEqual(context.exception.line, 3)

    def test_missing_value(self):
        path = self.write_text('flow.csv', 'point_id,value\n1,\n')
        with self.assertRaisesRegex(LayerError, 'missing or negative'):
            read_flow_series(path)

    def test_missing_column(self):
        path = self.write_text('flow.csv', 'id,value\n1,1\n')
        with self.assertRaisesRegex(LayerError, 'missing column\\(s\\) '
                                                'point_id'):
            read_flow_series(path)

    def test_bad_ids(self):
        path = self.write_text('flow.csv', 'point_id,value\n1.5,1\n')
        with self.assertRaisesRegex(LayerError, 'must be an integer'):
            read_flow_series(path)
        path = self.write_text('flow.csv', 'point_id,value\nx,1\n')
        with self.assertRaisesRegex(LayerError, 'non-numeric'):
            read_flow_series(path)

    def test_unreadable(self):
        with self.assertRaisesRegex(LayerError, 'cannot read'):
            read_flow_series(self.tmp / 'missing.csv')
        with self.assertRaisesRegex(LayerError, 'cannot read'):
            read_flow_series(self.write_text('empty.csv', ''))

import numpy as np

from PshAtlas.Interfaces import CandidateKind
from PshAtlas.Siting.SpatialIndex import SpatialIndex

from tests import PshAtlasTestCase
from tests import lake
from tests import river


class SpatialIndexTest(PshAtlasTestCase):

    def test_radius_boundary(self):
        index = SpatialIndex([river(1, 9999, 0, 1), river(2, 10001, 0, 1),
                              river(3, 0, -10000, 1)],
                             10000.0, CandidateKind.RIVER_POINT)
        self.assertEqual(index.query(0, 0, 10000.0).tolist(), [0, 2])
        self.assertEqual(index.query(0, 0, 5000.0).tolist(), [])

    def test_arrays(self):
        index = SpatialIndex([lake(4, 1, 2, 300, 60000),
                              lake(5, 3, 4, 200)],
                             1000.0, CandidateKind.LAKE)
        self.assertEqual(len(index), 2)
        self.assertEqual(index.ids.tolist(), [4, 5])
        self.assertEqual(index.elevations.tolist(), [300.0, 200.0])
        self.assertEqual(index.areas.tolist(), [60000.0, 100000.0])
        river_index = SpatialIndex([river(1, 0, 0, 10)], 1000.0,
                                   CandidateKind.RIVER_POINT)
        self.assertTrue(np.isnan(river_index.areas[0]))

    def test_empty(self):
        index = SpatialIndex([], 1000.0, CandidateKind.LAKE)
        self.assertEqual(index.query(0, 0, 1000.0).tolist(), [])

    def test_errors(self):
        with self.assertRaisesRegex(ValueError, 'positive'):
            SpatialIndex([], 0, CandidateKind.LAKE)
        with self.assertRaisesRegex(ValueError, 'in Lake pool'):
            SpatialIndex([river(1, 0, 0, 1)], 10.0, CandidateKind.LAKE)
        index = SpatialIndex([], 10.0, CandidateKind.LAKE)
        with self.assertRaisesRegex(ValueError, 'exceeds search radius'):
            index.query(0, 0, 10.5)

    def test_matches_exhaustive_scan(self):
        for seed in range(100):
            rng = np.random.default_rng(seed)
            xy = rng.uniform(-30000, 30000, size=(300, 2))
            pool = [river(number + 1, x, y, 0)
                    for number, (x, y) in enumerate(xy)]
            index = SpatialIndex(pool, 10000.0, CandidateKind.RIVER_POINT)
            for qx, qy in rng.uniform(-30000, 30000, size=(5, 2)):
                expected = np.flatnonzero(
                    np.hypot(xy[:, 0] - qx, xy[:, 1] - qy) <= 10000.0)
                self.assertEqual(index.query(qx, qy, 10000.0).tolist(),
                                 expected.tolist(), 'seed {}'.format(seed))

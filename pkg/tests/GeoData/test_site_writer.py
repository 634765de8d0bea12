import json

from PshAtlas.GeoData.SiteWriter import SITE_COLUMNS
from PshAtlas.GeoData.SiteWriter import dump_json
from PshAtlas.GeoData.SiteWriter import write_band_summaries
from PshAtlas.GeoData.SiteWriter import write_candidates
from PshAtlas.GeoData.SiteWriter import write_sites
from PshAtlas.Hydroclimate.Summary import BandSummary
from PshAtlas.Interfaces import ElevationBand
from PshAtlas.Interfaces import Scheme
from PshAtlas.Interfaces.HydroclimateProfile import HydroclimateProfile

from tests import PshAtlasTestCase
from tests import flat
from tests import lake
from tests import river
from tests import site_for


HEADER = ','.join(SITE_COLUMNS)


class WriteSitesTest(PshAtlasTestCase):

    def setUp(self):
        self.f2r = site_for(flat(1, 0, 0, 1000),
                            [river(1, 1200, 0, 900), river(2, 500, 0, 940)],
                            site_id=5)
        self.l2l = site_for(lake(1, 0, 0, 1200, 60000),
                            [lake(2, 3000, 0, 1000, 80000)], site_id=2)

    def test_empty(self):
        table, collection = write_sites([])
        self.assertEqual(table, HEADER + '\n')
        self.assertEqual(collection, {'type': 'FeatureCollection',
                                      'features': []})

    def test_rows_sorted_by_site_id(self):
        table, collection = write_sites([self.f2r, self.l2l])
        lines = table.splitlines()
        self.assertEqual(len(lines), 3)
        self.assertEqual([line.split(',')[0] for line in lines[1:]],
                         ['2', '5'])
        self.assertEqual([feature['properties']['site_id']
                          for feature in collection['features']], [2, 5])

    def test_number_format(self):
        table, _ = write_sites([self.f2r])
        # technical pair reported, theoretical energy from the other pair
        self.assertEqual(table.splitlines()[1],
                         '5,F2R,Theoretical,1,2,60,500,8.33333,200000,'
                         '0.0544444,0.0261333,,,,,,,')

    def test_profile_columns(self):
        profiles = [HydroclimateProfile(band=ElevationBand.EB3,
                                        mean_annual_precip_mm=1670.0,
                                        mean_annual_temp_c=12.25)]
        table, collection = write_sites([self.l2l], profiles)
        row = dict(zip(SITE_COLUMNS, table.splitlines()[1].split(',')))
        self.assertEqual(row['band'], 'EB3')
        self.assertEqual(row['precip_mm'], '1670')
        self.assertEqual(row['temp_c'], '12.25')
        for name in ('q10', 'q50', 'q90', 'qavg', 'energy_technical_gwh'):
            self.assertEqual(row[name], '')
        properties = collection['features'][0]['properties']
        self.assertIsNone(properties['q10'])
        self.assertEqual(properties['band'], 'EB3')

    def test_geometry_joins_upper_and_lower(self):
        _, collection = write_sites([self.l2l])
        self.assertEqual(collection['features'][0]['geometry'],
                         {'type': 'LineString',
                          'coordinates': [[0.0, 0.0], [3000.0, 0.0]]})


class WriteCandidatesTest(PshAtlasTestCase):

    def test_ordered_by_kind_and_id(self):
        collection = write_candidates([river(1, 0, 0, 500),
                                       lake(4, 10, 10, 800),
                                       flat(2, 20, 20, 900),
                                       lake(3, 30, 30, 700)])
        self.assertEqual([(feature['properties']['kind'],
                           feature['properties']['id'])
                          for feature in collection['features']],
                         [('FlatLand', 2), ('Lake', 3), ('Lake', 4),
                          ('RiverPoint', 1)])
        self.assertNotIn('surface_area_m2',
                         collection['features'][3]['properties'])
        self.assertEqual(collection['features'][1]['geometry'],
                         {'type': 'Point', 'coordinates': [30.0, 30.0]})


class WriteBandSummariesTest(PshAtlasTestCase):

    def test_row(self):
        summary = BandSummary(
            Scheme.F2R, ElevationBand.EB2, 2,
            {'precip_mm': 1670.0, 'temp_c': None, 'q10': 1.0, 'q50': 2.0,
             'q90': 3.0, 'qavg': 2.5},
            {'precip_mm': 70.0, 'temp_c': None, 'q10': 0.0, 'q50': 0.0,
             'q90': 0.0, 'qavg': 0.0})
        lines = write_band_summaries([summary]).splitlines()
        self.assertEqual(lines[0].split(',')[:5],
                         ['scheme', 'band', 'count', 'precip_mm_mean',
                          'precip_mm_std'])
        self.assertEqual(lines[1], 'F2R,EB2,2,1670,70,,,1,0,2,0,3,0,2.5,0')


class DumpJsonTest(PshAtlasTestCase):

    def test_deterministic(self):
        first = dump_json({'b': {'y': 1, 'x': 2}, 'a': None})
        second = dump_json({'a': None, 'b': {'x': 2, 'y': 1}})
        self.assertEqual(first, second)
        self.assertTrue(first.endswith('}\n'))
        self.assertEqual(json.loads(first), {'a': None,
                                             'b': {'x': 2, 'y': 1}})

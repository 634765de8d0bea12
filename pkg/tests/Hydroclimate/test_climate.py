import numpy as np

from PshAtlas import LayerError
from PshAtlas.Hydroclimate.Climate import ClimateStack
from PshAtlas.Hydroclimate.Climate import attach_profile
from PshAtlas.Interfaces import ElevationBand

from tests import NODATA
from tests import PshAtlasTestCase
from tests import flat
from tests import grid
from tests import lake
from tests import river
from tests import site_for


def constant(value):
    # covers (-1000, -1000) to (1000, 1000)
    return grid([[value, value], [value, value]], cellsize=1000,
                x_origin=-1000, y_origin=-1000)


def stack(variable, values):
    return ClimateStack.from_data({(2000, month): constant(value)
                                   for month, value in enumerate(values, 1)},
                                  '.', variable)


class ClimateStackTest(PshAtlasTestCase):

    def setUp(self):
        for month in range(1, 13):
            self.write_grid('climate/precip_2000_{:02d}.asc'.format(month),
                            constant(100))
            self.write_grid('climate/temp_2000_{:02d}.asc'.format(month),
                            constant(month))
        for month in range(1, 12):
            self.write_grid('climate/precip_2001_{:02d}.asc'.format(month),
                            constant(999))
        self.write_text('climate/readme.txt', 'monthly grids')

    def test_mean_annual_sum_skips_incomplete_years(self):
        precip = ClimateStack(self.tmp / 'climate', 'precip')
        self.assertEqual(len(precip.data), 23)
        self.assertEqual(precip.mean_annual_sum((0, 0)), 1200.0)

    def test_mean_monthly(self):
        temp = ClimateStack(self.tmp / 'climate', 'temp')
        self.assertEqual(temp.mean_monthly((10, 10)), 6.5)
        self.assertEqual(sorted(temp.monthly_values((10, 10)))[0], (2000, 1))

    def test_no_complete_year(self):
        incomplete = stack('precip', [100] * 11)
        with self.assertRaisesRegex(ValueError, 'no complete precip year'):
            incomplete.mean_annual_sum((0, 0))

    def test_not_covered(self):
        with self.assertRaisesRegex(ValueError, 'precip 2000-01 has no data'):
            stack('precip', [100] * 12).monthly_values((5000, 0))
        holes = ClimateStack.from_data(
            {(2000, 1): grid([[NODATA]], cellsize=5000)}, '.', 'temp')
        with self.assertRaises(ValueError):
            holes.mean_monthly((10, 10))

    def test_missing_grids(self):
        with self.assertRaisesRegex(LayerError, 'no rain grids found'):
            ClimateStack(self.tmp / 'climate', 'rain').refresh()
        with self.assertRaisesRegex(LayerError, 'cannot list directory'):
            ClimateStack(self.tmp / 'missing', 'precip').refresh()

    def test_invalid_month(self):
        self.write_grid('climate/precip_2002_13.asc', constant(1))
        with self.assertRaisesRegex(LayerError, 'invalid month'):
            ClimateStack(self.tmp / 'climate', 'precip').refresh()


class AttachProfileTest(PshAtlasTestCase):

    def setUp(self):
        # technical pair with river point 2 at (500, 0)
        self.f2r = site_for(flat(1, 0, 0, 1000),
                            [river(1, 1200, 0, 900), river(2, 500, 0, 940)])
        self.l2l = site_for(lake(1, 0, 0, 1200, 60000),
                            [lake(2, 600, 0, 1000, 80000)])
        self.precip = stack('precip', [100] * 12)
        self.temp = stack('temp', [20] * 12)

    def test_full_profile(self):
        profile = attach_profile(self.f2r, self.precip, self.temp,
                                 {1: np.array([50.0]),
                                  2: np.array([0.0, 10.0])})
        self.assertEqual(profile.band, ElevationBand.EB3)
        self.assertEqual(profile.mean_annual_precip_mm, 1200.0)
        self.assertEqual(profile.mean_annual_temp_c, 20.0)
        self.assertEqual((profile.q10, profile.q50, profile.q90,
                          profile.qavg), (1.0, 5.0, 9.0, 5.0))
        self.assertTrue(profile.has_flow)

    def test_scheme_without_river(self):
        profile = attach_profile(self.l2l, self.precip, None,
                                 {2: np.array([1.0])})
        self.assertEqual(profile.band, ElevationBand.EB3)
        self.assertIsNone(profile.mean_annual_temp_c)
        self.assertFalse(profile.has_flow)
        self.assertIsNone(profile.q50)

    def test_missing_series(self):
        with self.assertLogs('PshAtlas.Hydroclimate.Climate', 'INFO') as logs:
            profile = attach_profile(self.f2r, flow={1: np.array([1.0])})
        self.assertFalse(profile.has_flow)
        self.assertIn('river point 2 reason=no-flow-series', logs.output[0])

    def test_not_covered(self):
        far = site_for(flat(1, 5000, 0, 1000), [river(1, 5500, 0, 940)],
                       site_id=3)
        with self.assertRaisesRegex(ValueError, r'site 3: precip .* has no '
                                                r'data .*\(precipitation\)'):
            attach_profile(far, self.precip)

    def test_band_out_of_range(self):
        site = site_for(flat(4, 0, 0, 5100), [river(1, 500, 0, 5000)])
        with self.assertLogs('PshAtlas.Hydroclimate.Climate',
                             'WARNING') as logs:
            profile = attach_profile(site)
        self.assertIsNone(profile.band)
        self.assertIn('reason=band-range', logs.output[0])

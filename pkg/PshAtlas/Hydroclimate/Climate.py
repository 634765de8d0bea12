"""
Contains the monthly climate grid stacks and the attribution of
hydroclimate profiles to sites.
"""
from collections import defaultdict
from pathlib import Path
from typing import Dict
from typing import Mapping
from typing import Optional
from typing import Tuple
import logging
import re

import numpy as np

from PshAtlas import LayerError
from PshAtlas.GeoData.RasterGrid import RasterGrid
from PshAtlas.GeoData.RasterGrid import read_ascii_grid
from PshAtlas.Hydroclimate.Bands import elevation_band
from PshAtlas.Hydroclimate.Flow import flow_statistics
from PshAtlas.Interfaces.HydroclimateProfile import HydroclimateProfile
from PshAtlas.Interfaces.PshSite import PshSite
from PshAtlas.Terrain.Sampling import sample_elevation
from PshAtlas.Utils import CachedDataMixin


LOGGER = logging.getLogger(__name__)

MONTHS_PER_YEAR = 12


class ClimateStack(CachedDataMixin):
    """
    The monthly grids of one climate variable, stored as files named
    ``<variable>_<YYYY>_<MM>.asc`` in one directory. The grids are loaded on
    first access.

    >>> grid = RasterGrid(1, 1, 0, 0, 1000, -9999, [100.0])
    >>> stack = ClimateStack.from_data(
    ...     {(2000, month): grid for month in range(1, 13)}, '.', 'precip')
    >>> stack.mean_annual_sum((500, 500))
    1200.0
    """

    def __init__(self, directory, variable: str):
        """
        :param directory: Directory holding the monthly grids.
        :param variable:  File name prefix of the variable.
        """
        self.directory = Path(directory)
        self.variable = variable

    def _get_data(self) -> Dict[Tuple[int, int], RasterGrid]:
        """
        Reads all grids of the variable, keyed by ``(year, month)``.

        :raises LayerError: If the directory can't be listed or holds no
                            grid of the variable.
        """
        pattern = re.compile(r'^{}_(\d{{4}})_(\d{{2}})\.asc$'.format(
            re.escape(self.variable)))
        try:
            names = sorted(path.name for path in self.directory.iterdir())
        except OSError as error:
            raise LayerError('cannot list directory ({})'.format(error),
                             str(self.directory))

        grids = {}
        for name in names:
            match = pattern.match(name)
            if match is None:
                continue
            year, month = int(match.group(1)), int(match.group(2))
            if not 1 <= month <= MONTHS_PER_YEAR:
                raise LayerError('invalid month in file name {}'.format(name),
                                 str(self.directory))
            grids[(year, month)] = read_ascii_grid(self.directory / name)

        if not grids:
            raise LayerError('no {} grids found'.format(self.variable),
                             str(self.directory))
        LOGGER.info('loaded %d monthly %s grids from %s', len(grids),
                    self.variable, self.directory)
        return grids

    def monthly_values(self, point: Tuple[float, float]
                       ) -> Dict[Tuple[int, int], float]:
        """
        The value of the cell holding the point in every monthly grid.

        :raises ValueError: If a grid doesn't cover the point.
        """
        values = {}
        for key in sorted(self.data):
            try:
                values[key] = sample_elevation(self.data[key], point)
            except ValueError:
                raise ValueError('{} {}-{:02d} has no data at {}'.format(
                    self.variable, key[0], key[1], point))
        return values

    def mean_annual_sum(self, point: Tuple[float, float]) -> float:
        """
        Mean over the complete years of the sum of the monthly values.
        Years with missing months are skipped.

        :raises ValueError: If no year is complete or the point isn't
                            covered.
        """
        years = defaultdict(list)
        for (year, _), value in self.monthly_values(point).items():
            years[year].append(value)
        sums = []
        for year in sorted(years):
            if len(years[year]) < MONTHS_PER_YEAR:
                LOGGER.debug('skipped incomplete %s year %d (%d months)',
                             self.variable, year, len(years[year]))
                continue
            sums.append(sum(years[year]))
        if not sums:
            raise ValueError('no complete {} year'.format(self.variable))
        return float(np.mean(sums))

    def mean_monthly(self, point: Tuple[float, float]) -> float:
        """
        Mean of all monthly values at the point.

        :raises ValueError: If the point isn't covered.
        """
        return float(np.mean(list(self.monthly_values(point).values())))


def attach_profile(site: PshSite, precip: Optional[ClimateStack]=None,
                   temp: Optional[ClimateStack]=None,
                   flow: Optional[Mapping[int, np.ndarray]]=None
                   ) -> HydroclimateProfile:
    """
    Builds the hydroclimate profile of a site. Climate values are taken at
    the reference point, the band from the prospective reservoir's elevation
    and flows from the river point of the reported pair.

    :param site:   The PshSite.
    :param precip: Monthly precipitation stack or None.
    :param temp:   Monthly temperature stack or None.
    :param flow:   River point id to streamflow samples or None.
    :return:       The HydroclimateProfile, with None for absent inputs.
    :raises ValueError: If a climate stack doesn't cover the reference
                        point.
    """
    try:
        band = elevation_band(site.prospective.elevation_m)
    except ValueError:
        LOGGER.warning('site %d has no elevation band reason=band-range '
                       'elevation_m=%.1f', site.site_id,
                       site.prospective.elevation_m)
        band = None

    climate = {}
    for name, stack, reduce in (('precipitation', precip, 'mean_annual_sum'),
                                ('temperature', temp, 'mean_monthly')):
        if stack is None:
            continue
        try:
            climate[name] = getattr(stack, reduce)(site.reference_point)
        except ValueError as error:
            raise ValueError('site {}: {} ({})'.format(site.site_id, error,
                                                       name))

    flows = {}
    if site.scheme.involves_river and flow is not None:
        river = site.pair.second
        if river.id in flow:
            q10, q50, q90, qavg = flow_statistics(flow[river.id])
            flows = dict(q10=q10, q50=q50, q90=q90, qavg=qavg)
        else:
            LOGGER.info('site %d river point %d reason=no-flow-series',
                        site.site_id, river.id)

    return HydroclimateProfile(
        band=band,
        mean_annual_precip_mm=climate.get('precipitation'),
        mean_annual_temp_c=climate.get('temperature'),
        **flows)

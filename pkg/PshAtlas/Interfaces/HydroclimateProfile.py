"""
This module contains the hydroclimate profile attached to a site.
"""
from dataclasses import dataclass
from typing import Optional

from PshAtlas.Interfaces import ElevationBand


@dataclass(frozen=True)
class HydroclimateProfile:
    """
    Long-term climate and streamflow characteristics of a site. Fields the
    inputs don't provide are None; flows are always None for schemes
    without a river.

    :param band:                  ElevationBand of the prospective reservoir.
    :param mean_annual_precip_mm: Mean annual precipitation sum.
    :param mean_annual_temp_c:    Mean of all monthly temperatures.
    :param q10:                   10th percentile flow (low flow), m³/s.
    :param q50:                   Median flow, m³/s.
    :param q90:                   90th percentile flow (high flow), m³/s.
    :param qavg:                  Mean flow, m³/s.
    """
    band: Optional[ElevationBand] = None
    mean_annual_precip_mm: Optional[float] = None
    mean_annual_temp_c: Optional[float] = None
    q10: Optional[float] = None
    q50: Optional[float] = None
    q90: Optional[float] = None
    qavg: Optional[float] = None

    @property
    def has_flow(self) -> bool:
        """
        Whether streamflow statistics are attached.

        >>> HydroclimateProfile().has_flow
        False
        """
        return self.qavg is not None

    def variables(self) -> dict:
        """
        The numeric variables by name, None where absent.

        >>> HydroclimateProfile(mean_annual_temp_c=20.0).variables()['temp_c']
        20.0
        """
        return {'precip_mm': self.mean_annual_precip_mm,
                'temp_c': self.mean_annual_temp_c,
                'q10': self.q10,
                'q50': self.q50,
                'q90': self.q90,
                'qavg': self.qavg}

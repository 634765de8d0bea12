"""
Contains the storage volume and energy capacity estimates.
"""
from typing import Optional

from PshAtlas.GeoData.SchemeConfig import SchemeConfig
from PshAtlas.Interfaces import CandidateKind
from PshAtlas.Interfaces import Scheme
from PshAtlas.Interfaces.ReservoirCandidate import ReservoirCandidate


JOULES_PER_GWH = 3600 * 10 ** 9
CYCLES_PER_YEAR = 365
DEFAULT_CONFIG = SchemeConfig()


def stored_energy(eta, volume_m3, head_m, water_density, gravity):
    """
    E = eta * rho * V * g * H in GWh. Works element-wise on arrays with the
    same operation order as on scalars.
    """
    return eta * water_density * volume_m3 * gravity * head_m / JOULES_PER_GWH


def energy_gwh(eta: float, volume_m3: float, head_m: float,
               cfg: Optional[SchemeConfig]=None) -> float:
    """
    Storage capacity of a reservoir pair.

    >>> round(energy_gwh(1.0, 100000, 50), 7)
    0.0136111
    >>> round(energy_gwh(0.8, 100000, 50), 7)
    0.0108889
    >>> energy_gwh(1.0, 0, 500)
    0.0

    :param eta:       Overall efficiency in (0, 1].
    :param volume_m3: Usable volume V.
    :param head_m:    Head H.
    :param cfg:       Supplies water density and gravity.
    :raises ValueError: If an argument is out of its domain.
    """
    cfg = cfg or DEFAULT_CONFIG
    if not 0 < eta <= 1:
        raise ValueError('efficiency must be in (0, 1], got {}'.format(eta))
    if volume_m3 < 0 or head_m < 0:
        raise ValueError('volume and head must not be negative')
    return float(stored_energy(eta, volume_m3, head_m, cfg.water_density,
                               cfg.gravity))


def limiting_area(scheme: Scheme, first: ReservoirCandidate,
                  second: ReservoirCandidate) -> float:
    """
    The surface area limiting the usable volume: the smaller area for
    schemes of two basins, the basin's area for schemes with a river.

    :raises ValueError: If the candidate kinds don't match the scheme.
    """
    kinds = sorted((first.kind.value, second.kind.value))
    expected = sorted((scheme.prospective_kind.value,
                       scheme.second_kind.value))
    if kinds != expected:
        raise ValueError('{} and {} candidates cannot form a {} '
                         'site'.format(first.kind, second.kind, scheme))
    if scheme.involves_river:
        basin = second if first.kind is CandidateKind.RIVER_POINT else first
        return basin.surface_area_m2
    return min(first.surface_area_m2, second.surface_area_m2)


def usable_volume(scheme: Scheme, prospective: ReservoirCandidate,
                  second: ReservoirCandidate,
                  cfg: Optional[SchemeConfig]=None) -> float:
    """
    Water volume exchanged per cycle: limiting area times usable depth. The
    river of L2R and F2R sites is assumed to carry enough water.

    >>> lake = ReservoirCandidate(1, CandidateKind.LAKE, 0, 0, 1200, 60000.0)
    >>> other = ReservoirCandidate(2, CandidateKind.LAKE, 0, 0, 1000, 80000.0)
    >>> usable_volume(Scheme.L2L, lake, other)
    120000.0

    :raises ValueError: If the candidate kinds don't match the scheme.
    """
    cfg = cfg or DEFAULT_CONFIG
    return limiting_area(scheme, prospective, second) * cfg.usable_depth_m


def annual_energy_gwh(daily_capacity_gwh: float) -> float:
    """
    Yearly energy of a storage capacity cycled fully once a day.

    >>> round(annual_energy_gwh(904.8), 3)
    330252.0
    >>> annual_energy_gwh(1.0)
    365.0

    :raises ValueError: If the capacity is negative.
    """
    if daily_capacity_gwh < 0:
        raise ValueError('capacity must not be negative')
    return daily_capacity_gwh * CYCLES_PER_YEAR

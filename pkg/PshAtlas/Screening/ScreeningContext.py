"""
Contains the infrastructure context and the tier classification of sites.
"""
from dataclasses import dataclass
from typing import Iterable
from typing import List
from typing import Optional
import logging

from PshAtlas.GeoData.SchemeConfig import SchemeConfig
from PshAtlas.GeoData.VectorLayer import VectorLayer
from PshAtlas.Interfaces import Tier
from PshAtlas.Interfaces.PshSite import PshSite
from PshAtlas.Interfaces.PshSite import check_site
from PshAtlas.Screening.Geometry import nearest_distance
from PshAtlas.Screening.Geometry import point_in_protected_area


LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScreeningContext:
    """
    The layers sites are screened against. A missing layer behaves like an
    empty one: nothing is near a missing road network.

    :param roads:                   Polyline layer of the road network.
    :param planned_substations:     Points of the planned grid.
    :param operational_substations: Points of the operational grid.
    :param protected_areas:         Polygons excluded from exploitation.
    :param buffer_m:                Maximum distance to road and grid.
    """
    roads: Optional[VectorLayer] = None
    planned_substations: Optional[VectorLayer] = None
    operational_substations: Optional[VectorLayer] = None
    protected_areas: Optional[VectorLayer] = None
    buffer_m: float = 20000.0

    def __post_init__(self):
        if not self.buffer_m > 0:
            raise ValueError('buffer must be positive, got {}'.format(
                self.buffer_m))

    @classmethod
    def from_config(cls, cfg: SchemeConfig, **layers) -> 'ScreeningContext':
        """
        Creates a context using the configured infrastructure buffer.
        """
        return cls(buffer_m=cfg.infra_buffer_m, **layers)


def classify_tier(site: PshSite, ctx: ScreeningContext,
                  cfg: Optional[SchemeConfig]=None) -> Tier:
    """
    Technical sites have a technical pair and road and grid (planned or
    operational) within the buffer of their reference point. Exploitable
    sites are technical, outside all protected areas and within the buffer
    of an operational substation. Buffers are inclusive.

    :param site: The PshSite.
    :param ctx:  The ScreeningContext.
    :param cfg:  If given, the site invariants are checked against it first.
    :return:     The Tier.
    :raises InvariantViolation: If ``cfg`` is given and the site is broken.
    """
    if cfg is not None:
        check_site(site, cfg)
    if site.technical_pair is None:
        return Tier.THEORETICAL

    point = site.reference_point
    road = nearest_distance(point, ctx.roads)
    grid = nearest_distance(point, ctx.planned_substations,
                            ctx.operational_substations)
    if not (road <= ctx.buffer_m and grid <= ctx.buffer_m):
        return Tier.THEORETICAL

    if point_in_protected_area(point, ctx.protected_areas):
        return Tier.TECHNICAL
    if nearest_distance(point, ctx.operational_substations) <= ctx.buffer_m:
        return Tier.EXPLOITABLE
    return Tier.TECHNICAL


def classify_sites(sites: Iterable[PshSite], ctx: ScreeningContext,
                   cfg: Optional[SchemeConfig]=None) -> List[PshSite]:
    """
    Returns copies of the sites carrying their tier.
    """
    classified = [site.with_tier(classify_tier(site, ctx, cfg))
                  for site in sites]
    LOGGER.info('classified %d sites: %s', len(classified), ', '.join(
        '{}={}'.format(tier, sum(site.tier.at_least(tier)
                                 for site in classified))
        for tier in Tier))
    return classified

"""
This module contains the site records produced by reservoir pairing.
"""
from dataclasses import dataclass
from dataclasses import replace
from typing import Optional
from typing import Tuple

from PshAtlas import InvariantViolation
from PshAtlas.Interfaces import Scheme
from PshAtlas.Interfaces import Tier
from PshAtlas.Interfaces.ReservoirCandidate import ReservoirCandidate


@dataclass(frozen=True)
class PairRecord:
    """
    One upper/lower reservoir pair together with its storage figures at the
    efficiency it was selected with.

    :param prospective: The reservoir the pair was searched for.
    :param second:      Its partner.
    :param upper:       The higher of both.
    :param lower:       The lower of both.
    :param head_m:      Vertical distance H between both reservoirs.
    :param separation_m: Horizontal centroid distance l.
    :param l_over_h:    separation_m / head_m.
    :param usable_volume_m3: Water volume V exchanged per cycle.
    :param eta:         Efficiency the energy was computed with.
    :param energy_gwh:  Storage capacity E in GWh.
    """
    prospective: ReservoirCandidate
    second: ReservoirCandidate
    upper: ReservoirCandidate
    lower: ReservoirCandidate
    head_m: float
    separation_m: float
    l_over_h: float
    usable_volume_m3: float
    eta: float
    energy_gwh: float

    @property
    def reference_point(self) -> Tuple[float, float]:
        """
        The lower reservoir centroid, where the powerhouse sits.
        """
        return self.lower.centroid


@dataclass(frozen=True)
class PshSite:
    """
    The site built around one prospective reservoir under one scheme.

    A site always has a theoretical pair (largest energy at 100 %
    efficiency). It has a technical pair if some partner also satisfies the
    l/h limit; that pair is chosen independently and may differ. Geometry
    and pair figures are reported for the technical pair if present,
    otherwise for the theoretical one.

    :param site_id:           Sequential identifier, 0 until assigned.
    :param scheme:            The Scheme.
    :param theoretical_pair:  The PairRecord selected at eta = 1.
    :param technical_pair:    The PairRecord selected at the technical
                              efficiency or None.
    :param tier:              The Tier assigned by screening.
    """
    site_id: int
    scheme: Scheme
    theoretical_pair: PairRecord
    technical_pair: Optional[PairRecord] = None
    tier: Tier = Tier.THEORETICAL

    @property
    def pair(self) -> PairRecord:
        """
        The reported pair.
        """
        return self.technical_pair or self.theoretical_pair

    @property
    def prospective(self) -> ReservoirCandidate:
        return self.theoretical_pair.prospective

    @property
    def upper_id(self) -> int:
        return self.pair.upper.id

    @property
    def lower_id(self) -> int:
        return self.pair.lower.id

    @property
    def head_m(self) -> float:
        return self.pair.head_m

    @property
    def separation_m(self) -> float:
        return self.pair.separation_m

    @property
    def l_over_h(self) -> float:
        return self.pair.l_over_h

    @property
    def usable_volume_m3(self) -> float:
        return self.pair.usable_volume_m3

    @property
    def energy_theoretical_gwh(self) -> float:
        """
        Theoretical storage capacity of the prospective reservoir.
        """
        return self.theoretical_pair.energy_gwh

    @property
    def energy_technical_gwh(self) -> Optional[float]:
        """
        Technical storage capacity, None without a technical pair.
        """
        if self.technical_pair is None:
            return None
        return self.technical_pair.energy_gwh

    @property
    def reference_point(self) -> Tuple[float, float]:
        return self.pair.reference_point

    def with_tier(self, tier: Tier) -> 'PshSite':
        """
        Returns a copy classified into the given tier.
        """
        return replace(self, tier=tier)

    def with_site_id(self, site_id: int) -> 'PshSite':
        """
        Returns a copy carrying the given identifier.
        """
        return replace(self, site_id=site_id)


def check_site(site: PshSite, cfg) -> PshSite:
    """
    Verifies the invariants every emitted site has to satisfy.

    :param site: The PshSite to check.
    :param cfg:  The SchemeConfig the site was selected with.
    :return:     The site itself.
    :raises InvariantViolation: If an invariant is broken.
    """
    pairs = [site.theoretical_pair]
    if site.technical_pair is not None:
        pairs.append(site.technical_pair)

    for pair in pairs:
        problems = []
        if pair.head_m < cfg.min_head_m:
            problems.append('head {} below minimum'.format(pair.head_m))
        if (pair.separation_m > cfg.max_separation_m or
                pair.separation_m > cfg.search_radius_m):
            problems.append('separation {} too large'.format(
                pair.separation_m))
        if not pair.upper.elevation_m > pair.lower.elevation_m:
            problems.append('upper reservoir not above lower reservoir')
        if abs(pair.upper.elevation_m - pair.lower.elevation_m
               - pair.head_m) > 1e-9 * max(1.0, pair.head_m):
            problems.append('head differs from elevation difference')
        if abs(pair.l_over_h * pair.head_m - pair.separation_m) > \
                1e-9 * max(1.0, pair.separation_m):
            problems.append('l/h inconsistent with separation and head')
        if pair.energy_gwh < cfg.energy_threshold_gwh:
            problems.append('energy {} below threshold'.format(
                pair.energy_gwh))
        if problems:
            raise InvariantViolation('{} site {} ({} -> {}): {}'.format(
                site.scheme, site.site_id, pair.prospective.key,
                pair.second.key, '; '.join(problems)))

    if site.technical_pair is not None and \
            not site.technical_pair.l_over_h < cfg.max_l_over_h:
        raise InvariantViolation(
            '{} site {}: technical pair l/h {} not below {}'.format(
                site.scheme, site.site_id, site.technical_pair.l_over_h,
                cfg.max_l_over_h))
    if site.tier.at_least(Tier.TECHNICAL) and site.technical_pair is None:
        raise InvariantViolation('{} site {} is {} without a technical '
                                 'pair'.format(site.scheme, site.site_id,
                                               site.tier))
    return site

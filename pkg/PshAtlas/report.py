"""
Summarises classified sites into the per scheme and tier accounting of a
screening run.
"""
from dataclasses import dataclass
from math import fsum
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence

from PshAtlas.Interfaces import Scheme
from PshAtlas.Interfaces import Tier
from PshAtlas.Interfaces.PshSite import PshSite
from PshAtlas.Siting.Energy import annual_energy_gwh


CAPACITY_CLASSES = ('<0.1', '0.1-1', '>=1')
CAPACITY_EDGES = (0.1, 1.0)


def capacity_class(energy_gwh: float) -> str:
    """
    The storage capacity class, classes are closed below.

    >>> capacity_class(0.05), capacity_class(0.1), capacity_class(2.0)
    ('<0.1', '0.1-1', '>=1')
    """
    for name, edge in zip(CAPACITY_CLASSES, CAPACITY_EDGES):
        if energy_gwh < edge:
            return name
    return CAPACITY_CLASSES[-1]


def tier_energy(site: PshSite, tier: Tier) -> float:
    """
    The energy a site contributes to a tier: the theoretical capacity for
    the theoretical tier and the technical capacity above.
    """
    if tier is Tier.THEORETICAL:
        return site.energy_theoretical_gwh
    return site.energy_technical_gwh


def _members(sites: Iterable[PshSite], tier: Tier) -> List[PshSite]:
    return [site for site in sites if site.tier.at_least(tier)]


def _tally(sites: Sequence[PshSite], tier: Tier) -> dict:
    members = _members(sites, tier)
    return {'count': len(members),
            'total_gwh': fsum(tier_energy(site, tier) for site in members)}


def _percent(part: float, whole: float) -> Optional[float]:
    return 100.0 * part / whole if whole > 0 else None


@dataclass(frozen=True)
class SummaryReport:
    """
    Site counts and energy totals per scheme and tier, capacity class
    histograms and the derived ratios. Tiers are cumulative: the technical
    figures include the exploitable sites.
    """
    schemes: Dict[str, Dict[str, dict]]
    histograms: Dict[str, Dict[str, Dict[str, int]]]
    totals: Dict[str, dict]
    technical_percent: Dict[str, Optional[float]]
    annual_exploitable_gwh: float

    def to_dict(self) -> dict:
        return {'schemes': self.schemes,
                'histograms': self.histograms,
                'totals': self.totals,
                'technical_percent': self.technical_percent,
                'annual_exploitable_gwh': self.annual_exploitable_gwh}


def summarize(sites: Sequence[PshSite],
              schemes: Sequence[Scheme]=tuple(Scheme)) -> SummaryReport:
    """
    Builds the report of classified sites.

    >>> report = summarize([])
    >>> report.totals['Technical'], report.technical_percent['all']
    ({'count': 0, 'total_gwh': 0.0}, None)

    :param sites:   The classified sites.
    :param schemes: The schemes listed in the report.
    :return:        The SummaryReport.
    """
    sites = sorted(sites, key=lambda site: site.site_id)
    by_scheme = {scheme: [site for site in sites if site.scheme is scheme]
                 for scheme in schemes}

    tallies, histograms, percent = {}, {}, {}
    for scheme, members in by_scheme.items():
        tallies[str(scheme)] = {str(tier): _tally(members, tier)
                                for tier in Tier}
        histograms[str(scheme)] = {}
        for tier in Tier:
            classes = dict.fromkeys(CAPACITY_CLASSES, 0)
            for site in _members(members, tier):
                classes[capacity_class(tier_energy(site, tier))] += 1
            histograms[str(scheme)][str(tier)] = classes
        percent[str(scheme)] = _percent(
            tallies[str(scheme)]['Technical']['total_gwh'],
            tallies[str(scheme)]['Theoretical']['total_gwh'])

    totals = {str(tier): _tally(sites, tier) for tier in Tier}
    percent['all'] = _percent(totals['Technical']['total_gwh'],
                              totals['Theoretical']['total_gwh'])
    return SummaryReport(
        schemes=tallies,
        histograms=histograms,
        totals=totals,
        technical_percent=percent,
        annual_exploitable_gwh=annual_energy_gwh(
            totals['Exploitable']['total_gwh']))

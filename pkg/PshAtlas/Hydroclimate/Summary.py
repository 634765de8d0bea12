"""
Contains the per scheme and elevation band statistics of site profiles.
"""
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np

from PshAtlas.Interfaces import ElevationBand
from PshAtlas.Interfaces import Scheme
from PshAtlas.Interfaces import Tier
from PshAtlas.Interfaces.HydroclimateProfile import HydroclimateProfile
from PshAtlas.Interfaces.PshSite import PshSite


@dataclass(frozen=True)
class BandSummary:
    """
    Mean and population standard deviation of each profile variable over
    the sites of one scheme in one elevation band. Variables no site has
    are None.
    """
    scheme: Scheme
    band: ElevationBand
    count: int
    mean: Dict[str, Optional[float]]
    std: Dict[str, Optional[float]]


def band_summaries(records: Iterable[Tuple[PshSite, HydroclimateProfile]],
                   tier: Optional[Tier]=None) -> List[BandSummary]:
    """
    Groups the profiled sites by scheme and band. Sites without a band are
    left out, as are groups without sites.

    >>> band_summaries([])
    []

    :param records: Pairs of a site and its profile.
    :param tier:    If given, only sites of at least this tier count.
    :return:        The summaries ordered by scheme, then band.
    """
    groups = defaultdict(list)
    for site, profile in records:
        if profile.band is None:
            continue
        if tier is not None and not site.tier.at_least(tier):
            continue
        groups[(site.scheme, profile.band)].append(profile.variables())

    summaries = []
    for scheme, band in sorted(groups, key=lambda key: (key[0].order,
                                                         key[1].order)):
        rows = groups[(scheme, band)]
        mean, std = {}, {}
        for name in rows[0]:
            values = np.array([row[name] for row in rows
                               if row[name] is not None], dtype=np.float64)
            mean[name] = float(values.mean()) if values.size else None
            std[name] = float(values.std()) if values.size else None
        summaries.append(BandSummary(scheme, band, len(rows), mean, std))
    return summaries

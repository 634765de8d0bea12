"""
Contains the writers of the result artifacts: site tables, feature
collections of sites and candidates, band summaries and JSON documents.
"""
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple
import json

import pandas as pd

from PshAtlas.Hydroclimate.Summary import BandSummary
from PshAtlas.Interfaces.HydroclimateProfile import HydroclimateProfile
from PshAtlas.Interfaces.PshSite import PshSite
from PshAtlas.Interfaces.ReservoirCandidate import ReservoirCandidate
from PshAtlas.Utils import eliminate_none
from PshAtlas.Utils import format_number


SITE_COLUMNS = ('site_id', 'scheme', 'tier', 'upper_id', 'lower_id',
                'head_m', 'separation_m', 'l_over_h', 'volume_m3',
                'energy_theoretical_gwh', 'energy_technical_gwh', 'band',
                'precip_mm', 'temp_c', 'q10', 'q50', 'q90', 'qavg')
PROFILE_VARIABLES = ('precip_mm', 'temp_c', 'q10', 'q50', 'q90', 'qavg')


def _to_csv(rows: List[dict], columns: Sequence[str]) -> str:
    return pd.DataFrame(rows, columns=list(columns)).to_csv(
        index=False, lineterminator='\n')


def _site_values(site: PshSite, profile: Optional[HydroclimateProfile]):
    profile = profile or HydroclimateProfile()
    values = {
        'site_id': site.site_id,
        'scheme': str(site.scheme),
        'tier': str(site.tier),
        'upper_id': site.upper_id,
        'lower_id': site.lower_id,
        'head_m': site.head_m,
        'separation_m': site.separation_m,
        'l_over_h': site.l_over_h,
        'volume_m3': site.usable_volume_m3,
        'energy_theoretical_gwh': site.energy_theoretical_gwh,
        'energy_technical_gwh': site.energy_technical_gwh,
        'band': None if profile.band is None else str(profile.band),
    }
    values.update(profile.variables())
    return values


def _render(value) -> str:
    if isinstance(value, float):
        return format_number(value)
    return '' if value is None else str(value)


def write_sites(sites: Sequence[PshSite],
                profiles: Optional[Sequence[Optional[HydroclimateProfile]]]
                =None) -> Tuple[str, dict]:
    """
    Renders the site inventory as CSV table and feature collection. Rows
    are sorted by site id, numbers carry 6 significant digits and absent
    values are empty. Every feature is a line from the upper to the lower
    reservoir of the reported pair.

    The reported pair is the technical pair when there is one, whatever
    the tier, otherwise the theoretical pair. Ids, head, separation, l/h,
    volume and flows describe it; ``energy_theoretical_gwh`` is always the
    capacity of the theoretical pair.

    >>> table, collection = write_sites([])
    >>> table.splitlines()[0].split(',')[:3]
    ['site_id', 'scheme', 'tier']
    >>> len(table.splitlines()), collection['features']
    (1, [])

    :param sites:    The sites.
    :param profiles: One profile per site, or None.
    :return:         ``(csv_text, feature_collection)``.
    """
    profiles = profiles or [None] * len(sites)
    records = sorted(zip(sites, profiles),
                     key=lambda record: record[0].site_id)

    rows, features = [], []
    for site, profile in records:
        values = _site_values(site, profile)
        rows.append({name: _render(values[name]) for name in SITE_COLUMNS})
        pair = site.pair
        features.append({
            'type': 'Feature',
            'geometry': {'type': 'LineString',
                         'coordinates': [list(pair.upper.centroid),
                                         list(pair.lower.centroid)]},
            'properties': values})

    return (_to_csv(rows, SITE_COLUMNS),
            {'type': 'FeatureCollection', 'features': features})


def write_candidates(candidates: Iterable[ReservoirCandidate]) -> dict:
    """
    Renders reservoir candidates as point features ordered by kind and id.
    River points carry their source river and chainage, so streamflow
    tables can be keyed to their ids.
    """
    features = []
    for candidate in sorted(candidates,
                            key=lambda candidate: candidate.key):
        features.append({
            'type': 'Feature',
            'geometry': {'type': 'Point',
                         'coordinates': list(candidate.centroid)},
            'properties': eliminate_none({
                'id': candidate.id,
                'kind': str(candidate.kind),
                'elevation_m': candidate.elevation_m,
                'surface_area_m2': candidate.surface_area_m2,
                'source_id': candidate.source_id,
                'chainage_m': candidate.chainage_m})})
    return {'type': 'FeatureCollection', 'features': features}


def band_summary_columns() -> List[str]:
    columns = ['scheme', 'band', 'count']
    for name in PROFILE_VARIABLES:
        columns += [name + '_mean', name + '_std']
    return columns


def write_band_summaries(summaries: Iterable[BandSummary]) -> str:
    """
    Renders band summaries as CSV table, one row per scheme and band.
    """
    rows = []
    for summary in summaries:
        row = {'scheme': str(summary.scheme), 'band': str(summary.band),
               'count': str(summary.count)}
        for name in PROFILE_VARIABLES:
            row[name + '_mean'] = _render(summary.mean.get(name))
            row[name + '_std'] = _render(summary.std.get(name))
        rows.append(row)
    return _to_csv(rows, band_summary_columns())


def dump_json(data) -> str:
    """
    Serializes a document with sorted keys, so equal documents give equal
    text.

    >>> print(dump_json({'b': 1, 'a': [1.5]}), end='')
    {
      "a": [
        1.5
      ],
      "b": 1
    }
    """
    return json.dumps(data, sort_keys=True, indent=2) + '\n'

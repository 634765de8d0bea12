"""
Contains the pairing of prospective reservoirs with second reservoirs and
the selection of the best pair per prospective reservoir.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple
import logging

from joblib import Parallel
from joblib import delayed
import numpy as np

from PshAtlas.GeoData.SchemeConfig import SchemeConfig
from PshAtlas.Interfaces import Scheme
from PshAtlas.Interfaces.PshSite import PairRecord
from PshAtlas.Interfaces.PshSite import PshSite
from PshAtlas.Interfaces.ReservoirCandidate import ReservoirCandidate
from PshAtlas.Siting.Energy import stored_energy
from PshAtlas.Siting.SpatialIndex import SpatialIndex
from PshAtlas.Utils import chunked


LOGGER = logging.getLogger(__name__)

REJECTION_REASONS = ('head', 'separation', 'energy', 'l_over_h', 'no-pair')


@dataclass(frozen=True)
class RawPair:
    """
    An oriented candidate pair before any filtering.
    """
    prospective: ReservoirCandidate
    second: ReservoirCandidate
    upper: ReservoirCandidate
    lower: ReservoirCandidate
    head_m: float
    separation_m: float
    l_over_h: float


class RawPairs:
    """
    All partners of one prospective reservoir within the search radius, kept
    as parallel arrays. Iterating yields RawPair objects.
    """

    def __init__(self, prospective: ReservoirCandidate, pool: SpatialIndex,
                 positions: np.ndarray, separation: np.ndarray):
        self.prospective = prospective
        self.pool = pool
        self.scheme = Scheme.for_kinds(prospective.kind, pool.kind)
        self.positions = positions
        self.separation = separation
        self.head = np.abs(pool.elevations[positions] -
                           prospective.elevation_m)
        with np.errstate(divide='ignore', invalid='ignore'):
            self.l_over_h = np.where(self.head > 0,
                                     separation / np.where(self.head > 0,
                                                           self.head, 1.0),
                                     np.inf)

    def __len__(self):
        return len(self.positions)

    def __iter__(self) -> Iterator[RawPair]:
        for index in range(len(self)):
            second, upper, lower = self._members(index)
            yield RawPair(self.prospective, second, upper, lower,
                          float(self.head[index]),
                          float(self.separation[index]),
                          float(self.l_over_h[index]))

    @property
    def second_ids(self) -> np.ndarray:
        return self.pool.ids[self.positions]

    def usable_volume(self, cfg: SchemeConfig) -> np.ndarray:
        """
        Usable volume of every pair, see ``Energy.usable_volume``.
        """
        if self.scheme.involves_river:
            area = np.full(len(self), self.prospective.surface_area_m2,
                           dtype=np.float64)
        else:
            area = np.minimum(self.prospective.surface_area_m2,
                              self.pool.areas[self.positions])
        return area * cfg.usable_depth_m

    def energy(self, eta: float, cfg: SchemeConfig) -> np.ndarray:
        return stored_energy(eta, self.usable_volume(cfg), self.head,
                             cfg.water_density, cfg.gravity)

    def _members(self, index: int):
        second = self.pool.candidates[self.positions[index]]
        if second.elevation_m > self.prospective.elevation_m:
            return second, second, self.prospective
        return second, self.prospective, second

    def record(self, index: int, eta: float, cfg: SchemeConfig) -> PairRecord:
        """
        The PairRecord of the pair at ``index`` evaluated at ``eta``.
        """
        second, upper, lower = self._members(index)
        volume = self.usable_volume(cfg)[index]
        return PairRecord(
            prospective=self.prospective,
            second=second,
            upper=upper,
            lower=lower,
            head_m=float(self.head[index]),
            separation_m=float(self.separation[index]),
            l_over_h=float(self.l_over_h[index]),
            usable_volume_m3=float(volume),
            eta=eta,
            energy_gwh=float(stored_energy(eta, volume, self.head[index],
                                           cfg.water_density, cfg.gravity)))


def find_pairs(prospective: ReservoirCandidate, pool: SpatialIndex,
               cfg: SchemeConfig) -> RawPairs:
    """
    Collects every second candidate whose centroid lies within the search
    radius of the prospective reservoir, in either elevation direction. A
    lake is never paired with itself.

    :param prospective: The prospective reservoir.
    :param pool:        SpatialIndex over the scheme's second reservoirs.
    :param cfg:         The SchemeConfig.
    :return:            The RawPairs, possibly empty.
    """
    positions = pool.query(prospective.x, prospective.y, cfg.search_radius_m)
    if pool.kind is prospective.kind:
        positions = positions[pool.ids[positions] != prospective.id]
    separation = pool.distances(prospective.x, prospective.y, positions)
    return RawPairs(prospective, pool, positions, separation)


def _theoretical_mask(pairs: RawPairs, cfg: SchemeConfig) -> np.ndarray:
    return ((pairs.head >= cfg.min_head_m) &
            (pairs.separation <= cfg.max_separation_m) &
            (pairs.energy(cfg.eta_theoretical, cfg) >=
             cfg.energy_threshold_gwh))


def _technical_mask(pairs: RawPairs, cfg: SchemeConfig) -> np.ndarray:
    return (_theoretical_mask(pairs, cfg) &
            (pairs.l_over_h < cfg.max_l_over_h) &
            (pairs.energy(cfg.eta_technical, cfg) >= cfg.energy_threshold_gwh))


def _best(pairs: RawPairs, mask: np.ndarray, eta: float,
          cfg: SchemeConfig) -> Optional[PairRecord]:
    """
    The largest-energy pair among ``mask``, ties going to the smaller l/h and
    then the smaller second-candidate id.
    """
    eligible = np.flatnonzero(mask)
    if eligible.size == 0:
        return None
    energy = pairs.energy(eta, cfg)[eligible]
    order = np.lexsort((pairs.second_ids[eligible],
                        pairs.l_over_h[eligible], -energy))
    return pairs.record(int(eligible[order[0]]), eta, cfg)


def select_best_theoretical(prospective: ReservoirCandidate, pairs: RawPairs,
                            cfg: SchemeConfig) -> Optional[PshSite]:
    """
    Selects the pair with the largest storage capacity at theoretical
    efficiency among the pairs with enough head, a short enough separation
    and enough energy.

    :return: A PshSite without technical pair or None.
    """
    best = _best(pairs, _theoretical_mask(pairs, cfg), cfg.eta_theoretical,
                 cfg)
    if best is None:
        return None
    return PshSite(0, pairs.scheme, best)


def select_best_technical(prospective: ReservoirCandidate, pairs: RawPairs,
                          cfg: SchemeConfig) -> Optional[PshSite]:
    """
    Restricts the theoretical-qualifying pairs to an l/h ratio strictly
    below the limit and selects the largest capacity at technical
    efficiency. The technical pair may differ from the theoretical one.

    :return: A PshSite carrying both pairs or None.
    """
    technical = _best(pairs, _technical_mask(pairs, cfg), cfg.eta_technical,
                      cfg)
    if technical is None:
        return None
    site = select_best_theoretical(prospective, pairs, cfg)
    return PshSite(0, pairs.scheme, site.theoretical_pair, technical)


def rejections(pairs: RawPairs, cfg: SchemeConfig) -> Counter:
    """
    Counts the pairs by the first filter they fail; ``no-pair`` counts the
    prospective reservoir itself if nothing qualifies. Theoretical pairs
    failing the technical filters count as ``l_over_h``.
    """
    head = pairs.head >= cfg.min_head_m
    separation = head & (pairs.separation <= cfg.max_separation_m)
    theoretical = _theoretical_mask(pairs, cfg)
    counts = Counter({
        'head': int(np.count_nonzero(~head)),
        'separation': int(np.count_nonzero(head & ~separation)),
        'energy': int(np.count_nonzero(separation & ~theoretical)),
        'l_over_h': int(np.count_nonzero(theoretical &
                                         ~_technical_mask(pairs, cfg))),
        'no-pair': 0 if theoretical.any() else 1})
    return +counts


def select_site(prospective: ReservoirCandidate, pool: SpatialIndex,
                cfg: SchemeConfig) -> Tuple[Optional[PshSite], Counter]:
    """
    Pairs one prospective reservoir: the technical site if there is one,
    otherwise the theoretical site or None, along with the rejection counts.
    """
    pairs = find_pairs(prospective, pool, cfg)
    site = (select_best_technical(prospective, pairs, cfg) or
            select_best_theoretical(prospective, pairs, cfg))
    return site, rejections(pairs, cfg)


def _pair_chunk(prospectives: Sequence[ReservoirCandidate],
                pool: SpatialIndex, cfg: SchemeConfig):
    return [select_site(prospective, pool, cfg)
            for prospective in prospectives]


def pair_scheme(scheme: Scheme, prospectives: Sequence[ReservoirCandidate],
                seconds: Sequence[ReservoirCandidate], cfg: SchemeConfig,
                workers: int=1) -> Tuple[List[PshSite], Counter]:
    """
    Selects the sites of one scheme. The pool is shared read-only; with more
    than one worker, contiguous slices of the prospective reservoirs are
    paired in separate processes and the results concatenated in order, so
    the outcome doesn't depend on the worker count.

    :param scheme:       The Scheme.
    :param prospectives: Candidates of the scheme's prospective kind.
    :param seconds:      Candidates of the scheme's second kind.
    :param cfg:          The SchemeConfig.
    :param workers:      Number of worker processes.
    :return:             Sites ordered by prospective id, with site_id 0,
                         and the summed rejection counts.
    :raises ValueError:  If a candidate has the wrong kind.
    """
    for candidate in prospectives:
        if candidate.kind is not scheme.prospective_kind:
            raise ValueError('{} candidate {} cannot be prospective for '
                             '{}'.format(candidate.kind, candidate.id, scheme))
    pool = SpatialIndex(seconds, cfg.search_radius_m, scheme.second_kind)
    ordered = sorted(prospectives, key=lambda candidate: candidate.id)

    if workers > 1 and len(ordered) > 1:
        chunks = chunked(ordered, workers)
        results = Parallel(n_jobs=len(chunks))(
            delayed(_pair_chunk)(chunk, pool, cfg) for chunk in chunks)
        outcomes = [outcome for result in results for outcome in result]
    else:
        outcomes = _pair_chunk(ordered, pool, cfg)

    sites, counts = [], Counter()
    for prospective, (site, rejected) in zip(ordered, outcomes):
        counts.update(rejected)
        if site is None:
            LOGGER.debug('%s prospective %d reason=no-pair', scheme,
                         prospective.id)
        else:
            sites.append(site)

    LOGGER.info('%s: %d sites from %d prospective reservoirs and %d '
                'partners, rejected %s', scheme, len(sites), len(ordered),
                len(pool), ' '.join('{}={}'.format(reason, counts[reason])
                                    for reason in REJECTION_REASONS))
    return sites, counts

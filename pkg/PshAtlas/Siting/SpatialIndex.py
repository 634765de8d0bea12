"""
Contains the bucket grid used for radius queries over reservoir candidates.
"""
from collections import defaultdict
from math import floor
from typing import Sequence

import numpy as np

from PshAtlas.Interfaces import CandidateKind
from PshAtlas.Interfaces.ReservoirCandidate import ReservoirCandidate


class SpatialIndex:
    """
    A uniform grid of square buckets with the search radius as edge length.
    Any radius query up to the search radius only needs the 3x3 bucket
    neighbourhood of the query point.

    >>> pool = [ReservoirCandidate(1, CandidateKind.RIVER_POINT, 9999, 0, 1),
    ...         ReservoirCandidate(2, CandidateKind.RIVER_POINT, 10001, 0, 1)]
    >>> index = SpatialIndex(pool, 10000.0, CandidateKind.RIVER_POINT)
    >>> index.query(0, 0, 10000.0).tolist()
    [0]
    """

    def __init__(self, candidates: Sequence[ReservoirCandidate],
                 search_radius: float, kind: CandidateKind):
        """
        :param candidates:    The candidates to index, all of the given kind.
        :param search_radius: Bucket edge and maximum query radius.
        :param kind:          The CandidateKind of the pool.
        :raises ValueError:   If the radius isn't positive or a candidate
                              has another kind.
        """
        if not search_radius > 0:
            raise ValueError('search radius must be positive')
        for candidate in candidates:
            if candidate.kind is not kind:
                raise ValueError('{} candidate {} in {} pool'.format(
                    candidate.kind, candidate.id, kind))

        self.kind = kind
        self.search_radius = float(search_radius)
        self.candidates = list(candidates)
        self.xs = np.array([c.x for c in self.candidates], dtype=np.float64)
        self.ys = np.array([c.y for c in self.candidates], dtype=np.float64)
        self.elevations = np.array([c.elevation_m for c in self.candidates],
                                   dtype=np.float64)
        self.areas = np.array([np.nan if c.surface_area_m2 is None
                               else c.surface_area_m2
                               for c in self.candidates], dtype=np.float64)
        self.ids = np.array([c.id for c in self.candidates], dtype=np.int64)

        buckets = defaultdict(list)
        for position, candidate in enumerate(self.candidates):
            buckets[self._bucket(candidate.x, candidate.y)].append(position)
        self._buckets = {key: np.array(value, dtype=np.int64)
                         for key, value in buckets.items()}

    def __len__(self):
        return len(self.candidates)

    def _bucket(self, x: float, y: float):
        return (floor(x / self.search_radius), floor(y / self.search_radius))

    def query(self, x: float, y: float, radius: float) -> np.ndarray:
        """
        Finds all candidates with a planar distance of at most ``radius``.

        :param x:      Query easting.
        :param y:      Query northing.
        :param radius: Query radius, at most the search radius.
        :return:       Ascending positions into ``candidates``.
        :raises ValueError: If the radius exceeds the search radius.
        """
        if radius > self.search_radius:
            raise ValueError('query radius {} exceeds search radius {}'.format(
                radius, self.search_radius))

        column, row = self._bucket(x, y)
        found = [self._buckets[key]
                 for key in ((column + dx, row + dy)
                             for dx in (-1, 0, 1) for dy in (-1, 0, 1))
                 if key in self._buckets]
        if not found:
            return np.empty(0, dtype=np.int64)

        positions = np.sort(np.concatenate(found))
        distances = self.distances(x, y, positions)
        return positions[distances <= radius]

    def distances(self, x: float, y: float,
                  positions: np.ndarray) -> np.ndarray:
        """
        Planar distances from a point to the candidates at ``positions``.
        """
        return np.hypot(self.xs[positions] - x, self.ys[positions] - y)

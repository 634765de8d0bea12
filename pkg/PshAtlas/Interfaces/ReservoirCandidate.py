"""
This module contains the reservoir candidate record.
"""
from dataclasses import dataclass
from typing import Optional
from typing import Tuple

from PshAtlas.Interfaces import CandidateKind


@dataclass(frozen=True)
class ReservoirCandidate:
    """
    A lake, flat-land component or river point that can serve as one of the
    two reservoirs of a PSH plant.

    >>> lake = ReservoirCandidate(3, CandidateKind.LAKE, 150.0, 150.0,
    ...                           1500.0, surface_area_m2=90000.0)
    >>> lake.centroid
    (150.0, 150.0)
    >>> lake.key
    ('Lake', 3)

    :param id:              Identifier, unique within the kind.
    :param kind:            The CandidateKind.
    :param x:               Centroid easting in meters.
    :param y:               Centroid northing in meters.
    :param elevation_m:     Representative elevation in meters asl.
    :param surface_area_m2: Surface area, None for river points.
    :param source_id:       Feature id of the source geometry, if any.
    :param chainage_m:      Distance along the source river, river points
                            only.
    """
    id: int
    kind: CandidateKind
    x: float
    y: float
    elevation_m: float
    surface_area_m2: Optional[float] = None
    source_id: Optional[int] = None
    chainage_m: Optional[float] = None

    @property
    def centroid(self) -> Tuple[float, float]:
        """
        The anchor point of the candidate.
        """
        return (self.x, self.y)

    @property
    def key(self) -> Tuple[str, int]:
        """
        Identifies the candidate across kinds.
        """
        return (self.kind.value, self.id)

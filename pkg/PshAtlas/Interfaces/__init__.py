"""
This package contains the domain abstractions shared by all PshAtlas
modules: the enumerations below as well as the reservoir candidate, site
and hydroclimate profile records.
"""
from enum import Enum


class GeometryKind(Enum):
    """
    The geometry kinds a vector layer may hold.
    """
    def __str__(self):
        """
        Make behaviour of object as similar to a string as possible.
        """
        return str(self.value)

    POINT = 'Point'
    POLYLINE = 'Polyline'
    POLYGON = 'Polygon'

    @property
    def geojson_type(self) -> str:
        """
        The geometry ``type`` member used in feature-collection documents.

        >>> GeometryKind.POLYLINE.geojson_type
        'LineString'
        """
        return {'Point': 'Point',
                'Polyline': 'LineString',
                'Polygon': 'Polygon'}[self.value]


class CandidateKind(Enum):
    """
    The three kinds of reservoir a PSH plant can be built from.
    """
    def __str__(self):
        return str(self.value)

    LAKE = 'Lake'
    FLAT_LAND = 'FlatLand'
    RIVER_POINT = 'RiverPoint'


class Scheme(Enum):
    """
    The reservoir pairing schemes. The first letter names the prospective
    reservoir, the second letter the reservoir it is paired with.

    >>> Scheme.F2R.prospective_kind
    <CandidateKind.FLAT_LAND: 'FlatLand'>
    >>> Scheme.L2F.involves_river
    False
    """
    def __str__(self):
        return str(self.value)

    L2L = 'L2L'
    L2F = 'L2F'
    L2R = 'L2R'
    F2R = 'F2R'

    @property
    def prospective_kind(self) -> CandidateKind:
        """
        The kind of the reservoir every site of this scheme is built around.
        """
        return _SCHEME_KINDS[self][0]

    @property
    def second_kind(self) -> CandidateKind:
        """
        The kind of the reservoir searched for as partner.
        """
        return _SCHEME_KINDS[self][1]

    @property
    def involves_river(self) -> bool:
        """
        Whether one of the reservoirs is an on-river storage.
        """
        return self.second_kind is CandidateKind.RIVER_POINT

    @property
    def order(self) -> int:
        """
        Position of the scheme in reports.
        """
        return list(Scheme).index(self)

    @classmethod
    def for_kinds(cls, prospective: CandidateKind, second: CandidateKind):
        """
        Looks up the scheme pairing the given kinds.

        >>> Scheme.for_kinds(CandidateKind.LAKE, CandidateKind.RIVER_POINT)
        <Scheme.L2R: 'L2R'>

        :raises ValueError: If no scheme pairs these kinds.
        """
        for scheme, kinds in _SCHEME_KINDS.items():
            if kinds == (prospective, second):
                return scheme
        raise ValueError('No scheme pairs {} with {}'.format(prospective,
                                                             second))


_SCHEME_KINDS = {
    Scheme.L2L: (CandidateKind.LAKE, CandidateKind.LAKE),
    Scheme.L2F: (CandidateKind.LAKE, CandidateKind.FLAT_LAND),
    Scheme.L2R: (CandidateKind.LAKE, CandidateKind.RIVER_POINT),
    Scheme.F2R: (CandidateKind.FLAT_LAND, CandidateKind.RIVER_POINT),
}


class Tier(Enum):
    """
    The nested potential classes of a site. Every exploitable site is
    technical and every technical site is theoretical.

    >>> Tier.EXPLOITABLE.at_least(Tier.TECHNICAL)
    True
    >>> Tier.THEORETICAL.at_least(Tier.TECHNICAL)
    False
    """
    def __str__(self):
        return str(self.value)

    THEORETICAL = 'Theoretical'
    TECHNICAL = 'Technical'
    EXPLOITABLE = 'Exploitable'

    @property
    def level(self) -> int:
        """
        Rank of the tier, 0 for theoretical.
        """
        return list(Tier).index(self)

    def at_least(self, other: 'Tier') -> bool:
        """
        Whether this tier includes ``other``.
        """
        return self.level >= other.level


class ElevationBand(Enum):
    """
    Altitude classes in meters above sea level. Intervals are closed below
    and open above, except for the closed top of EB5.
    """
    def __str__(self):
        return str(self.value)

    EB1 = 'EB1'
    EB2 = 'EB2'
    EB3 = 'EB3'
    EB4 = 'EB4'
    EB5 = 'EB5'

    @property
    def bounds(self):
        """
        The ``(lower, upper)`` elevation bounds of the band.

        >>> ElevationBand.EB4.bounds
        (2000.0, 3000.0)
        """
        return _BAND_BOUNDS[self]

    @property
    def order(self) -> int:
        """
        Position of the band, 0 for the lowest.
        """
        return list(ElevationBand).index(self)


_BAND_BOUNDS = {
    ElevationBand.EB1: (0.0, 500.0),
    ElevationBand.EB2: (500.0, 1000.0),
    ElevationBand.EB3: (1000.0, 2000.0),
    ElevationBand.EB4: (2000.0, 3000.0),
    ElevationBand.EB5: (3000.0, 5000.0),
}

"""
Contains the elevation band classification.
"""
from PshAtlas.Interfaces import ElevationBand


def elevation_band(elevation_m: float) -> ElevationBand:
    """
    Classifies an elevation into its band. Bands are closed below and open
    above; 5000 m still belongs to EB5.

    >>> elevation_band(499.9)
    <ElevationBand.EB1: 'EB1'>
    >>> elevation_band(500)
    <ElevationBand.EB2: 'EB2'>
    >>> elevation_band(5000)
    <ElevationBand.EB5: 'EB5'>

    :raises ValueError: If the elevation is outside [0, 5000].
    """
    for band in ElevationBand:
        lower, upper = band.bounds
        if lower <= elevation_m < upper:
            return band
    if elevation_m == ElevationBand.EB5.bounds[1]:
        return ElevationBand.EB5
    raise ValueError('elevation {} outside the band range'.format(elevation_m))

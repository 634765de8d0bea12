"""
Contains the slope derivation from a digital elevation model.
"""
import numpy as np

from PshAtlas.GeoData.RasterGrid import DEFAULT_NODATA
from PshAtlas.GeoData.RasterGrid import RasterGrid


def _window(array: np.ndarray, row: int, col: int) -> np.ndarray:
    """
    The interior-sized view shifted by ``(row, col)`` with row and col in
    {-1, 0, 1}.
    """
    nrows, ncols = array.shape
    return array[1 + row:nrows - 1 + row, 1 + col:ncols - 1 + col]


def compute_slope(dem: RasterGrid) -> RasterGrid:
    """
    Computes percent slope with Horn's 3x3 weighted difference kernel. Cells
    on the border or next to a NODATA cell get NODATA.

    >>> dem = RasterGrid(3, 3, 0, 0, 100, -9999,
    ...                  [1000 + 5 * col for row in range(3)
    ...                   for col in range(3)])
    >>> slope = compute_slope(dem)
    >>> round(float(slope.values[1, 1]), 6)
    5.0
    >>> float(slope.values[0, 0])
    -9999.0

    :param dem: The elevation grid.
    :return:    A co-registered grid of slopes in percent.
    :raises ValueError: If the grid is smaller than 3x3.
    """
    if dem.nrows < 3 or dem.ncols < 3:
        raise ValueError('grid too small for slope')

    z = dem.values
    valid = dem.valid_mask
    interior_valid = np.ones((dem.nrows - 2, dem.ncols - 2), dtype=bool)
    for row in (-1, 0, 1):
        for col in (-1, 0, 1):
            interior_valid &= _window(valid, row, col)

    # Rows grow northwards, so the row offset points along +y.
    dz_dx = ((_window(z, -1, 1) + 2 * _window(z, 0, 1) + _window(z, 1, 1)) -
             (_window(z, -1, -1) + 2 * _window(z, 0, -1) +
              _window(z, 1, -1))) / (8 * dem.cellsize)
    dz_dy = ((_window(z, 1, -1) + 2 * _window(z, 1, 0) + _window(z, 1, 1)) -
             (_window(z, -1, -1) + 2 * _window(z, -1, 0) +
              _window(z, -1, 1))) / (8 * dem.cellsize)

    # slopes are never negative, so a negative sentinel is unambiguous
    nodata = dem.nodata if dem.nodata < 0 else DEFAULT_NODATA
    slope = np.full(dem.shape, nodata, dtype=np.float64)
    interior = 100.0 * np.sqrt(dz_dx ** 2 + dz_dy ** 2)
    slope[1:-1, 1:-1] = np.where(interior_valid, interior, nodata)
    return dem.with_values(slope, nodata=nodata)

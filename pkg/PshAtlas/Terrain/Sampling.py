"""
Contains elevation sampling for points and polygons.
"""
from typing import Tuple

import numpy as np
import shapely
from shapely.geometry import Polygon

from PshAtlas.GeoData.RasterGrid import RasterGrid


def sample_elevation(dem: RasterGrid, point: Tuple[float, float]) -> float:
    """
    Returns the value of the cell containing the point, without
    interpolation.

    >>> dem = RasterGrid(2, 1, 0, 0, 90, -9999, [100, 200])
    >>> sample_elevation(dem, (89.99, 45.0))
    100.0
    >>> sample_elevation(dem, (500.0, 45.0))
    Traceback (most recent call last):
     ...
    ValueError: point (500.0, 45.0) outside DEM

    :raises ValueError: If the point is outside the grid or on NODATA.
    """
    x, y = point
    index = dem.cell_index(x, y)
    if index is None:
        raise ValueError('point ({}, {}) outside DEM'.format(x, y))
    value = dem.values[index]
    if value == dem.nodata:
        raise ValueError('point ({}, {}) on NODATA cell'.format(x, y))
    return float(value)


def mean_polygon_elevation(dem: RasterGrid, polygon: Polygon) -> float:
    """
    Averages the grid values at all cell centers inside the polygon (holes
    excluded). A polygon too small to contain a cell center takes the value
    of the cell holding its representative point.

    >>> dem = RasterGrid(2, 1, 0, 0, 90, -9999, [100, 200])
    >>> mean_polygon_elevation(dem, Polygon([(0, 0), (180, 0), (180, 90),
    ...                                      (0, 90)]))
    150.0

    :raises ValueError: If no covered cell holds data.
    """
    xmin, ymin, xmax, ymax = polygon.bounds
    first_col = max(0, int(np.floor((xmin - dem.x_origin) / dem.cellsize)))
    last_col = min(dem.ncols - 1,
                   int(np.floor((xmax - dem.x_origin) / dem.cellsize)))
    first_row = max(0, int(np.floor((ymin - dem.y_origin) / dem.cellsize)))
    last_row = min(dem.nrows - 1,
                   int(np.floor((ymax - dem.y_origin) / dem.cellsize)))

    if first_col <= last_col and first_row <= last_row:
        xs, ys = dem.cell_centers()
        grid_x, grid_y = np.meshgrid(xs[first_col:last_col + 1],
                                     ys[first_row:last_row + 1])
        window = dem.values[first_row:last_row + 1, first_col:last_col + 1]
        inside = shapely.contains_xy(polygon, grid_x, grid_y)
        if inside.any():
            values = window[inside & (window != dem.nodata)]
            if values.size == 0:
                raise ValueError('polygon covers only NODATA cells')
            return float(values.mean())

    try:
        point = polygon.representative_point()
        return sample_elevation(dem, (point.x, point.y))
    except ValueError:
        raise ValueError('polygon covers no cell with data')

"""
Contains the raster grid abstraction and its ESRI ASCII grid codec.
"""
from math import floor
from typing import Optional
from typing import Tuple

import numpy as np

from PshAtlas import LayerError
from PshAtlas.GeoData import read_text


HEADER_KEYS = ('ncols', 'nrows', 'xllcorner', 'yllcorner', 'xllcenter',
               'yllcenter', 'cellsize', 'nodata_value')
DEFAULT_NODATA = -9999.0


class RasterGrid:
    """
    A regular grid of cell values in a projected planar coordinate system.

    Row 0 is the southernmost row, i.e. its lower cell edges lie on
    ``y_origin``. Values are kept in a read-only array of shape
    ``(nrows, ncols)``.

    >>> grid = RasterGrid(2, 2, 0.0, 0.0, 90.0, -9999.0, [1, 2, 3, 4])
    >>> grid.values.tolist()
    [[1.0, 2.0], [3.0, 4.0]]
    >>> grid.cell_index(100.0, 10.0)
    (0, 1)
    >>> grid.cell_index(500.0, 10.0) is None
    True
    """

    def __init__(self, ncols: int, nrows: int, x_origin: float,
                 y_origin: float, cellsize: float, nodata: float, values):
        """
        Creates a new grid.

        :param ncols:    Number of columns, at least 1.
        :param nrows:    Number of rows, at least 1.
        :param x_origin: Easting of the lower left corner in meters.
        :param y_origin: Northing of the lower left corner in meters.
        :param cellsize: Edge length of a cell in meters.
        :param nodata:   Sentinel marking cells without data.
        :param values:   Row-major values, flat or shaped ``(nrows, ncols)``,
                         southernmost row first.
        :raises ValueError: If an invariant is violated.
        """
        if int(ncols) < 1 or int(nrows) < 1:
            raise ValueError('grid needs at least one row and column, got '
                             '{}x{}'.format(nrows, ncols))
        if not cellsize > 0:
            raise ValueError('cellsize must be positive, got {}'.format(
                cellsize))
        array = np.array(values, dtype=np.float64)
        if array.size != int(ncols) * int(nrows):
            raise ValueError('expected {} values, got {}'.format(
                int(ncols) * int(nrows), array.size))
        array = array.reshape(int(nrows), int(ncols))
        if not np.all(np.isfinite(array[array != nodata])):
            raise ValueError('grid contains non-finite values')
        array.flags.writeable = False

        self.ncols = int(ncols)
        self.nrows = int(nrows)
        self.x_origin = float(x_origin)
        self.y_origin = float(y_origin)
        self.cellsize = float(cellsize)
        self.nodata = float(nodata)
        self._values = array

    @property
    def values(self) -> np.ndarray:
        """
        The ``(nrows, ncols)`` value array, row 0 at ``y_origin``.
        """
        return self._values

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def valid_mask(self) -> np.ndarray:
        """
        Boolean array marking cells holding data.
        """
        return self._values != self.nodata

    @property
    def extent(self) -> Tuple[float, float, float, float]:
        """
        The ``(xmin, ymin, xmax, ymax)`` bounds of the grid.
        """
        return (self.x_origin, self.y_origin,
                self.x_origin + self.ncols * self.cellsize,
                self.y_origin + self.nrows * self.cellsize)

    def contains(self, x: float, y: float) -> bool:
        """
        Whether the point lies inside the (closed) extent.
        """
        xmin, ymin, xmax, ymax = self.extent
        return xmin <= x <= xmax and ymin <= y <= ymax

    def cell_index(self, x: float, y: float) -> Optional[Tuple[int, int]]:
        """
        The ``(row, col)`` of the cell containing the point, None outside the
        extent. Points on the upper or right border belong to the last
        row or column.
        """
        if not self.contains(x, y):
            return None
        col = min(int(floor((x - self.x_origin) / self.cellsize)),
                  self.ncols - 1)
        row = min(int(floor((y - self.y_origin) / self.cellsize)),
                  self.nrows - 1)
        return (row, col)

    def cell_centers(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        The center eastings of all columns and northings of all rows.
        """
        half = self.cellsize / 2
        xs = self.x_origin + np.arange(self.ncols) * self.cellsize + half
        ys = self.y_origin + np.arange(self.nrows) * self.cellsize + half
        return xs, ys

    def same_geometry(self, other: 'RasterGrid') -> bool:
        """
        Whether both grids are co-registered.
        """
        return (self.shape == other.shape and
                self.x_origin == other.x_origin and
                self.y_origin == other.y_origin and
                self.cellsize == other.cellsize)

    def with_values(self, values, nodata: Optional[float]=None):
        """
        Creates a co-registered grid holding other values.
        """
        return RasterGrid(self.ncols, self.nrows, self.x_origin,
                          self.y_origin, self.cellsize,
                          self.nodata if nodata is None else nodata, values)

    def __eq__(self, other):
        return (isinstance(other, RasterGrid) and self.same_geometry(other)
                and self.nodata == other.nodata
                and np.array_equal(self._values, other._values))

    def __repr__(self):  # dont cover
        return '<{} object({}x{} at ({}, {}), cellsize={}) at {}>'.format(
            self.__class__.__name__, self.nrows, self.ncols, self.x_origin,
            self.y_origin, self.cellsize, hex(id(self)))


def _parse_header(lines, source):
    header, number = {}, 0
    for number, line in enumerate(lines, 1):
        tokens = line.split()
        if not tokens:
            continue
        if not tokens[0][0].isalpha() or _is_number(tokens[0]):
            return header, number
        key = tokens[0].lower()
        if key not in HEADER_KEYS or len(tokens) != 2:
            raise LayerError('malformed header key {!r}'.format(tokens[0]),
                             source, number)
        try:
            value = float(tokens[1])
        except ValueError:
            raise LayerError('non-numeric header value {!r}'.format(
                tokens[1]), source, number)
        if not np.isfinite(value):
            raise LayerError('non-finite header value {!r}'.format(
                tokens[1]), source, number)
        header[key] = (value, number)
    return header, number + 1


def _header_value(header, keys, source, default=None):
    for key in keys:
        if key in header:
            return header[key]
    if default is not None:
        return default, None
    raise LayerError('missing header key {}'.format(keys[0].upper()), source)


def parse_ascii_grid(text: str, source: str='') -> RasterGrid:
    """
    Parses an ESRI ASCII grid. Header keys are case-insensitive; the first
    data line is the northernmost row.

    >>> grid = parse_ascii_grid('NCOLS 2\\nNROWS 2\\nXLLCORNER 0\\n'
    ...                         'YLLCORNER 0\\nCELLSIZE 90\\n'
    ...                         'NODATA_VALUE -9999\\n1 2\\n3 4\\n')
    >>> grid.values.tolist()
    [[3.0, 4.0], [1.0, 2.0]]

    :param text:   The grid document.
    :param source: Name used in diagnostics.
    :return:       A RasterGrid.
    :raises LayerError: On any malformed input, naming the line.
    """
    lines = text.splitlines()
    header, first_data = _parse_header(lines, source)

    ncols, ncols_line = _header_value(header, ('ncols',), source)
    nrows, nrows_line = _header_value(header, ('nrows',), source)
    cellsize, cellsize_line = _header_value(header, ('cellsize',), source)
    for value, line, key in ((ncols, ncols_line, 'NCOLS'),
                             (nrows, nrows_line, 'NROWS')):
        if value != int(value) or value < 1:
            raise LayerError('{} must be a positive integer'.format(key),
                             source, line)
    if not cellsize > 0:
        raise LayerError('CELLSIZE must be positive', source, cellsize_line)
    ncols, nrows = int(ncols), int(nrows)

    if 'xllcenter' in header:
        x_origin = header['xllcenter'][0] - cellsize / 2
    else:
        x_origin, _ = _header_value(header, ('xllcorner',), source)
    if 'yllcenter' in header:
        y_origin = header['yllcenter'][0] - cellsize / 2
    else:
        y_origin, _ = _header_value(header, ('yllcorner',), source)
    nodata, _ = _header_value(header, ('nodata_value',), source,
                              DEFAULT_NODATA)

    rows = []
    number = first_data - 1
    for number, line in enumerate(lines[first_data - 1:], first_data):
        tokens = line.split()
        if not tokens:
            continue
        if len(rows) == nrows:
            raise LayerError('row count mismatch: expected {} rows'.format(
                nrows), source, number)
        if len(tokens) != ncols:
            raise LayerError('row length mismatch', source, number)
        try:
            row = [float(token) for token in tokens]
        except ValueError:
            bad = next(token for token in tokens if not _is_number(token))
            raise LayerError('non-numeric token {!r}'.format(bad), source,
                             number)
        if not all(np.isfinite(value) or value == nodata for value in row):
            raise LayerError('non-finite value', source, number)
        rows.append(row)
    if len(rows) != nrows:
        raise LayerError('row count mismatch: expected {} rows, found '
                         '{}'.format(nrows, len(rows)), source, number)

    return RasterGrid(ncols, nrows, x_origin, y_origin, cellsize, nodata,
                      rows[::-1])


def _is_number(token):
    try:
        float(token)
    except ValueError:
        return False
    return True


def write_ascii_grid(grid: RasterGrid) -> str:
    """
    Renders a grid as ESRI ASCII grid text. Values are written at full
    precision, so parsing the text gives the grid back.

    >>> grid = RasterGrid(2, 1, 0, 0, 30, -9999, [1.5, -9999])
    >>> print(write_ascii_grid(grid), end='')
    NCOLS         2
    NROWS         1
    XLLCORNER     0.0
    YLLCORNER     0.0
    CELLSIZE      30.0
    NODATA_VALUE  -9999.0
    1.5 -9999.0
    """
    lines = ['{:<14}{}'.format('NCOLS', grid.ncols),
             '{:<14}{}'.format('NROWS', grid.nrows),
             '{:<14}{!r}'.format('XLLCORNER', grid.x_origin),
             '{:<14}{!r}'.format('YLLCORNER', grid.y_origin),
             '{:<14}{!r}'.format('CELLSIZE', grid.cellsize),
             '{:<14}{!r}'.format('NODATA_VALUE', grid.nodata)]
    for row in grid.values[::-1]:
        lines.append(' '.join(repr(float(value)) for value in row))
    return '\n'.join(lines) + '\n'


def read_ascii_grid(path: str) -> RasterGrid:
    """
    Reads an ESRI ASCII grid file.

    :raises LayerError: If the file can't be read or parsed.
    """
    return parse_ascii_grid(read_text(path), source=str(path))


def save_ascii_grid(grid: RasterGrid, path: str):
    """
    Writes a grid to an ESRI ASCII grid file.
    """
    with open(path, 'w') as stream:
        stream.write(write_ascii_grid(grid))

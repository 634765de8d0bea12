"""
This package contains the input and output layer formats: ESRI ASCII
grids, feature-collection vector layers, the run configuration and the
result writers.
"""
from PshAtlas import LayerError


def read_text(path, layer: str='') -> str:
    """
    Reads a text file, reporting failures as LayerError.

    :param path:  The file to read.
    :param layer: The layer name used in the diagnostic, defaults to the
                  path.
    :raises LayerError: If the file can't be read.
    """
    try:
        with open(str(path), 'r') as stream:
            return stream.read()
    except (OSError, UnicodeDecodeError) as error:
        raise LayerError('cannot read file ({})'.format(error),
                         layer or str(path))

"""
This package contains a screening engine for pumped storage hydropower
sites: it derives reservoir candidates from terrain and hydrography layers,
pairs them under four reservoir schemes and classifies the resulting sites
into theoretical, technical and exploitable potential.
"""

from os.path import dirname, join


class PshAtlasError(Exception):
    """
    Base class of all errors raised by PshAtlas.
    """


class ConfigError(PshAtlasError):
    """
    Indicates that the run configuration is invalid.
    """


class LayerError(PshAtlasError):
    """
    Indicates that an input layer can't be read, parsed or violates its
    invariants.

    >>> str(LayerError('row length mismatch', layer='dem.asc', line=8))
    'dem.asc: row length mismatch at line 8'
    """

    def __init__(self, message: str, layer: str='', line: int=None):
        self.message = message
        self.layer = layer
        self.line = line
        text = message if line is None else '{} at line {}'.format(message,
                                                                   line)
        super().__init__('{}: {}'.format(layer, text) if layer else text)


class InvariantViolation(PshAtlasError):
    """
    Indicates that an emitted result breaks one of its invariants. This is
    always a bug.
    """


with open(join(dirname(__file__), 'VERSION'), 'r') as ver:
    VERSION = ver.readline().strip()

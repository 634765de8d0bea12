"""
Provides useful stuff, generally!
"""
from hashlib import sha256
from typing import List
from typing import Optional
from typing import Sequence

import numpy as np


class CachedDataMixin:
    """
    You provide:

    - self._get_data for loading your data

    The data is loaded on first access of ``data`` and kept afterwards. You
    can also create an instance with your own data using the from_data
    classmethod, no loading happens then.
    """

    @classmethod
    def from_data(cls, data, *args, **kwargs):
        """
        Returns an instance created from the provided data.

        :raises TypeError:
            When the args provided are insufficient to call __init__.
        """
        instance = cls(*args, **kwargs)
        instance.data = data

        return instance

    def _get_data(self):
        """
        Retrieves the data for the object.
        """
        raise NotImplementedError

    def refresh(self):
        """
        Reloads the data unconditionally.
        """
        self._data = self._get_data()

    @property
    def data(self):
        """
        Retrieves the data, loading it if needed.
        """
        if getattr(self, '_data', None) is None:
            self.refresh()

        return self._data

    @data.setter
    def data(self, value):
        """
        Setter for the data, use it to override.
        """
        self._data = value


def eliminate_none(data: dict) -> dict:
    """
    Remove None values from dict

    >>> eliminate_none({'q10': None, 'band': 'EB1'})
    {'band': 'EB1'}
    """
    return dict((k, v) for k, v in data.items() if v is not None)


def format_number(value: Optional[float]) -> str:
    """
    Renders a number with 6 significant digits in positional notation,
    None as empty string.

    >>> format_number(0.013611111111)
    '0.0136111'
    >>> format_number(120000.0)
    '120000'
    >>> format_number(2345678.9)
    '2345680'
    >>> format_number(None)
    ''
    """
    if value is None:
        return ''
    return np.format_float_positional(float(value), precision=6, unique=False,
                                      fractional=False, trim='-')


def sha256sum(path: str) -> str:
    """
    Returns the hex SHA-256 digest of a file's content.
    """
    digest = sha256()
    with open(path, 'rb') as stream:
        for block in iter(lambda: stream.read(1 << 20), b''):
            digest.update(block)
    return digest.hexdigest()


def chunked(items: Sequence, parts: int) -> List[Sequence]:
    """
    Splits a sequence into at most ``parts`` contiguous, non-empty slices.
    Concatenating the slices gives the sequence back.

    >>> chunked([1, 2, 3, 4, 5], 2)
    [[1, 2, 3], [4, 5]]
    >>> chunked([], 4)
    []
    """
    parts = max(1, min(parts, len(items)))
    size, rest = divmod(len(items), parts)
    slices, start = [], 0
    for index in range(parts):
        stop = start + size + (1 if index < rest else 0)
        if stop > start:
            slices.append(items[start:stop])
        start = stop
    return slices

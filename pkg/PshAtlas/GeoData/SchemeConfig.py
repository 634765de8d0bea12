"""
Contains the screening parameters and the run configuration loader.
"""
from dataclasses import asdict
from dataclasses import dataclass
from dataclasses import field
from dataclasses import fields
from pathlib import Path
from typing import Dict
from typing import Optional
from typing import Tuple
import json
import logging

from PshAtlas import ConfigError
from PshAtlas.Interfaces import Scheme


LOGGER = logging.getLogger(__name__)

LAYER_NAMES = ('dem', 'lakes', 'rivers', 'roads', 'planned_substations',
               'operational_substations', 'protected_areas', 'precipitation',
               'temperature', 'streamflow')


@dataclass(frozen=True)
class SchemeConfig:
    """
    The constants every screening step depends on. Defaults are the national
    screening constants.

    >>> SchemeConfig().min_head_m
    50.0
    >>> SchemeConfig(min_head_m=60).overrides()
    {'min_head_m': 60}
    """
    min_head_m: float = 50.0
    max_separation_m: float = 5000.0
    search_radius_m: float = 10000.0
    min_area_m2: float = 50000.0
    usable_depth_m: float = 2.0
    slope_threshold_pct: float = 5.0
    elevation_cap_m: float = 5000.0
    max_l_over_h: float = 10.0
    eta_theoretical: float = 1.0
    eta_technical: float = 0.8
    energy_threshold_gwh: float = 0.01
    river_interval_m: float = 1000.0
    infra_buffer_m: float = 20000.0
    water_density: float = 1000.0
    gravity: float = 9.8

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError('{} must be a number, got {!r}'.format(
                    item.name, value))
            if item.name.startswith('eta_'):
                if not 0 < value <= 1:
                    raise ConfigError('{} must be in (0, 1], got {}'.format(
                        item.name, value))
            elif not value > 0:
                raise ConfigError('{} must be positive, got {}'.format(
                    item.name, value))

    @classmethod
    def from_dict(cls, data: dict) -> 'SchemeConfig':
        """
        Creates a config from a mapping of field names, absent fields take
        the defaults.

        :raises ConfigError: On unknown fields or invalid values.
        """
        names = {item.name for item in fields(cls)}
        unknown = sorted(set(data) - names)
        if unknown:
            raise ConfigError('unknown config field(s): {}'.format(
                ', '.join(unknown)))
        return cls(**data)

    def overrides(self) -> Dict[str, float]:
        """
        The fields whose value differs from the default.
        """
        default = SchemeConfig()
        return {item.name: getattr(self, item.name) for item in fields(self)
                if getattr(self, item.name) != getattr(default, item.name)}

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a pipeline run needs: parameters, layer paths and the schemes
    to evaluate.

    :param scheme:  The SchemeConfig.
    :param layers:  Layer name to absolute path; absent layers are missing.
    :param schemes: The schemes to evaluate, in report order.
    :param source:  The configuration file, if loaded from one.
    :param layer_refs: Layer name to the path as written in the config.
    """
    scheme: SchemeConfig = field(default_factory=SchemeConfig)
    layers: Dict[str, Path] = field(default_factory=dict)
    schemes: Tuple[Scheme, ...] = tuple(Scheme)
    source: Optional[Path] = None
    layer_refs: Dict[str, str] = field(default_factory=dict)

    def layer(self, name: str) -> Optional[Path]:
        """
        The path of a layer or None if the layer isn't configured.
        """
        return self.layers.get(name)

    def echo(self) -> dict:
        """
        The configuration as written to the run summary.
        """
        return {'parameters': self.scheme.to_dict(),
                'overrides': self.scheme.overrides(),
                'schemes': [scheme.value for scheme in self.schemes],
                'layers': dict(sorted(self.layer_refs.items()))}


def parse_config(data: dict, base: Path=Path('.'),
                 source: Optional[Path]=None) -> RunConfig:
    """
    Builds a RunConfig from a decoded configuration document.

    :param data:   The decoded document.
    :param base:   Directory relative layer paths are resolved against.
    :param source: The file the document came from.
    :raises ConfigError: On unknown keys, invalid values or a missing DEM.
    """
    if not isinstance(data, dict):
        raise ConfigError('configuration must be a JSON object')
    data = dict(data)

    layers = data.pop('layers', {})
    if not isinstance(layers, dict):
        raise ConfigError('layers must be an object')
    unknown = sorted(set(layers) - set(LAYER_NAMES))
    if unknown:
        raise ConfigError('unknown layer(s): {}'.format(', '.join(unknown)))
    if 'dem' not in layers:
        raise ConfigError('the dem layer is required')
    for name, path in layers.items():
        if not isinstance(path, str) or not path:
            raise ConfigError('layer {} must be a path'.format(name))

    codes = data.pop('schemes', [scheme.value for scheme in Scheme])
    try:
        chosen = {Scheme(code) for code in codes}
    except (TypeError, ValueError):
        raise ConfigError('schemes must be a list of {}'.format(
            ', '.join(scheme.value for scheme in Scheme)))
    schemes = tuple(scheme for scheme in Scheme if scheme in chosen)

    scheme_config = SchemeConfig.from_dict(data)
    if scheme_config.overrides():
        LOGGER.info('parameter overrides: %s', scheme_config.overrides())

    return RunConfig(scheme=scheme_config,
                     layers={name: (base / path).resolve()
                             for name, path in layers.items()},
                     schemes=schemes,
                     source=source,
                     layer_refs=dict(layers))


def load_config(path) -> RunConfig:
    """
    Loads a JSON run configuration. Layer paths are relative to the
    configuration file.

    :raises ConfigError: If the file can't be read or is invalid.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as error:
        raise ConfigError('cannot read {} ({})'.format(path, error))
    except ValueError as error:
        raise ConfigError('invalid JSON in {} ({})'.format(path, error))
    return parse_config(data, base=path.parent, source=path)

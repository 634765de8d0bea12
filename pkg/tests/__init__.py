"""
This module contains the helpers for writing testcases for PshAtlas.
"""
from abc import ABCMeta
from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase
import json

import numpy as np

from PshAtlas.GeoData.RasterGrid import RasterGrid
from PshAtlas.GeoData.RasterGrid import write_ascii_grid
from PshAtlas.GeoData.SchemeConfig import SchemeConfig
from PshAtlas.Interfaces import CandidateKind
from PshAtlas.Interfaces.ReservoirCandidate import ReservoirCandidate
from PshAtlas.Siting.Pairing import select_site
from PshAtlas.Siting.SpatialIndex import SpatialIndex


NODATA = -9999.0


def grid(values, cellsize=90.0, x_origin=0.0, y_origin=0.0, nodata=NODATA):
    """
    Creates a grid from a 2d array, row 0 being the southernmost row.
    """
    array = np.asarray(values, dtype=np.float64)
    return RasterGrid(array.shape[1], array.shape[0], x_origin, y_origin,
                      cellsize, nodata, array)


def lake(id, x, y, elevation, area=100000.0):
    return ReservoirCandidate(id, CandidateKind.LAKE, float(x), float(y),
                              float(elevation), float(area), source_id=id)


def flat(id, x, y, elevation, area=100000.0):
    return ReservoirCandidate(id, CandidateKind.FLAT_LAND, float(x), float(y),
                              float(elevation), float(area))


def river(id, x, y, elevation):
    return ReservoirCandidate(id, CandidateKind.RIVER_POINT, float(x),
                              float(y), float(elevation))


def site_for(prospective, seconds, cfg=None, site_id=1, tier=None):
    """
    Runs the pair selection for one prospective reservoir.
    """
    cfg = cfg or SchemeConfig()
    kind = seconds[0].kind if seconds else CandidateKind.RIVER_POINT
    pool = SpatialIndex(seconds, cfg.search_radius_m, kind)
    site, _ = select_site(prospective, pool, cfg)
    if site is None:
        return None
    site = site.with_site_id(site_id)
    return site if tier is None else site.with_tier(tier)


def feature_collection(geometry_type, geometries, ids=None):
    """
    Builds a feature-collection document from coordinate lists.
    """
    ids = ids or list(range(1, len(geometries) + 1))
    return {'type': 'FeatureCollection',
            'features': [{'type': 'Feature',
                          'properties': {'id': fid},
                          'geometry': {'type': geometry_type,
                                       'coordinates': coordinates}}
                         for fid, coordinates in zip(ids, geometries)]}


def rectangle(xmin, ymin, xmax, ymax):
    """
    Coordinates of a closed rectangular polygon ring.
    """
    return [[[xmin, ymin], [xmax, ymin], [xmax, ymax], [xmin, ymax],
             [xmin, ymin]]]


class PshAtlasTestCase(TestCase, metaclass=ABCMeta):
    """
    Base class for writing testcases in PshAtlas with a scratch directory.
    """

    @classmethod
    def setUpClass(cls):
        """
        On inherited classes, run `setUp` method as usual.
        """
        if (cls is not PshAtlasTestCase and
                cls.setUp is not PshAtlasTestCase.setUp):
            _setup = cls.setUp

            def newSetUp(self, *args, **kwargs):
                PshAtlasTestCase.setUp(self)
                return _setup(self, *args, **kwargs)

            cls.setUp = newSetUp

    def setUp(self):
        """
        Common setup method for all inherited classes.
        """
        directory = TemporaryDirectory()
        self.tmp = Path(directory.name)
        self.addCleanup(directory.cleanup)

    def write_text(self, name: str, text: str) -> Path:
        path = self.tmp / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        return path

    def write_json(self, name: str, data) -> Path:
        return self.write_text(name, json.dumps(data))

    def write_grid(self, name: str, raster: RasterGrid) -> Path:
        return self.write_text(name, write_ascii_grid(raster))


VALLEY_SIZE = 60
VALLEY_CELLSIZE = 90.0
VALLEY_AXIS = 2745.0
PLATEAU = (slice(10, 16), slice(5, 11))
PLATEAU_ELEVATION = 1700.0


def valley_dem() -> RasterGrid:
    """
    A valley running north along x = 2745 m with 20 % side slopes, rising
    6 % northwards, and a 6x6 cell mesa on its western side.
    """
    centers = np.arange(VALLEY_SIZE) * VALLEY_CELLSIZE + VALLEY_CELLSIZE / 2
    xs, ys = np.meshgrid(centers, centers)
    values = 1000 + 0.2 * np.abs(xs - VALLEY_AXIS) + 0.06 * ys
    values[PLATEAU] = PLATEAU_ELEVATION
    return grid(values, cellsize=VALLEY_CELLSIZE)


def constant_grid(value, extent=VALLEY_SIZE * VALLEY_CELLSIZE):
    return grid([[value]], cellsize=extent)


def write_valley(directory: Path, exclude=(), schemes=None, **parameters):
    """
    Writes the valley scene with all its layers and returns the path of its
    run configuration.

    :param directory:  Where the scene is written.
    :param exclude:    Layer names left out of the configuration.
    :param schemes:    Scheme codes to configure, all if None.
    :param parameters: Parameter overrides.
    """
    directory.mkdir(parents=True, exist_ok=True)
    layers = {
        'dem': 'dem.asc',
        'lakes': 'lakes.geojson',
        'rivers': 'rivers.geojson',
        'roads': 'roads.geojson',
        'planned_substations': 'planned.geojson',
        'operational_substations': 'operational.geojson',
        'protected_areas': 'parks.geojson',
        'precipitation': 'climate',
        'temperature': 'climate',
        'streamflow': 'flow.csv',
    }
    documents = {
        'lakes.geojson': feature_collection(
            'Polygon', [rectangle(4500, 2000, 4800, 2300),
                        rectangle(2600, 300, 2900, 600),
                        rectangle(1000, 4000, 1100, 4100)]),
        'rivers.geojson': feature_collection(
            'LineString', [[[VALLEY_AXIS, 100], [VALLEY_AXIS, 5100]]]),
        'roads.geojson': feature_collection(
            'LineString', [[[0, -100], [5400, -100]]]),
        'planned.geojson': feature_collection('Point',
                                              [[VALLEY_AXIS, 3000]]),
        'operational.geojson': feature_collection('Point', [[500, 500]]),
        'parks.geojson': feature_collection('Polygon',
                                            [rectangle(2600, 0, 2900, 200)]),
    }
    (directory / 'dem.asc').write_text(write_ascii_grid(valley_dem()))
    for name, document in documents.items():
        (directory / name).write_text(json.dumps(document))
    (directory / 'climate').mkdir(exist_ok=True)
    for month in range(1, 13):
        for variable, value in (('precip', 100.0), ('temp', 15.0)):
            (directory / 'climate' / '{}_2000_{:02d}.asc'.format(
                variable, month)).write_text(
                    write_ascii_grid(constant_grid(value)))
    (directory / 'flow.csv').write_text('point_id,value\n1,0\n1,10\n'
                                        '3,4\n')

    config = dict(parameters)
    config['layers'] = {name: path for name, path in layers.items()
                        if name not in exclude}
    if schemes is not None:
        config['schemes'] = list(schemes)
    path = directory / 'config.json'
    path.write_text(json.dumps(config))
    return path


def exhaustive_search(prospective, seconds, involves_river, technical,
                      cfg=None):
    """
    Scans every partner of a prospective reservoir and returns the id of the
    best one with its energy in GWh, or None.
    """
    cfg = cfg or SchemeConfig()

    def energy(eta, volume, head):
        return eta * cfg.water_density * volume * cfg.gravity * head / 3.6e12

    best = None
    for second in seconds:
        if second.kind is prospective.kind and second.id == prospective.id:
            continue
        separation = float(np.hypot(second.x - prospective.x,
                                    second.y - prospective.y))
        head = abs(second.elevation_m - prospective.elevation_m)
        if (separation > cfg.search_radius_m or head < cfg.min_head_m or
                separation > cfg.max_separation_m):
            continue
        area = (prospective.surface_area_m2 if involves_river else
                min(prospective.surface_area_m2, second.surface_area_m2))
        volume = area * cfg.usable_depth_m
        if energy(cfg.eta_theoretical, volume, head) < \
                cfg.energy_threshold_gwh:
            continue
        eta = cfg.eta_theoretical
        if technical:
            eta = cfg.eta_technical
            if not (separation / head < cfg.max_l_over_h and
                    energy(eta, volume, head) >= cfg.energy_threshold_gwh):
                continue
        key = (-energy(eta, volume, head), separation / head, second.id)
        if best is None or key < best[0]:
            best = (key, second.id, energy(eta, volume, head))
    return None if best is None else best[1:]


def exhaustive_best(prospective, seconds, involves_river, technical,
                    cfg=None):
    """
    The id of the best partner found by ``exhaustive_search``, or None.
    """
    best = exhaustive_search(prospective, seconds, involves_river,
                             technical, cfg)
    return None if best is None else best[0]

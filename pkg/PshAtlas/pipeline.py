"""
Runs a complete screening: ingest, candidate derivation, pairing,
classification, hydroclimate attribution and reporting.
"""
from dataclasses import dataclass
from dataclasses import field
from hashlib import sha256
from pathlib import Path
from typing import Dict
from typing import List
from typing import Optional
import logging

import numpy as np

from PshAtlas import ConfigError
from PshAtlas import LayerError
from PshAtlas.GeoData.RasterGrid import RasterGrid
from PshAtlas.GeoData.RasterGrid import read_ascii_grid
from PshAtlas.GeoData.SchemeConfig import RunConfig
from PshAtlas.GeoData.SchemeConfig import SchemeConfig
from PshAtlas.GeoData.SchemeConfig import load_config
from PshAtlas.GeoData.SiteWriter import dump_json
from PshAtlas.GeoData.SiteWriter import write_band_summaries
from PshAtlas.GeoData.SiteWriter import write_candidates
from PshAtlas.GeoData.SiteWriter import write_sites
from PshAtlas.GeoData.VectorLayer import VectorLayer
from PshAtlas.GeoData.VectorLayer import read_vector_layer
from PshAtlas.Hydroclimate.Climate import ClimateStack
from PshAtlas.Hydroclimate.Climate import attach_profile
from PshAtlas.Hydroclimate.Flow import read_flow_series
from PshAtlas.Hydroclimate.Summary import band_summaries
from PshAtlas.Hydrography.Lakes import lake_candidates
from PshAtlas.Hydrography.Rivers import densify_river_points
from PshAtlas.Interfaces import CandidateKind
from PshAtlas.Interfaces import GeometryKind
from PshAtlas.Interfaces import Scheme
from PshAtlas.Interfaces import Tier
from PshAtlas.Interfaces.PshSite import PshSite
from PshAtlas.Interfaces.PshSite import check_site
from PshAtlas.Interfaces.ReservoirCandidate import ReservoirCandidate
from PshAtlas.Screening.ScreeningContext import ScreeningContext
from PshAtlas.Screening.ScreeningContext import classify_sites
from PshAtlas.Siting.Pairing import pair_scheme
from PshAtlas.Terrain.FlatLand import extract_flatlands
from PshAtlas.Terrain.Slope import compute_slope
from PshAtlas.Utils import sha256sum
from PshAtlas.report import SummaryReport
from PshAtlas.report import summarize


LOGGER = logging.getLogger(__name__)

VECTOR_LAYERS = {
    'lakes': GeometryKind.POLYGON,
    'rivers': GeometryKind.POLYLINE,
    'roads': GeometryKind.POLYLINE,
    'planned_substations': GeometryKind.POINT,
    'operational_substations': GeometryKind.POINT,
    'protected_areas': GeometryKind.POLYGON,
}
CLIMATE_LAYERS = {'precipitation': 'precip', 'temperature': 'temp'}
# the layers each scheme derives its candidates from
SCHEME_LAYERS = {
    Scheme.L2L: ('lakes',),
    Scheme.L2F: ('lakes',),
    Scheme.L2R: ('lakes', 'rivers'),
    Scheme.F2R: ('rivers',),
}


@dataclass
class Inputs:
    """
    The ingested layers of a run; absent layers are None.
    """
    dem: RasterGrid
    vectors: Dict[str, Optional[VectorLayer]] = field(default_factory=dict)
    climate: Dict[str, Optional[ClimateStack]] = field(default_factory=dict)
    streamflow: Optional[Dict[int, np.ndarray]] = None
    checksums: Dict[str, str] = field(default_factory=dict)


@dataclass
class CandidateSet:
    """
    The reservoir candidates of a run.
    """
    slope: RasterGrid
    flat_lands: List[ReservoirCandidate]
    lakes: List[ReservoirCandidate]
    river_points: List[ReservoirCandidate]

    def of_kind(self, kind: CandidateKind) -> List[ReservoirCandidate]:
        return {CandidateKind.LAKE: self.lakes,
                CandidateKind.FLAT_LAND: self.flat_lands,
                CandidateKind.RIVER_POINT: self.river_points}[kind]

    def counts(self) -> Dict[str, int]:
        return {str(kind): len(self.of_kind(kind)) for kind in CandidateKind}

    def all(self) -> List[ReservoirCandidate]:
        return self.lakes + self.flat_lands + self.river_points


def checksum(path: Path) -> str:
    """
    SHA-256 of a file, or of the names and digests of a directory's files.

    :raises LayerError: If the path can't be read.
    """
    try:
        if path.is_dir():
            digest = sha256()
            for item in sorted(path.iterdir()):
                if item.is_file():
                    digest.update('{} {}\n'.format(
                        item.name, sha256sum(str(item))).encode())
            return digest.hexdigest()
        return sha256sum(str(path))
    except OSError as error:
        raise LayerError('cannot read ({})'.format(error), str(path))


def load_inputs(run: RunConfig) -> Inputs:
    """
    Reads every configured layer. Climate stacks are only opened here, their
    grids load on first use.

    :raises LayerError: If a layer can't be read or parsed.
    """
    dem = read_ascii_grid(run.layer('dem'))
    inputs = Inputs(dem=dem)
    for name, path in sorted(run.layers.items()):
        inputs.checksums[name] = checksum(path)

    for name, kind in VECTOR_LAYERS.items():
        path = run.layer(name)
        inputs.vectors[name] = (None if path is None
                                else read_vector_layer(path, kind))
    for name, variable in CLIMATE_LAYERS.items():
        path = run.layer(name)
        inputs.climate[name] = (None if path is None
                                else ClimateStack(path, variable))
    if run.layer('streamflow') is not None:
        inputs.streamflow = read_flow_series(run.layer('streamflow'))

    LOGGER.info('loaded %dx%d DEM and layers %s', dem.nrows, dem.ncols,
                ', '.join(sorted(run.layers)))
    return inputs


def load_climate(inputs: Inputs):
    """
    Loads the grids of every configured climate stack, so broken climate
    layers fail before any pairing.

    :raises LayerError: If a stack can't be read or holds no grid.
    """
    for stack in inputs.climate.values():
        if stack is not None:
            stack.refresh()


def derive_candidates(inputs: Inputs, cfg: SchemeConfig) -> CandidateSet:
    """
    Derives flat lands from the DEM and lake and river point candidates from
    the hydrography layers that are present.
    """
    slope = compute_slope(inputs.dem)
    lakes = inputs.vectors.get('lakes')
    rivers = inputs.vectors.get('rivers')
    candidates = CandidateSet(
        slope=slope,
        flat_lands=extract_flatlands(slope, inputs.dem, cfg),
        lakes=[] if lakes is None else lake_candidates(lakes, inputs.dem,
                                                       cfg),
        river_points=([] if rivers is None
                      else densify_river_points(rivers, inputs.dem, cfg)))
    LOGGER.info('candidates: %s', ', '.join(
        '{}={}'.format(kind, count)
        for kind, count in candidates.counts().items()))
    return candidates


def missing_layers(scheme: Scheme, inputs: Inputs) -> List[str]:
    return [name for name in SCHEME_LAYERS[scheme]
            if inputs.vectors.get(name) is None]


def select_sites(run: RunConfig, inputs: Inputs, candidates: CandidateSet,
                 workers: int=1) -> List[PshSite]:
    """
    Pairs all configured schemes whose layers are present and numbers the
    sites from 1 ordered by scheme, then prospective reservoir id.

    :raises InvariantViolation: If a selected site breaks an invariant.
    """
    sites = []
    for scheme in run.schemes:
        missing = missing_layers(scheme, inputs)
        if missing:
            LOGGER.warning('skipped scheme %s reason=layer-missing layers=%s',
                           scheme, ','.join(missing))
            continue
        selected, _ = pair_scheme(scheme,
                                  candidates.of_kind(scheme.prospective_kind),
                                  candidates.of_kind(scheme.second_kind),
                                  run.scheme, workers)
        sites.extend(selected)

    sites.sort(key=lambda site: (site.scheme.order, site.prospective.id))
    return [check_site(site.with_site_id(number), run.scheme)
            for number, site in enumerate(sites, start=1)]


def _profile(site: PshSite, inputs: Inputs):
    try:
        return attach_profile(site, inputs.climate.get('precipitation'),
                              inputs.climate.get('temperature'),
                              inputs.streamflow)
    except ValueError as error:
        LOGGER.warning('site %d reason=climate-coverage %s', site.site_id,
                       error)
        return attach_profile(site, flow=inputs.streamflow)


def write_outputs(out_dir: Path, documents: Dict[str, str]):
    """
    Writes the documents into the output directory, creating it if needed.

    :raises ConfigError: If the directory can't be created or written.
    """
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, text in documents.items():
            (out_dir / name).write_text(text)
    except OSError as error:
        raise ConfigError('cannot write output directory {} ({})'.format(
            out_dir, error))


def run_pipeline(config_path, out_dir, workers: int=1) -> SummaryReport:
    """
    Screens the configured area and writes ``sites.csv``,
    ``sites.geojson``, ``candidates.geojson``, ``bands.csv`` and
    ``summary.json`` into the output directory. The outputs don't depend
    on the number of workers.

    :param config_path: The JSON run configuration.
    :param out_dir:     The output directory, created if needed.
    :param workers:     Number of worker processes for pairing.
    :return:            The SummaryReport.
    :raises ConfigError:        If the configuration is invalid or the
                                output directory isn't writable.
    :raises LayerError:         If a layer can't be read or is invalid.
    :raises InvariantViolation: If a result breaks an invariant.
    """
    run = load_config(config_path)
    inputs = load_inputs(run)
    load_climate(inputs)
    candidates = derive_candidates(inputs, run.scheme)

    sites = select_sites(run, inputs, candidates, workers)
    context = ScreeningContext.from_config(
        run.scheme,
        roads=inputs.vectors['roads'],
        planned_substations=inputs.vectors['planned_substations'],
        operational_substations=inputs.vectors['operational_substations'],
        protected_areas=inputs.vectors['protected_areas'])
    sites = classify_sites(sites, context, run.scheme)
    profiles = [_profile(site, inputs) for site in sites]

    report = summarize(sites, run.schemes)
    bands = band_summaries(zip(sites, profiles), tier=Tier.TECHNICAL)
    table, collection = write_sites(sites, profiles)

    summary = report.to_dict()
    summary.update({
        'config': run.echo(),
        'inputs': inputs.checksums,
        'candidates': candidates.counts(),
        'bands': [{'scheme': str(band.scheme), 'band': str(band.band),
                   'count': band.count, 'mean': band.mean, 'std': band.std}
                  for band in bands]})
    write_outputs(Path(out_dir), {
        'sites.csv': table,
        'sites.geojson': dump_json(collection),
        'candidates.geojson': dump_json(write_candidates(candidates.all())),
        'bands.csv': write_band_summaries(bands),
        'summary.json': dump_json(summary)})

    LOGGER.info('wrote %d sites to %s, technical %.1f%% of theoretical',
                len(sites), out_dir,
                report.technical_percent['all'] or 0.0)
    return report


def validate_inputs(config_path) -> CandidateSet:
    """
    Ingests all layers, loads the climate grids and derives the candidates
    without pairing or writing anything.

    :raises ConfigError: If the configuration is invalid.
    :raises LayerError:  If a layer can't be read or is invalid.
    """
    run = load_config(config_path)
    inputs = load_inputs(run)
    load_climate(inputs)
    candidates = derive_candidates(inputs, run.scheme)
    for scheme in run.schemes:
        missing = missing_layers(scheme, inputs)
        if missing:
            LOGGER.warning('scheme %s would be skipped reason=layer-missing '
                           'layers=%s', scheme, ','.join(missing))
    return candidates

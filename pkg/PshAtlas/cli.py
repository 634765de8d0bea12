"""
The ``psh-atlas`` command line interface.
"""
from pathlib import Path
from typing import List
from typing import Optional
import argparse
import logging
import os

from PshAtlas import ConfigError
from PshAtlas import InvariantViolation
from PshAtlas import LayerError
from PshAtlas import VERSION
from PshAtlas.GeoData.RasterGrid import read_ascii_grid
from PshAtlas.GeoData.RasterGrid import save_ascii_grid
from PshAtlas.Terrain.Slope import compute_slope
from PshAtlas.pipeline import run_pipeline
from PshAtlas.pipeline import validate_inputs


LOGGER = logging.getLogger(__name__)

EXIT_CODES = ((ConfigError, 2), (LayerError, 3), (InvariantViolation, 4))
LOG_FILE = 'psh-atlas.log'
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def default_workers() -> int:
    """
    The worker count from ``PSH_ATLAS_WORKERS``, 1 if unset.

    :raises ConfigError: If the variable isn't an integer.
    """
    value = os.environ.get('PSH_ATLAS_WORKERS', '1')
    try:
        workers = int(value)
    except ValueError:
        raise ConfigError('PSH_ATLAS_WORKERS must be an integer, got '
                          '{!r}'.format(value))
    return workers


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='psh-atlas',
        description='Screens pumped storage hydropower sites from terrain, '
                    'hydrography and infrastructure layers.')
    parser.add_argument('--version', action='version', version=VERSION)
    parser.add_argument(
        '--log-level',
        default=os.environ.get('PSH_ATLAS_LOG_LEVEL', 'INFO').upper(),
        choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'),
        type=str.upper,
        help='verbosity of the log (default: $PSH_ATLAS_LOG_LEVEL or INFO)')
    commands = parser.add_subparsers(dest='command', required=True)

    run = commands.add_parser('run', help='run the full screening')
    run.add_argument('--config', required=True, type=Path,
                     help='JSON run configuration')
    run.add_argument('--out', required=True, type=Path,
                     help='output directory')
    run.add_argument('--workers', type=int, default=None,
                     help='worker processes (default: $PSH_ATLAS_WORKERS '
                          'or 1)')

    slope = commands.add_parser('slope', help='derive a percent slope grid')
    slope.add_argument('dem', type=Path, help='ESRI ASCII elevation grid')
    slope.add_argument('-o', '--output', required=True, type=Path,
                       help='ESRI ASCII slope grid to write')

    validate = commands.add_parser(
        'validate', help='ingest all layers and derive candidates only')
    validate.add_argument('--config', required=True, type=Path,
                          help='JSON run configuration')
    return parser


def _handler(handler: logging.Handler, level: str) -> logging.Handler:
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    return handler


def _log_file(out_dir: Path) -> logging.FileHandler:
    """
    Opens the run log inside the output directory.

    :raises ConfigError: If the directory can't be created or written.
    """
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        return logging.FileHandler(str(out_dir / LOG_FILE), mode='w')
    except OSError as error:
        raise ConfigError('cannot write output directory {} ({})'.format(
            out_dir, error))


def _execute(args: argparse.Namespace):
    if args.command == 'slope':
        try:
            slope = compute_slope(read_ascii_grid(args.dem))
        except ValueError as error:
            raise LayerError(str(error), str(args.dem))
        try:
            save_ascii_grid(slope, args.output)
        except OSError as error:
            raise ConfigError('cannot write {} ({})'.format(args.output,
                                                            error))
        LOGGER.info('wrote slope grid %s', args.output)
    elif args.command == 'validate':
        candidates = validate_inputs(args.config)
        LOGGER.info('configuration %s is valid: %s', args.config,
                    candidates.counts())
    else:
        workers = default_workers() if args.workers is None else args.workers
        if workers < 1:
            raise ConfigError('workers must be at least 1, got {}'.format(
                workers))
        run_pipeline(args.config, args.out, workers)


def main(argv: Optional[List[str]]=None) -> int:
    """
    Runs the command line interface.

    :param argv: The arguments, defaults to ``sys.argv[1:]``.
    :return:     0 on success, 2 on configuration errors, 3 on layer errors
                 and 4 on invariant violations.
    """
    args = build_parser().parse_args(argv)

    package = logging.getLogger('PshAtlas')
    level = package.level
    package.setLevel(args.log_level)
    handlers = [_handler(logging.StreamHandler(), args.log_level)]
    package.addHandler(handlers[0])

    try:
        if args.command == 'run':
            handlers.append(_handler(_log_file(args.out), args.log_level))
            package.addHandler(handlers[-1])
        _execute(args)
    except (ConfigError, LayerError, InvariantViolation) as error:
        code = next(code for kind, code in EXIT_CODES
                    if isinstance(error, kind))
        LOGGER.error('%s: %s', type(error).__name__, error)
        return code
    finally:
        for handler in handlers:
            package.removeHandler(handler)
            handler.close()
        package.setLevel(level)
    return 0

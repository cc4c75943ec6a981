"""Command line: ``sweep``, ``validate`` and ``single``.

Trailing ``key=value`` tokens (dotted keys, e.g. ``grid.n_b=[0.1,1]``) override
the config, as in ``python main.py sweep cfgs/squeezing/cxi-0.1.yaml numerics.threads=8``.
Exit codes: 0 success, 1 configuration or argument error, 2 numerical
failure, 3 I/O error.
"""
import argparse
import logging
import os
import sys

import yaml

from .. import __version__
from ..errors import ConfigError, InvalidArgumentError, NumericalError
from ..utils import generate_run_directory, print_cfg, setup_logger
from .runner import evaluate_point, run_sweep
from .spec import CSV_COLUMNS, validate_config

EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(f'{self.prog}: {message}')


def build_parser():
    parser = _Parser('qdoppler', description='Doppler Fisher information of classical and quantum radar')
    parser.add_argument('--version', action='version', version=f'qdoppler {__version__}')
    commands = parser.add_subparsers(dest='command', required=True)

    sweep = commands.add_parser('sweep', help='run a parameter grid and write results.csv')
    sweep.add_argument('cfg', type=str, help='config file')
    sweep.add_argument('--out', type=str, default=None, help='output folder (auto-named under output.root_dir)')
    sweep.add_argument('--plots', action='store_true', help='write SVG maps of ratio_db')
    sweep.add_argument('--audit', type=float, default=None, help='fraction of rows re-checked by the oracle')
    sweep.add_argument('--threads', type=int, default=None, help='worker processes')
    sweep.add_argument('--no-progress', action='store_true', help='hide the progress bar')

    validate = commands.add_parser('validate', help='resolve a config and echo every value')
    validate.add_argument('cfg', type=str, help='config file')

    single = commands.add_parser('single', help='evaluate one point and print its row')
    single.add_argument('--cfg', type=str, default=None, help='optional config file for the fixed parameters')
    single.add_argument('--eta', type=str, required=True)
    single.add_argument('--nb', type=str, required=True)
    photons = single.add_mutually_exclusive_group()
    photons.add_argument('--cxi', type=str, default=None, help='xi / K')
    photons.add_argument('--ns', type=str, default=None, help='signal photons per pulse')
    single.add_argument('--sigma-p', type=str, default=None, help='e.g. wp/100 or 2e8')
    single.add_argument('--eps', type=str, default=None, help='e.g. 3*sigma_p')
    single.add_argument('--v', type=str, default=None, help='radial speed (m/s)')
    single.add_argument('--omega-c', type=str, default=None, help='carrier (rad/s)')
    return parser


def _sweep(args, opts):
    opts = list(opts)
    if args.audit is not None:
        opts.append(f'numerics.audit={args.audit!r}')
    if args.threads is not None:
        opts.append(f'numerics.threads={args.threads!r}')
    if args.plots:
        opts.append('output.plots=True')
    spec = validate_config(args.cfg, opts)
    cfg = spec.cfg
    exp_name = os.path.splitext(os.path.basename(args.cfg))[0]
    generate_run_directory(cfg, exp_name=exp_name, out_dir=args.out)
    logger = setup_logger(cfg.output.log_path, run_tag=spec.hash[:8])
    print_cfg(cfg)
    logger.info('qdoppler %s, spec %s, %d rows -> %s', __version__, spec.hash, len(spec), cfg.output.run_dir)
    with open(os.path.join(cfg.output.run_dir, 'cfg.yaml'), 'w') as f:
        yaml.safe_dump(cfg.dict(), f, indent=2)
    run_sweep(spec, progress=not args.no_progress)
    return EXIT_OK


def _validate(args, opts):
    spec = validate_config(args.cfg, opts)
    for line in spec.describe():
        print(line)
    return EXIT_OK


def _single(args, opts):
    overrides = [f'grid.eta={args.eta}', f'grid.n_b={args.nb}']
    for key, value in (('grid.c_xi', args.cxi), ('grid.n_s', args.ns), ('grid.sigma_p', args.sigma_p),
                       ('source.eps', args.eps), ('scenario.v', args.v), ('scenario.omega_c', args.omega_c)):
        if value is not None:
            overrides.append(f'{key}={value}')
    spec = validate_config(args.cfg, overrides + list(opts))
    if len(spec) != 1:
        raise ConfigError(f'single needs exactly one grid point, the config resolves to {len(spec)}')
    setup_logger()
    row = evaluate_point(next(spec.points()), spec.settings())
    for key in CSV_COLUMNS + ('wall_time',):
        value = getattr(row, key)
        print(f'{key}: {value:.17g}' if isinstance(value, float) else f'{key}: {value}')
    return EXIT_OK


COMMANDS = dict(sweep=_sweep, validate=_validate, single=_single)


def _report(message):
    logger = logging.getLogger('qdoppler')
    if not logger.handlers:
        logger = setup_logger()
    logger.error(message)


def main(argv=None):
    try:
        args, opts = build_parser().parse_known_args(argv)
        return COMMANDS[args.command](args, opts)
    except ConfigError as e:
        _report('invalid configuration:\n  ' + '\n  '.join(e.errors))
        return EXIT_CONFIG
    except NumericalError as e:
        _report(str(e))
        return EXIT_NUMERICAL
    except InvalidArgumentError as e:
        _report(str(e))
        return EXIT_CONFIG
    except OSError as e:
        _report(f'I/O error: {e}')
        return EXIT_IO


if __name__ == '__main__':
    sys.exit(main())

"""Sweep configuration: loading, validation and the resolved :class:`SweepSpec`."""
import itertools
import logging
import math
import os
from collections import OrderedDict, namedtuple

import numpy as np

from ..errors import ConfigError, InvalidArgumentError
from ..radar import ScenarioParams, SPEED_OF_LIGHT
from ..radar.quantum import DURATION_CONVENTIONS
from ..utils import EasyConfig
from .axes import build_axis
from .frequency import parse_frequency

BASELINE = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'baseline.yaml')
PHOTON_AXES = ('c_xi', 'n_s')
DEFAULT_C_XI = 1.
# keys that do not change the rows written
HASH_EXCLUDE = ('output', 'numerics.threads', 'numerics.audit', 'numerics.seed')

SweepRow = namedtuple('SweepRow', [
    'sigma_p', 'eps', 'c_xi', 'xi', 'eta', 'n_b', 'v', 'mu', 'omega_c',
    'K', 'M_used', 'n_s', 'duration', 'jc', 'jq', 'ratio', 'ratio_db', 'wall_time'])
CSV_COLUMNS = SweepRow._fields[:-1]


def load_config(path=None, opts=None):
    """Baseline, then ``path`` with its parent ``default.yaml`` files, then ``opts``.

    Returns the merged config and the list of unknown keys found in the user part.
    """
    cfg = EasyConfig()
    cfg.load(BASELINE)
    user = EasyConfig()
    if path is not None:
        user.load(path, recursive=True)
    if opts:
        user.update(list(opts))
    errors = unknown_keys(user, cfg)
    if not errors:
        cfg.update(user)
    return cfg, errors


def unknown_keys(user, baseline, prefix=''):
    errors = []
    for key, value in user.items():
        name = prefix + str(key)
        if key not in baseline:
            errors.append(f'{name}: unknown key')
        elif isinstance(baseline[key], dict):
            if not isinstance(value, dict):
                errors.append(f'{name}: must be a mapping, got {value!r}')
            else:
                errors.extend(unknown_keys(value, baseline[key], name + '.'))
    return errors


def spec_hash(cfg):
    configs = cfg.dict()
    for key in HASH_EXCLUDE:
        *parents, leaf = key.split('.')
        node = configs
        for parent in parents:
            node = node.get(parent, {})
        node.pop(leaf, None)
    return EasyConfig(configs).hash()


class _Collector:
    """Runs checks and records ``key: message`` instead of raising."""

    def __init__(self):
        self.errors = []

    def run(self, key, func, *args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (InvalidArgumentError, ConfigError, KeyError, TypeError, ValueError) as e:
            self.errors.append(f'{key}: {e}')
            return None

    def require(self, key, ok, message):
        if not ok:
            self.errors.append(f'{key}: {message}')
        return ok


def _number(value, kind=float):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidArgumentError(f'expected a number, got {value!r}')
    if kind is int:
        if int(value) != value:
            raise InvalidArgumentError(f'expected an integer, got {value!r}')
        return int(value)
    if not math.isfinite(value):
        raise InvalidArgumentError(f'expected a finite number, got {value!r}')
    return float(value)


def _in_range(key, values, check, text, errors):
    if values is None:
        return
    bad = [float(x) for x in np.atleast_1d(values) if not check(x)]
    if bad:
        errors.require(key, False, f'values must be {text}, got {bad}')


class SweepSpec:
    """A fully resolved sweep: fixed parameters, grid axes and numerics.

    Build it with :func:`validate_config` or :meth:`from_config`.
    """

    def __init__(self, cfg, *, v, omega_c, sigma_p, eps, photon_axis, photons, eta, n_b):
        self.cfg = cfg
        self.v = v
        self.omega_c = omega_c
        self.sigma_p = sigma_p
        self.eps = eps
        self.photon_axis = photon_axis
        self.photons = photons
        self.eta = eta
        self.n_b = n_b
        numerics = cfg.numerics
        self.duration_convention = cfg.source.duration_convention
        self.tail_tol = float(numerics.tail_tol)
        self.min_order = int(numerics.min_order)
        self.order = None if numerics.order is None else int(numerics.order)
        self.purity_margin = float(numerics.purity_margin)
        self.direct_max_dim = int(numerics.direct_max_dim)
        self.threads = int(numerics.threads)
        self.seed = int(numerics.seed)
        self.audit = float(numerics.audit)
        self.hash = spec_hash(cfg)

    @classmethod
    def from_config(cls, cfg):
        """Resolve ``cfg``; raises :class:`ConfigError` listing every problem found."""
        errors = _Collector()
        scenario, source, grid, numerics = cfg.scenario, cfg.source, cfg.grid, cfg.numerics

        v = errors.run('scenario.v', _number, scenario.v)
        if v is not None:
            errors.require('scenario.v', abs(v) < SPEED_OF_LIGHT, f'|v| must be below c, got {v}')
        if scenario.wavelength is not None:
            wavelength = errors.run('scenario.wavelength', _number, scenario.wavelength)
            if wavelength is not None and errors.require('scenario.wavelength', wavelength > 0,
                                                         f'must be > 0, got {wavelength}'):
                omega_c = 2. * math.pi * SPEED_OF_LIGHT / wavelength
            else:
                omega_c = None
        else:
            omega_c = errors.run('scenario.omega_c', parse_frequency, scenario.omega_c, {})

        sigma_p = eps = None
        if omega_c is not None:
            refs = dict(wc=omega_c, wp=2. * omega_c)
            sigma_p = errors.run('grid.sigma_p', build_axis, grid.sigma_p,
                                 resolve=lambda x: parse_frequency(x, refs))
            if sigma_p is not None:
                _in_range('grid.sigma_p', sigma_p, lambda x: x > 0, '> 0', errors)
                eps = np.array([errors.run('source.eps', parse_frequency, source.eps, dict(refs, sigma_p=s))
                                for s in sigma_p])
                if not any(e is None for e in eps):
                    eps = eps.astype(float)
                    errors.require('source.eps', not np.any(np.isclose(eps, sigma_p, rtol=1e-12, atol=0.)),
                                   'eps equals sigma_p: separable source, no matched duration')
                else:
                    eps = None

        given = [name for name in PHOTON_AXES if grid[name] is not None]
        photon_axis, photons = 'c_xi', np.array([DEFAULT_C_XI])
        if len(given) > 1:
            errors.require('grid', False, 'set only one of c_xi and n_s')
        elif given:
            photon_axis = given[0]
            photons = errors.run(f'grid.{photon_axis}', build_axis, grid[photon_axis])
            _in_range(f'grid.{photon_axis}', photons, lambda x: x > 0, '> 0', errors)
        eta = errors.run('grid.eta', build_axis, grid.eta)
        _in_range('grid.eta', eta, lambda x: 0 < x <= 1, 'in (0, 1]', errors)
        n_b = errors.run('grid.n_b', build_axis, grid.n_b)
        _in_range('grid.n_b', n_b, lambda x: x >= 0, '>= 0', errors)

        errors.require('source.duration_convention', source.duration_convention in DURATION_CONVENTIONS,
                       f'must be one of {DURATION_CONVENTIONS}, got {source.duration_convention!r}')
        tail_tol = errors.run('numerics.tail_tol', _number, numerics.tail_tol)
        if tail_tol is not None:
            errors.require('numerics.tail_tol', 0 < tail_tol < 1, f'must be in (0, 1), got {tail_tol}')
        for key, low in (('min_order', 1), ('direct_max_dim', 2), ('threads', 1), ('seed', 0)):
            value = errors.run(f'numerics.{key}', _number, numerics[key], int)
            if value is not None:
                errors.require(f'numerics.{key}', value >= low, f'must be >= {low}, got {value}')
        if numerics.order is not None:
            order = errors.run('numerics.order', _number, numerics.order, int)
            if order is not None:
                errors.require('numerics.order', order >= 1, f'must be >= 1, got {order}')
        margin = errors.run('numerics.purity_margin', _number, numerics.purity_margin)
        if margin is not None:
            errors.require('numerics.purity_margin', margin >= 0, f'must be >= 0, got {margin}')
        audit = errors.run('numerics.audit', _number, numerics.audit)
        if audit is not None:
            errors.require('numerics.audit', 0 <= audit <= 1, f'must be in [0, 1], got {audit}')
        errors.require('output.plots', isinstance(cfg.output.plots, bool),
                       f'must be true or false, got {cfg.output.plots!r}')

        if errors.errors:
            raise ConfigError(list(dict.fromkeys(errors.errors)))
        return cls(cfg, v=v, omega_c=omega_c, sigma_p=sigma_p, eps=eps, photon_axis=photon_axis,
                   photons=photons, eta=eta, n_b=n_b)

    @property
    def axes(self):
        return OrderedDict([('sigma_p', self.sigma_p), (self.photon_axis, self.photons),
                            ('eta', self.eta), ('n_b', self.n_b)])

    def __len__(self):
        return int(np.prod([len(values) for values in self.axes.values()]))

    def settings(self):
        """Per-point numerical settings shipped to the workers."""
        return dict(v=self.v, omega_c=self.omega_c, duration_convention=self.duration_convention,
                    tail_tol=self.tail_tol, min_order=self.min_order, order=self.order,
                    purity_margin=self.purity_margin, direct_max_dim=self.direct_max_dim)

    def points(self):
        """Grid points in row order, as plain dicts."""
        for (i, sigma_p), photons, eta, n_b in itertools.product(
                enumerate(self.sigma_p), self.photons, self.eta, self.n_b):
            yield OrderedDict([('sigma_p', float(sigma_p)), ('eps', float(self.eps[i])),
                               (self.photon_axis, float(photons)), ('eta', float(eta)), ('n_b', float(n_b))])

    def scenario(self, eta, n_b):
        return ScenarioParams(self.v, self.omega_c, eta, n_b)

    def describe(self):
        lines = [f'{key}: {value}' for key, value in self.cfg.flatten().items()]
        lines.append(f'resolved.omega_c: {self.omega_c!r}')
        for name, values in self.axes.items():
            lines.append(f'resolved.{name}: {[float(x) for x in values]}')
        lines.append(f'resolved.eps: {[float(x) for x in self.eps]}')
        lines.append(f'resolved.rows: {len(self)}')
        lines.append(f'resolved.hash: {self.hash}')
        return lines


def validate_config(path=None, opts=None):
    """Load, merge and resolve a sweep config.

    Raises:
        ConfigError: with every unknown key and out-of-range value.
    """
    if path is not None and not os.path.exists(path):
        raise ConfigError(f'{path}: no such file')
    cfg, errors = load_config(path, opts)
    if errors:
        raise ConfigError(errors)
    spec = SweepSpec.from_config(cfg)
    logging.getLogger(__name__).debug('resolved %d rows, spec %s', len(spec), spec.hash)
    return spec

import numpy as np
from scipy import constants

from ..errors import InvalidArgumentError

SPEED_OF_LIGHT = constants.c


def doppler_factor(v):
    """``mu = (c - v) / (c + v)`` for radial speed ``v`` (m/s, positive when receding)."""
    return (SPEED_OF_LIGHT - v) / (SPEED_OF_LIGHT + v)


def speed_from_factor(mu):
    return SPEED_OF_LIGHT * (1. - mu) / (1. + mu)


class ScenarioParams:
    """Target speed, carrier and channel (transmissivity, thermal photons)."""

    def __init__(self, v=100., omega_c=1e10, eta=1., n_b=0.):
        errors = []
        if not np.isfinite(v) or abs(v) >= SPEED_OF_LIGHT:
            errors.append(f'v must satisfy |v| < c, got {v}')
        if not np.isfinite(omega_c) or omega_c <= 0:
            errors.append(f'omega_c must be > 0, got {omega_c}')
        if not np.isfinite(eta) or not 0. < eta <= 1.:
            errors.append(f'eta must be in (0, 1], got {eta}')
        if not np.isfinite(n_b) or n_b < 0:
            errors.append(f'n_b must be >= 0, got {n_b}')
        if errors:
            raise InvalidArgumentError('; '.join(errors))
        self.v = float(v)
        self.omega_c = float(omega_c)
        self.eta = float(eta)
        self.n_b = float(n_b)

    @property
    def mu(self):
        return doppler_factor(self.v)

    @classmethod
    def with_mu(cls, mu, omega_c=1e10, eta=1., n_b=0.):
        if not mu > 0:
            raise InvalidArgumentError(f'mu must be > 0, got {mu}')
        return cls(speed_from_factor(mu), omega_c, eta, n_b)

    def replace(self, **kwargs):
        params = dict(v=self.v, omega_c=self.omega_c, eta=self.eta, n_b=self.n_b)
        params.update(kwargs)
        return ScenarioParams(**params)

    def __repr__(self):
        return (f'ScenarioParams(v={self.v:g}, omega_c={self.omega_c:.6g}, '
                f'eta={self.eta:g}, n_b={self.n_b:g})')

"""Normalized Hermite functions and the scaled Hermite-Gauss spectral basis.

    phi_n(y) = (2^n n! sqrt(pi))^-1/2 H_n(y) exp(-y^2 / 2)
    psi_m(omega) = sqrt(s) phi_m(s (omega - omega_0))
"""
import functools
import logging

import numpy as np
from scipy import special

from ..errors import InvalidArgumentError

NARROWBAND_MIN = 10.


def hermite_functions(n_max, y):
    """All of ``phi_0 .. phi_n_max`` at ``y`` by the normalized three-term recurrence.

    Returns an array of shape ``(n_max + 1,) + np.shape(y)``.
    """
    if n_max < 0:
        raise InvalidArgumentError(f'order must be >= 0, got {n_max}')
    y = np.asarray(y, dtype=float)
    out = np.empty((n_max + 1,) + y.shape)
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * y * y)
    if n_max >= 1:
        out[1] = np.sqrt(2.) * y * out[0]
    for n in range(1, n_max):
        out[n + 1] = np.sqrt(2. / (n + 1)) * y * out[n] - np.sqrt(n / (n + 1.)) * out[n - 1]
    return out


def hermite_gauss_eval(n, y):
    """``phi_n(y)``; scalar in, scalar out."""
    value = hermite_functions(int(n), y)[int(n)]
    return float(value) if np.ndim(value) == 0 else value


def hermite_function_derivatives(n_max, y):
    """``phi_n'(y) = sqrt(n/2) phi_{n-1} - sqrt((n+1)/2) phi_{n+1}`` for n <= n_max."""
    phi = hermite_functions(n_max + 1, y)
    out = np.empty((n_max + 1,) + np.shape(y))
    for n in range(n_max + 1):
        out[n] = -np.sqrt((n + 1) / 2.) * phi[n + 1]
        if n:
            out[n] += np.sqrt(n / 2.) * phi[n - 1]
    return out


@functools.lru_cache(maxsize=32)
def gauss_hermite_rule(order):
    """Gauss-Hermite nodes with weights multiplied by ``exp(y^2)``.

    The scaled weights integrate functions that already carry their Gaussian
    envelope: ``int g(y) dy ~ sum_i w_i g(y_i)``. Weights that underflow are 0.
    """
    if order < 1:
        raise InvalidArgumentError(f'quadrature order must be >= 1, got {order}')
    nodes, weights = special.roots_hermite(int(order))
    with np.errstate(divide='ignore'):
        scaled = np.exp(np.log(weights) + nodes * nodes)
    nodes.setflags(write=False)
    scaled.setflags(write=False)
    return nodes, scaled


def default_quad_order(max_order):
    return max(64, 4 * (max_order + 1))


class HermiteGaussBasis:
    """Hermite-Gauss modes ``psi_0 .. psi_M`` centred at ``center`` with time scale ``scale``."""

    def __init__(self, center, scale, max_order, *, warn=True):
        if scale <= 0:
            raise InvalidArgumentError(f'basis scale must be > 0, got {scale}')
        if int(max_order) != max_order or max_order < 0:
            raise InvalidArgumentError(f'max_order must be a non-negative integer, got {max_order}')
        self.center = float(center)
        self.scale = float(scale)
        self.max_order = int(max_order)
        if warn and self.omega0_s < NARROWBAND_MIN:
            logging.getLogger(__name__).warning(
                'basis is not narrowband: center * scale = %.3g < %g', self.omega0_s, NARROWBAND_MIN)

    @property
    def omega0_s(self):
        """The dimensionless group ``omega_0 s``."""
        return self.center * self.scale

    @property
    def size(self):
        return self.max_order + 1

    def y(self, omega):
        return self.scale * (np.asarray(omega, dtype=float) - self.center)

    def psi(self, m, omega):
        return np.sqrt(self.scale) * hermite_functions(m, self.y(omega))[m]

    def psi_all(self, omega):
        return np.sqrt(self.scale) * hermite_functions(self.max_order, self.y(omega))

    def gram_matrix(self, quad_order=None):
        nodes, weights = gauss_hermite_rule(quad_order or default_quad_order(self.max_order))
        phi = hermite_functions(self.max_order, nodes)
        return (phi * weights) @ phi.T

    def with_order(self, max_order):
        return HermiteGaussBasis(self.center, self.scale, max_order, warn=False)

    def rescaled(self, mu):
        """Basis seen after a Doppler rescaling ``omega -> mu omega``."""
        if mu <= 0:
            raise InvalidArgumentError(f'mu must be > 0, got {mu}')
        return HermiteGaussBasis(self.center / mu, self.scale * mu, self.max_order, warn=False)

    def __eq__(self, other):
        return (isinstance(other, HermiteGaussBasis) and self.center == other.center
                and self.scale == other.scale and self.max_order == other.max_order)

    def __hash__(self):
        return hash((self.center, self.scale, self.max_order))

    def __repr__(self):
        return (f'HermiteGaussBasis(center={self.center:.6g}, scale={self.scale:.6g}, '
                f'max_order={self.max_order})')

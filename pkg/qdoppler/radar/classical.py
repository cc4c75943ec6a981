"""Classical Doppler radar: a coherent pulse in a single Gaussian spectral mode."""
import logging

import numpy as np

from ..errors import InvalidArgumentError, InvalidProbeError
from ..gaussian import ModeLayout, qfi_gaussian
from ..spectral import HermiteGaussBasis, gauss_hermite_rule, hermite_functions, hermite_function_derivatives

NARROWBAND_MIN = 10.
DEFAULT_QUAD_ORDER = 16


class CdrProbe:
    """Coherent state ``|alpha>`` in the mode ``f = psi_0`` of width ``delta`` around ``omega_c``.

    ``N_S = alpha^2`` and ``Delta T = 1 / (sqrt(2) delta)``.
    """

    def __init__(self, alpha, omega_c, delta):
        if not np.isfinite(alpha):
            raise InvalidProbeError(f'alpha must be finite, got {alpha}')
        if not omega_c > 0 or not delta > 0:
            raise InvalidProbeError(f'omega_c and delta must be > 0, got {omega_c}, {delta}')
        self.alpha = float(alpha)
        self.omega_c = float(omega_c)
        self.delta = float(delta)
        self.basis = HermiteGaussBasis(self.omega_c, 1. / self.delta, 0, warn=False)

    @classmethod
    def from_duration(cls, n_s, duration, omega_c):
        if n_s < 0 or not duration > 0:
            raise InvalidProbeError(f'need n_s >= 0 and duration > 0, got {n_s}, {duration}')
        return cls(np.sqrt(n_s), omega_c, 1. / (np.sqrt(2.) * duration))

    @property
    def n_s(self):
        return self.alpha ** 2

    @property
    def duration(self):
        return 1. / (np.sqrt(2.) * self.delta)

    def mode(self, omega):
        return self.basis.psi(0, omega)

    def duration_by_quadrature(self, quad_order=DEFAULT_QUAD_ORDER):
        """``sqrt(int f'(omega)^2 d omega)``, the rms time spread of the pulse."""
        y, w = gauss_hermite_rule(quad_order)
        dphi = hermite_function_derivatives(0, y)[0]
        return float(np.sqrt(self.basis.scale ** 2 * np.sum(w * dphi ** 2)))

    def derivative_mode_norm(self, quad_order=DEFAULT_QUAD_ORDER):
        """``N = int (f / 2 + omega f')^2 d omega`` (dimensionless)."""
        y, w = gauss_hermite_rule(quad_order)
        phi = hermite_functions(0, y)[0]
        dphi = hermite_function_derivatives(0, y)[0]
        integrand = (0.5 * phi + (self.basis.omega0_s + y) * dphi) ** 2
        return float(np.sum(w * integrand))

    def __repr__(self):
        return f'CdrProbe(n_s={self.n_s:.6g}, omega_c={self.omega_c:.6g}, duration={self.duration:.6g})'


def jc_exact(probe, scenario, quad_order=DEFAULT_QUAD_ORDER):
    norm = probe.derivative_mode_norm(quad_order)
    return 4. * scenario.eta * probe.n_s * norm / (scenario.mu ** 2 * (2. * scenario.n_b + 1.))


def jc_approx(n_s, duration, scenario):
    """Narrowband classical QFI ``4 omega_c^2 eta N_S dT^2 / (mu^2 (2 N_B + 1))``."""
    if n_s < 0 or duration < 0:
        raise InvalidArgumentError(f'need n_s >= 0 and duration >= 0, got {n_s}, {duration}')
    if scenario.omega_c * duration < NARROWBAND_MIN:
        logging.getLogger(__name__).warning(
            'omega_c * duration = %.3g < %g: narrowband approximation is poor',
            scenario.omega_c * duration, NARROWBAND_MIN)
    return (4. * scenario.omega_c ** 2 * scenario.eta * n_s * duration ** 2
            / (scenario.mu ** 2 * (2. * scenario.n_b + 1.)))


def jc_via_gaussian_machinery(probe, scenario, quad_order=DEFAULT_QUAD_ORDER):
    """Same QFI from moments on the two-mode layout ``{f, derivative mode}``."""
    norm = probe.derivative_mode_norm(quad_order)
    if not norm > 0:
        raise InvalidProbeError('derivative mode has zero norm')
    layout = ModeLayout.canonical(2, idler_indices=())
    cov = (2. * scenario.n_b + 1.) * np.eye(layout.dim)
    mean = np.zeros(layout.dim)
    mean[0] = np.sqrt(scenario.eta) * np.sqrt(2.) * probe.alpha
    d_mean = np.zeros(layout.dim)
    d_mean[2] = np.sqrt(scenario.eta) * np.sqrt(2. * norm) * probe.alpha
    return qfi_gaussian(mean, cov, d_mean, np.zeros_like(cov)) / scenario.mu ** 2

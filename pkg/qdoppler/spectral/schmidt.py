"""Analytic Schmidt decomposition of the double-Gaussian joint spectral amplitude.

    f(wS, wI) = sqrt(2 / (pi sp eps)) exp(-(wS + wI - wp)^2 / (2 sp^2)) exp(-(wS - wI)^2 / (2 eps^2))
              = sum_m r_m psi_m(wS) psi_m(wI)

with Hermite-Gauss modes of scale ``s = sqrt(2 / (sp eps))`` centred at ``wp / 2``.
"""
import math

import numpy as np

from ..errors import InvalidArgumentError
from .hermite import HermiteGaussBasis, gauss_hermite_rule

MIN_ORDER = 4


def _check_bandwidths(sigma_p, eps):
    for name, value in (('sigma_p', sigma_p), ('eps', eps)):
        if not np.isfinite(value) or value <= 0:
            raise InvalidArgumentError(f'{name} must be a positive bandwidth, got {value}')


class SchmidtSpectrum:
    """Schmidt weights ``r_0 .. r_M`` (signed) of the double-Gaussian JSA."""

    def __init__(self, sigma_p, eps, order, tail_tol=None):
        _check_bandwidths(sigma_p, eps)
        self.sigma_p = float(sigma_p)
        self.eps = float(eps)
        self.order = int(order)
        self.tail_tol = tail_tol
        m = np.arange(self.order + 1)
        self.weights = self.r0 * self.ratio ** m
        self.weights.setflags(write=False)

    @property
    def ratio(self):
        """``(sp - eps) / (sp + eps)``; weights alternate in sign when negative."""
        return (self.sigma_p - self.eps) / (self.sigma_p + self.eps)

    @property
    def r0(self):
        return 2. * math.sqrt(self.sigma_p * self.eps) / (self.sigma_p + self.eps)

    @property
    def K(self):
        return (self.sigma_p ** 2 + self.eps ** 2) / (2. * self.sigma_p * self.eps)

    @property
    def M(self):
        return self.order

    @property
    def size(self):
        return self.order + 1

    @property
    def scale(self):
        return math.sqrt(2. / (self.sigma_p * self.eps))

    @property
    def tail_weight(self):
        """Sum of ``r_m^2`` beyond the truncation order."""
        return self.ratio ** (2 * (self.order + 1))

    def truncated(self, order):
        return SchmidtSpectrum(self.sigma_p, self.eps, order, self.tail_tol)

    def basis(self, center, **kwargs):
        return HermiteGaussBasis(center, self.scale, self.order, **kwargs)

    def __repr__(self):
        return (f'SchmidtSpectrum(sigma_p={self.sigma_p:.6g}, eps={self.eps:.6g}, '
                f'K={self.K:.6g}, M={self.order})')


def truncation_order(sigma_p, eps, tail_tol, min_order=MIN_ORDER):
    """Smallest ``M >= min_order`` with ``sum_{m > M} r_m^2 <= tail_tol``."""
    q2 = ((sigma_p - eps) / (sigma_p + eps)) ** 2
    if q2 == 0.:
        return min_order
    order = max(min_order, int(math.ceil(math.log(tail_tol) / math.log(q2))) - 1)
    while order > min_order and q2 ** order <= tail_tol:
        order -= 1
    while q2 ** (order + 1) > tail_tol:
        order += 1
    return order


def schmidt_spectrum(sigma_p, eps, tail_tol=1e-10, min_order=MIN_ORDER):
    _check_bandwidths(sigma_p, eps)
    if not 0. < tail_tol < 1.:
        raise InvalidArgumentError(f'tail_tol must be in (0, 1), got {tail_tol}')
    order = truncation_order(sigma_p, eps, tail_tol, min_order)
    return SchmidtSpectrum(sigma_p, eps, order, tail_tol)


def jsa_eval(sigma_p, eps, omega_p, omega_s, omega_i):
    _check_bandwidths(sigma_p, eps)
    omega_s = np.asarray(omega_s, dtype=float)
    omega_i = np.asarray(omega_i, dtype=float)
    pump = np.exp(-(omega_s + omega_i - omega_p) ** 2 / (2. * sigma_p ** 2))
    phase_matching = np.exp(-(omega_s - omega_i) ** 2 / (2. * eps ** 2))
    return np.sqrt(2. / (np.pi * sigma_p * eps)) * pump * phase_matching


def jsa_marginal_variance(sigma_p, eps):
    """Variance of the signal marginal ``int f^2 d wI``: ``(sp^2 + eps^2) / 8``."""
    return (sigma_p ** 2 + eps ** 2) / 8.


def jsa_marginal(sigma_p, eps, omega_p, omega_s, quad_order=128):
    """Signal marginal ``int f(wS, wI)^2 d wI`` by Gauss-Hermite quadrature over the idler."""
    # f^2 is Gaussian in wI: precision 1/sp^2 + 1/eps^2
    omega_s = np.atleast_1d(np.asarray(omega_s, dtype=float))
    width = 1. / math.sqrt(1. / sigma_p ** 2 + 1. / eps ** 2)
    nodes, weights = gauss_hermite_rule(quad_order)
    out = np.empty_like(omega_s)
    for k, ws in enumerate(omega_s):
        a, b = omega_p - ws, ws
        center = (a / sigma_p ** 2 + b / eps ** 2) * width ** 2
        wi = center + width * nodes
        out[k] = width * np.sum(weights * jsa_eval(sigma_p, eps, omega_p, ws, wi) ** 2)
    return out

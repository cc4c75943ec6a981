"""Quantum Fisher information of a one-parameter Gaussian family.

    J = 2 dm^T cov^-1 dm + 1/2 vec(dcov)^T (cov (x) cov - Omega (x) Omega)^-1 vec(dcov)

The covariance term is the solution ``X`` of ``cov X cov - Omega X Omega^T = dcov``
contracted with ``dcov``. Small systems solve the Kronecker-product system
directly; larger ones solve the equivalent Stein equation

    W - G W G^T = dcov,  G = Omega cov^-1,  X = cov^-1 W cov^-1

without ever forming the (2M)^2 x (2M)^2 matrix.
"""
import logging

import numpy as np
from scipy import linalg

from ..errors import InvalidArgumentError, PureStateError
from .layout import make_symplectic_form
from .symplectic import symmetrized, symplectic_eigenvalues

PURITY_TOL = 1e-9
DIRECT_MAX_DIM = 32


def _cho_factor(cov):
    try:
        return linalg.cho_factor(cov, lower=True)
    except linalg.LinAlgError as e:
        raise InvalidArgumentError('cov is not positive definite') from e


def covariance_term_direct(cov, d_cov, omega=None):
    dim = cov.shape[0]
    if omega is None:
        omega = make_symplectic_form(dim // 2)
    system = np.kron(cov, cov) - np.kron(omega, omega)
    rhs = d_cov.reshape(-1)
    try:
        x = linalg.solve(system, rhs, assume_a='pos')
    except linalg.LinAlgError as e:
        raise PureStateError('cov (x) cov - Omega (x) Omega is singular') from e
    return 0.5 * float(rhs @ x)


def covariance_term_stein(cov, d_cov, omega=None, cho=None):
    dim = cov.shape[0]
    if omega is None:
        omega = make_symplectic_form(dim // 2)
    if cho is None:
        cho = _cho_factor(cov)
    # G = Omega cov^-1 ; cov symmetric so cov^-1 Omega^T = (Omega cov^-1)^T
    g = linalg.cho_solve(cho, omega.T).T
    w = linalg.solve_discrete_lyapunov(g, d_cov)
    x = linalg.cho_solve(cho, linalg.cho_solve(cho, w).T).T
    return 0.5 * float(np.sum(d_cov * x))


def qfi_gaussian(mean, cov, d_mean, d_cov, *, direct_max_dim=DIRECT_MAX_DIM, purity_tol=PURITY_TOL):
    """QFI from moments and their parameter derivatives.

    Args:
        mean, cov: moments of the state (vacuum covariance = identity).
        d_mean, d_cov: derivatives with respect to the parameter.
        direct_max_dim: largest phase-space dimension solved through the
            Kronecker-product system; above it the Stein form is used.
        purity_tol: a nonzero ``d_cov`` needs every symplectic eigenvalue
            above ``1 + purity_tol``.

    Raises:
        InvalidArgumentError: shape mismatch, asymmetric inputs, non-positive cov.
        PureStateError: nonzero ``d_cov`` on a state at the pure-state boundary.
    """
    cov = symmetrized(cov, 'cov')
    d_cov = symmetrized(d_cov, 'd_cov')
    mean = np.asarray(mean, dtype=float).reshape(-1)
    d_mean = np.asarray(d_mean, dtype=float).reshape(-1)
    dim = cov.shape[0]
    if d_cov.shape[0] != dim or mean.shape[0] != dim or d_mean.shape[0] != dim:
        raise InvalidArgumentError(
            f'dimension mismatch: cov {dim}, d_cov {d_cov.shape[0]}, mean {mean.shape[0]}, d_mean {d_mean.shape[0]}')

    cho = _cho_factor(cov)
    first = 2. * float(d_mean @ linalg.cho_solve(cho, d_mean))
    if not np.any(d_cov):
        return max(first, 0.)

    nu = symplectic_eigenvalues(cov)
    if nu[-1] <= 1. + purity_tol:
        raise PureStateError(
            f'smallest symplectic eigenvalue {nu[-1]:.12g} is within {purity_tol:g} of the pure-state boundary')

    omega = make_symplectic_form(dim // 2)
    if dim <= direct_max_dim:
        second = covariance_term_direct(cov, d_cov, omega)
    else:
        second = covariance_term_stein(cov, d_cov, omega, cho)
    logging.getLogger(__name__).debug('qfi dim=%d first=%.6g second=%.6g', dim, first, second)
    return max(first + second, 0.)

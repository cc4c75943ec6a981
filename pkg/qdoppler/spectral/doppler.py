"""Doppler reshuffling of a Hermite-Gauss basis and its generator at mu = 1.

A reflection off a target moving at radial speed ``v`` rescales frequencies,
``omega -> mu omega`` with ``mu = (c - v) / (c + v)``. In a discrete basis this
is the matrix

    U_kj(mu) = mu^1/2 int chi_k(omega) psi_j(mu omega) d omega

with the global mirror phase dropped so that ``U(1) = I``. Its derivative at
``mu = 1`` is ``D_kj = int psi_k (psi_j / 2 + omega psi_j') d omega``.
"""
import numpy as np

from ..errors import ConsistencyError, InvalidArgumentError
from .hermite import (default_quad_order, gauss_hermite_rule, hermite_functions)

ANTISYMMETRY_TOL = 1e-10


def doppler_unitary_matrix(basis, mu, quad_order=None, receiver=None):
    """Overlap matrix of the rescaled source modes on the receiver modes.

    Args:
        basis: source :class:`HermiteGaussBasis` (columns).
        mu: Doppler factor, > 0.
        quad_order: Gauss-Hermite nodes; defaults to ``max(64, 4 (M + 1))``.
        receiver: basis of the rows; defaults to ``basis``.
    """
    if not np.isfinite(mu) or mu <= 0:
        raise InvalidArgumentError(f'mu must be > 0, got {mu}')
    receiver = basis if receiver is None else receiver
    quad_order = quad_order or default_quad_order(max(basis.max_order, receiver.max_order))
    y, w = gauss_hermite_rule(quad_order)
    ratio = mu * basis.scale / receiver.scale
    z = basis.scale * (mu * receiver.center - basis.center) + ratio * y
    rows = hermite_functions(receiver.max_order, y)
    cols = hermite_functions(basis.max_order, z)
    return np.sqrt(ratio) * (rows * w) @ cols.T


class DopplerGenerator:
    """``D = dU/dmu`` at ``mu = 1`` for a given basis."""

    def __init__(self, basis, matrix):
        matrix = np.array(matrix, dtype=float)
        if matrix.shape != (basis.size, basis.size):
            raise InvalidArgumentError(f'generator must be {basis.size}x{basis.size}, got {matrix.shape}')
        matrix.setflags(write=False)
        self.basis = basis
        self.matrix = matrix

    @property
    def D(self):
        return self.matrix

    def antisymmetry_error(self):
        return float(np.max(np.abs(self.matrix + self.matrix.T))) if self.matrix.size else 0.

    def validate(self, tol=ANTISYMMETRY_TOL):
        err = self.antisymmetry_error()
        if not np.isfinite(err) or err > tol:
            raise ConsistencyError(f'Doppler generator is not antisymmetric (max |D + D^T| = {err:.3e})')
        return self

    def embedded(self):
        return embed_quadratures(self.matrix)

    def __repr__(self):
        return f'DopplerGenerator({self.basis!r})'


def generator_closed_form(omega0_s, size):
    """Ladder-relation form of ``D`` on ``size`` modes.

    Nearest neighbours scale with ``omega0_s``; next-nearest are O(1).
    """
    d = np.zeros((size, size))
    for j in range(size):
        if j >= 1:
            d[j - 1, j] = omega0_s * np.sqrt(j / 2.)
        if j + 1 < size:
            d[j + 1, j] = -omega0_s * np.sqrt((j + 1) / 2.)
        if j >= 2:
            d[j - 2, j] = 0.5 * np.sqrt(j * (j - 1.))
        if j + 2 < size:
            d[j + 2, j] = -0.5 * np.sqrt((j + 1.) * (j + 2.))
    return d


def doppler_generator(basis, padding=2):
    """Closed-form generator built on ``M + padding`` modes, cropped to the basis."""
    if padding < 0:
        raise InvalidArgumentError(f'padding must be >= 0, got {padding}')
    full = generator_closed_form(basis.omega0_s, basis.size + padding)
    return DopplerGenerator(basis, full[:basis.size, :basis.size])


def embed_quadratures(matrix):
    """Lift a real mode matrix to interleaved ``[Q, P]`` quadratures: ``A (x) I_2``."""
    return np.kron(np.asarray(matrix, dtype=float), np.eye(2))

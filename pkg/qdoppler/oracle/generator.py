import numpy as np

from ..spectral import gauss_hermite_rule, hermite_function_derivatives, hermite_functions


def _quad_order(basis, top, quad_order):
    return quad_order or max(64, 4 * (top + 2))


def generator_by_quadrature(basis, k, j, quad_order=None):
    """``D_kj = int phi_k (phi_j / 2 + (omega0 s + y) phi_j') dy`` by Gauss-Hermite quadrature."""
    y, w = gauss_hermite_rule(_quad_order(basis, max(k, j), quad_order))
    phi_k = hermite_functions(k, y)[k]
    phi_j = hermite_functions(j, y)[j]
    dphi_j = hermite_function_derivatives(j, y)[j]
    return float(np.sum(w * phi_k * (0.5 * phi_j + (basis.omega0_s + y) * dphi_j)))


def generator_matrix_by_quadrature(basis, quad_order=None):
    """Every element of ``D`` for the basis, without assuming antisymmetry."""
    y, w = gauss_hermite_rule(_quad_order(basis, basis.max_order, quad_order))
    phi = hermite_functions(basis.max_order, y)
    dphi = hermite_function_derivatives(basis.max_order, y)
    columns = 0.5 * phi + (basis.omega0_s + y) * dphi
    return (phi * w) @ columns.T

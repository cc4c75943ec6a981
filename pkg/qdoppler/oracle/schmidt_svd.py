import numpy as np
from scipy import special

from ..errors import InvalidGridError
from ..spectral import jsa_eval, jsa_marginal_variance

MIN_GRID = 256
MAX_BOUNDARY_MASS = 1e-12


def boundary_mass(span):
    """Marginal probability outside ``+- span`` standard deviations."""
    return float(special.erfc(span / np.sqrt(2.)))


def schmidt_by_svd(sigma_p, eps, omega_p, grid_n=512, span=10.):
    """Singular values of the sampled JSA, scaled by the cell so they estimate ``|r_m|``.

    The square grid is centred at ``omega_p / 2`` with half-width ``span``
    standard deviations of the signal marginal.
    """
    if grid_n < MIN_GRID:
        raise InvalidGridError(f'grid_n must be >= {MIN_GRID}, got {grid_n}')
    mass = boundary_mass(span)
    if mass > MAX_BOUNDARY_MASS:
        raise InvalidGridError(f'span {span} leaves marginal mass {mass:.3e} > {MAX_BOUNDARY_MASS:g} outside the grid')
    width = span * np.sqrt(jsa_marginal_variance(sigma_p, eps))
    offsets, cell = np.linspace(-width, width, grid_n, retstep=True)
    omega = 0.5 * omega_p + offsets
    f = jsa_eval(sigma_p, eps, omega_p, omega[:, None], omega[None, :])
    return np.linalg.svd(f * cell, compute_uv=False)

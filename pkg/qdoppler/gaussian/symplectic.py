import numpy as np
from scipy import linalg
from scipy.stats import unitary_group

from ..errors import InvalidArgumentError
from .layout import make_symplectic_form

SYMMETRY_TOL = 1e-10
PHYSICALITY_TOL = 1e-10


def symmetrized(matrix, name='matrix', tol=SYMMETRY_TOL):
    """Return ``(A + A^T) / 2`` after checking ``A`` is square and symmetric to ``tol``."""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidArgumentError(f'{name} must be a square matrix, got shape {matrix.shape}')
    if matrix.shape[0] % 2:
        raise InvalidArgumentError(f'{name} must have even dimension, got {matrix.shape[0]}')
    if not np.all(np.isfinite(matrix)):
        raise InvalidArgumentError(f'{name} has non-finite entries')
    asym = np.max(np.abs(matrix - matrix.T)) if matrix.size else 0.
    if asym > tol:
        raise InvalidArgumentError(f'{name} is not symmetric (max asymmetry {asym:.3e})')
    return 0.5 * (matrix + matrix.T)


def physicality_gap(cov):
    """Smallest eigenvalue of ``cov + i Omega``; negative means unphysical."""
    omega = make_symplectic_form(cov.shape[0] // 2)
    return float(np.linalg.eigvalsh(cov + 1j * omega)[0])


def is_physical(cov, tol=PHYSICALITY_TOL):
    # absolute floor, loosened for covariances with large photon numbers
    scale = max(1., float(np.max(np.abs(cov))))
    return physicality_gap(cov) >= -max(tol, 1e-14 * scale)


def symplectic_eigenvalues(cov):
    """Symplectic spectrum of a covariance, descending, one value per mode.

    Uses the Hermitian form ``L^T (i Omega) L`` with ``cov = L L^T``, which
    shares its spectrum ``{+nu, -nu}`` with ``i Omega cov``.
    """
    cov = symmetrized(cov, 'cov')
    n = cov.shape[0] // 2
    try:
        chol = linalg.cholesky(cov, lower=True)
    except linalg.LinAlgError as e:
        raise InvalidArgumentError('cov is not positive definite') from e
    omega = make_symplectic_form(n)
    vals = np.linalg.eigvalsh(1j * (chol.T @ omega @ chol))
    return np.sort(np.abs(vals[n:]))[::-1]


def pair_symplectic_eigenvalues(a, b, c):
    """Closed-form spectrum of ``[[a I, c Z], [c Z, b I]]`` with ``Z = diag(1, -1)``.

    Returns ``(nu_plus, nu_minus)``; ``nu_minus`` is computed through the
    determinant so that it stays accurate when ``a`` and ``b`` are large.
    """
    a, b, c = float(a), float(b), abs(float(c))
    root_ab = np.sqrt(a * b)
    det_sqrt = a * b - c * c
    # a + b - 2c without cancellation
    lower = (np.sqrt(a) - np.sqrt(b)) ** 2 + 2. * det_sqrt / (root_ab + c) if root_ab + c > 0 else a + b
    radius = np.sqrt(max(lower, 0.) * (a + b + 2. * c))
    nu_plus = 0.5 * (radius + abs(a - b))
    nu_minus = det_sqrt / nu_plus if nu_plus > 0 else 0.
    return nu_plus, nu_minus


def tmsv_block(n_photons, sign=1.):
    """4x4 covariance of a two-mode squeezed vacuum with ``n_photons`` per arm."""
    s = 2. * n_photons + 1.
    c = np.copysign(2. * np.sqrt(n_photons * (n_photons + 1.)), sign)
    z = np.diag([1., -1.])
    return np.block([[s * np.eye(2), c * z], [c * z, s * np.eye(2)]])


def passive_symplectic(unitary):
    """Real interleaved representation of a mode unitary ``a_j -> U_jk a_k``."""
    unitary = np.asarray(unitary)
    n = unitary.shape[0]
    out = np.empty((2 * n, 2 * n))
    out[0::2, 0::2] = unitary.real
    out[0::2, 1::2] = -unitary.imag
    out[1::2, 0::2] = unitary.imag
    out[1::2, 1::2] = unitary.real
    return out


def random_passive_symplectic(n, rng=None):
    """Haar-random symplectic-orthogonal matrix on ``n`` modes."""
    if n == 1:
        phase = np.exp(2j * np.pi * (rng.random() if rng is not None else np.random.random()))
        return passive_symplectic(np.array([[phase]]))
    return passive_symplectic(unitary_group.rvs(n, random_state=rng))


def is_symplectic(matrix, tol=1e-10):
    omega = make_symplectic_form(matrix.shape[0] // 2)
    return np.max(np.abs(matrix @ omega @ matrix.T - omega)) <= tol

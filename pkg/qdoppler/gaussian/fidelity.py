import numpy as np

from ..errors import InvalidArgumentError
from .layout import make_symplectic_form
from .symplectic import is_physical


def gaussian_fidelity(a, b) -> float:
    """Uhlmann (root) fidelity ``Tr sqrt(sqrt(rho_a) rho_b sqrt(rho_a))`` of two Gaussian states.

    Evaluated in the ``V = cov / 2`` convention through

        F = F_tot / det(V_a + V_b)^(1/4) * exp(-1/4 d^T (V_a + V_b)^-1 d)
        V_aux = Omega^T (V_a + V_b)^-1 (Omega / 4 + V_b Omega V_a)
        F_tot^4 = prod_e 2 e (1 + sqrt(1 + 1 / (4 e^2)))

    with ``e`` running over the eigenvalues of ``V_aux Omega``. Everything is
    accumulated in log space.
    """
    if a.layout != b.layout:
        raise InvalidArgumentError(f'layouts differ: {a.layout} vs {b.layout}')
    for name, state in (('a', a), ('b', b)):
        if not is_physical(state.cov):
            raise InvalidArgumentError(f'state {name} is unphysical')
    va = 0.5 * a.cov
    vb = 0.5 * b.cov
    delta = b.mean - a.mean
    omega = make_symplectic_form(a.dim // 2)

    vsum = va + vb
    sign, logdet_sum = np.linalg.slogdet(vsum)
    if sign <= 0:
        raise InvalidArgumentError('cov_a + cov_b is not positive definite')
    exponent = -0.25 * float(delta @ np.linalg.solve(vsum, delta))
    if np.array_equal(a.cov, b.cov):
        # equal covariances: only the displacement contributes
        return float(np.exp(exponent))
    v_aux = omega.T @ np.linalg.solve(vsum, 0.25 * omega + vb @ omega @ va)
    e = np.linalg.eigvals(v_aux @ omega).astype(complex)
    factors = 2. * e * (1. + np.sqrt(1. + 1. / (4. * e * e)))
    log_ftot4 = float(np.sum(np.log(factors)).real)

    log_f = 0.25 * log_ftot4 - 0.25 * logdet_sum + exponent
    return float(min(np.exp(log_f), 1.))

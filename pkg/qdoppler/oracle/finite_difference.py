"""Fidelity-based finite-difference QFI.

For a smooth family ``rho(mu)`` the root fidelity of two neighbours obeys

    1 - F(rho(mu0 - h/2), rho(mu0 + h/2)) = J(mu0) h^2 / 8 + O(h^4)

with only even powers of ``h``. Estimates ``8 (1 - F) / h^2`` on halving
steps are Richardson-extrapolated to ``h -> 0``.
"""
import math
from collections import namedtuple

import numpy as np

from ..errors import InvalidArgumentError, MixednessError, OracleFailure
from ..gaussian import gaussian_fidelity

MIXEDNESS_MARGIN = 1e-6

FdResult = namedtuple('FdResult', ['value', 'error', 'estimates', 'steps'])


class FdConfig:
    """Step, Richardson depth and convergence tolerance of the oracle.

    Args:
        step: largest step ``h`` in the parameter.
        levels: number of halvings; the ladder has ``levels + 1`` rungs.
        tolerance: relative agreement required between the last two
            extrapolated values.
        atol: absolute floor added to the tolerance (families with J = 0).
    """

    def __init__(self, step=1e-4, levels=2, tolerance=1e-4, atol=1e-10):
        if not step > 0:
            raise InvalidArgumentError(f'step must be > 0, got {step}')
        if int(levels) != levels or levels < 1:
            raise InvalidArgumentError(f'levels must be an integer >= 1, got {levels}')
        if not tolerance > 0:
            raise InvalidArgumentError(f'tolerance must be > 0, got {tolerance}')
        self.step = float(step)
        self.levels = int(levels)
        self.tolerance = float(tolerance)
        self.atol = float(atol)

    @classmethod
    def for_information(cls, expected, target_infidelity=1e-6, max_step=1e-2, levels=2, **kwargs):
        """Choose ``step`` so the finest rung sees about ``target_infidelity``."""
        finest = math.sqrt(8. * target_infidelity / max(expected, 1e-300))
        step = min(finest * 2 ** levels, max_step)
        return cls(step=step, levels=levels, **kwargs)

    @property
    def finest_step(self):
        return self.step / 2 ** self.levels

    def steps(self):
        return [self.step / 2 ** k for k in range(self.levels + 1)]

    def __repr__(self):
        return f'FdConfig(step={self.step:g}, levels={self.levels}, tolerance={self.tolerance:g})'


def require_mixed(state, margin=MIXEDNESS_MARGIN):
    nu = state.symplectic_eigenvalues()
    if nu[-1] < 1. + margin:
        raise MixednessError(
            f'oracle refuses near-pure state: smallest symplectic eigenvalue {nu[-1]:.12g} < 1 + {margin:g}')
    return state


def richardson(estimates):
    """Triangular Richardson table for even-power error series; returns the diagonal."""
    table = [[float(e)] for e in estimates]
    for k in range(1, len(estimates)):
        for j in range(1, k + 1):
            factor = 4. ** j
            prev = table[k][j - 1]
            table[k].append(prev + (prev - table[k - 1][j - 1]) / (factor - 1.))
    return [row[-1] for row in table]


def qfi_finite_difference(state_at, mu0, cfg=None, *, mixedness_margin=MIXEDNESS_MARGIN):
    """Finite-difference QFI of ``state_at`` at ``mu0``.

    Families whose covariance depends on the parameter must stay at least
    ``mixedness_margin`` away from purity; displacement-only families are
    exempt.

    Returns:
        FdResult: extrapolated value, ladder error estimate, the diagonal of
        the Richardson table and the steps used.

    Raises:
        MixednessError: covariance-varying family on a near-pure state.
        OracleFailure: the ladder does not converge to ``cfg.tolerance``.
    """
    cfg = cfg or FdConfig()
    steps = cfg.steps()
    raw = []
    for h in steps:
        lo, hi = state_at(mu0 - 0.5 * h), state_at(mu0 + 0.5 * h)
        if not np.array_equal(lo.cov, hi.cov):
            require_mixed(lo, mixedness_margin)
            require_mixed(hi, mixedness_margin)
        raw.append(8. * (1. - gaussian_fidelity(lo, hi)) / h ** 2)
    diagonal = richardson(raw)
    value = diagonal[-1]
    error = abs(diagonal[-1] - diagonal[-2])
    if not np.isfinite(value) or error > cfg.tolerance * abs(value) + cfg.atol:
        raise OracleFailure(
            f'finite-difference ladder did not converge at mu0={mu0:.12g}: '
            f'estimates {["%.10g" % e for e in diagonal]} ({cfg!r})')
    return FdResult(max(value, 0.), error, tuple(diagonal), tuple(steps))

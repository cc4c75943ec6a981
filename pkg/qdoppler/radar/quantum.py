"""Quantum Doppler radar: SPDC signal-idler pairs in Schmidt modes.

Each Schmidt pair ``m`` is a two-mode squeezed vacuum with ``N_m = sinh^2(xi r_m)``.
The signal crosses the lossy thermal channel and picks up the Doppler
rescaling; idlers are stored without loss or noise.
"""
import logging
from collections import namedtuple

import numpy as np
from scipy import optimize

from ..errors import ConsistencyError, InvalidArgumentError, InvalidProbeError
from ..gaussian import (GaussianChannel, GaussianState, ModeLabel, ModeLayout, apply_channel,
                        pair_symplectic_eigenvalues, qfi_gaussian)
from ..gaussian.qfi import DIRECT_MAX_DIM
from ..spectral import (DopplerGenerator, doppler_generator, embed_quadratures, gauss_hermite_rule,
                        hermite_function_derivatives)

DURATION_CONVENTIONS = ('flux', 'printed')
PURITY_MARGIN = 1e-7

Received = namedtuple('Received', ['state', 'd_cov'])


class QdrProbe:
    """SPDC probe over the Schmidt modes of ``spectrum`` with squeezing ``xi``."""

    def __init__(self, spectrum, xi, omega_c, duration_convention='flux'):
        if not np.isfinite(xi) or xi <= 0:
            raise InvalidProbeError(f'xi must be > 0, got {xi}')
        if duration_convention not in DURATION_CONVENTIONS:
            raise InvalidArgumentError(
                f'duration_convention must be one of {DURATION_CONVENTIONS}, got {duration_convention!r}')
        self.spectrum = spectrum
        self.xi = float(xi)
        self.omega_c = float(omega_c)
        self.duration_convention = duration_convention
        squeezing = self.xi * spectrum.weights
        self.n_modes = np.sinh(squeezing) ** 2
        self.variances = np.cosh(2. * squeezing)
        # signed: follows the sign of r_m
        self.correlations = np.sinh(2. * squeezing)
        for array in (self.n_modes, self.variances, self.correlations):
            array.setflags(write=False)

    @property
    def n_s(self):
        return float(np.sum(self.n_modes))

    @property
    def K(self):
        return self.spectrum.K

    @property
    def order(self):
        return self.spectrum.order

    @property
    def basis(self):
        return self.spectrum.basis(self.omega_c)

    def duration_squared(self, convention=None):
        convention = convention or self.duration_convention
        m = np.arange(self.spectrum.size)
        offset = 0.5 if convention == 'flux' else 0.
        return self.spectrum.scale ** 2 * float(np.sum((m + offset) * self.n_modes)) / self.n_s

    @property
    def duration(self):
        return float(np.sqrt(self.duration_squared()))

    def duration_by_quadrature(self, quad_order=None):
        """rms width of the mean photon flux, mode by mode through ``int psi_m'^2``."""
        quad_order = quad_order or max(64, 2 * self.spectrum.size + 4)
        y, w = gauss_hermite_rule(quad_order)
        dphi = hermite_function_derivatives(self.spectrum.order, y)
        spread = self.spectrum.scale ** 2 * (dphi ** 2 @ w)
        return float(np.sqrt(np.sum(self.n_modes * spread) / self.n_s))

    def transmitted_state(self):
        """Pure multimode state, canonical layout (signals then idlers)."""
        size = self.spectrum.size
        layout = ModeLayout.canonical(size)
        cov = np.eye(layout.dim)
        for m in range(size):
            s_idx = layout.quadrature_indices([('signal', m)])
            i_idx = layout.quadrature_indices([('idler', m)])
            cov[np.ix_(s_idx, s_idx)] = self.variances[m] * np.eye(2)
            cov[np.ix_(i_idx, i_idx)] = self.variances[m] * np.eye(2)
            cross = self.correlations[m] * np.diag([1., -1.])
            cov[np.ix_(s_idx, i_idx)] = cross
            cov[np.ix_(i_idx, s_idx)] = cross
        return GaussianState(layout, np.zeros(layout.dim), cov, check=False)

    def __repr__(self):
        return f'QdrProbe(xi={self.xi:.6g}, n_s={self.n_s:.6g}, K={self.K:.6g}, M={self.order})'


def xi_for_photons(spectrum, n_s):
    """Squeezing giving ``sum_m sinh^2(xi r_m) = n_s``."""
    if not n_s > 0:
        raise InvalidArgumentError(f'n_s must be > 0, got {n_s}')
    weights = np.abs(spectrum.weights)

    def excess(xi):
        return float(np.sum(np.sinh(xi * weights) ** 2)) - n_s

    upper = 1.
    while excess(upper) < 0:
        upper *= 2.
    return optimize.brentq(excess, 0., upper, xtol=1e-14, rtol=1e-14)


def pruned_pairs(probe, scenario, purity_margin=PURITY_MARGIN):
    """Schmidt pairs whose idler is traced out before the QFI.

    An idler is dropped when it is uncorrelated, or when the received pair
    sits within ``purity_margin`` of the pure-state boundary under thermal noise
    (near-empty pairs). Pure-loss channels (``N_B = 0``) keep every correlated pair.
    """
    eta, n_b = scenario.eta, scenario.n_b
    pruned = []
    for m in range(probe.spectrum.size):
        n = probe.n_modes[m]
        cross = np.sqrt(eta) * probe.correlations[m]
        if cross == 0.:
            pruned.append(m)
            continue
        a = 2. * eta * n + 2. * n_b + 1.
        _, nu_minus = pair_symplectic_eigenvalues(a, probe.variances[m], cross)
        if n_b > 0 and nu_minus - 1. < purity_margin:
            pruned.append(m)
    return pruned


def _as_generator(generator, basis):
    if generator is None:
        generator = doppler_generator(basis)
    elif not isinstance(generator, DopplerGenerator):
        generator = DopplerGenerator(basis, generator)
    if generator.matrix.shape != (basis.size, basis.size):
        raise ConsistencyError(
            f'generator shape {generator.matrix.shape} does not match {basis.size} Schmidt modes')
    return generator.validate()


def build_qdr_received(probe, scenario, *, generator=None, purity_margin=PURITY_MARGIN):
    """Received covariance at ``mu = 1`` and its mu-derivative.

    Returns ``(state, d_cov)`` in canonical layout: every signal mode, then
    the idlers that survive :func:`pruned_pairs`.

    Raises:
        ConsistencyError: the generator is not antisymmetric.
    """
    size = probe.spectrum.size
    generator = _as_generator(generator, probe.basis)

    transmitted = probe.transmitted_state()
    signals = transmitted.layout.roles('signal')
    channel = GaussianChannel.thermal_loss(size, scenario.eta, scenario.n_b)
    received = apply_channel(transmitted, channel.embed(transmitted.layout, signals))

    pruned = set(pruned_pairs(probe, scenario, purity_margin))
    if pruned:
        logging.getLogger(__name__).debug('tracing out idlers %s', sorted(pruned))
    kept = signals + [ModeLabel('idler', m) for m in range(size) if m not in pruned]
    received = received.reduced(kept)

    # dS/dmu acts on signal quadratures only
    s_dot = np.zeros((received.dim, received.dim))
    s_dot[:2 * size, :2 * size] = embed_quadratures(generator.matrix)
    d_cov = s_dot @ received.cov + received.cov @ s_dot.T
    return Received(received, 0.5 * (d_cov + d_cov.T))


def jq(probe, scenario, *, generator=None, purity_margin=PURITY_MARGIN, direct_max_dim=DIRECT_MAX_DIM):
    """QFI of the received SPDC state, scaled by ``1 / mu^2``."""
    state, d_cov = build_qdr_received(probe, scenario, generator=generator, purity_margin=purity_margin)
    zeros = np.zeros(state.dim)
    value = qfi_gaussian(zeros, state.cov, zeros, d_cov, direct_max_dim=direct_max_dim)
    return value / scenario.mu ** 2

"""Received-state families built only from the Doppler overlap matrix and the channel action.

These never touch the closed-form generator or the compact derivative of
the covariance, so agreement with the analytic pipeline is a real check.
"""
import logging
from collections import namedtuple

import numpy as np

from ..gaussian import GaussianChannel, GaussianState, ModeLabel, apply_channel
from ..radar import jq, pruned_pairs
from ..spectral import HermiteGaussBasis, doppler_unitary_matrix, embed_quadratures
from .finite_difference import FdConfig, qfi_finite_difference

AUDIT_PURITY_MARGIN = 1e-5
AUDIT_RTOL = 1e-4
MIN_INFIDELITY = 1e-10
# largest step in units of mu / omega0_s
AUDIT_MAX_STEP = 0.1
FAINT_MAX_STEP = 0.5
FAINT_LEVELS = 3
FAINT_TARGET_INFIDELITY = 1e-8
CDR_RECEIVER_ORDER = 6

AuditResult = namedtuple('AuditResult', ['pipeline', 'oracle', 'rel_error', 'passed', 'skipped'])


def qdr_state_family(probe, scenario, mu0=1., *, purity_margin=AUDIT_PURITY_MARGIN):
    """``mu -> received SPDC state`` in the receiver basis matched to ``mu0``.

    Idlers traced out by the pipeline at ``purity_margin`` are traced out
    here as well, so both sides describe the same modes.
    """
    basis = probe.basis
    receiver = basis.rescaled(mu0)
    size = probe.spectrum.size
    transmitted = probe.transmitted_state()
    signals = transmitted.layout.roles('signal')
    pruned = set(pruned_pairs(probe, scenario, purity_margin))
    kept = signals + [ModeLabel('idler', m) for m in range(size) if m not in pruned]

    def state_at(mu):
        overlap = doppler_unitary_matrix(basis, mu, receiver=receiver)
        channel = GaussianChannel.thermal_loss(size, scenario.eta, scenario.n_b,
                                               unitary=embed_quadratures(overlap))
        received = apply_channel(transmitted, channel.embed(transmitted.layout, signals))
        return received.reduced(kept)

    return state_at


def cdr_state_family(probe, scenario, mu0=1., receiver_order=CDR_RECEIVER_ORDER):
    """``mu -> received coherent state`` on a few Hermite-Gauss receiver modes."""
    source = HermiteGaussBasis(probe.omega_c, probe.basis.scale, receiver_order, warn=False)
    receiver = source.rescaled(mu0)
    transmitted_mean = np.zeros(2 * source.size)
    transmitted_mean[0] = np.sqrt(2.) * probe.alpha
    transmitted = GaussianState.coherent(source.size, transmitted_mean)

    def state_at(mu):
        overlap = doppler_unitary_matrix(source, mu, receiver=receiver)
        channel = GaussianChannel.thermal_loss(source.size, scenario.eta, scenario.n_b,
                                               unitary=embed_quadratures(overlap))
        return apply_channel(transmitted, channel)

    return state_at


def _expected_infidelity(information, cfg):
    return information * cfg.finest_step ** 2 / 8.


def audit_config(information, mu, omega0_s, *, min_infidelity=MIN_INFIDELITY):
    """Finite-difference ladder for one audited row, or None when no admissible step resolves it.

    Steps normally stay below a tenth of ``mu / omega0_s``, the scale on which
    the received modes vary. Faint rows, whose finest rung would see less than
    ``FAINT_TARGET_INFIDELITY`` there, get a deeper ladder reaching half of that
    scale; None when even that stays under ``min_infidelity``.
    """
    unit = mu / omega0_s
    cfg = FdConfig.for_information(information, max_step=AUDIT_MAX_STEP * unit)
    if _expected_infidelity(information, cfg) >= max(FAINT_TARGET_INFIDELITY, min_infidelity):
        return cfg
    cfg = FdConfig.for_information(information, target_infidelity=FAINT_TARGET_INFIDELITY,
                                   max_step=FAINT_MAX_STEP * unit, levels=FAINT_LEVELS)
    if _expected_infidelity(information, cfg) >= min_infidelity:
        return cfg
    return None


def audit_row(probe, scenario, *, cfg=None, purity_margin=AUDIT_PURITY_MARGIN, rtol=AUDIT_RTOL,
              min_infidelity=MIN_INFIDELITY):
    """Re-evaluate one QDR point with the finite-difference oracle at the scenario's mu.

    Rows that no admissible step resolves come back with ``skipped=True`` and
    ``passed=None``; they were not checked.
    """
    logger = logging.getLogger(__name__)
    mu = scenario.mu
    pipeline = jq(probe, scenario, purity_margin=purity_margin)
    cfg = cfg or audit_config(pipeline, mu, probe.basis.omega0_s, min_infidelity=min_infidelity)
    if cfg is None:
        logger.warning('audit skipped for %r: J_q = %.3g is below the oracle resolution', scenario, pipeline)
        return AuditResult(pipeline, float('nan'), float('nan'), None, True)
    oracle = qfi_finite_difference(qdr_state_family(probe, scenario, mu, purity_margin=purity_margin), mu, cfg).value
    rel_error = abs(oracle - pipeline) / pipeline
    return AuditResult(pipeline, oracle, rel_error, bool(rel_error <= rtol), False)

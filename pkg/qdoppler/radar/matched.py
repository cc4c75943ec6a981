from collections import namedtuple

import numpy as np

from ..errors import DegenerateDurationError
from ..gaussian.qfi import DIRECT_MAX_DIM
from ..spectral import schmidt_spectrum
from ..spectral.schmidt import MIN_ORDER
from .classical import CdrProbe, jc_approx
from .quantum import PURITY_MARGIN, QdrProbe, jq

SEPARABLE_TOL = 1e-12


class MatchedPair(namedtuple('MatchedPair', ['cdr', 'qdr', 'jc', 'jq', 'ratio'])):
    """Classical and quantum probes with equal ``N_S``, ``Delta T`` and ``omega_c``.

    ``jc`` and ``jq`` hold the two Fisher informations; ``ratio = jq / jc``.
    """
    __slots__ = ()

    @property
    def ratio_db(self):
        return 10. * np.log10(self.ratio)


def matched_pair(sigma_p, eps, xi, scenario, *, tail_tol=1e-10, min_order=MIN_ORDER, order=None,
                 duration_convention='flux', purity_margin=PURITY_MARGIN,
                 direct_max_dim=DIRECT_MAX_DIM):
    """Build the matched CDR/QDR comparison for one scenario.

    Args:
        sigma_p, eps: pump and phase-matching bandwidths (rad/s).
        xi: squeezing of the SPDC source.
        order: fixed Schmidt truncation; adaptive from ``tail_tol`` (at least
            ``min_order``) when None.

    Raises:
        DegenerateDurationError: separable source (``K = 1``).
    """
    spectrum = schmidt_spectrum(sigma_p, eps, tail_tol, min_order)
    if order is not None:
        spectrum = spectrum.truncated(order)
    if spectrum.K - 1. <= SEPARABLE_TOL:
        raise DegenerateDurationError(
            f'K = {spectrum.K:.15g}: a separable source has no matched pulse duration')
    qdr = QdrProbe(spectrum, xi, scenario.omega_c, duration_convention)
    cdr = CdrProbe.from_duration(qdr.n_s, qdr.duration, scenario.omega_c)
    j_q = jq(qdr, scenario, purity_margin=purity_margin, direct_max_dim=direct_max_dim)
    j_c = jc_approx(cdr.n_s, cdr.duration, scenario)
    return MatchedPair(cdr, qdr, j_c, j_q, j_q / j_c)

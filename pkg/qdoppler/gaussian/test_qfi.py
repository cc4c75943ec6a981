import os
import sys
import unittest

import numpy as np
from numpy.testing import assert_allclose

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), os.path.pardir, os.path.pardir)))
from qdoppler.errors import InvalidArgumentError, PureStateError
from qdoppler.gaussian import (GaussianState, gaussian_fidelity, qfi_gaussian, random_passive_symplectic,
                               tmsv_block)
from qdoppler.gaussian.qfi import covariance_term_direct, covariance_term_stein
from qdoppler.utils import set_random_seed


def random_mixed_state(n_modes, rng):
    """Covariance ``O1 Z O2 diag(nu) O2^T Z O1^T`` with every nu in [1.5, 3]."""
    nu = np.repeat(rng.uniform(1.5, 3., n_modes), 2)
    squeeze = np.repeat(np.exp(rng.uniform(-0.5, 0.5, n_modes)), 2)
    squeeze[1::2] = 1. / squeeze[1::2]
    s = random_passive_symplectic(n_modes, rng) @ np.diag(squeeze) @ random_passive_symplectic(n_modes, rng)
    cov = s @ np.diag(nu) @ s.T
    return 0.5 * (cov + cov.T)


def random_symmetric(dim, rng, scale=0.1):
    a = rng.normal(size=(dim, dim)) * scale
    return a + a.T


class QfiTestCase(unittest.TestCase):
    def test_thermal_occupation(self):
        # J(n) = 1 / (n (n + 1)) for a thermal state with occupation n
        for n in (0.1, 1., 20.):
            cov = (2. * n + 1.) * np.eye(2)
            value = qfi_gaussian(np.zeros(2), cov, np.zeros(2), 2. * np.eye(2))
            assert_allclose(value, 1. / (n * (n + 1.)), rtol=1e-10)

    def test_displacement(self):
        value = qfi_gaussian(np.zeros(2), np.eye(2), [np.sqrt(2.), 0.], np.zeros((2, 2)))
        assert_allclose(value, 4., rtol=1e-12)
        thermal = qfi_gaussian(np.zeros(2), 5. * np.eye(2), [np.sqrt(2.), 0.], np.zeros((2, 2)))
        assert_allclose(thermal, 4. / 5., rtol=1e-12)

    def test_direct_and_stein_agree(self):
        rng = set_random_seed(4)
        for n_modes in range(1, 7):
            cov = random_mixed_state(n_modes, rng)
            d_cov = random_symmetric(2 * n_modes, rng)
            direct = covariance_term_direct(cov, d_cov)
            stein = covariance_term_stein(cov, d_cov)
            assert_allclose(stein, direct, rtol=1e-9)
            zeros = np.zeros(2 * n_modes)
            assert_allclose(qfi_gaussian(zeros, cov, zeros, d_cov, direct_max_dim=0),
                            qfi_gaussian(zeros, cov, zeros, d_cov), rtol=1e-9)

    def test_passive_invariance(self):
        rng = set_random_seed(5)
        cov = random_mixed_state(3, rng)
        d_cov = random_symmetric(6, rng)
        mean, d_mean = rng.normal(size=6), rng.normal(size=6)
        s = random_passive_symplectic(3, rng)
        before = qfi_gaussian(mean, cov, d_mean, d_cov)
        after = qfi_gaussian(s @ mean, s @ cov @ s.T, s @ d_mean, s @ d_cov @ s.T)
        assert_allclose(after, before, rtol=1e-8)

    def test_pure_state_rejected(self):
        cov = tmsv_block(1.)
        with self.assertRaises(PureStateError):
            qfi_gaussian(np.zeros(4), cov, np.zeros(4), 0.1 * np.eye(4))
        # displacement-only families are fine on pure states
        value = qfi_gaussian(np.zeros(4), cov, [1., 0., 0., 0.], np.zeros((4, 4)))
        self.assertGreater(value, 0.)

    def test_invalid_arguments(self):
        with self.assertRaises(InvalidArgumentError):
            qfi_gaussian(np.zeros(2), 3. * np.eye(2), np.zeros(2), [[0., 1.], [0., 0.]])
        with self.assertRaises(InvalidArgumentError):
            qfi_gaussian(np.zeros(2), 3. * np.eye(2), np.zeros(4), np.eye(2))


class FidelityTestCase(unittest.TestCase):
    def test_identical(self):
        rng = set_random_seed(6)
        cov = random_mixed_state(2, rng)
        state = GaussianState(2, rng.normal(size=4), cov)
        assert_allclose(gaussian_fidelity(state, state), 1., atol=1e-12)

    def test_coherent_overlap(self):
        a = GaussianState.coherent(1, [0., 0.])
        b = GaussianState.coherent(1, [np.sqrt(2.) * 0.3, np.sqrt(2.) * 0.4])
        assert_allclose(gaussian_fidelity(a, b), np.exp(-0.25 / 2.), rtol=1e-12)

    def test_thermal_pair(self):
        for n in (0.5, 3.):
            vacuum = GaussianState.vacuum(1)
            thermal = GaussianState.thermal(1, n)
            assert_allclose(gaussian_fidelity(vacuum, thermal), 1. / np.sqrt(n + 1.), rtol=1e-10)
        n1, n2 = 1., 2.
        expected = 1. / (np.sqrt((n1 + 1.) * (n2 + 1.)) - np.sqrt(n1 * n2))
        value = gaussian_fidelity(GaussianState.thermal(1, n1), GaussianState.thermal(1, n2))
        assert_allclose(value, expected, rtol=1e-10)

    def test_symmetric_and_bounded(self):
        rng = set_random_seed(7)
        a = GaussianState(3, rng.normal(size=6) * 0.1, random_mixed_state(3, rng))
        b = GaussianState(3, rng.normal(size=6) * 0.1, random_mixed_state(3, rng))
        fab, fba = gaussian_fidelity(a, b), gaussian_fidelity(b, a)
        assert_allclose(fab, fba, rtol=1e-9)
        self.assertLessEqual(fab, 1.)
        self.assertGreater(fab, 0.)

    def test_layout_mismatch(self):
        with self.assertRaises(InvalidArgumentError):
            gaussian_fidelity(GaussianState.vacuum(1), GaussianState.vacuum(2))


if __name__ == '__main__':
    unittest.main()

import os
import sys
import unittest

import numpy as np
from numpy.testing import assert_allclose

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), os.path.pardir, os.path.pardir)))
from qdoppler.errors import InvalidArgumentError, InvalidChannelError
from qdoppler.gaussian import (GaussianChannel, GaussianState, ModeLabel, ModeLayout, apply_channel,
                               random_passive_symplectic, tmsv_block)
from qdoppler.utils import set_random_seed


class GaussianStateTestCase(unittest.TestCase):
    def test_constructors(self):
        vacuum = GaussianState.vacuum(2)
        self.assertTrue(vacuum.is_pure())
        thermal = GaussianState.thermal(ModeLayout.canonical(1), 2.)
        assert_allclose(thermal.cov, 5. * np.eye(4))
        assert_allclose(thermal.symplectic_eigenvalues(), [5., 5.])
        with self.assertRaises(InvalidArgumentError):
            GaussianState.thermal(1, -0.1)

    def test_frozen(self):
        state = GaussianState.vacuum(1)
        with self.assertRaises(ValueError):
            state.cov[0, 0] = 2.

    def test_rejects_bad_covariances(self):
        with self.assertRaises(InvalidArgumentError):
            GaussianState(1, np.zeros(2), 0.5 * np.eye(2))
        with self.assertRaises(InvalidArgumentError):
            GaussianState(1, np.zeros(2), [[1., 0.1], [0., 1.]])
        with self.assertRaises(InvalidArgumentError):
            GaussianState(2, np.zeros(2), np.eye(2))

    def test_reduced_and_permuted(self):
        layout = ModeLayout.canonical(1)
        state = GaussianState(layout, [1., 2., 3., 4.], tmsv_block(1.))
        signal = state.reduced([('signal', 0)])
        assert_allclose(signal.mean, [1., 2.])
        assert_allclose(signal.cov, 3. * np.eye(2))
        swapped = state.permuted(ModeLayout([('idler', 0), ('signal', 0)]))
        assert_allclose(swapped.mean, [3., 4., 1., 2.])
        assert_allclose(swapped.canonical().cov, state.cov)
        with self.assertRaises(InvalidArgumentError):
            state.permuted(ModeLayout.canonical(2))


class GaussianChannelTestCase(unittest.TestCase):
    def test_identity(self):
        channel = GaussianChannel.identity(2)
        self.assertTrue(channel.is_unitary())
        state = GaussianState.thermal(2, 0.5)
        assert_allclose(apply_channel(state, channel).cov, state.cov)

    def test_not_completely_positive(self):
        with self.assertRaises(InvalidChannelError):
            GaussianChannel(np.eye(2), -0.5 * np.eye(2))
        # amplification without added noise
        with self.assertRaises(InvalidChannelError):
            GaussianChannel(2. * np.eye(2), np.zeros((2, 2)))

    def test_thermal_loss_variances(self):
        eta, n_b, n = 0.5, 10., 1.
        layout = ModeLayout.canonical(1)
        state = GaussianState(layout, np.zeros(4), tmsv_block(n))
        signals = layout.roles('signal')
        channel = GaussianChannel.thermal_loss(1, eta, n_b).embed(layout, signals)
        received = apply_channel(state, channel)
        c = 2. * np.sqrt(n * (n + 1.))
        assert_allclose(received.cov[:2, :2], 22. * np.eye(2))
        assert_allclose(received.cov[:2, 2:], np.sqrt(eta) * c * np.diag([1., -1.]))
        assert_allclose(received.cov[2:, 2:], 3. * np.eye(2))

    def test_thermal_loss_forms(self):
        eta, n_b = 0.3, 2.
        rescaled = GaussianChannel.thermal_loss(1, eta, n_b)
        beam_splitter = GaussianChannel.thermal_loss(1, eta, n_b, rescaled_noise=False)
        assert_allclose(rescaled.Y, (2. * n_b + 1. - eta) * np.eye(2))
        assert_allclose(beam_splitter.Y, (1. - eta) * (2. * n_b + 1.) * np.eye(2))
        for bad in ((0., 1.), (1.1, 1.), (0.5, -1.)):
            with self.assertRaises(InvalidArgumentError):
                GaussianChannel.thermal_loss(1, *bad)

    def test_passive_then_loss(self):
        rng = set_random_seed(3)
        u = random_passive_symplectic(3, rng)
        channel = GaussianChannel.thermal_loss(3, 0.7, 0.2, unitary=u)
        state = GaussianState.thermal(3, 1.)
        received = apply_channel(state, channel)
        # isotropic input stays isotropic
        assert_allclose(received.cov, (0.7 * 3. + 1.4 - 0.7) * np.eye(6), atol=1e-12)

    def test_embed(self):
        layout = ModeLayout([ModeLabel('signal', 0), ModeLabel('idler', 0), ModeLabel('aux', 0)])
        channel = GaussianChannel.thermal_loss(1, 0.5, 1.).embed(layout, [('idler', 0)])
        self.assertEqual(channel.dim, 6)
        assert_allclose(channel.X[:2, :2], np.eye(2))
        assert_allclose(channel.X[2:4, 2:4], np.sqrt(0.5) * np.eye(2))
        assert_allclose(channel.Y[2:4, 2:4], 2.5 * np.eye(2))
        with self.assertRaises(InvalidArgumentError):
            GaussianChannel.identity(2).embed(layout, [('idler', 0)])

    def test_dimension_mismatch(self):
        with self.assertRaises(InvalidArgumentError):
            apply_channel(GaussianState.vacuum(1), GaussianChannel.identity(2))


if __name__ == '__main__':
    unittest.main()

import itertools
import os
import sys
import unittest

import numpy as np
from numpy.testing import assert_allclose

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), os.path.pardir, os.path.pardir)))
from qdoppler.errors import InvalidArgumentError, InvalidProbeError
from qdoppler.radar import (CdrProbe, ScenarioParams, doppler_factor, jc_approx, jc_exact,
                            jc_via_gaussian_machinery, speed_from_factor)

OMEGA_C = 1e10


class ScenarioTestCase(unittest.TestCase):
    def test_doppler_factor(self):
        self.assertEqual(doppler_factor(0.), 1.)
        self.assertLess(doppler_factor(100.), 1.)
        self.assertGreater(doppler_factor(-100.), 1.)
        assert_allclose(speed_from_factor(doppler_factor(250.)), 250., rtol=1e-9)

    def test_with_mu(self):
        scenario = ScenarioParams.with_mu(0.5, eta=0.3, n_b=2.)
        assert_allclose(scenario.mu, 0.5, rtol=1e-14)
        self.assertEqual(ScenarioParams.with_mu(1.).v, 0.)
        self.assertEqual(scenario.replace(eta=1.).eta, 1.)
        self.assertEqual(scenario.replace(eta=1.).n_b, 2.)

    def test_invalid(self):
        with self.assertRaises(InvalidArgumentError) as ctx:
            ScenarioParams(eta=0., n_b=-1.)
        # every problem is reported at once
        self.assertIn('eta', str(ctx.exception))
        self.assertIn('n_b', str(ctx.exception))
        for kwargs in (dict(v=3e8), dict(omega_c=0.), dict(eta=1.5), dict(n_b=np.nan)):
            with self.assertRaises(InvalidArgumentError):
                ScenarioParams(**kwargs)
        with self.assertRaises(InvalidArgumentError):
            ScenarioParams.with_mu(0.)


class CdrTestCase(unittest.TestCase):
    def test_machinery_matches_closed_form(self):
        for eta, n_b, omega_dt in itertools.product((0.01, 0.5, 1.), (0., 1., 25.), (10., 40., 200.)):
            scenario = ScenarioParams(omega_c=OMEGA_C, eta=eta, n_b=n_b)
            probe = CdrProbe.from_duration(0.7, omega_dt / OMEGA_C, OMEGA_C)
            assert_allclose(jc_via_gaussian_machinery(probe, scenario), jc_exact(probe, scenario), rtol=1e-8)

    def test_narrowband_error(self):
        scenario = ScenarioParams(omega_c=OMEGA_C, eta=0.2, n_b=3.)
        for omega_dt in (10., 29., 200.):
            duration = omega_dt / OMEGA_C
            probe = CdrProbe.from_duration(2., duration, OMEGA_C)
            exact = jc_exact(probe, scenario)
            error = abs(jc_approx(2., duration, scenario) - exact) / exact
            assert_allclose(error, 0.5 / (omega_dt ** 2 + 0.5), rtol=1e-8)
        self.assertLess(0.5 / (29. ** 2 + 0.5), 1e-3)

    def test_derivative_mode_norm(self):
        # N = 1/2 + (omega0 s)^2 / 2 with omega0 s = sqrt(2) omega_c dT
        scenario = ScenarioParams.with_mu(1., omega_c=OMEGA_C)
        probe = CdrProbe.from_duration(1., 10. / OMEGA_C, OMEGA_C)
        assert_allclose(probe.derivative_mode_norm(), 100.5, rtol=1e-12)
        assert_allclose(jc_exact(probe, scenario), 402., rtol=1e-12)
        assert_allclose(jc_approx(1., 10. / OMEGA_C, scenario), 400., rtol=1e-12)

    def test_duration(self):
        probe = CdrProbe.from_duration(4., 3e-9, OMEGA_C)
        assert_allclose(probe.duration, 3e-9, rtol=1e-14)
        assert_allclose(probe.duration_by_quadrature(), 3e-9, rtol=1e-12)
        assert_allclose(probe.n_s, 4., rtol=1e-14)
        assert_allclose(np.sum(probe.mode(OMEGA_C + np.linspace(-5e9, 5e9, 20001)) ** 2) * 5e5, 1., rtol=1e-8)

    def test_scaling(self):
        scenario = ScenarioParams(omega_c=OMEGA_C, eta=0.5, n_b=1.)
        moving = ScenarioParams.with_mu(0.8, omega_c=OMEGA_C, eta=0.5, n_b=1.)
        probe = CdrProbe.from_duration(1., 1e-8, OMEGA_C)
        assert_allclose(jc_exact(probe, moving), jc_exact(probe, scenario) / 0.64 * scenario.mu ** 2, rtol=1e-12)
        self.assertEqual(jc_approx(0., 1e-8, scenario), 0.)

    def test_broadband_warning(self):
        scenario = ScenarioParams(omega_c=OMEGA_C)
        with self.assertLogs('qdoppler.radar.classical', level='WARNING'):
            jc_approx(1., 1e-10, scenario)

    def test_invalid(self):
        with self.assertRaises(InvalidProbeError):
            CdrProbe(np.nan, OMEGA_C, 1e8)
        with self.assertRaises(InvalidProbeError):
            CdrProbe(1., OMEGA_C, 0.)
        with self.assertRaises(InvalidProbeError):
            CdrProbe.from_duration(-1., 1e-9, OMEGA_C)
        with self.assertRaises(InvalidArgumentError):
            jc_approx(-1., 1e-9, ScenarioParams())


if __name__ == '__main__':
    unittest.main()

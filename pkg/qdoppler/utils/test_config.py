import logging
import os
import sys
import tempfile
import unittest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), os.path.pardir, os.path.pardir)))
from qdoppler.errors import ConfigError
from qdoppler.utils import AverageMeter, EasyConfig, Registry, build_from_cfg, generate_run_directory
from qdoppler.utils.logger import _ColorfulFormatter


def _write(path, text):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, 'w') as f:
        f.write(text)
    return path


class EasyConfigTestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.root = self.tmp.name

    def tearDown(self):
        self.tmp.cleanup()

    def test_recursive_defaults(self):
        _write(os.path.join(self.root, 'cfgs', 'default.yaml'), 'grid:\n  eta: 0.5\n  n_b: 1.\nseed: 3\n')
        _write(os.path.join(self.root, 'cfgs', 'squeezing', 'default.yaml'), 'grid:\n  n_b: 2.\n')
        path = _write(os.path.join(self.root, 'cfgs', 'squeezing', 'cxi.yaml'), 'grid:\n  c_xi: 0.1\n')
        cfg = EasyConfig()
        cfg.load(path, recursive=True)
        self.assertEqual(cfg.grid.eta, 0.5)
        self.assertEqual(cfg.grid.n_b, 2.)
        self.assertEqual(cfg.grid.c_xi, 0.1)
        self.assertEqual(cfg.seed, 3)

    def test_empty_file(self):
        path = _write(os.path.join(self.root, 'empty.yaml'), '')
        cfg = EasyConfig()
        cfg.load(path)
        self.assertEqual(cfg.dict(), {})

    def test_bad_yaml(self):
        path = _write(os.path.join(self.root, 'bad.yaml'), 'grid: [1, 2\n')
        with self.assertRaises(ConfigError):
            EasyConfig().load(path)
        path = _write(os.path.join(self.root, 'list.yaml'), '- 1\n- 2\n')
        with self.assertRaises(ConfigError):
            EasyConfig().load(path)

    def test_update_from_tokens(self):
        cfg = EasyConfig()
        cfg.update({'grid': {'eta': 1.}})
        cfg.update(['grid.eta=0.25', '--numerics.threads', '4', 'grid.sigma_p=wc/100', 'grid.n_b=[0.1,1]'])
        self.assertEqual(cfg.grid.eta, 0.25)
        self.assertEqual(cfg.numerics.threads, 4)
        self.assertEqual(cfg.grid.sigma_p, 'wc/100')
        self.assertEqual(cfg.grid.n_b, [0.1, 1])
        with self.assertRaises(ConfigError):
            cfg.update(['--grid.eta'])

    def test_builder_mapping_replaced(self):
        cfg = EasyConfig()
        cfg.update({'eta': {'NAME': 'Logspace', 'start': 0.1, 'stop': 1., 'num': 3}})
        cfg.update({'eta': {'NAME': 'Values', 'values': [0.5]}})
        self.assertEqual(cfg.eta.dict(), {'NAME': 'Values', 'values': [0.5]})
        cfg.update({'eta': {'values': [0.25]}})
        self.assertEqual(cfg.eta['values'], [0.25])

    def test_flatten_and_hash(self):
        cfg = EasyConfig()
        cfg.update({'grid': {'eta': 1.}, 'output': {'root_dir': 'a'}})
        self.assertEqual(cfg.flatten(), {'grid.eta': 1., 'output.root_dir': 'a'})
        other = EasyConfig()
        other.update({'output': {'root_dir': 'b'}, 'grid': {'eta': 1.}})
        self.assertNotEqual(cfg.hash(), other.hash())
        self.assertEqual(cfg.hash(exclude=['output']), other.hash(exclude=['output']))

    def test_run_directory(self):
        cfg = EasyConfig()
        cfg.update({'output': {'root_dir': self.root}})
        run_dir = generate_run_directory(cfg, exp_name='cxi-0.1')
        self.assertTrue(os.path.isdir(run_dir))
        self.assertTrue(os.path.basename(run_dir).startswith('cxi-0.1-'))
        self.assertEqual(cfg.output.csv_path, os.path.join(run_dir, 'results.csv'))
        explicit = os.path.join(self.root, 'explicit')
        self.assertEqual(generate_run_directory(cfg, out_dir=explicit), explicit)
        self.assertEqual(cfg.output.run_name, 'explicit')


class RegistryTestCase(unittest.TestCase):
    def test_register_and_build(self):
        shapes = Registry('shapes')

        @shapes.register_module()
        class Square:
            def __init__(self, side, scale=1.):
                self.area = (side * scale) ** 2

        self.assertIn('Square', shapes)
        self.assertIs(shapes.get('Square'), Square)
        self.assertEqual(shapes.build({'NAME': 'Square', 'side': 2.}).area, 4.)
        self.assertEqual(build_from_cfg({'NAME': 'Square', 'side': 2.}, shapes, dict(scale=2.)).area, 16.)
        with self.assertRaises(KeyError):
            shapes.build({'NAME': 'Circle'})
        with self.assertRaises(KeyError):
            shapes.register_module(module=Square)


class LoggerTestCase(unittest.TestCase):
    def record(self, level):
        return logging.LogRecord('qdoppler.sweep.runner', level, __file__, 1, '%d rows', (3,), None)

    def test_run_tag_and_short_name(self):
        formatter = _ColorfulFormatter('%(short_name)s: %(message)s', run_tag='ab12cd34')
        self.assertEqual(formatter.format(self.record(logging.INFO)), 'ab12cd34 sweep.runner: 3 rows')
        warning = formatter.format(self.record(logging.WARNING))
        self.assertIn('WARNING', warning)
        self.assertTrue(warning.endswith('ab12cd34 sweep.runner: 3 rows'))
        plain = _ColorfulFormatter('%(short_name)s: %(message)s')
        self.assertEqual(plain.format(self.record(logging.INFO)), 'sweep.runner: 3 rows')


class AverageMeterTestCase(unittest.TestCase):
    def test_average(self):
        meter = AverageMeter()
        for value in (1., 3., 2.):
            meter.update(value)
        self.assertEqual(meter.avg, 2.)
        self.assertEqual(meter.max, 3.)
        self.assertEqual(meter.sum, 6.)


if __name__ == '__main__':
    unittest.main()

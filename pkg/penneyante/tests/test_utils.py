
import io
import os
import json
import unittest
from fractions import Fraction
from unittest import mock

from penneyante import config
from penneyante import utils


class TestRendering(unittest.TestCase):

    def test_render_fraction(self):
        self.assertEqual(utils.render_fraction(Fraction(14, 16)), '7/8')
        self.assertEqual(utils.render_fraction(1), '1/1')

    def test_render_decimal(self):
        self.assertEqual(utils.render_decimal(Fraction(7, 8)), '0.87500000')
        self.assertEqual(utils.render_decimal(Fraction(2, 3), 3), '0.667')
        self.assertEqual(utils.render_decimal(Fraction(1, 8), 2), '0.12')
        self.assertEqual(utils.render_decimal(Fraction(3, 8), 2), '0.38')
        self.assertEqual(utils.render_decimal(Fraction(-1, 4), 1), '-0.2')
        self.assertEqual(utils.render_decimal(1, 2), '1.00')
        self.assertEqual(
            utils.render_decimal(Fraction(1, 3), 50), '0.' + '3'*50)

    def test_check_decimals(self):
        for value in (0, 51, 2.5, '8'):
            with self.assertRaises(ValueError):
                utils.check_decimals(value)
        utils.check_decimals(config.MIN_DECIMALS)
        utils.check_decimals(config.MAX_DECIMALS)

    def test_to_cell(self):
        self.assertEqual(utils.to_cell(Fraction(1, 2)), '1/2')
        self.assertEqual(utils.to_cell(True), 'true')
        self.assertEqual(utils.to_cell(None), '')
        self.assertEqual(utils.to_cell(0.5, 3), '0.500')
        self.assertEqual(utils.to_cell('HHT'), 'HHT')


class TestExactSums(unittest.TestCase):

    def test_exact_sum(self):
        values = [Fraction(1, 2**k) for k in range(1, 40)]
        self.assertEqual(utils.exact_sum(values), 1 - Fraction(1, 2**39))
        self.assertEqual(utils.exact_sum([]), 0)
        self.assertEqual(
            utils.exact_sum([Fraction(1, 3), Fraction(1, 6), 1]),
            Fraction(3, 2))

    def test_pairwise_sum(self):
        self.assertEqual(utils.pairwise_sum(range(11)), 55)

    def test_exact_mean(self):
        self.assertEqual(
            utils.exact_mean([Fraction(1, 2), Fraction(1, 4)]),
            Fraction(3, 8))
        with self.assertRaises(ValueError):
            utils.exact_mean([])


class TestParallelMap(unittest.TestCase):

    def test_order(self):
        items = list(range(50))
        serial = utils.parallel_map(lambda x: x*x, items)
        threaded = utils.parallel_map(lambda x: x*x, items, threads=4)
        self.assertEqual(serial, threaded)
        self.assertEqual(utils.parallel_map(abs, [], threads=4), [])


class TestWriters(unittest.TestCase):

    def setUp(self):
        self.headers = ['a', 'b']
        self.rows = [['HHT', Fraction(1, 4)], ['THH', None]]

    def test_write_csv(self):
        stream = io.StringIO()
        utils.write_csv(self.headers, self.rows, stream)
        self.assertEqual(stream.getvalue(), 'a,b\nHHT,1/4\nTHH,\n')

    def test_write_markdown(self):
        stream = io.StringIO()
        utils.write_markdown(self.headers, self.rows, stream)
        lines = stream.getvalue().splitlines()
        self.assertEqual(lines[0], '| a | b |')
        self.assertEqual(lines[1], '|---|---|')
        self.assertEqual(lines[2], '| HHT | 1/4 |')

    def test_write_text(self):
        stream = io.StringIO()
        utils.write_text(self.headers, self.rows, stream)
        lines = stream.getvalue().splitlines()
        self.assertEqual(lines[0], 'a    b')
        self.assertEqual(lines[1], 'HHT  1/4')
        self.assertEqual(lines[2], 'THH')

    def test_write_json(self):
        stream = io.StringIO()
        utils.write_json({'b': 1, 'a': [1, 2]}, stream)
        self.assertEqual(json.loads(stream.getvalue()), {'a': [1, 2], 'b': 1})
        self.assertTrue(stream.getvalue().index('"a"')
                        < stream.getvalue().index('"b"'))


class TestConfig(unittest.TestCase):

    def test_cache_path_order(self):
        env = {config.CACHE_ENV_VAR: '/tmp/env_cache.db'}
        with mock.patch.dict(os.environ, env):
            self.assertEqual(
                config.get_cache_path('/tmp/cli_cache.db'),
                '/tmp/cli_cache.db')
            self.assertEqual(config.get_cache_path(), '/tmp/env_cache.db')
            self.assertIsNone(
                config.get_cache_path('/tmp/cli_cache.db', no_cache=True))

    def test_default_cache_path(self):
        with mock.patch.dict(os.environ, {'XDG_CONFIG_HOME': '/tmp/xdg'}):
            os.environ.pop(config.CACHE_ENV_VAR, None)
            self.assertEqual(
                config.get_cache_path(),
                os.path.join('/tmp/xdg', 'penneyante', config.CACHE_FILENAME))

        with mock.patch.dict(os.environ, {'XDG_CONFIG_HOME': ''}):
            self.assertTrue(config.default_cache_path().endswith(
                os.path.join('.config', 'penneyante', 'cn_cache.db')))


if __name__ == '__main__':
    unittest.main()

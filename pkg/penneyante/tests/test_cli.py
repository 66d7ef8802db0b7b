
import io
import os
import json
import contextlib
import unittest

from penneyante import cli
from penneyante import sequence
from penneyante import verify


_TEST_PATH = os.path.dirname(__file__)


class TestCommandLine(unittest.TestCase):

    def setUp(self):
        sequence.reset()
        self.cache_name = os.path.join(_TEST_PATH, 'test_cli_cache.db')

    def tearDown(self):
        sequence.reset()
        try:
            os.remove(self.cache_name)
        except Exception:
            pass

    def run_cli(self, *argv):
        stream = io.StringIO()
        errors = io.StringIO()
        with contextlib.redirect_stderr(errors):
            code = cli.main(list(argv) + ['--no-cache'], stream=stream)
        return code, stream.getvalue(), errors.getvalue()

    def test_odds(self):
        code, out, _ = self.run_cli('odds', '--a', 'THH', '--b', 'HHH')
        self.assertEqual(code, 0)
        self.assertEqual(out, '7/8 (0.87500000)\n')

        code, out, _ = self.run_cli(
            'odds', '--a', 'THH', '--b', 'HHH', '--decimals', '3')
        self.assertEqual(out, '7/8 (0.875)\n')

        code, out, _ = self.run_cli(
            'odds', '--a', 'THH', '--b', 'HHH', '--format', 'json')
        data = json.loads(out)
        self.assertEqual(data['prob'], '7/8')
        self.assertEqual(data['odds'], [7, 1])

    def test_conway(self):
        code, out, _ = self.run_cli('conway', '--a', 'HHH')
        self.assertEqual(code, 0)
        self.assertEqual(out, 'C(HHH, HHH) = 7 (111)\n')

        code, out, _ = self.run_cli('conway', '--a', 'HTH', '--b', 'THT')
        self.assertEqual(out, 'C(HTH, THT) = 2 (010)\n')

    def test_domain_errors(self):
        code, out, err = self.run_cli('odds', '--a', 'HHX', '--b', 'HHH')
        self.assertEqual(code, 1)
        self.assertEqual(out, '')
        self.assertTrue(err.startswith('error:'))

        code, _, _ = self.run_cli('odds', '--a', 'HHH', '--b', 'HHHH')
        self.assertEqual(code, 1)

        code, _, _ = self.run_cli('odds', '--a', 'HHH', '--b', 'HHH')
        self.assertEqual(code, 1)

        code, _, _ = self.run_cli('matrix', '-n', '11')
        self.assertEqual(code, 1)

    def test_usage_errors(self):
        code, _, _ = self.run_cli('odds', '--a', 'HHH', '--bogus')
        self.assertEqual(code, 2)

        code, _, _ = self.run_cli(
            'odds', '--a', 'HHH', '--b', 'THH', '--decimals', '0')
        self.assertEqual(code, 2)

        code, _, _ = self.run_cli('other')
        self.assertEqual(code, 2)

        code, _, err = self.run_cli('oracle')
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith('usage error:'))

    def test_version(self):
        with contextlib.redirect_stdout(io.StringIO()):
            self.assertEqual(cli.main(['--version']), 0)

    def test_matrix(self):
        code, out, _ = self.run_cli('matrix', '-n', '3', '--format', 'csv')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(
            lines[0], 'B\\A,HHH,HHT,HTH,HTT,THH,THT,TTH,TTT')
        self.assertEqual(
            lines[1].split(','),
            ['HHH', '-', '1/2', '2/5', '2/5', '1/8', '5/12', '3/10', '1/2'])
        self.assertEqual(len(lines), 9)

    def test_oracle(self):
        code, out, _ = self.run_cli('oracle', '--a', 'HHT', '--b', 'THH')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('1/4 (0.25000000)'))

        code, out, _ = self.run_cli('oracle', '--verify', '-n', '3')
        self.assertEqual(code, 0)
        self.assertIn('pass', out)

    def test_best_response(self):
        code, out, _ = self.run_cli(
            'best-response', '--a', 'HHH', '--format', 'json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data[0]['responder'], 'THH')
        self.assertEqual(data[0]['prob'], '7/8')

        code, out, _ = self.run_cli('best-response', '-n', '3', '--format', 'csv')
        self.assertEqual(len(out.splitlines()), 9)

    def test_optimal(self):
        code, out, _ = self.run_cli(
            'optimal', '-n', '7', '--method', 'both', '--format', 'json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data[0]['count'], 6)
        self.assertEqual(data[0]['strings'], data[1]['strings'])

        code, out, _ = self.run_cli(
            'optimal', '-n', '5', '--method', 'brute', '--format', 'json')
        data = json.loads(out)
        self.assertEqual(data[0]['strings'], ['THHTT', 'HTTHH'])
        self.assertEqual(data[0]['player2_win_prob'], '17/26')

    def test_cn(self):
        code, out, _ = self.run_cli(
            'cn', '--max', '10', '--binary', '--format', 'csv')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'n,c_n,binary')
        self.assertEqual(lines[-1], '10,42,101010')

        code, out, _ = self.run_cli(
            'cn', '--min', '25', '--max', '25', '--format', 'json')
        self.assertEqual(json.loads(out), [{'n': 25, 'c_n': '1363510'}])

    def test_cn_cache(self):
        stream = io.StringIO()
        code = cli.main(
            ['cn', '--max', '12', '--cache', self.cache_name], stream=stream)
        self.assertEqual(code, 0)
        self.assertTrue(os.path.isfile(self.cache_name))

        sequence.reset()
        code = cli.main(
            ['cn', '--max', '12', '--cache', self.cache_name], stream=stream)
        self.assertEqual(code, 0)
        self.assertEqual(sequence.known_values('c')[12], 166)

    def test_cstar(self):
        code, out, _ = self.run_cli('cstar', '-m', '8')
        self.assertEqual(code, 0)
        self.assertEqual(out, 'c*_8 = 11\n')

        code, out, _ = self.run_cli('cstar', '-m', '4', '--list')
        self.assertEqual(out, 'c*_4 = 1\nHTTH\n')

    def test_alpha(self):
        code, out, _ = self.run_cli('alpha', '--bits', '64', '--positions')
        self.assertEqual(code, 0)
        self.assertIn('binary 0.00' + verify.ALPHA_EXPANSION[:20], out)
        self.assertIn('1-bit positions 5,7,10,11,14,15,18,19,20,22', out)
        self.assertIn('alpha in [0.04062', out)

        code, out, _ = self.run_cli(
            'alpha', '--bits', '128', '--stats', '--max-block', '2',
            '--format', 'json')
        data = json.loads(out)
        self.assertEqual(data['blocks']['0'] + data['blocks']['1'], 128)

    def test_flipped(self):
        code, out, _ = self.run_cli(
            'flipped', 'best-response', '--a', 'HHHHH', '--format', 'json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(set(data[0]['maximizers']), {'TTTTT', 'HHHHT'})
        self.assertEqual(data[0]['prob'], '1/2')

        code, out, _ = self.run_cli('flipped', 'conjecture3', '-n', '5', '--json')
        self.assertEqual(json.loads(out)['holds'], True)

        code, out, _ = self.run_cli('flipped', 'optimal', '-n', '4', '--format', 'json')
        self.assertEqual(json.loads(out)['strings'], ['TTTT', 'HHHH'])

    def test_stats(self):
        code, out, _ = self.run_cli(
            'stats', '--from', '5', '--to', '5', '--format', 'json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data['variant'], 'best-vs-random')
        row = data['rows'][0]
        self.assertEqual(row['n'], 5)
        self.assertEqual(row['p_opt_opt']['exact'], '17/26')
        self.assertEqual(row['p_rand_opt']['decimal'], '0.71868171')
        self.assertEqual(row['p_opt_rand']['decimal'], '0.46497915')

        code, _, _ = self.run_cli('stats', '--from', '6', '--to', '5')
        self.assertEqual(code, 2)

    def test_simulate(self):
        argv = ['simulate', '--a', 'THH', '--b', 'HHH', '--trials', '2000',
                '--seed', '5', '--format', 'json']
        code, out, _ = self.run_cli(*argv)
        self.assertEqual(code, 0)
        first = json.loads(out)
        self.assertEqual(first['exact'], '7/8')
        self.assertEqual(first['trials'], 2000)

        code, out, _ = self.run_cli(*argv)
        self.assertEqual(json.loads(out), first)

    def test_verify(self):
        code, out, _ = self.run_cli(
            'verify', '--check', 'n3-matrix', '--check', 'cn-values',
            '--format', 'csv')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'check,result,detail')
        self.assertTrue(lines[1].startswith('n3-matrix,PASS'))
        self.assertTrue(lines[2].startswith('cn-values,PASS'))


if __name__ == '__main__':
    unittest.main()

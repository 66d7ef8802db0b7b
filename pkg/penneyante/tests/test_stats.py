import unittest
from fractions import Fraction

from penneyante import strings
from penneyante import utils
from penneyante import strategy
from penneyante import stats
from penneyante import verify


def _p(text):
    return strings.parse(text)


class TestStrategyMix(unittest.TestCase):

    def test_p_opt_opt(self):
        self.assertEqual(stats.p_opt_opt(3), Fraction(2, 3))
        self.assertEqual(stats.p_opt_opt(5), Fraction(17, 26))
        self.assertEqual(stats.p_opt_opt(6), Fraction(33, 50))
        for n in range(5, 25):
            self.assertEqual(
                utils.render_decimal(stats.p_opt_opt(n), 8),
                verify.MIX_TABLE[n][0])

    def test_closed_form_matches_bruteforce(self):
        for n in range(5, 9):
            self.assertEqual(
                stats.p_opt_opt(n),
                1 - strategy.optimal_strings_bruteforce(n).player1_win_prob)

    def test_p_rand_opt(self):
        self.assertEqual(stats.p_rand_opt(4), Fraction(1961, 2688))
        self.assertEqual(stats.p_rand_opt(5), Fraction(52619, 73216))
        self.assertEqual(
            utils.render_decimal(stats.p_rand_opt(5), 8), '0.71868171')

        with self.assertRaises(strings.BadLengthError):
            stats.p_rand_opt(17)

    def test_row(self):
        row = stats.strategy_row(5)
        self.assertEqual(row.n, 5)
        self.assertEqual(row.p_rand_opt, Fraction(52619, 73216))
        self.assertEqual(
            utils.render_decimal(row.diag_rand, 8), '0.33289627')
        self.assertEqual(
            row.diag_opt_rand,
            Fraction(32, 5) * (Fraction(1, 2) - row.p_opt_rand))

    def test_table(self):
        rows = stats.strategy_table(5, 6)
        self.assertEqual([r.n for r in rows], [5, 6])


class TestRandomReply(unittest.TestCase):

    def test_variants(self):
        exclude = stats.p_opt_rand(5, stats.EXCLUDE)
        half = stats.p_opt_rand(5, stats.INCLUDE_HALF)
        loss = stats.p_opt_rand(5, stats.INCLUDE_LOSS)
        self.assertLess(exclude, Fraction(1, 2))
        self.assertLess(loss, exclude)
        self.assertEqual(loss * 32, exclude * 31)
        self.assertEqual(half * 32, exclude * 31 + Fraction(1, 2))

    def test_breakdown(self):
        breakdown = stats.p_opt_rand_breakdown(5, stats.EXCLUDE, threads=2)
        self.assertEqual(
            [str(a) for a, _ in breakdown], ['THHTT', 'HTTHH'])
        self.assertEqual(breakdown[0][1], breakdown[1][1])

    def test_best_vs_random(self):
        self.assertEqual(stats.DEFAULT_VARIANT, stats.BEST_VS_RANDOM)
        for n in (5, 6):
            self.assertEqual(
                utils.render_decimal(stats.p_opt_rand(n), 8),
                verify.MIX_TABLE[n][2])
        row = stats.strategy_row(5)
        self.assertEqual(
            utils.render_decimal(row.diag_opt_rand, 8), '0.22413343')

    def test_minimizers_scan_every_string(self):
        found, best = stats.random_reply_minimizers(5)
        self.assertTrue(len(found) > 0)
        for a in strings.enumerate_strings(5):
            self.assertLessEqual(
                best, stats._random_reply(a, stats.BEST_VS_RANDOM))
        self.assertEqual(
            best, stats._random_reply(found[0], stats.INCLUDE_HALF))
        breakdown = stats.p_opt_rand_breakdown(5, threads=2)
        self.assertEqual([a for a, _ in breakdown], found)
        self.assertTrue(all(p == best for _, p in breakdown))
        self.assertLess(best, stats.p_opt_rand(5, stats.INCLUDE_HALF))

        with self.assertRaises(strings.BadLengthError):
            stats.random_reply_minimizers(15)

    def test_bad_variant(self):
        with self.assertRaises(ValueError):
            stats.p_opt_rand(5, 'other')


class TestSimulation(unittest.TestCase):

    def test_reproducible(self):
        a, b = _p('THH'), _p('HHH')
        first = stats.simulate(a, b, 5000, seed=7)
        second = stats.Simulation(seed=7, block_size=4096).run(
            a, b, 5000, threads=2)
        self.assertEqual(first.wins_a, second.wins_a)
        self.assertEqual(first.exact, Fraction(7, 8))
        self.assertLess(abs(first.z_score), 5)

    def test_block_split(self):
        a, b = _p('HTHT'), _p('THTT')
        small = stats.Simulation(seed=3, block_size=100).run(a, b, 1000)
        again = stats.Simulation(seed=3, block_size=100).run(
            a, b, 1000, threads=4)
        self.assertEqual(small, again)
        self.assertEqual(small.trials, 1000)
        self.assertTrue(0 <= small.wins_a <= 1000)

    def test_errors(self):
        with self.assertRaises(strings.SameStringError):
            stats.simulate(_p('HHT'), _p('HHT'), 10)

        with self.assertRaises(ValueError):
            stats.simulate(_p('HHT'), _p('HTT'), 0)


if __name__ == '__main__':
    unittest.main()

import unittest
from fractions import Fraction

from penneyante import strings
from penneyante import odds
from penneyante import markov
from penneyante import flipped
from penneyante import verify


def _p(text):
    return strings.parse(text)


class TestFlippedGame(unittest.TestCase):

    def test_q_ratio(self):
        a, b = _p('HHH'), _p('THH')
        q = flipped.q_ratio(a, b)
        self.assertEqual(
            flipped.flipped_win_prob(a, b), q / (1 + q))
        self.assertEqual(flipped.flipped_win_prob(a, b), odds.win_prob(b, a))
        self.assertEqual(flipped.q_ratio(a, _p('TTT')), 1)

        with self.assertRaises(strings.SameStringError):
            flipped.q_ratio(a, a)

    def test_reference_table(self):
        for text, (expected, prob) in verify.FLIPPED_N5.items():
            found = flipped.flipped_best_response(_p(text))
            self.assertEqual(
                {str(s) for s in found.maximizers}, set(expected))
            self.assertEqual(found.prob, prob)

    def test_ties_are_kept(self):
        found = flipped.flipped_best_response(_p('HHHHH'))
        self.assertEqual(
            [str(s) for s in found.maximizers], ['TTTTT', 'HHHHT'])
        self.assertEqual(found.prob, Fraction(1, 2))
        self.assertNotIn(_p('HHHHH'), found.maximizers)

    def test_table(self):
        table = flipped.flipped_table(4, threads=2)
        self.assertEqual(len(table), 16)
        self.assertEqual(
            [str(r.queried) for r in table[:2]], ['TTTT', 'TTTH'])

    def test_optimal_strings(self):
        for n in range(3, 8):
            found = flipped.flipped_optimal_strings(n)
            self.assertEqual(
                found.strings,
                [strings.repeat('T', n), strings.repeat('H', n)])
            self.assertEqual(found.player1_win_prob, Fraction(1, 2))
            self.assertEqual(found.method, 'flipped')

    def test_bad_length(self):
        with self.assertRaises(strings.BadLengthError):
            flipped.flipped_table(13)


class TestEqualityCases(unittest.TestCase):

    def test_even_odds_strings(self):
        for n in range(3, 8):
            heads, tails = strings.repeat('H', n), strings.repeat('T', n)
            self.assertEqual(
                flipped.even_odds_strings(heads),
                [tails, strings.PatternString(n, 2**n - 2)])
            self.assertEqual(
                flipped.even_odds_strings(tails),
                [strings.PatternString(n, 1), heads])
            for b in flipped.even_odds_strings(heads):
                self.assertEqual(flipped.q_ratio(heads, b), 1)

    def test_constant_strings_dominate(self):
        for n in range(3, 8):
            heads, tails = strings.repeat('H', n), strings.repeat('T', n)
            for a in strings.enumerate_strings(n):
                if a in (heads, tails):
                    continue
                self.assertTrue(
                    flipped.q_ratio(a, heads) < 1
                    or flipped.q_ratio(a, tails) < 1, msg=str(a))

            report = flipped.check_equality_cases(n)
            self.assertTrue(report.holds, msg=report.failures)
            self.assertEqual(report.n, n)

    def test_reciprocal_odds(self):
        for a in strings.enumerate_strings(4):
            for b in strings.enumerate_strings(4):
                if a != b:
                    self.assertEqual(
                        flipped.q_ratio(a, b) * flipped.q_ratio(b, a), 1)

    def test_absorbing_chain_agreement(self):
        for a in strings.enumerate_strings(4):
            for b in strings.enumerate_strings(4):
                if a == b:
                    continue
                last = markov.oracle_win_prob(b, a)
                self.assertEqual(flipped.flipped_win_prob(a, b), last)
                self.assertEqual(
                    flipped.q_ratio(a, b),
                    last / markov.oracle_win_prob(a, b))


class TestFourCandidates(unittest.TestCase):

    def test_candidates(self):
        found = flipped.conjecture3_candidates(_p('HTHTT'))
        self.assertEqual(
            [str(s) for s in found], ['TTTTT', 'THTTT', 'THTTH', 'HHHHH'])

        found = flipped.conjecture3_candidates(_p('HHHHH'))
        self.assertEqual(
            [str(s) for s in found], ['TTTTT', 'HHHHT'])

    def test_check(self):
        for n in range(3, 8):
            report = flipped.check_conjecture3(n)
            self.assertTrue(report.holds)
            self.assertEqual(report.checked, 2**n)
            self.assertEqual(report.counterexamples, [])

        data = flipped.report_to_json(flipped.check_conjecture3(5))
        self.assertEqual(
            data, {'n': 5, 'holds': True, 'checked': 32,
                   'counterexamples': []})


if __name__ == '__main__':
    unittest.main()

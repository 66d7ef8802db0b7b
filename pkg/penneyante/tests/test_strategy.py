import unittest
from fractions import Fraction

from penneyante import strings
from penneyante import odds
from penneyante import strategy
from penneyante import verify


def _p(text):
    return strings.parse(text)


class TestBestResponse(unittest.TestCase):

    def test_candidates(self):
        h, t = strategy.candidates(_p('HHTHTT'))
        self.assertEqual(str(h), 'HHHTHT')
        self.assertEqual(str(t), 'THHTHT')

    def test_reference_tables(self):
        for text, (responder, prob) in verify.BEST_RESPONSES.items():
            found = strategy.best_response(_p(text))
            self.assertEqual(str(found.responder), responder)
            self.assertEqual(found.prob, prob)

    def test_runner_up(self):
        found = strategy.best_response(_p('HTHH'))
        self.assertEqual(str(found.responder), 'THTH')
        self.assertEqual(str(found.runner_up), 'HHTH')
        self.assertEqual(
            found.runner_up_prob, odds.win_prob(_p('HHTH'), _p('HTHH')))
        self.assertFalse(found.degenerate)

    def test_degenerate(self):
        found = strategy.best_response(_p('TTTT'))
        self.assertEqual(str(found.responder), 'HTTT')
        self.assertEqual(found.prob, Fraction(15, 16))
        self.assertTrue(found.degenerate)
        self.assertTrue(found.verified)

    def test_bruteforce_agrees(self):
        for n in (3, 4, 5, 6):
            for a in strings.enumerate_strings(n):
                fast = strategy.best_response(a)
                brute = strategy.best_response_bruteforce(a)
                self.assertEqual(fast.responder, brute.responder)
                self.assertEqual(fast.prob, brute.prob)

    def test_best_response_probs(self):
        probs = strategy.best_response_probs(5)
        self.assertEqual(len(probs), 32)
        for a in strings.enumerate_strings(5):
            self.assertEqual(probs[a.bits], strategy.best_response(a).prob)

        heads = sorted(probs[16:], reverse=True)
        self.assertEqual(heads[:2], [Fraction(31, 32), Fraction(15, 16)])
        self.assertEqual(heads[-1], Fraction(17, 26))

    def test_table(self):
        table = strategy.best_response_table(3, threads=2)
        self.assertEqual(len(table), 8)
        self.assertEqual(str(table[-1].responder), 'THH')
        self.assertEqual(table[-1].prob, Fraction(7, 8))

    def test_bruteforce_bad_length(self):
        with self.assertRaises(strings.BadLengthError):
            strategy.best_response_bruteforce(strings.repeat('H', 15))


class TestOptimalStrings(unittest.TestCase):

    def test_bruteforce(self):
        found = strategy.optimal_strings_bruteforce(3)
        self.assertEqual(
            [str(s) for s in found.strings], ['THT', 'THH', 'HTT', 'HTH'])
        self.assertEqual(found.player1_win_prob, Fraction(1, 3))
        self.assertEqual(found.method, 'brute')

        found = strategy.optimal_strings_bruteforce(4)
        self.assertEqual(
            [str(s) for s in found.strings], ['THTT', 'HTHH'])

        found = strategy.optimal_strings_bruteforce(5)
        self.assertEqual(
            [str(s) for s in found.strings], ['THHTT', 'HTTHH'])
        self.assertEqual(found.player1_win_prob, Fraction(9, 26))

    def test_csirik_matches_bruteforce(self):
        for n in range(5, 10):
            brute = strategy.optimal_strings_bruteforce(n)
            rule = strategy.optimal_strings_csirik(n)
            self.assertEqual(rule.strings, brute.strings)
            self.assertEqual(rule.player1_win_prob, brute.player1_win_prob)
            self.assertEqual(rule.method, 'csirik')

        self.assertEqual(len(strategy.optimal_strings_csirik(7).strings), 6)

        with self.assertRaises(strings.BadLengthError):
            strategy.optimal_strings_csirik(4)

    def test_csirik_shape(self):
        for s in strategy.optimal_strings_csirik(8).strings:
            text = str(s)
            if text.startswith('H'):
                self.assertTrue(text.startswith('HT'))
                self.assertTrue(text.endswith('THH'))
            else:
                self.assertTrue(text.startswith('TH'))
                self.assertTrue(text.endswith('HTT'))

    def test_cstar(self):
        self.assertEqual(strategy.count_cstar(4), 1)
        self.assertEqual(
            [strategy.count_cstar(m) for m in range(5, 11)],
            [1, 3, 5, 11, 21, 43])
        self.assertEqual(
            [str(s) for s in strategy.cstar_strings(4)], ['HTTH'])
        for s in strategy.cstar_strings(7):
            text = str(s)
            self.assertTrue(text.startswith('HT') and text.endswith('TH'))

    def test_nontransitive_cycle(self):
        cycle = strategy.find_nontransitive_cycle(3)
        self.assertEqual(
            [str(s) for s in cycle], ['THH', 'TTH', 'HTT', 'HHT'])
        for n in (4, 5, 6):
            cycle = strategy.find_nontransitive_cycle(n)
            self.assertGreaterEqual(len(cycle), 3)
            for i, s in enumerate(cycle):
                nxt = cycle[(i + 1) % len(cycle)]
                self.assertGreater(odds.win_prob(nxt, s), Fraction(1, 2))


if __name__ == '__main__':
    unittest.main()

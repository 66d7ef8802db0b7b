import unittest
from fractions import Fraction

from penneyante import strings
from penneyante import odds
from penneyante import verify


def _p(text):
    return strings.parse(text)


class TestWinProb(unittest.TestCase):

    def test_win_prob(self):
        self.assertEqual(odds.win_prob(_p('THH'), _p('HHH')), Fraction(7, 8))
        self.assertEqual(odds.win_prob(_p('HHT'), _p('HTH')), Fraction(2, 3))
        self.assertEqual(odds.win_prob(_p('HTH'), _p('HHH')), Fraction(3, 5))
        self.assertEqual(odds.win_prob(_p('HHH'), _p('TTT')), Fraction(1, 2))

    def test_symmetry(self):
        for a in strings.enumerate_strings(4):
            for b in strings.enumerate_strings(4):
                if a == b:
                    continue
                self.assertEqual(
                    odds.win_prob(a, b) + odds.win_prob(b, a), 1)
                self.assertEqual(
                    odds.win_prob(
                        strings.complement(a), strings.complement(b)),
                    odds.win_prob(a, b))

    def test_errors(self):
        with self.assertRaises(strings.SameStringError):
            odds.win_prob(_p('HTH'), _p('HTH'))

        with self.assertRaises(strings.LengthMismatchError):
            odds.win_prob(_p('HTH'), _p('HTHH'))

    def test_odds(self):
        self.assertEqual(odds.odds(Fraction(7, 8)), (7, 1))
        self.assertEqual(odds.odds(Fraction(2, 6)), (1, 2))

    def test_pair_terms(self):
        a = _p('HTHH')
        self_a, self_b = odds.pair_terms(a)
        self.assertEqual(int(self_a[a.bits]), 0)
        self.assertEqual(int(self_b[a.bits]), 0)
        for b in strings.enumerate_strings(4):
            if b == a:
                continue
            self.assertEqual(
                Fraction(int(self_a[b.bits]),
                         int(self_a[b.bits] + self_b[b.bits])),
                odds.win_prob(b, a))

    def test_maximizers(self):
        a = _p('HHH')
        self_a, self_b = odds.pair_terms(a)
        indices, prob = odds.maximizers(self_a, self_b, exclude=a.bits)
        self.assertEqual(indices, [_p('THH').bits])
        self.assertEqual(prob, Fraction(7, 8))

        indices, prob = odds.minimizers(self_a, self_b, exclude=a.bits)
        self.assertEqual(prob, Fraction(1, 2))
        self.assertEqual(indices, [_p('TTT').bits, _p('HHT').bits])


class TestProbMatrix(unittest.TestCase):

    def test_matrix_n3(self):
        matrix = odds.prob_matrix(3)
        names = [str(s) for s in matrix.strings]
        self.assertEqual(names, list(verify.N3_MATRIX))
        for row, expected in verify.N3_MATRIX.items():
            for col, value in zip(names, expected):
                if value is not None:
                    self.assertEqual(matrix.entry(_p(row), _p(col)), value)

    def test_threads(self):
        self.assertEqual(
            odds.prob_matrix(4, threads=3).entries,
            odds.prob_matrix(4).entries)

    def test_rows(self):
        headers, rows = odds.prob_matrix(3).to_rows()
        self.assertEqual(headers[0], 'B\\A')
        self.assertEqual(headers[1], 'HHH')
        self.assertEqual(rows[0][1], '-')
        self.assertEqual(rows[4][:2], ['THH', '7/8'])
        self.assertEqual(len(rows), 8)

    def test_json(self):
        data = odds.prob_matrix(3).to_json()
        self.assertEqual(data['n'], 3)
        self.assertEqual(data['entries']['THH']['HHH'], '7/8')
        self.assertNotIn('THH', data['entries']['THH'])

    def test_bad_length(self):
        with self.assertRaises(strings.BadLengthError):
            odds.prob_matrix(11)


if __name__ == '__main__':
    unittest.main()

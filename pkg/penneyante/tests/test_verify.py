
import unittest
from unittest import mock

from penneyante import strings
from penneyante import sequence
from penneyante import verify


class TestChecks(unittest.TestCase):

    def setUp(self):
        sequence.reset()

    def tearDown(self):
        sequence.reset()

    def test_reference_checks(self):
        names = [
            'n3-matrix', 'best-responses', 'cn-values', 'alpha-digits',
            'flipped-n5', 'nontransitive-cycle']
        results = verify.run_suite(threads=2, names=names)
        self.assertEqual([r.name for r in results], names)
        for result in results:
            self.assertTrue(result.passed, msg=result.detail)

    def test_quick_suite(self):
        results = verify.run_suite()
        self.assertEqual(len(results), len(verify.CHECKS))
        failed = [(r.name, r.detail) for r in results if not r.passed]
        self.assertEqual(failed, [])

    def test_unknown_names(self):
        self.assertEqual(verify.run_suite(names=['other']), [])

    def test_error_is_a_failure(self):
        def broken(full=False, threads=1):
            raise strings.BadLengthError('too long')

        with mock.patch.object(verify, 'CHECKS', [('broken', broken)]):
            results = verify.run_suite()
        self.assertEqual(len(results), 1)
        self.assertFalse(results[0].passed)
        self.assertEqual(results[0].detail, 'BadLengthError: too long')

    def test_reference_tables(self):
        self.assertEqual(len(verify.N3_MATRIX), 8)
        for row, values in verify.N3_MATRIX.items():
            self.assertEqual(values.count(None), 1)
        self.assertEqual(len(verify.BEST_RESPONSES), 24)
        self.assertEqual(len(verify.FLIPPED_N5), 16)
        self.assertEqual(int(verify.C25_BINARY, 2), verify.C25)


if __name__ == '__main__':
    unittest.main()

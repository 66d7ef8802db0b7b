# -*- coding: utf-8 -*-

"""Cross-module property checks."""

import collections as _collections
import fractions as _fractions
import logging as _logging

import numpy as _np

from . import utils as _utils
from . import config as _config
from . import strings as _strings
from . import correlation as _correlation
from . import odds as _odds
from . import markov as _markov
from . import strategy as _strategy
from . import sequence as _sequence
from . import flipped as _flipped
from . import stats as _stats


_logger = _logging.getLogger(__name__)

F = _fractions.Fraction

CheckResult = _collections.namedtuple(
    'CheckResult', ['name', 'passed', 'detail'])
CheckResult.__doc__ = """Outcome of one property check."""

# Rows are B, columns are A: P(B appears before A), n = 3.
N3_MATRIX = {
    'HHH': [None, F(1, 2), F(2, 5), F(2, 5), F(1, 8), F(5, 12), F(3, 10), F(1, 2)],
    'HHT': [F(1, 2), None, F(2, 3), F(2, 3), F(1, 4), F(5, 8), F(1, 2), F(7, 10)],
    'HTH': [F(3, 5), F(1, 3), None, F(1, 2), F(1, 2), F(1, 2), F(3, 8), F(7, 12)],
    'HTT': [F(3, 5), F(1, 3), F(1, 2), None, F(1, 2), F(1, 2), F(3, 4), F(7, 8)],
    'THH': [F(7, 8), F(3, 4), F(1, 2), F(1, 2), None, F(1, 2), F(1, 3), F(3, 5)],
    'THT': [F(7, 12), F(3, 8), F(1, 2), F(1, 2), F(1, 2), None, F(1, 3), F(3, 5)],
    'TTH': [F(7, 10), F(1, 2), F(5, 8), F(1, 4), F(2, 3), F(2, 3), None, F(1, 2)],
    'TTT': [F(1, 2), F(3, 10), F(5, 12), F(1, 8), F(2, 5), F(2, 5), F(1, 2), None],
    }

BEST_RESPONSES = {
    'HHH': ('THH', F(7, 8)), 'HHT': ('THH', F(3, 4)),
    'HTH': ('HHT', F(2, 3)), 'HTT': ('HHT', F(2, 3)),
    'THH': ('TTH', F(2, 3)), 'THT': ('TTH', F(2, 3)),
    'TTH': ('HTT', F(3, 4)), 'TTT': ('HTT', F(7, 8)),
    'HHHH': ('THHH', F(15, 16)), 'HHHT': ('THHH', F(7, 8)),
    'HHTH': ('HHHT', F(2, 3)), 'HHTT': ('HHHT', F(2, 3)),
    'HTHH': ('THTH', F(9, 14)), 'HTHT': ('HHTH', F(5, 7)),
    'HTTH': ('HHTT', F(2, 3)), 'HTTT': ('HHTT', F(2, 3)),
    'THHH': ('TTHH', F(2, 3)), 'THHT': ('TTHH', F(2, 3)),
    'THTH': ('TTHT', F(5, 7)), 'THTT': ('HTHT', F(9, 14)),
    'TTHH': ('TTTH', F(2, 3)), 'TTHT': ('TTTH', F(2, 3)),
    'TTTH': ('HTTT', F(7, 8)), 'TTTT': ('HTTT', F(15, 16)),
    }

CN_VALUES = [4, 2, 2, 2, 6, 10, 22, 42, 86, 166, 338, 666, 1342]
C25 = 1363510
C25_BINARY = '101001100111000110110'

ALPHA_ROUNDED = '0.040626'
# Both listings start after the first EXPANSION_OFFSET digits.
ALPHA_EXPANSION = (
    '001010011001100111010000101011000001011010010011010100101')
ALPHA_ONE_BITS = [3, 5, 8, 9, 12, 13, 16, 17, 18, 20]

# Flipped game, n = 5; a itself is never a response.
FLIPPED_N5 = {
    'HHHHH': (['HHHHT', 'TTTTT'], F(1, 2)),
    'HHHHT': (['TTTTT'], F(31, 46)),
    'HHHTH': (['HHTHH', 'HHTHT'], F(2, 3)),
    'HHHTT': (['TTTTT'], F(31, 44)),
    'HHTHH': (['HHHHH'], F(7, 11)),
    'HHTHT': (['HTHTH'], F(10, 13)),
    'HHTTH': (['HTTHT'], F(9, 13)),
    'HHTTT': (['TTTTT'], F(31, 40)),
    'HTHHH': (['HHHHH'], F(3, 4)),
    'HTHHT': (['THHTT'], F(17, 26)),
    'HTHTH': (['HHHHH'], F(3, 5)),
    'HTHTT': (['THTTH', 'THTTT'], F(17, 24)),
    'HTTHH': (['HHHHH'], F(15, 22)),
    'HTTHT': (['TTTTT'], F(31, 48)),
    'HTTTH': (['HHHHH'], F(15, 23)),
    'HTTTT': (['TTTTT'], F(31, 32)),
    }

# Player II probabilities to 8 decimals: n -> (opt-opt, rand-opt).
MIX_TABLE = {
    5: ('0.65384615', '0.71868171', '0.46497915'),
    6: ('0.66000000', '0.69865016', '0.47844501'),
    7: ('0.66326531', '0.68739336', '0.48728813'),
    8: ('0.66494845', '0.67913922', '0.49267595'),
    9: ('0.66580311', '0.67411092', '0.49585625'),
    10: ('0.66623377', '0.67094023', '0.49768613'),
    11: ('0.66644993', '0.66910562', '0.49872187'),
    12: ('0.66655823', '0.66803837', '0.49930014'),
    13: ('0.66661243', '0.66743344', '0.49961965'),
    14: ('0.66663954', '0.66708843', '0.49979460'),
    15: ('0.66665310', '0.66689731', None),
    16: ('0.66665989', '0.66679196', None),
    17: ('0.66666328', None, None),
    18: ('0.66666497', None, None),
    19: ('0.66666582', None, None),
    20: ('0.66666624', None, None),
    21: ('0.66666645', None, None),
    22: ('0.66666656', None, None),
    23: ('0.66666661', None, None),
    24: ('0.66666664', None, None),
    }

TABLE_TOLERANCE = F(1, 10**6)
FLIPPED_EQUALITY_MAX_N = 10
PREFIX_MIN_N = 20
PREFIX_MAX_N = 60
RESIDUAL_BOUND_EVEN = 0.4
RESIDUAL_BOUND_ODD = 1.0
SIM_MAX_Z = 4.0

# (quick, full) sizes.
_SIZES = {
    'oracle': (5, 8),
    'flipped_oracle': (5, 7),
    'brute_cn': (8, 12),
    'csirik_cn': (12, 15),
    'residual': (40, 60),
    'pair_count': (5, 7),
    'admissible': (5, 8),
    'flipped_optimum': (6, 10),
    'flipped_candidates': (7, 10),
    'opt_opt': (10, 24),
    'rand_opt': (10, 16),
    'opt_rand': (8, 14),
    'sim_pairs': (5, 20),
    'sim_trials': (10**4, 10**5),
    }


def _size(name, full):
    return _SIZES[name][1 if full else 0]


def _p(text):
    return _strings.parse(text)


def check_n3_matrix(full=False, threads=1):
    """Compare the n = 3 probability matrix with the reference fractions."""
    matrix = _odds.prob_matrix(3, threads)
    names = [str(s) for s in matrix.strings]
    if names != list(N3_MATRIX):
        return False, 'unexpected order {0}'.format(names)
    wrong = []
    for row, expected in N3_MATRIX.items():
        for col, value in zip(names, expected):
            if value is None:
                continue
            if matrix.entry(_p(row), _p(col)) != value:
                wrong.append('{0}/{1}'.format(row, col))
    return len(wrong) == 0, 'mismatches: {0}'.format(wrong or 'none')


def check_oracle(full=False, threads=1):
    """Compare Conway's formula with the absorbing chain for every pair."""
    n_max = _size('oracle', full)
    checked = 0
    for n in range(3, n_max + 1):
        strings = list(_strings.enumerate_strings(n))

        def row(a):
            return [
                b for b in strings
                if b != a and _odds.win_prob(a, b) != _markov.oracle_win_prob(
                    a, b)]

        for bad in _utils.parallel_map(row, strings, threads):
            if len(bad) > 0:
                return False, 'disagreement at n={0}: {1}'.format(n, bad[0])
        checked += len(strings) * (len(strings) - 1)
    return True, '{0} ordered pairs, n=3..{1}'.format(checked, n_max)


def check_best_responses(full=False, threads=1):
    """Compare the n = 3, 4 best responses with the reference table."""
    wrong = []
    for text, (responder, prob) in BEST_RESPONSES.items():
        found = _strategy.best_response(_p(text))
        if str(found.responder) != responder or found.prob != prob:
            wrong.append(text)
    return len(wrong) == 0, 'mismatches: {0}'.format(wrong or 'none')


def check_cn_values(full=False, threads=1):
    """Check c_n from the recurrence against both enumerations."""
    recurrence = [_sequence.c(n).value for n in range(3, 16)]
    if recurrence != CN_VALUES:
        return False, 'recurrence gives {0}'.format(recurrence)

    for n in range(3, _size('brute_cn', full) + 1):
        count = len(_strategy.optimal_strings_bruteforce(n).strings)
        if count != _sequence.c(n).value:
            return False, 'brute force gives c_{0} = {1}'.format(n, count)

    for n in range(_strategy.CSIRIK_MIN_N, _size('csirik_cn', full) + 1):
        count = len(_strategy.optimal_strings_csirik(n).strings)
        if count != _sequence.c(n).value:
            return False, 'enumeration gives c_{0} = {1}'.format(n, count)

    value = _sequence.c(25).value
    if value != C25 or format(value, 'b') != C25_BINARY:
        return False, 'c_25 = {0}'.format(value)
    return True, 'c_3..c_15 and c_25 = {0} ({1})'.format(value, C25_BINARY)


def check_alpha_digits(full=False, threads=1):
    """Check the binary expansion and the 1-bit positions of alpha."""
    digits = _sequence.binary_digits(
        len(ALPHA_EXPANSION), _sequence.EXPANSION_OFFSET)
    if digits != ALPHA_EXPANSION:
        return False, 'digits {0}'.format(digits)
    positions = _sequence.one_bit_positions(
        len(ALPHA_ONE_BITS), _sequence.EXPANSION_OFFSET)
    if positions != ALPHA_ONE_BITS:
        return False, 'positions {0}'.format(positions)
    approx = _sequence.alpha(64)
    if approx.rounded_digits(6) != ALPHA_ROUNDED:
        return False, 'alpha rounds to {0}'.format(approx.rounded_digits(6))
    return True, 'alpha = {0}...'.format(approx.truncated_digits(7))


def check_cn_bounds(full=False, threads=1):
    """Check the c_n bounds, the prefix agreement and the d_n residuals."""
    violations = _sequence.cn_bounds_violations(200)
    if len(violations) > 0:
        return False, 'bounds fail at n={0}'.format(violations)

    approx = _sequence.alpha(PREFIX_MAX_N + 32)
    for n in range(PREFIX_MIN_N, PREFIX_MAX_N + 1):
        found = _sequence.prefix_agreement(n, approx)
        if found.common_bits < n//2 - 2:
            return False, 'c_{0} shares {1} leading bits with alpha'.format(
                n, found.common_bits)

    worst = {0: 0.0, 1: 0.0}
    for row in _sequence.dn_deviation(_size('residual', full), n_min=8):
        worst[row.n % 2] = max(worst[row.n % 2], row.residual)
    passed = (worst[0] <= RESIDUAL_BOUND_EVEN
              and worst[1] <= RESIDUAL_BOUND_ODD)
    return passed, 'largest residuals: even {0:.4f}, odd {1:.4f}'.format(
        worst[0], worst[1])


def check_pair_counts(full=False, threads=1):
    """Compare pair counts by Conway number with autocorrelation classes."""
    rng = _np.random.default_rng(_config.DEFAULT_SEED)
    m_max = _size('pair_count', full)
    for m in range(3, m_max + 1):
        constraints = [(None, None)]
        for _ in range(2):
            x_len = int(rng.integers(1, m))
            y_len = int(rng.integers(1, m))
            constraints.append((
                _strings.Fragment(x_len, int(rng.integers(0, 1 << x_len))),
                _strings.Fragment(y_len, int(rng.integers(0, 1 << y_len)))))
        for x, y in constraints:
            pairs = _correlation.correlation_pairs_table(m, x, y)
            classes = _correlation.autocorr_suffix_class_table(2*m, x, y)
            if not _np.array_equal(pairs, classes):
                return False, 'tables differ at m={0}, {1}, {2}'.format(
                    m, x, y)
    return True, 'm=3..{0}'.format(m_max)


def check_admissible_autocorrelations(full=False, threads=1):
    """Check the autocorrelations congruent to 1 mod 2^m."""
    m_max = _size('admissible', full)
    for m in range(2, m_max + 1):
        for length in (2*m, 2*m + 1, 2*m + 2):
            if length < 4:
                continue
            found = _correlation.admissible_autocorrelations_mod(length, m)
            if not found <= _correlation.expected_autocorrelation_forms(
                    length, m):
                return False, 'unexpected values at length {0}, m={1}'.format(
                    length, m)
    return True, 'm=2..{0}'.format(m_max)


def check_cstar(full=False, threads=1):
    """Check the c* identities and the finite-sum identity of c_n."""
    if not _sequence.cstar_identities_check(12):
        return False, 'c* identities fail'
    if not _sequence.finite_sum_identity_check(30):
        return False, 'finite-sum identity fails'
    for m in range(_strategy.CSTAR_MIN_M, 13):
        if _sequence.c(m + 1).value != 2*_sequence.cstar_recurrence(m):
            return False, 'c_{0} != 2 c*_{1}'.format(m + 1, m)
    return True, 'm up to 12'


def check_flipped_optimum(full=False, threads=1):
    """Check that H^n and T^n are the optimal flipped-game strings."""
    n_max = _size('flipped_optimum', full)
    for n in range(3, n_max + 1):
        found = _flipped.flipped_optimal_strings(n, threads)
        expected = [
            _strings.repeat(_strings.TAILS, n),
            _strings.repeat(_strings.HEADS, n)]
        if found.strings != expected or found.player1_win_prob != F(1, 2):
            return False, 'n={0}: {1}'.format(
                n, [str(s) for s in found.strings])
    return True, 'n=3..{0}'.format(n_max)


def check_flipped_n5(full=False, threads=1):
    """Compare the n = 5 flipped best responses with the reference table."""
    wrong = []
    for text, (expected, prob) in FLIPPED_N5.items():
        found = _flipped.flipped_best_response(_p(text))
        if {str(s) for s in found.maximizers} != set(expected) or (
                found.prob != prob):
            wrong.append(text)
    return len(wrong) == 0, 'mismatches: {0}'.format(wrong or 'none')


def check_flipped_equalities(full=False, threads=1):
    """Check the even-odds cases and the flipped odds against the chain."""
    for n in range(3, FLIPPED_EQUALITY_MAX_N + 1):
        report = _flipped.check_equality_cases(n)
        if not report.holds:
            return False, 'n={0}: {1}'.format(n, report.failures[0])

    n_max = _size('flipped_oracle', full)
    for n in range(3, n_max + 1):
        strings = list(_strings.enumerate_strings(n))

        def row(a):
            return [
                b for b in strings if b != a and _flipped.q_ratio(a, b) != (
                    _markov.oracle_win_prob(b, a)
                    / _markov.oracle_win_prob(a, b))]

        for bad in _utils.parallel_map(row, strings, threads):
            if len(bad) > 0:
                return False, 'odds differ from the chain at n={0}'.format(n)
    return True, 'equality cases n=3..{0}, chain odds n=3..{1}'.format(
        FLIPPED_EQUALITY_MAX_N, n_max)


def check_flipped_candidates(full=False, threads=1):
    """Check that flipped best responses are among the four candidates."""
    n_max = _size('flipped_candidates', full)
    for n in range(3, n_max + 1):
        report = _flipped.check_conjecture3(n, threads)
        if not report.holds:
            return False, 'fails at n={0} for {1}'.format(
                n, report.counterexamples[0][0])
    return True, 'n=3..{0}'.format(n_max)


def check_strategy_mix(full=False, threads=1):
    """Check the random-versus-optimal probabilities."""
    for n in range(5, _size('opt_opt', full) + 1):
        value = _utils.render_decimal(_stats.p_opt_opt(n), 8)
        if value != MIX_TABLE[n][0]:
            return False, 'opt-opt n={0}: {1}'.format(n, value)

    for n in range(5, _size('rand_opt', full) + 1):
        value = _stats.p_rand_opt(n)
        if abs(value - F(MIX_TABLE[n][1])) > TABLE_TOLERANCE:
            return False, 'rand-opt n={0}: {1}'.format(
                n, _utils.render_decimal(value, 8))

    for n in range(5, _size('opt_rand', full) + 1):
        value = _stats.p_opt_rand(n, threads=threads)
        if abs(value - F(MIX_TABLE[n][2])) > TABLE_TOLERANCE:
            return False, 'opt-rand n={0}: {1}'.format(
                n, _utils.render_decimal(value, 8))
    return True, 'opt-opt, rand-opt and opt-rand tables'


def check_simulation(full=False, threads=1):
    """Compare seeded simulations with the exact probabilities."""
    rng = _np.random.default_rng(_config.DEFAULT_SEED)
    trials = _size('sim_trials', full)
    worst = 0.0
    for _ in range(_size('sim_pairs', full)):
        a_bits, b_bits = rng.choice(64, size=2, replace=False)
        a = _strings.PatternString(6, int(a_bits))
        b = _strings.PatternString(6, int(b_bits))
        result = _stats.simulate(a, b, trials, threads=threads)
        worst = max(worst, abs(result.z_score))
        if result != _stats.simulate(a, b, trials, threads=threads):
            return False, 'rerun differs for {0} {1}'.format(a, b)
    return worst <= SIM_MAX_Z, 'largest |z| {0:.3f}'.format(worst)


def check_nontransitive(full=False, threads=1):
    """Check that following best responses closes a nontransitive cycle."""
    for n in range(3, 9):
        cycle = _strategy.find_nontransitive_cycle(n)
        if len(cycle) < 3:
            return False, 'n={0}: cycle of length {1}'.format(n, len(cycle))
        for i, s in enumerate(cycle):
            nxt = cycle[(i + 1) % len(cycle)]
            if _odds.win_prob(nxt, s) <= F(1, 2):
                return False, 'n={0}: {1} does not beat {2}'.format(n, nxt, s)
    return True, 'n=3..8'


CHECKS = [
    ('n3-matrix', check_n3_matrix),
    ('oracle-agreement', check_oracle),
    ('best-responses', check_best_responses),
    ('cn-values', check_cn_values),
    ('alpha-digits', check_alpha_digits),
    ('cn-bounds', check_cn_bounds),
    ('pair-counts', check_pair_counts),
    ('admissible-autocorrelations', check_admissible_autocorrelations),
    ('cstar-identities', check_cstar),
    ('flipped-optimum', check_flipped_optimum),
    ('flipped-n5', check_flipped_n5),
    ('flipped-equalities', check_flipped_equalities),
    ('flipped-candidates', check_flipped_candidates),
    ('strategy-mix', check_strategy_mix),
    ('simulation', check_simulation),
    ('nontransitive-cycle', check_nontransitive),
    ]


def run_suite(full=False, threads=1, names=None):
    """Run the property checks in order.

    Args:
        full (bool): use the larger n ranges.
        threads (int): worker threads.
        names (list, optional): run only these checks.

    Returns:
        list of CheckResult.

    """
    results = []
    for name, check in CHECKS:
        if names is not None and name not in names:
            continue
        _logger.info('running %s', name)
        try:
            passed, detail = check(full=full, threads=threads)
        except _strings.PenneyError as e:
            passed, detail = False, '{0}: {1}'.format(
                type(e).__name__, e.message)
        results.append(CheckResult(name, bool(passed), detail))
    return results

# -*- coding: utf-8 -*-

"""The flipped game, in which the string appearing last wins."""

import collections as _collections

import numpy as _np

from . import utils as _utils
from . import config as _config
from . import strings as _strings
from . import correlation as _correlation
from . import odds as _odds
from . import strategy as _strategy


FlippedBestResponse = _collections.namedtuple(
    'FlippedBestResponse', ['queried', 'maximizers', 'prob'])
FlippedBestResponse.__doc__ = """All flipped-game best responses to a string."""


CandidateReport = _collections.namedtuple(
    'CandidateReport', ['n', 'holds', 'checked', 'counterexamples'])
CandidateReport.__doc__ = """Outcome of the four-candidate check.

counterexamples lists (queried, maximizers, allowed) tuples.
"""


def q_ratio(a, b):
    """Return the flipped-game odds in favor of a.

    q(a, b) = (C(a,a) - C(a,b)) / (C(b,b) - C(b,a)).

    Raises:
        LengthMismatchError: if the lengths differ.
        SameStringError: if a == b.

    """
    _strings.check_pair(a, b)
    n = a.length
    num = (_correlation.conway_value(n, a.bits, a.bits)
           - _correlation.conway_value(n, a.bits, b.bits))
    den = (_correlation.conway_value(n, b.bits, b.bits)
           - _correlation.conway_value(n, b.bits, a.bits))
    return _odds.ExactProb(num, den)


def flipped_win_prob(a, b):
    """Return the probability that a appears after b."""
    return _odds.win_prob(b, a)


def _scan_length(n):
    _strings.check_length(n, max_length=_config.FLIPPED_MAX_N)


def flipped_best_response(a):
    """Return every b maximizing P(b appears after a), b != a.

    Args:
        a (PatternString): Player I string, length up to 12.

    Returns:
        the FlippedBestResponse.

    """
    _scan_length(a.length)
    self_a, self_b = _odds.pair_terms(a)
    indices, prob = _odds.maximizers(self_b, self_a, exclude=a.bits)
    maximizers = [_strings.PatternString(a.length, i) for i in indices]
    return FlippedBestResponse(a, maximizers, prob)


def flipped_table(n, threads=1):
    """Return the flipped best responses to every string of length n."""
    _scan_length(n)
    return _utils.parallel_map(
        flipped_best_response, list(_strings.enumerate_strings(n)), threads)


def _worst_case(a):
    self_a, self_b = _odds.pair_terms(a)
    return _odds.minimizers(self_a, self_b, exclude=a.bits)[1]


def flipped_optimal_strings(n, threads=1):
    """Return the strings maximizing Player I's worst flipped probability.

    Args:
        n (int): string length, 3 <= n <= 12.
        threads (int): worker threads.

    Returns:
        the OptimalSet.

    """
    _scan_length(n)
    strings = list(_strings.enumerate_strings(n))
    worst = _utils.parallel_map(_worst_case, strings, threads)
    best = max(worst)
    chosen = [s for s, w in zip(strings, worst) if w == best]
    return _strategy.OptimalSet(n, chosen, best, 'flipped')


EqualityReport = _collections.namedtuple(
    'EqualityReport', ['n', 'holds', 'failures'])
EqualityReport.__doc__ = """Outcome of the flipped-game equality-case check."""


def even_odds_strings(a):
    """Return every b != a with q(a, b) = 1, in ascending bits order."""
    _scan_length(a.length)
    self_a, self_b = _odds.pair_terms(a)
    indices = _np.flatnonzero((self_a == self_b) & (self_a > 0))
    return _strings.from_bits_array(a.length, indices)


def check_equality_cases(n):
    """Check where the constant strings meet even flipped odds.

    H^n is at even odds exactly with T^n and H^(n-1)T, T^n exactly with
    H^n and T^(n-1)H, and every other string is at odds below 1 against
    H^n or against T^n.

    Args:
        n (int): string length, 3 <= n <= 12.

    Returns:
        the EqualityReport.

    """
    _scan_length(n)
    top = (1 << n) - 1
    heads = _strings.PatternString(n, top)
    tails = _strings.PatternString(n, 0)
    expected = {
        heads: {tails, _strings.PatternString(n, top - 1)},
        tails: {heads, _strings.PatternString(n, 1)},
        }

    failures = []
    for a, allowed in expected.items():
        found = set(even_odds_strings(a))
        if found != allowed:
            failures.append('{0}: even odds with {1}'.format(
                a, ', '.join(str(s) for s in sorted(found))))

    # q(b, a) = self_b/self_a against a fixed constant string a
    below = _np.zeros(1 << n, dtype=bool)
    for a in (heads, tails):
        self_a, self_b = _odds.pair_terms(a)
        below |= self_b < self_a
    below[[heads.bits, tails.bits]] = True
    for bits in _np.flatnonzero(~below):
        failures.append('{0}: odds >= 1 against both constants'.format(
            _strings.PatternString(n, int(bits))))
    return EqualityReport(n, len(failures) == 0, failures)


def conjecture3_candidates(a):
    """Return {H^n, T^n, a_2..a_n H, a_2..a_n T} without a."""
    n = a.length
    tail = _strings.suffix(a, n - 1)
    allowed = {
        _strings.repeat(_strings.HEADS, n),
        _strings.repeat(_strings.TAILS, n),
        _strings.concat(tail, _strings.Fragment(1, 1)),
        _strings.concat(tail, _strings.Fragment(1, 0)),
    }
    allowed.discard(a)
    return sorted(allowed)


def check_conjecture3(n, threads=1):
    """Check that every flipped best response is one of four candidates.

    Args:
        n (int): string length, 3 <= n <= 12.
        threads (int): worker threads.

    Returns:
        the CandidateReport.

    """
    counterexamples = []
    table = flipped_table(n, threads)
    for row in table:
        allowed = conjecture3_candidates(row.queried)
        if not set(row.maximizers) <= set(allowed):
            counterexamples.append((row.queried, row.maximizers, allowed))
    return CandidateReport(
        n, len(counterexamples) == 0, len(table), counterexamples)


def report_to_json(report):
    """Return the JSON representation of a CandidateReport."""
    return {
        'n': report.n,
        'holds': report.holds,
        'checked': report.checked,
        'counterexamples': [
            {'queried': str(a),
             'maximizers': [str(s) for s in found],
             'allowed': [str(s) for s in allowed]}
            for a, found, allowed in report.counterexamples],
    }

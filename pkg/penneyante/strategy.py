# -*- coding: utf-8 -*-

"""Best responses and optimal strings for Player I."""

import collections as _collections
import logging as _logging

import numpy as _np

from . import utils as _utils
from . import config as _config
from . import strings as _strings
from . import correlation as _correlation
from . import odds as _odds


_logger = _logging.getLogger(__name__)

CSIRIK_MIN_N = 5
CSTAR_MIN_M = 4
MAX_ENUM_LENGTH = 29

_HEAD = _strings.Fragment(1, 1)
_TAIL = _strings.Fragment(1, 0)


class TieDetectedError(_strings.PenneyError):
    """Tie between best responses exception."""

    def __init__(self, message, *args):
        """Initialize object."""
        self.message = message


BestResponse = _collections.namedtuple(
    'BestResponse',
    ['queried', 'responder', 'prob', 'runner_up', 'runner_up_prob',
     'degenerate', 'verified'])
BestResponse.__doc__ = """Player II best response to a queried string.

degenerate is True when one of the two candidates equals the queried
string; verified tells whether a brute-force scan confirmed the result.
"""


OptimalSet = _collections.namedtuple(
    'OptimalSet', ['n', 'strings', 'player1_win_prob', 'method'])
OptimalSet.__doc__ = """Optimal strings for Player I, sorted by bits."""


def candidates(a):
    """Return the two candidates H.a' and T.a', a' = prefix(a, n-1)."""
    a_prime = _strings.prefix(a, a.length - 1)
    return _strings.concat(_HEAD, a_prime), _strings.concat(_TAIL, a_prime)


def best_response(a):
    """Return Player II's best response to a.

    Args:
        a (PatternString): Player I string.

    Returns:
        the BestResponse.

    Raises:
        TieDetectedError: if both candidates tie.

    """
    _strings.check_length(a.length)
    valid = [c for c in candidates(a) if c != a]

    if len(valid) == 2:
        first, second = valid
        p_first = _odds.win_prob(first, a)
        p_second = _odds.win_prob(second, a)
        if p_first == p_second:
            msg = 'Candidates {0} and {1} tie against {2}.'.format(
                first, second, a)
            raise TieDetectedError(msg)
        if p_first > p_second:
            return BestResponse(
                a, first, p_first, second, p_second, False, None)
        return BestResponse(
            a, second, p_second, first, p_first, False, None)

    survivor = valid[0]
    prob = _odds.win_prob(survivor, a)
    if a.length > _config.BRUTE_MAX_N:
        _logger.info('unverified degenerate best response for %s', a)
        return BestResponse(a, survivor, prob, None, None, True, False)

    brute = best_response_bruteforce(a)
    if brute.responder != survivor:
        _logger.warning(
            'degenerate candidate %s beaten by %s against %s',
            survivor, brute.responder, a)
        return brute._replace(degenerate=True)
    return BestResponse(
        a, survivor, prob, brute.runner_up, brute.runner_up_prob,
        True, True)


def best_response_bruteforce(a):
    """Return the best response to a by scanning every b != a.

    Args:
        a (PatternString): Player I string, length up to 14.

    Returns:
        the BestResponse.

    Raises:
        TieDetectedError: if the maximizer is not unique.

    """
    n = a.length
    _strings.check_length(n, max_length=_config.BRUTE_MAX_N)
    self_a, self_b = _odds.pair_terms(a)
    indices, prob = _odds.maximizers(self_a, self_b, exclude=a.bits)
    if len(indices) != 1:
        tied = ', '.join(str(_strings.PatternString(n, i)) for i in indices)
        msg = 'Best responses to {0} tie: {1}.'.format(a, tied)
        raise TieDetectedError(msg)

    best = indices[0]
    self_a[best] = 0
    self_b[best] = 0
    others, runner_prob = _odds.maximizers(self_a, self_b, exclude=a.bits)
    runner_up = _strings.PatternString(n, others[0]) if others else None
    return BestResponse(
        a, _strings.PatternString(n, best), prob, runner_up, runner_prob,
        False, True)


def best_response_table(n, threads=1):
    """Return the best response to every string of length n."""
    return _utils.parallel_map(
        best_response, list(_strings.enumerate_strings(n)), threads)


def _candidate_terms(n, a_words, c_words):
    auto_a = _correlation.autocorrelation_array(n, a_words).astype(_np.int64)
    auto_c = _correlation.autocorrelation_array(n, c_words).astype(_np.int64)
    cross_ac = _correlation.conway_array(n, a_words, c_words).astype(_np.int64)
    cross_ca = _correlation.conway_array(n, c_words, a_words).astype(_np.int64)
    return auto_a - cross_ac, auto_c - cross_ca


def best_response_probs(n):
    """Return the best-response probability for every string of length n.

    The two candidates of every string are evaluated at once on uint64
    arrays; a candidate equal to the string itself is skipped.

    Returns:
        list of exact probabilities, indexed by the packed string.

    """
    _strings.check_length(n, max_length=_odds.MAX_VECTOR_LENGTH)
    words = _strings.bits_array(n)
    shifted = words >> _np.uint64(1)
    head = shifted | _np.uint64(1 << (n - 1))

    num_h, rest_h = _candidate_terms(n, words, head)
    num_t, rest_t = _candidate_terms(n, words, shifted)
    den_h = num_h + rest_h
    den_t = num_t + rest_t

    # p_h > p_t  <=>  num_h*den_t > num_t*den_h, with 0/0 for a == candidate
    take_h = num_h * den_t > num_t * den_h
    take_h |= den_t == 0
    take_h &= den_h != 0

    num = _np.where(take_h, num_h, num_t)
    den = _np.where(take_h, den_h, den_t)
    return [_odds.ExactProb(int(x), int(y)) for x, y in zip(num, den)]


def _closed_form_player1(n):
    return _odds.ExactProb(2**(n - 2) + 1, 3 * 2**(n - 2) + 2)


def optimal_strings_bruteforce(n):
    """Return the strings minimizing the best-response probability.

    Args:
        n (int): string length, 3 <= n <= 14.

    Returns:
        the OptimalSet.

    """
    _strings.check_length(n, max_length=_config.BRUTE_MAX_N)
    probs = best_response_probs(n)
    lowest = min(probs)
    strings = [
        _strings.PatternString(n, bits)
        for bits, p in enumerate(probs) if p == lowest]
    return OptimalSet(n, strings, 1 - lowest, 'brute')


def cstar_words(m):
    """Return the packed strings counted by count_cstar(m) as uint64."""
    _strings.check_length(m, min_length=CSTAR_MIN_M, max_length=28)
    target = _np.uint64((1 << (m - 1)) | 1)
    frame = _np.uint64((0b10 << (m - 2)) | 0b01)
    total = 1 << (m - 4)

    found = []
    for start in range(0, total, _correlation.CHUNK_SIZE):
        stop = min(start + _correlation.CHUNK_SIZE, total)
        words = (
            _np.arange(start, stop, dtype=_np.uint64) << _np.uint64(2)
        ) | frame
        values = _correlation.autocorrelation_array(m, words)
        found.append(words[values == target])
    return _np.concatenate(found)


def count_cstar(m):
    """Count strings of length m starting HT, ending TH, autocorrelation 10..01.

    Args:
        m (int): length, 4 <= m <= 28.

    Returns:
        the exact count.

    """
    return int(len(cstar_words(m)))


def cstar_strings(m):
    """Return the strings counted by count_cstar(m), sorted by bits."""
    return _strings.from_bits_array(m, _np.sort(cstar_words(m)))


def optimal_strings_csirik(n):
    """Return the optimal strings from the prefix autocorrelation rule.

    The strings start with HT, end with THH, and their (n-1)-prefix has
    autocorrelation 1 0...0 1; their complements complete the set.

    Args:
        n (int): string length, 5 <= n <= 29.

    Returns:
        the OptimalSet.

    """
    _strings.check_length(n, min_length=CSIRIK_MIN_N, max_length=MAX_ENUM_LENGTH)
    words = [(int(w) << 1) | 1 for w in cstar_words(n - 1)]
    mask = (1 << n) - 1
    words = sorted(set(words) | {w ^ mask for w in words})
    strings = [_strings.PatternString(n, w) for w in words]
    return OptimalSet(n, strings, _closed_form_player1(n), 'csirik')


def find_nontransitive_cycle(n):
    """Return a cycle of strings, each beating the previous one.

    Follows best responses from H^n until a string repeats.

    Returns:
        list of strings [s_0, ..., s_k-1] with win_prob(s_i+1, s_i) > 1/2,
        indices taken cyclically.

    """
    _strings.check_length(n)
    seen = []
    current = _strings.repeat(_strings.HEADS, n)
    while current not in seen:
        seen.append(current)
        current = best_response(current).responder
    return seen[seen.index(current):]

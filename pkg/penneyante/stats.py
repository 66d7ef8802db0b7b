# -*- coding: utf-8 -*-

"""Exact random-versus-optimal statistics and a seeded simulation."""

import collections as _collections
import fractions as _fractions
import logging as _logging

import numpy as _np

from . import utils as _utils
from . import config as _config
from . import strings as _strings
from . import odds as _odds
from . import strategy as _strategy


_logger = _logging.getLogger(__name__)

EXCLUDE = 'exclude'
INCLUDE_HALF = 'include-half'
INCLUDE_LOSS = 'include-loss'
BEST_VS_RANDOM = 'best-vs-random'
VARIANTS = (BEST_VS_RANDOM, EXCLUDE, INCLUDE_HALF, INCLUDE_LOSS)
DEFAULT_VARIANT = BEST_VS_RANDOM


StrategyMixRow = _collections.namedtuple(
    'StrategyMixRow',
    ['n', 'p_opt_opt', 'p_rand_opt', 'p_opt_rand', 'diag_rand',
     'diag_opt_rand'])
StrategyMixRow.__doc__ = """Player II win probabilities for one n.

diag_rand = 2^n (p_rand_opt - 2/3)/n and
diag_opt_rand = 2^n (1/2 - p_opt_rand)/n.
"""


def p_opt_opt(n):
    """Return Player II's probability when both players play optimally.

    Uses (2^(n-1)+1)/(3 2^(n-2)+2) for n >= 5, brute force below.
    """
    _strings.check_length(n)
    if n < _strategy.CSIRIK_MIN_N:
        return 1 - _strategy.optimal_strings_bruteforce(n).player1_win_prob
    return _fractions.Fraction(2**(n - 1) + 1, 3 * 2**(n - 2) + 2)


def p_rand_opt(n):
    """Return the mean best-response probability over all 2^n strings.

    Args:
        n (int): string length, 3 <= n <= 16.

    Returns:
        the exact probability.

    """
    _strings.check_length(n, max_length=_config.STATS_MAX_N)
    return _utils.exact_mean(_strategy.best_response_probs(n))


def optimal_set(n):
    """Return Player I's optimal strings, by brute force when n < 5."""
    if n < _strategy.CSIRIK_MIN_N:
        return _strategy.optimal_strings_bruteforce(n)
    return _strategy.optimal_strings_csirik(n)


def _random_reply(a, variant):
    self_a, self_b = _odds.pair_terms(a)
    den = self_a + self_b
    probs = [
        _fractions.Fraction(int(x), int(y))
        for i, (x, y) in enumerate(zip(self_a, den)) if i != a.bits]
    total = _utils.exact_sum(probs)
    if variant == EXCLUDE:
        return total / len(probs)
    if variant in (INCLUDE_HALF, BEST_VS_RANDOM):
        return (total + _fractions.Fraction(1, 2)) / (len(probs) + 1)
    return total / (len(probs) + 1)


def _random_reply_approx(a):
    self_a, self_b = _odds.pair_terms(a)
    den = self_a + self_b
    keep = den > 0
    return float(_np.sum(self_a[keep] / den[keep]))


def random_reply_minimizers(n, threads=1):
    """Return the strings a that minimize Player II's random-reply mean.

    Player II draws b uniformly among all 2^n strings; b == a counts as a
    tie worth 1/2. Every a is scanned in floating point first and only the
    near-minimal ones are compared exactly.

    Args:
        n (int): string length, 3 <= n <= 14.
        threads (int): worker threads.

    Returns:
        tuple (sorted list of PatternString, exact minimum).

    """
    _strings.check_length(n, max_length=_config.OPT_RAND_MAX_N)
    strings = list(_strings.enumerate_strings(n))
    approx = _np.array(
        _utils.parallel_map(_random_reply_approx, strings, threads))
    near = _np.flatnonzero(approx - approx.min() <= 1e-9)
    exact = [(strings[i], _random_reply(strings[i], BEST_VS_RANDOM))
             for i in near]
    best = min(p for _, p in exact)
    return [a for a, p in exact if p == best], best


def p_opt_rand_breakdown(n, variant=DEFAULT_VARIANT, threads=1):
    """Return [(a, probability)] for every string a Player I may play.

    Args:
        n (int): string length, 3 <= n <= 14.
        variant (str): 'best-vs-random' lets Player I play the strings
            minimizing Player II's mean when b is uniform over all 2^n
            strings, b == a being a tie worth 1/2. The other variants keep
            Player I on the optimal set: 'exclude' draws b uniformly among
            b != a, 'include-half' also allows b == a as a tie worth 1/2,
            and 'include-loss' allows b == a as a loss for Player II.
        threads (int): worker threads.

    Returns:
        list of (PatternString, Fraction).

    """
    if variant not in VARIANTS:
        msg = 'Unknown variant {0!r}: expected one of {1}.'.format(
            variant, ', '.join(VARIANTS))
        raise ValueError(msg)
    _strings.check_length(n, max_length=_config.OPT_RAND_MAX_N)
    if variant == BEST_VS_RANDOM:
        strings, best = random_reply_minimizers(n, threads)
        return [(a, best) for a in strings]
    strings = optimal_set(n).strings
    values = _utils.parallel_map(
        lambda a: _random_reply(a, variant), strings, threads)
    return list(zip(strings, values))


def p_opt_rand(n, variant=DEFAULT_VARIANT, threads=1):
    """Return Player II's mean probability against Player I's choice.

    The mean is taken uniformly over the strings of the breakdown.
    """
    breakdown = p_opt_rand_breakdown(n, variant, threads)
    return _utils.exact_mean(p for _, p in breakdown)


def strategy_row(n, variant=DEFAULT_VARIANT, threads=1):
    """Return the StrategyMixRow of length n."""
    opt_opt = p_opt_opt(n)
    rand_opt = p_rand_opt(n)
    opt_rand = p_opt_rand(n, variant, threads)
    scale = _fractions.Fraction(2**n, n)
    return StrategyMixRow(
        n, opt_opt, rand_opt, opt_rand,
        scale * (rand_opt - _fractions.Fraction(2, 3)),
        scale * (_fractions.Fraction(1, 2) - opt_rand))


def strategy_table(n_min, n_max, variant=DEFAULT_VARIANT, threads=1):
    """Return the StrategyMixRow list for n_min..n_max."""
    rows = []
    for n in range(n_min, n_max + 1):
        _logger.info('strategy mix n=%d', n)
        rows.append(strategy_row(n, variant, threads))
    return rows


SimulationResult = _collections.namedtuple(
    'SimulationResult',
    ['a', 'b', 'trials', 'wins_a', 'frequency', 'exact', 'std_error',
     'z_score'])
SimulationResult.__doc__ = """Monte Carlo frequency of a appearing first."""


class Simulation():
    """Seeded Monte Carlo runs of the game.

    Trials are split in blocks of fixed size; block i draws its tosses from
    numpy.random.default_rng([seed, i]), so the counts do not depend on the
    number of threads.
    """

    def __init__(self, seed=_config.DEFAULT_SEED,
                 block_size=_config.SIM_BLOCK_SIZE, log=False):
        """Initialize object.

        Args:
            seed (int): 64-bit seed.
            block_size (int): trials per block.
            log (bool): True to use event logging, False otherwise.

        """
        self.seed = int(seed)
        self.block_size = int(block_size)
        self.log = log
        self.logger = None
        self.log_events()

    def log_events(self):
        """Prepare the logger."""
        if self.log:
            self.logger = _logging.getLogger(__name__)

    def run_block(self, a, b, block_index, trials):
        """Return the number of trials of one block won by a."""
        rng = _np.random.default_rng([self.seed, block_index])
        n = a.length
        mask = _np.uint64((1 << n) - 1)
        a_word = _np.uint64(a.bits)
        b_word = _np.uint64(b.bits)

        window = _np.zeros(trials, dtype=_np.uint64)
        active = _np.arange(trials)
        winner_a = _np.zeros(trials, dtype=bool)
        tosses = 0
        while len(active) > 0:
            flips = rng.integers(0, 2, size=len(active), dtype=_np.uint64)
            window[active] = ((window[active] << _np.uint64(1)) | flips) & mask
            tosses += 1
            if tosses < n:
                continue
            current = window[active]
            hit_a = current == a_word
            hit_b = current == b_word
            winner_a[active[hit_a]] = True
            active = active[~(hit_a | hit_b)]
        return int(winner_a.sum())

    def run(self, a, b, trials, threads=1):
        """Simulate trials games of a against b.

        Returns:
            the SimulationResult.

        Raises:
            SameStringError: if a == b.

        """
        _strings.check_pair(a, b)
        if trials < 1:
            msg = 'The number of trials must be positive.'
            raise ValueError(msg)

        blocks = []
        for index, start in enumerate(range(0, trials, self.block_size)):
            blocks.append((index, min(self.block_size, trials - start)))

        try:
            wins = sum(_utils.parallel_map(
                lambda blk: self.run_block(a, b, blk[0], blk[1]),
                blocks, threads))
        except Exception:
            if self.logger is not None:
                self.logger.error('exception', exc_info=True)
            raise

        exact = _odds.win_prob(a, b)
        frequency = wins / trials
        std_error = float(_np.sqrt(float(exact * (1 - exact)) / trials))
        z_score = (frequency - float(exact)) / std_error
        return SimulationResult(
            a, b, trials, wins, frequency, exact, std_error, z_score)


def simulate(a, b, trials, seed=_config.DEFAULT_SEED, threads=1):
    """Run a seeded simulation of a against b."""
    return Simulation(seed=seed).run(a, b, trials, threads)

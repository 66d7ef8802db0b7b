# -*- coding: utf-8 -*-

"""Exact win probabilities from Conway's formula."""

import fractions as _fractions

import numpy as _np

from . import utils as _utils
from . import strings as _strings
from . import correlation as _correlation


ExactProb = _fractions.Fraction
MAX_MATRIX_LENGTH = 10
MAX_VECTOR_LENGTH = 30


def odds(p):
    """Return the odds pair (num, den - num) of a probability."""
    p = ExactProb(p)
    return p.numerator, p.denominator - p.numerator


def win_prob(a, b):
    """Return the probability that a appears before b.

    Uses P = X/(X+Y) with X = C(b,b) - C(b,a) and Y = C(a,a) - C(a,b).

    Args:
        a (PatternString): Player I string.
        b (PatternString): Player II string.

    Returns:
        the exact probability.

    Raises:
        LengthMismatchError: if the lengths differ.
        SameStringError: if a == b.

    """
    _strings.check_pair(a, b)
    n = a.length
    x = (_correlation.conway_value(n, b.bits, b.bits)
         - _correlation.conway_value(n, b.bits, a.bits))
    y = (_correlation.conway_value(n, a.bits, a.bits)
         - _correlation.conway_value(n, a.bits, b.bits))
    return ExactProb(x, x + y)


def pair_terms(a):
    """Return the Conway differences of a against every string b.

    Args:
        a (PatternString): fixed string, length up to 30.

    Returns:
        tuple (self_a, self_b) of int64 arrays indexed by the packed b, with
        self_a = C(a,a) - C(a,b) and self_b = C(b,b) - C(b,a). Both vanish
        at b == a. P(b before a) is self_a/(self_a + self_b).

    """
    n = a.length
    _strings.check_length(n, max_length=MAX_VECTOR_LENGTH)
    others = _strings.bits_array(n)
    a_word = _np.uint64(a.bits)

    auto_a = _correlation.conway_value(n, a.bits, a.bits)
    auto_b = _correlation.autocorrelation_array(n, others).astype(_np.int64)
    cross_ab = _correlation.conway_array(n, a_word, others).astype(_np.int64)
    cross_ba = _correlation.conway_array(n, others, a_word).astype(_np.int64)
    return auto_a - cross_ab, auto_b - cross_ba


def _ratio_extremes(num, rest, exclude, largest):
    den = num + rest
    keep = _np.ones(len(num), dtype=bool)
    if exclude is not None:
        keep[exclude] = False
    keep &= den > 0
    idx = _np.flatnonzero(keep)

    approx = num[idx] / den[idx]
    best = approx.max() if largest else approx.min()
    near = idx[_np.abs(approx - best) <= 1e-9]

    winner = None
    for i in near:
        p = ExactProb(int(num[i]), int(den[i]))
        if winner is None or (p > winner if largest else p < winner):
            winner = p
    indices = [
        int(i) for i in near
        if ExactProb(int(num[i]), int(den[i])) == winner]
    return indices, winner


def maximizers(num, rest, exclude=None):
    """Return the indices maximizing num/(num+rest) and the maximum.

    Args:
        num (numpy.ndarray): integer numerators.
        rest (numpy.ndarray): integer complements, num + rest > 0.
        exclude (int, optional): index left out of the search.

    Returns:
        tuple (sorted list of indices, exact maximum).

    """
    return _ratio_extremes(num, rest, exclude, True)


def minimizers(num, rest, exclude=None):
    """Return the indices minimizing num/(num+rest) and the minimum."""
    return _ratio_extremes(num, rest, exclude, False)


class ProbMatrix():
    """Pairwise win probabilities for all strings of length n."""

    def __init__(self, n, entries):
        """Initialize object.

        Args:
            n (int): string length.
            entries (dict): (row, col) to P(row appears before col).

        """
        self.n = n
        self.entries = entries

    @property
    def strings(self):
        """Return the strings from H...H down to T...T."""
        return list(reversed(list(_strings.enumerate_strings(self.n))))

    def entry(self, row, col):
        """Return P(row appears before col)."""
        return self.entries[(row, col)]

    def to_rows(self):
        """Return the header and rows, cells as 'p/q' text."""
        strings = self.strings
        headers = ['B\\A'] + [str(s) for s in strings]
        rows = []
        for row in strings:
            cells = [str(row)]
            for col in strings:
                if row == col:
                    cells.append('-')
                else:
                    cells.append(_utils.render_fraction(self.entry(row, col)))
            rows.append(cells)
        return headers, rows

    def to_json(self):
        """Return the nested dict row to col to 'p/q'."""
        table = {}
        for (row, col), p in self.entries.items():
            table.setdefault(str(row), {})[str(col)] = (
                _utils.render_fraction(p))
        return {'n': self.n, 'entries': table}


def _matrix_row(row):
    return [
        ((row, col), win_prob(row, col))
        for col in _strings.enumerate_strings(row.length) if col != row]


def prob_matrix(n, threads=1):
    """Return the matrix of P(B appears before A) for all B != A.

    Args:
        n (int): string length, 3 <= n <= 10.
        threads (int): worker threads.

    Returns:
        the ProbMatrix.

    """
    _strings.check_length(n, max_length=MAX_MATRIX_LENGTH)
    entries = {}
    rows = _utils.parallel_map(
        _matrix_row, list(_strings.enumerate_strings(n)), threads)
    for row in rows:
        entries.update(row)
    return ProbMatrix(n, entries)

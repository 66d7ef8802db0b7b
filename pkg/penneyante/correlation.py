# -*- coding: utf-8 -*-

"""Conway numbers (correlations) and autocorrelation counts."""

import collections as _collections

import numpy as _np

from . import strings as _strings


CHUNK_SIZE = 1 << 20
MAX_PAIR_LENGTH = 14
MAX_SCAN_LENGTH = 28


class Correlation(_collections.namedtuple('Correlation', ['n', 'value'])):
    """Conway number of two strings of length n.

    The binary digits of value are delta_1 ... delta_n, delta_1 being the
    most significant one.
    """

    __slots__ = ()

    def delta(self, i):
        """Return delta_i, for 1 <= i <= n."""
        if i < 1 or i > self.n:
            msg = 'Invalid shift index {0}: expected 1 to {1:d}.'.format(
                i, self.n)
            raise ValueError(msg)
        return (self.value >> (self.n - i)) & 1

    @property
    def deltas(self):
        """Return the tuple (delta_1, ..., delta_n)."""
        return tuple(self.delta(i) for i in range(1, self.n + 1))

    @property
    def binary(self):
        """Return the n-digit binary text."""
        return format(self.value, '0{0:d}b'.format(self.n))

    def to_json(self):
        """Return the JSON representation."""
        return {'n': self.n, 'value': self.value, 'binary': self.binary}


def conway_value(n, a_bits, b_bits):
    """Return C(A,B) as an integer for packed words of length n."""
    value = 0
    for k in range(1, n + 1):
        if (a_bits & ((1 << k) - 1)) == (b_bits >> (n - k)):
            value |= 1 << (k - 1)
    return value


def conway(a, b):
    """Return the Conway number C(a, b).

    Bit k-1 of the result is set when the last k characters of a equal the
    first k characters of b.

    Args:
        a (Fragment): first string.
        b (Fragment): second string, same length as a.

    Returns:
        the Correlation.

    Raises:
        LengthMismatchError: if the lengths differ.

    """
    if a.length != b.length:
        msg = 'Strings {0} and {1} have different lengths.'.format(a, b)
        raise _strings.LengthMismatchError(msg)
    return Correlation(a.length, conway_value(a.length, a.bits, b.bits))


def autocorrelation(a):
    """Return C(a, a)."""
    return Correlation(a.length, conway_value(a.length, a.bits, a.bits))


def conway_array(n, a_bits, b_bits, max_overlap=None):
    """Vectorized Conway numbers.

    Args:
        n (int): string length, at most 63.
        a_bits (array-like): packed words of the first strings.
        b_bits (array-like): packed words of the second strings.
        max_overlap (int, optional): only compute overlaps 1..max_overlap.

    Returns:
        uint64 array with the (possibly truncated) Conway numbers.

    """
    a = _np.asarray(a_bits, dtype=_np.uint64)
    b = _np.asarray(b_bits, dtype=_np.uint64)
    if max_overlap is None:
        max_overlap = n

    value = _np.zeros(_np.broadcast(a, b).shape, dtype=_np.uint64)
    for k in range(1, max_overlap + 1):
        mask = _np.uint64((1 << k) - 1)
        match = (a & mask) == (b >> _np.uint64(n - k))
        value |= match.astype(_np.uint64) << _np.uint64(k - 1)
    return value


def autocorrelation_array(n, bits, max_overlap=None):
    """Vectorized autocorrelations."""
    return conway_array(n, bits, bits, max_overlap=max_overlap)


def _constrained_words(length, x_prefix, y_suffix):
    free = length
    base = 0
    if x_prefix is not None:
        free -= x_prefix.length
        base = x_prefix.bits << (length - x_prefix.length)
    shift = 0
    if y_suffix is not None:
        free -= y_suffix.length
        shift = y_suffix.length
        base |= y_suffix.bits
    if free < 0:
        msg = 'Fragments longer than the string.'
        raise _strings.BadLengthError(msg)
    return base, shift, free


def _check_fragment(fragment, m, name):
    if fragment is not None and fragment.length >= m:
        msg = 'The {0} must be shorter than {1:d} characters.'.format(name, m)
        raise _strings.BadLengthError(msg)


def correlation_pairs_table(m, x_prefix=None, y_suffix=None):
    """Count ordered pairs of length-m strings by Conway number.

    The pair (A_1, A_2) is counted under C(A_2, A_1), with A_1 starting with
    x_prefix and A_2 ending with y_suffix when given.

    Returns:
        int64 array of length 2^m indexed by the Conway number.

    """
    _strings.check_length(m, max_length=MAX_PAIR_LENGTH)
    _check_fragment(x_prefix, m, 'prefix')
    _check_fragment(y_suffix, m, 'suffix')

    x_free = m - (x_prefix.length if x_prefix is not None else 0)
    x_base = x_prefix.bits << x_free if x_prefix is not None else 0
    firsts = _np.arange(1 << x_free, dtype=_np.uint64) + _np.uint64(x_base)

    y_len = y_suffix.length if y_suffix is not None else 0
    y_bits = y_suffix.bits if y_suffix is not None else 0
    seconds = (
        (_np.arange(1 << (m - y_len), dtype=_np.uint64) << _np.uint64(y_len))
        | _np.uint64(y_bits))

    counts = _np.zeros(1 << m, dtype=_np.int64)
    for first in firsts:
        values = conway_array(m, seconds, first)
        counts += _np.bincount(values.astype(_np.int64), minlength=1 << m)
    return counts


def count_correlation_pairs(m, k, x_prefix=None, y_suffix=None):
    """Return the number of pairs (A_1, A_2) with C(A_2, A_1) == k.

    Args:
        m (int): string length, 3 <= m <= 14.
        k (int): Conway number, 0 <= k < 2^m.
        x_prefix (Fragment, optional): required start of A_1.
        y_suffix (Fragment, optional): required end of A_2.

    Returns:
        the exact count.

    """
    if k < 0 or k >= 1 << m:
        msg = 'Conway number {0} out of range for length {1}.'.format(k, m)
        raise ValueError(msg)
    return int(correlation_pairs_table(m, x_prefix, y_suffix)[k])


def autocorr_suffix_class_table(length, x_prefix=None, y_suffix=None):
    """Count strings of even length 2m by autocorrelation mod 2^m.

    Returns:
        int64 array of length 2^m indexed by the residue.

    """
    if length % 2 != 0:
        msg = 'Length {0} must be even.'.format(length)
        raise _strings.BadLengthError(msg)
    _strings.check_length(length, min_length=6, max_length=MAX_SCAN_LENGTH)
    m = length // 2
    _check_fragment(x_prefix, m, 'prefix')
    _check_fragment(y_suffix, m, 'suffix')

    base, shift, free = _constrained_words(length, x_prefix, y_suffix)
    counts = _np.zeros(1 << m, dtype=_np.int64)
    for start in range(0, 1 << free, CHUNK_SIZE):
        stop = min(start + CHUNK_SIZE, 1 << free)
        words = (
            (_np.arange(start, stop, dtype=_np.uint64) << _np.uint64(shift))
            | _np.uint64(base))
        low = autocorrelation_array(length, words, max_overlap=m)
        counts += _np.bincount(low.astype(_np.int64), minlength=1 << m)
    return counts


def count_autocorr_suffix_class(length, k, x_prefix=None, y_suffix=None):
    """Return the number of strings whose autocorrelation is k mod 2^m.

    Args:
        length (int): even string length 2m, 6 <= length <= 28.
        k (int): residue, 0 <= k < 2^m.
        x_prefix (Fragment, optional): required start of the string.
        y_suffix (Fragment, optional): required end of the string.

    Returns:
        the exact count.

    """
    m = length // 2
    if k < 0 or k >= 1 << m:
        msg = 'Residue {0} out of range for length {1}.'.format(k, length)
        raise ValueError(msg)
    return int(autocorr_suffix_class_table(length, x_prefix, y_suffix)[k])


def admissible_autocorrelations_mod(length, m):
    """Return the autocorrelations congruent to 1 mod 2^m.

    Args:
        length (int): 2m, 2m+1 or 2m+2.
        m (int): modulus exponent, m >= 2.

    Returns:
        frozenset of the Correlation values found by exhaustive scan.

    """
    if m < 2 or length not in (2*m, 2*m + 1, 2*m + 2):
        msg = 'Length {0} is not 2m, 2m+1 or 2m+2 for m={1}.'.format(
            length, m)
        raise _strings.BadLengthError(msg)
    _strings.check_length(length, min_length=4, max_length=MAX_SCAN_LENGTH)

    low_mask = _np.uint64((1 << m) - 1)
    found = set()
    total = 1 << length
    for start in range(0, total, CHUNK_SIZE):
        stop = min(start + CHUNK_SIZE, total)
        words = _np.arange(start, stop, dtype=_np.uint64)
        values = autocorrelation_array(length, words)
        found.update(int(v) for v in _np.unique(
            values[(values & low_mask) == _np.uint64(1)]))
    return frozenset(Correlation(length, v) for v in found)


def expected_autocorrelation_forms(length, m):
    """Return the admissible forms 1 0...0 1 and 1 0...0 1 0...0 1."""
    if length == 2*m:
        values = [(1 << (2*m - 1)) | 1]
    elif length == 2*m + 1:
        values = [(1 << 2*m) | 1, (1 << 2*m) | (1 << m) | 1]
    elif length == 2*m + 2:
        values = [(1 << (2*m + 1)) | 1, (1 << (2*m + 1)) | (1 << m) | 1]
    else:
        msg = 'Length {0} is not 2m, 2m+1 or 2m+2 for m={1}.'.format(
            length, m)
        raise _strings.BadLengthError(msg)
    return frozenset(Correlation(length, v) for v in values)

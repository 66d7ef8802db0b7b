# -*- coding: utf-8 -*-

"""Head/tail strings packed into integers.

A string a_1 a_2 ... a_n is stored as an n-bit natural number with H=1 and
T=0, the first character being the most significant bit.
"""

import collections as _collections

import numpy as _np


MIN_LENGTH = 3
MAX_LENGTH = 64
HEADS = 'H'
TAILS = 'T'
_CHAR_TO_BIT = {HEADS: 1, TAILS: 0}
_BIT_TO_CHAR = (TAILS, HEADS)


class PenneyError(Exception):
    """Base exception for the game analysis errors."""

    def __init__(self, message, *args):
        """Initialize object."""
        self.message = message


class IllegalCharacterError(PenneyError):
    """Illegal character exception."""

    def __init__(self, message, *args):
        """Initialize object."""
        self.message = message


class BadLengthError(PenneyError):
    """Bad length exception."""

    def __init__(self, message, *args):
        """Initialize object."""
        self.message = message


class LengthMismatchError(PenneyError):
    """Length mismatch exception."""

    def __init__(self, message, *args):
        """Initialize object."""
        self.message = message


class SameStringError(PenneyError):
    """Same string exception."""

    def __init__(self, message, *args):
        """Initialize object."""
        self.message = message


def check_length(length, min_length=MIN_LENGTH, max_length=MAX_LENGTH):
    """Raise BadLengthError if length is outside [min_length, max_length]."""
    if (not isinstance(length, (int, _np.integer))
            or length < min_length or length > max_length):
        msg = 'Invalid length {0}: expected a value in [{1:d}, {2:d}].'.format(
            length, min_length, max_length)
        raise BadLengthError(msg)


class Fragment(_collections.namedtuple('Fragment', ['length', 'bits'])):
    """Packed head/tail fragment of length 1 to 64."""

    __slots__ = ()
    _min_length = 1

    def __new__(cls, length, bits):
        """Validate and create the packed value."""
        check_length(length, min_length=cls._min_length)
        bits = int(bits)
        if bits < 0 or bits >> length:
            msg = 'Bits {0:d} do not fit in {1:d} characters.'.format(
                bits, length)
            raise ValueError(msg)
        return super().__new__(cls, int(length), bits)

    def __str__(self):
        """Return the H/T text."""
        return format_string(self)

    @property
    def mask(self):
        """Return the all-ones word of the same length."""
        return (1 << self.length) - 1

    def to_json(self):
        """Return the JSON representation."""
        return {'n': self.length, 's': format_string(self)}


class PatternString(Fragment):
    """Packed head/tail game string of length 3 to 64."""

    __slots__ = ()
    _min_length = MIN_LENGTH


def _make(length, bits):
    if length >= MIN_LENGTH:
        return PatternString(length, bits)
    return Fragment(length, bits)


def _pack(text, min_length):
    if not isinstance(text, str):
        msg = 'Expected a character string, got {0!r}.'.format(text)
        raise IllegalCharacterError(msg)

    text = text.strip().upper()
    bits = 0
    for char in text:
        if char not in _CHAR_TO_BIT:
            msg = 'Illegal character {0!r} in {1!r}: only H and T.'.format(
                char, text)
            raise IllegalCharacterError(msg)
        bits = (bits << 1) | _CHAR_TO_BIT[char]

    check_length(len(text), min_length=min_length)
    return len(text), bits


def parse(text):
    """Parse a game string.

    Args:
        text (str): H/T characters, case insensitive.

    Returns:
        the PatternString.

    Raises:
        IllegalCharacterError: if text has characters other than H and T.
        BadLengthError: if the length is outside [3, 64].

    """
    return PatternString(*_pack(text, MIN_LENGTH))


def parse_fragment(text):
    """Parse a fragment of length 1 to 64."""
    return Fragment(*_pack(text, 1))


def format_string(a):
    """Return the uppercase H/T text of a packed string."""
    return ''.join(
        _BIT_TO_CHAR[(a.bits >> (a.length - i - 1)) & 1]
        for i in range(a.length))


def complement(a):
    """Swap heads and tails."""
    return type(a)(a.length, a.bits ^ a.mask)


def prefix(a, k):
    """Return the first k characters of a.

    Args:
        a (Fragment): packed string.
        k (int): number of characters, 1 <= k <= a.length.

    Returns:
        a PatternString if k >= 3, a Fragment otherwise.

    """
    check_length(k, min_length=1, max_length=a.length)
    return _make(k, a.bits >> (a.length - k))


def suffix(a, k):
    """Return the last k characters of a."""
    check_length(k, min_length=1, max_length=a.length)
    return _make(k, a.bits & ((1 << k) - 1))


def concat(a, b):
    """Concatenate two packed strings."""
    length = a.length + b.length
    check_length(length, min_length=1)
    return _make(length, (a.bits << b.length) | b.bits)


def repeat(char, n):
    """Return the constant string char^n."""
    check_length(n)
    bit = _CHAR_TO_BIT[char.upper()]
    return PatternString(n, ((1 << n) - 1) * bit)


def check_pair(a, b):
    """Check that a and b form a valid game pair.

    Raises:
        LengthMismatchError: if the lengths differ.
        SameStringError: if both strings are equal.

    """
    if a.length != b.length:
        msg = 'Strings {0} and {1} have different lengths.'.format(a, b)
        raise LengthMismatchError(msg)

    if a.bits == b.bits:
        msg = 'Both players chose {0}: the strings must differ.'.format(a)
        raise SameStringError(msg)


def enumerate_strings(n):
    """Yield all 2^n strings of length n in ascending bits order."""
    check_length(n)
    for bits in range(1 << n):
        yield PatternString(n, bits)


def bits_array(n, start=0, stop=None):
    """Return the packed words start..stop-1 of length n as uint64."""
    check_length(n)
    if stop is None:
        stop = 1 << n
    return _np.arange(start, stop, dtype=_np.uint64)


def from_bits_array(n, values):
    """Convert an array of packed words to PatternStrings."""
    return [PatternString(n, int(v)) for v in values]

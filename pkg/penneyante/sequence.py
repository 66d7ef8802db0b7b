# -*- coding: utf-8 -*-

"""The optimal-string counts c_n, c*_m and the limit constant alpha.

c_n = 2c_{n-1} - (-1)^n c_{floor(n/2)+1} for n >= 6, and
alpha = lim c_n/2^n = 1/16 - 2 sum_{n>=4} c_n/4^n.
"""

import collections as _collections
import fractions as _fractions
import math as _math
import logging as _logging
import threading as _threading

import numpy as _np

from . import strings as _strings
from . import strategy as _strategy


_logger = _logging.getLogger(__name__)

CN_SEEDS = {3: 4, 4: 2, 5: 2}
CSTAR_SEED_MAX = 6
MIN_PRECISION = 8
GUARD_BITS = 16
EXPANSION_OFFSET = 2
MAX_DIGIT_STATS_BITS = 10**6
MAX_BLOCK = 8

ENUMERATED = 'enumerated'
RECURRENCE = 'recurrence'

_lock = _threading.Lock()
_cn = dict(CN_SEEDS)
_cstar = {}


class InsufficientPrecisionError(_strings.PenneyError):
    """Insufficient precision exception."""

    def __init__(self, message, *args):
        """Initialize object."""
        self.message = message


CnRecord = _collections.namedtuple('CnRecord', ['n', 'value', 'provenance'])
CnRecord.__doc__ = """Value of c_n (or c*_m) and how it was obtained."""


def _cn_step(values, n):
    sign = 1 if n % 2 == 0 else -1
    return 2*values[n - 1] - sign*values[n//2 + 1]


def _cstar_step(values, m):
    j = m // 2
    if m % 2 == 1:
        return 2*values[m - 1] - values[j + 1]
    return 2*values[m - 1] + values[j]


def _fill(table, step, n):
    if n in table:
        return table[n]
    with _lock:
        for k in range(min(table), n + 1):
            if k not in table:
                table[k] = step(table, k)
    return table[n]


def c(n):
    """Return c_n from the recurrence.

    Args:
        n (int): string length, n >= 3.

    Returns:
        the CnRecord.

    Raises:
        BadLengthError: if n < 3.

    """
    if not isinstance(n, int) or n < _strings.MIN_LENGTH:
        msg = 'Invalid length {0}: c_n is defined for n >= 3.'.format(n)
        raise _strings.BadLengthError(msg)
    value = _fill(_cn, _cn_step, n)
    provenance = ENUMERATED if n in CN_SEEDS else RECURRENCE
    return CnRecord(n, value, provenance)


def compute_c_uncached(n):
    """Return the value of c_n without touching the shared table."""
    values = dict(CN_SEEDS)
    for k in range(max(CN_SEEDS) + 1, n + 1):
        values[k] = _cn_step(values, k)
    return values[n]


def enumerated_c(n):
    """Return c_n counted from the optimal strings."""
    if n <= _strategy.CSIRIK_MIN_N:
        count = len(_strategy.optimal_strings_bruteforce(n).strings)
    else:
        count = len(_strategy.optimal_strings_csirik(n).strings)
    return CnRecord(n, count, ENUMERATED)


def d(n):
    """Return the normalized count c_n/2^n."""
    return _fractions.Fraction(c(n).value, 2**n)


def _cstar_seeds():
    if not _cstar:
        with _lock:
            if not _cstar:
                for m in range(_strategy.CSTAR_MIN_M, CSTAR_SEED_MAX + 1):
                    _cstar[m] = _strategy.count_cstar(m)
    return _cstar


def cstar_recurrence(m):
    """Return c*_m from the recurrences.

    c*_{2j+1} = 2c*_{2j} - c*_{j+1} and c*_{2j} = 2c*_{2j-1} + c*_j, seeded
    with the enumerated values for m <= 6.

    Args:
        m (int): length, m >= 4.

    Returns:
        the exact value.

    """
    if not isinstance(m, int) or m < _strategy.CSTAR_MIN_M:
        msg = 'Invalid length {0}: c*_m is defined for m >= 4.'.format(m)
        raise _strings.BadLengthError(msg)
    return _fill(_cstar_seeds(), _cstar_step, m)


def compute_cstar_uncached(m):
    """Return c*_m without touching the shared table."""
    values = dict(_cstar_seeds())
    for k in range(CSTAR_SEED_MAX + 1, m + 1):
        values[k] = _cstar_step(values, k)
    return values[m]


def known_values(kind):
    """Return a copy of the table of kind 'c' or 'cstar'."""
    table = _cn if kind == 'c' else _cstar
    with _lock:
        return dict(table)


def install_values(kind, values):
    """Add externally stored values to the table of kind 'c' or 'cstar'."""
    table = _cn if kind == 'c' else _cstar
    if kind == 'cstar':
        _cstar_seeds()
    with _lock:
        for n, value in values.items():
            table.setdefault(int(n), int(value))


def reset():
    """Drop every computed value, keeping the seeds."""
    with _lock:
        _cn.clear()
        _cn.update(CN_SEEDS)
        _cstar.clear()


def cn_table(n_max, n_min=3):
    """Return rows (n, c_n, binary text of c_n)."""
    return [
        (n, c(n).value, format(c(n).value, 'b'))
        for n in range(n_min, n_max + 1)]


def cn_bounds_violations(n_max, n_min=5):
    """Return the n for which 2^(n-6) <= c_n <= 2^(n-4) fails."""
    failed = []
    for n in range(n_min, n_max + 1):
        value = _fractions.Fraction(c(n).value)
        if not (_fractions.Fraction(2)**(n - 6) <= value <= 2**(n - 4)):
            failed.append(n)
    return failed


def cstar_identities_check(m_max, m_min=3):
    """Check 2c*_2m = c*_2m+1 + c*_m+1 and 4c*_2m = c*_2m+2 + c*_m+1."""
    for m in range(m_min, m_max + 1):
        if 2*cstar_recurrence(2*m) != (
                cstar_recurrence(2*m + 1) + cstar_recurrence(m + 1)):
            return False
        if 4*cstar_recurrence(2*m) != (
                cstar_recurrence(2*m + 2) + cstar_recurrence(m + 1)):
            return False
    return True


def finite_sum_identity_check(m_max, seed_override=None):
    """Check c_{2m+1} = 4^(m-2) c_5 - sum_{i=4}^{m+1} c_i 4^(m+1-i).

    Args:
        m_max (int): last m checked, from m = 3.
        seed_override (int, optional): value used for c_5 in the leading
            term of the right hand side.

    Returns:
        True if the identity holds for every m.

    """
    c5 = c(5).value if seed_override is None else seed_override
    for m in range(3, m_max + 1):
        rhs = 4**(m - 2) * c5 - sum(
            c(i).value * 4**(m + 1 - i) for i in range(4, m + 2))
        if c(2*m + 1).value != rhs:
            return False
    return True


def upper_bound_cn(n):
    """Return the bound c_n <= 2^(n-4), valid for n >= 5."""
    return _fractions.Fraction(2)**(n - 4)


def tail_bound(truncation_n, bound=upper_bound_cn):
    """Bound 2 sum_{n>N} c_n/4^n from a geometric bound on c_n.

    bound(n) must grow by a constant ratio r < 4 from one n to the next.
    """
    first = 2 * bound(truncation_n + 1) / 4**(truncation_n + 1)
    ratio = (bound(truncation_n + 2) / bound(truncation_n + 1)) / 4
    return first / (1 - ratio)


class AlphaApprox():
    """Interval [value - error_bound, value] containing alpha."""

    def __init__(self, truncation_n, value, error_bound):
        """Initialize object.

        Args:
            truncation_n (int): last series term.
            value (Fraction): partial sum, an upper bound of alpha.
            error_bound (Fraction): tail bound.

        """
        self.truncation_n = truncation_n
        self.value = value
        self.error_bound = error_bound

    @property
    def lower(self):
        """Return the lower end of the interval."""
        return self.value - self.error_bound

    @property
    def upper(self):
        """Return the upper end of the interval."""
        return self.value

    def contains(self, x):
        """Return True if x lies in the interval."""
        return self.lower <= x <= self.upper

    def binary_digits(self, count, offset=0):
        """Return the digits offset+1 .. offset+count of alpha in base 2.

        Raises:
            InsufficientPrecisionError: if the interval ends disagree.

        """
        scale = 2**(offset + count)
        low = _math.floor(self.lower * scale)
        high = _math.floor(self.upper * scale)
        if low != high:
            msg = 'Interval too wide for {0:d} binary digits.'.format(
                offset + count)
            raise InsufficientPrecisionError(msg)
        return format(low % 2**count, '0{0:d}b'.format(count))

    def _decimal_text(self, decimals, half):
        scale = 10**decimals
        low = _math.floor(self.lower * scale + half)
        high = _math.floor(self.upper * scale + half)
        if low != high:
            msg = 'Interval too wide for {0:d} decimals.'.format(decimals)
            raise InsufficientPrecisionError(msg)
        digits = str(low).rjust(decimals + 1, '0')
        return '{0}.{1}'.format(digits[:-decimals], digits[-decimals:])

    def truncated_digits(self, decimals):
        """Return alpha truncated to the given number of decimals."""
        return self._decimal_text(decimals, 0)

    def rounded_digits(self, decimals):
        """Return alpha rounded half up to the given number of decimals."""
        return self._decimal_text(decimals, _fractions.Fraction(1, 2))


def alpha(precision_bits):
    """Return alpha with a tail bound below 2^-(precision_bits+16).

    Args:
        precision_bits (int): requested precision, at least 8.

    Returns:
        the AlphaApprox.

    """
    if precision_bits < MIN_PRECISION:
        msg = 'Precision must be at least {0:d} bits.'.format(MIN_PRECISION)
        raise ValueError(msg)

    target = _fractions.Fraction(1, 2**(precision_bits + GUARD_BITS))
    truncation_n = max(6, precision_bits + GUARD_BITS - 3)
    while tail_bound(truncation_n) >= target:
        truncation_n += 1

    # terms above half are streamed; only c_4..c_half enter the shared table
    half = truncation_n//2 + 1
    c(half)
    table = _cn
    acc = 0
    prev = None
    for n in range(4, truncation_n + 1):
        if n <= half:
            value = table[n]
        else:
            value = _cn_step({n - 1: prev, n//2 + 1: table[n//2 + 1]}, n)
        acc = 4*acc + value
        prev = value
    numerator = 4**truncation_n // 16 - 2*acc
    value = _fractions.Fraction(numerator, 4**truncation_n)
    _logger.debug('alpha truncated at n=%d', truncation_n)
    return AlphaApprox(truncation_n, value, tail_bound(truncation_n))


def binary_digits(count, offset=0):
    """Return certified binary digits offset+1 .. offset+count of alpha."""
    bits = count + offset + 32
    for _ in range(4):
        try:
            return alpha(bits).binary_digits(count, offset)
        except InsufficientPrecisionError:
            bits *= 2
    msg = 'Could not certify {0:d} binary digits.'.format(count + offset)
    raise InsufficientPrecisionError(msg)


def one_bit_positions(count, offset=0):
    """Return the 1-based positions of the first count 1-bits of alpha.

    Positions count from the first fractional digit, or from the digit
    after the first offset digits when offset is given.
    """
    length = 4*count + 64
    while True:
        digits = binary_digits(length, offset)
        positions = [i + 1 for i, bit in enumerate(digits) if bit == '1']
        if len(positions) >= count:
            return positions[:count]
        length *= 2


DnRow = _collections.namedtuple(
    'DnRow', ['n', 'd', 'reference', 'deviation', 'residual'])
DnRow.__doc__ = """Deviation of d_n from its limit and scaled residual."""


def dn_deviation(n_max, n_min=5):
    """Return the deviation of d_n from its limit for n_min..n_max.

    For n = 2m the reference is alpha, for n = 2m+1 it is
    alpha(1 + 2^-m); the residual is the deviation times 2^(3m/2).

    Returns:
        list of DnRow.

    """
    ref = alpha(n_max + 16).value
    rows = []
    for n in range(n_min, n_max + 1):
        m = n // 2
        reference = ref if n % 2 == 0 else ref * (1 + _fractions.Fraction(
            1, 2**m))
        deviation = abs(d(n) - reference)
        residual = float(deviation) * 2.0**(1.5*m)
        rows.append(DnRow(n, d(n), reference, deviation, residual))
    return rows


PrefixAgreement = _collections.namedtuple(
    'PrefixAgreement', ['n', 'common_bits', 'within_carry'])
PrefixAgreement.__doc__ = """Agreement of c_n with the digits of alpha."""


def prefix_agreement(n, approx=None):
    """Compare the leading bits of c_n with floor(alpha 2^n).

    within_carry is True when both agree after dropping the ceil(n/2)+1
    lowest bits, up to one unit of carry.
    """
    if approx is None:
        approx = alpha(n + 32)
    scaled = _math.floor(approx.lower * 2**n)
    value = c(n).value

    a_text = format(value, '0{0:d}b'.format(n))
    b_text = format(scaled, '0{0:d}b'.format(n))
    common = 0
    for x, y in zip(a_text, b_text):
        if x != y:
            break
        common += 1

    shift = (n + 1)//2 + 1
    within = abs((value >> shift) - (scaled >> shift)) <= 1
    return PrefixAgreement(n, common, within)


DigitStats = _collections.namedtuple(
    'DigitStats', ['bits', 'offset', 'rows', 'max_deviation'])
DigitStats.__doc__ = """Block frequencies in the binary digits of alpha."""

BlockRow = _collections.namedtuple(
    'BlockRow', ['block', 'count', 'observed', 'expected'])


def digit_stats(bits, max_block, offset=EXPANSION_OFFSET):
    """Count every binary block of length 1..max_block in alpha's digits.

    Args:
        bits (int): number of digits, at most 10^6. The series is summed
            to about bits + 16 terms; c_n is stored only up to half of
            them, and the largest counts take minutes.
        max_block (int): longest block, at most 8.
        offset (int): digits skipped before the window.

    Returns:
        the DigitStats, max_deviation mapping block length to the largest
        relative deviation |observed - expected|/expected.

    """
    if bits < 1 or bits > MAX_DIGIT_STATS_BITS:
        msg = 'Invalid number of digits {0}.'.format(bits)
        raise ValueError(msg)
    if max_block < 1 or max_block > MAX_BLOCK or max_block > bits:
        msg = 'Invalid block length {0}.'.format(max_block)
        raise ValueError(msg)

    digits = _np.frombuffer(
        binary_digits(bits, offset).encode('ascii'), dtype=_np.uint8) - 48
    digits = digits.astype(_np.int64)

    rows = []
    max_deviation = {}
    for k in range(1, max_block + 1):
        windows = bits - k + 1
        codes = _np.zeros(windows, dtype=_np.int64)
        for j in range(k):
            codes = (codes << 1) | digits[j:j + windows]
        counts = _np.bincount(codes, minlength=1 << k)
        expected = _fractions.Fraction(1, 2**k)
        worst = _fractions.Fraction(0)
        for code in range(1 << k):
            observed = _fractions.Fraction(int(counts[code]), windows)
            block = format(code, '0{0:d}b'.format(k))
            rows.append(BlockRow(block, int(counts[code]), observed, expected))
            worst = max(worst, abs(observed - expected) / expected)
        max_deviation[k] = worst
    return DigitStats(bits, offset, rows, max_deviation)

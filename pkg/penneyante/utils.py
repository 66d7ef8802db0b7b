# -*- coding: utf-8 -*-

"""Utils."""

import csv as _csv
import json as _json
import logging as _logging
import fractions as _fractions
import concurrent.futures as _futures

from . import config as _config


LOG_FORMAT = '%(asctime)s\t%(levelname)s\t%(message)s'
LOG_DATEFMT = '%m/%d/%Y %H:%M:%S'


def configure_logging(level=_logging.WARNING, logfile=None):
    """Configure the root logger.

    Args:
        level (int): logging level.
        logfile (str, optional): log file path, stderr if None.

    """
    root = _logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)

    if logfile is None:
        handler = _logging.StreamHandler()
    else:
        handler = _logging.FileHandler(logfile, mode='a+')
    handler.setFormatter(_logging.Formatter(LOG_FORMAT, LOG_DATEFMT))
    root.addHandler(handler)
    root.setLevel(level)


def check_decimals(decimals):
    """Raise ValueError if decimals is outside the allowed range."""
    if (not isinstance(decimals, int)
            or decimals < _config.MIN_DECIMALS
            or decimals > _config.MAX_DECIMALS):
        msg = 'Invalid number of decimals {0}: expected {1:d} to {2:d}.'.format(
            decimals, _config.MIN_DECIMALS, _config.MAX_DECIMALS)
        raise ValueError(msg)


def render_fraction(p):
    """Return 'p/q' in lowest terms."""
    p = _fractions.Fraction(p)
    return '{0:d}/{1:d}'.format(p.numerator, p.denominator)


def render_decimal(p, decimals=_config.DEFAULT_DECIMALS):
    """Return the fixed-point text of a rational, rounded half to even.

    Args:
        p (Fraction): exact value.
        decimals (int): number of decimal places, 1 to 50.

    Returns:
        the decimal text.

    """
    check_decimals(decimals)
    scaled = round(_fractions.Fraction(p) * 10**decimals)
    sign = '-' if scaled < 0 else ''
    digits = str(abs(scaled)).rjust(decimals + 1, '0')
    return '{0}{1}.{2}'.format(sign, digits[:-decimals], digits[-decimals:])


def pairwise_sum(values):
    """Sum exact values with a balanced reduction tree."""
    values = list(values)
    if len(values) == 0:
        return _fractions.Fraction(0)
    while len(values) > 1:
        paired = [
            values[i] + values[i + 1] for i in range(0, len(values) - 1, 2)]
        if len(values) % 2 == 1:
            paired.append(values[-1])
        values = paired
    return values[0]


def exact_sum(values):
    """Return the exact sum, grouping terms by denominator first."""
    groups = {}
    for value in values:
        value = _fractions.Fraction(value)
        groups[value.denominator] = (
            groups.get(value.denominator, 0) + value.numerator)
    return pairwise_sum(
        _fractions.Fraction(num, den) for den, num in sorted(groups.items()))


def exact_mean(values):
    """Return the exact mean of a non-empty sequence."""
    values = list(values)
    if len(values) == 0:
        msg = 'Mean of an empty sequence.'
        raise ValueError(msg)
    return exact_sum(values) / len(values)


def parallel_map(func, items, threads=1):
    """Map func over items, keeping the input order.

    Args:
        func (callable): function of one argument.
        items (list): arguments.
        threads (int): worker threads, serial if <= 1.

    Returns:
        list of results.

    """
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    with _futures.ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))


def to_cell(value, decimals=_config.DEFAULT_DECIMALS):
    """Convert a value to table text."""
    if isinstance(value, _fractions.Fraction):
        return render_fraction(value)
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return '{0:.{1:d}f}'.format(value, decimals)
    if value is None:
        return ''
    return str(value)


def write_csv(headers, rows, stream):
    """Write a CSV table with a header row."""
    writer = _csv.writer(stream, lineterminator='\n')
    writer.writerow(headers)
    for row in rows:
        writer.writerow([to_cell(v) for v in row])


def write_markdown(headers, rows, stream):
    """Write a pipe table."""
    stream.write('| ' + ' | '.join(headers) + ' |\n')
    stream.write('|' + '---|' * len(headers) + '\n')
    for row in rows:
        stream.write('| ' + ' | '.join(to_cell(v) for v in row) + ' |\n')


def write_text(headers, rows, stream):
    """Write a left aligned table."""
    table = [list(headers)] + [[to_cell(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(headers))]
    for row in table:
        line = '  '.join(c.ljust(w) for c, w in zip(row, widths))
        stream.write(line.rstrip() + '\n')


def write_json(obj, stream):
    """Write JSON with sorted keys."""
    _json.dump(obj, stream, sort_keys=True, indent=2)
    stream.write('\n')

# -*- coding: utf-8 -*-

"""Command line interface."""

import argparse as _argparse
import logging as _logging
import sys as _sys

from . import __version__
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
from . import verify as _verify
from .db import cache as _cache


_logger = _logging.getLogger(__name__)

FORMATS = ('text', 'csv', 'json', 'markdown', 'md')

_DEFAULTS = {
    'format': 'text',
    'decimals': _config.DEFAULT_DECIMALS,
    'threads': _config.DEFAULT_THREADS,
    'seed': _config.DEFAULT_SEED,
    'cache': None,
    'no_cache': False,
    'verbose': 0,
    }


def _decimals(text):
    try:
        value = int(text)
        _utils.check_decimals(value)
    except ValueError:
        msg = 'expected an integer from {0:d} to {1:d}'.format(
            _config.MIN_DECIMALS, _config.MAX_DECIMALS)
        raise _argparse.ArgumentTypeError(msg)
    return value


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise _argparse.ArgumentTypeError('expected a positive integer')
    return value


def _parse_strings(args):
    for name in ('a', 'b'):
        text = getattr(args, name, None)
        if text is not None:
            setattr(args, name, _strings.parse(text))


def _common_parser():
    parser = _argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group('common options')
    group.add_argument(
        '--format', choices=FORMATS, default=_argparse.SUPPRESS,
        help='output format (default: text)')
    group.add_argument(
        '--decimals', type=_decimals, default=_argparse.SUPPRESS,
        help='decimal places of rendered probabilities (default: 8)')
    group.add_argument(
        '--threads', type=_positive, default=_argparse.SUPPRESS,
        help='worker threads (default: number of CPUs)')
    group.add_argument(
        '--seed', type=int, default=_argparse.SUPPRESS,
        help='random seed (default: 42)')
    group.add_argument(
        '--cache', metavar='PATH', default=_argparse.SUPPRESS,
        help='c_n cache file (overrides ${0})'.format(_config.CACHE_ENV_VAR))
    group.add_argument(
        '--no-cache', action='store_true', default=_argparse.SUPPRESS,
        help='do not read or write the c_n cache')
    group.add_argument(
        '-v', '--verbose', action='count', default=_argparse.SUPPRESS,
        help='log INFO (-v) or DEBUG (-vv) messages to stderr')
    return parser


def _length_arg(parser, flag='-n', required=True):
    parser.add_argument(flag, type=int, required=required, metavar='N')


def build_parser():
    """Return the argument parser."""
    common = _common_parser()
    parser = _argparse.ArgumentParser(
        prog='penneyante', parents=[common],
        description='Exact analysis of the Penney-Ante coin game.')
    parser.add_argument(
        '--version', action='version', version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    def add(name, help_text, target=sub):
        return target.add_parser(name, parents=[common], help=help_text)

    p = add('conway', 'Conway number of two strings')
    p.add_argument('--a', required=True)
    p.add_argument('--b', help='defaults to --a')

    p = add('odds', 'probability that --a appears before --b')
    p.add_argument('--a', required=True)
    p.add_argument('--b', required=True)

    p = add('oracle', 'absorbing chain probability')
    p.add_argument('--a')
    p.add_argument('--b')
    p.add_argument(
        '--verify', action='store_true',
        help='compare with Conway\'s formula for every pair of length N')
    _length_arg(p, required=False)

    p = add('matrix', 'pairwise probabilities of all strings of length N')
    _length_arg(p)

    p = add('best-response', 'best response to --a or to every string')
    p.add_argument('--a')
    _length_arg(p, required=False)

    p = add('optimal', 'optimal strings for Player I')
    _length_arg(p)
    p.add_argument(
        '--method', choices=('csirik', 'brute', 'both'), default='csirik')

    p = add('cn', 'the counts c_n')
    p.add_argument('--max', type=int, required=True, dest='n_max')
    p.add_argument('--min', type=int, default=3, dest='n_min')
    p.add_argument('--binary', action='store_true')
    p.add_argument('--export-json', metavar='PATH')

    p = add('cstar', 'the counts c*_m')
    p.add_argument('-m', type=int, required=True)
    p.add_argument('--list', action='store_true', help='list the strings')

    p = add('alpha', 'the limit of c_n/2^n')
    p.add_argument('--bits', type=_positive, default=64)
    p.add_argument(
        '--positions', type=int, nargs='?', const=10, metavar='COUNT',
        help='positions of the first COUNT 1-bits (default: 10)')
    p.add_argument('--stats', action='store_true')
    p.add_argument('--max-block', type=_positive, default=4)

    p = add('flipped', 'the flipped game, in which the last string wins')
    fsub = p.add_subparsers(dest='flipped_command', metavar='COMMAND')
    fsub.required = True
    q = add('best-response', 'all flipped best responses to --a', fsub)
    q.add_argument('--a', required=True)
    q = add('optimal', 'optimal flipped strings for Player I', fsub)
    _length_arg(q)
    q = add('conjecture3', 'check the four-candidate rule', fsub)
    _length_arg(q)
    q.add_argument('--json', action='store_true', help='same as --format json')
    q = add('table', 'flipped best responses to every string', fsub)
    _length_arg(q)

    p = add('stats', 'random versus optimal play')
    p.add_argument('--from', type=int, default=5, dest='n_min')
    p.add_argument('--to', type=int, default=12, dest='n_max')
    p.add_argument(
        '--variant', choices=_stats.VARIANTS, default=_stats.DEFAULT_VARIANT)

    p = add('simulate', 'seeded Monte Carlo games')
    p.add_argument('--a', required=True)
    p.add_argument('--b', required=True)
    p.add_argument('--trials', type=_positive, default=100000)

    p = add('verify', 'cross-module property checks')
    p.add_argument('--full', action='store_true', help='larger n ranges')
    p.add_argument(
        '--check', action='append', metavar='NAME',
        choices=[name for name, _ in _verify.CHECKS])

    return parser


class Output():
    """Renders tables and JSON on a stream."""

    def __init__(self, fmt='text', decimals=_config.DEFAULT_DECIMALS,
                 stream=None):
        """Initialize object."""
        self.fmt = 'markdown' if fmt == 'md' else fmt
        self.decimals = decimals
        self.stream = stream if stream is not None else _sys.stdout

    def dec(self, p):
        """Return the decimal text of an exact value."""
        return _utils.render_decimal(p, self.decimals)

    def prob(self, p):
        """Return 'p/q (decimal)'."""
        return '{0} ({1})'.format(_utils.render_fraction(p), self.dec(p))

    def emit(self, headers, rows, obj, text=None):
        """Write rows in the table formats, obj in JSON.

        text, when given, replaces the table in the text format.
        """
        if self.fmt == 'json':
            _utils.write_json(obj, self.stream)
        elif self.fmt == 'csv':
            _utils.write_csv(headers, rows, self.stream)
        elif self.fmt == 'markdown':
            _utils.write_markdown(headers, rows, self.stream)
        elif text is not None:
            self.stream.write(text + '\n')
        else:
            _utils.write_text(headers, rows, self.stream)


def _load_cache(args):
    path = _config.get_cache_path(args.cache, args.no_cache)
    if path is None:
        return None
    cache = _cache.CnCache(path, seed=args.seed, log=True)
    count = cache.load()
    _logger.info('loaded %d cached values from %s', count, path)
    return cache


def _save_cache(cache):
    if cache is None:
        return
    try:
        cache.save()
    except _cache.CacheError as e:
        _logger.warning(e.message)


def cmd_conway(args, out):
    b = args.b if args.b is not None else args.a
    corr = _correlation.conway(args.a, b)
    text = 'C({0}, {1}) = {2} ({3})'.format(args.a, b, corr.value, corr.binary)
    out.emit(
        ['a', 'b', 'value', 'binary'],
        [[args.a, b, corr.value, corr.binary]],
        dict(corr.to_json(), a=str(args.a), b=str(b)), text)
    return 0


def cmd_odds(args, out):
    p = _odds.win_prob(args.a, args.b)
    num, den = _odds.odds(p)
    out.emit(
        ['a', 'b', 'prob', 'decimal', 'odds'],
        [[args.a, args.b, p, out.dec(p), '{0}:{1}'.format(num, den)]],
        {'a': str(args.a), 'b': str(args.b),
         'prob': _utils.render_fraction(p), 'decimal': out.dec(p),
         'odds': [num, den]},
        out.prob(p))
    return 0


def cmd_oracle(args, out):
    if args.verify:
        if args.n is None:
            raise ValueError('oracle --verify requires -n')
        _strings.check_length(args.n, max_length=_odds.MAX_MATRIX_LENGTH)
        strings = list(_strings.enumerate_strings(args.n))

        def failures(a):
            return [
                (a, b) for b in strings if b != a
                and _odds.win_prob(a, b) != _markov.oracle_win_prob(a, b)]

        bad = [
            pair for row in _utils.parallel_map(
                failures, strings, args.threads) for pair in row]
        pairs = len(strings) * (len(strings) - 1)
        passed = len(bad) == 0
        text = 'oracle agreement n={0}: {1} ({2} pairs, {3} failures)'.format(
            args.n, 'pass' if passed else 'FAIL', pairs, len(bad))
        out.emit(
            ['n', 'pairs', 'failures', 'passed'],
            [[args.n, pairs, len(bad), passed]],
            {'n': args.n, 'pairs': pairs, 'passed': passed,
             'failures': [[str(a), str(b)] for a, b in bad]},
            text)
        return 0 if passed else 1

    if args.a is None or args.b is None:
        raise ValueError('oracle requires --a and --b, or --verify -n N')
    chain = _markov.build_chain(args.a, args.b)
    p = _markov.first_occurrence_prob(chain)
    out.emit(
        ['a', 'b', 'prob', 'decimal', 'states'],
        [[args.a, args.b, p, out.dec(p), chain.state_count]],
        {'a': str(args.a), 'b': str(args.b),
         'prob': _utils.render_fraction(p), 'decimal': out.dec(p),
         'states': chain.state_count},
        '{0}  states={1}'.format(out.prob(p), chain.state_count))
    return 0


def cmd_matrix(args, out):
    matrix = _odds.prob_matrix(args.n, args.threads)
    headers, rows = matrix.to_rows()
    out.emit(headers, rows, matrix.to_json())
    return 0


def _best_response_rows(responses, out):
    rows = []
    for r in responses:
        rows.append([
            r.queried, r.responder, r.prob, out.dec(r.prob),
            r.runner_up, r.runner_up_prob])
    return rows


def _best_response_json(r):
    return {
        'queried': str(r.queried),
        'responder': str(r.responder),
        'prob': _utils.render_fraction(r.prob),
        'runner_up': str(r.runner_up) if r.runner_up is not None else None,
        'runner_up_prob': (
            _utils.render_fraction(r.runner_up_prob)
            if r.runner_up_prob is not None else None),
        'degenerate': r.degenerate,
        'verified': r.verified,
        }


def cmd_best_response(args, out):
    if args.a is not None:
        responses = [_strategy.best_response(args.a)]
    elif args.n is not None:
        responses = _strategy.best_response_table(args.n, args.threads)
    else:
        raise ValueError('best-response requires --a or -n')
    headers = ['A', 'B', 'prob', 'decimal', 'runner_up', 'runner_up_prob']
    out.emit(
        headers, _best_response_rows(responses, out),
        [_best_response_json(r) for r in responses])
    return 0


def _optimal_json(found):
    return {
        'n': found.n,
        'method': found.method,
        'count': len(found.strings),
        'strings': [str(s) for s in found.strings],
        'player1_win_prob': _utils.render_fraction(found.player1_win_prob),
        'player2_win_prob': _utils.render_fraction(
            1 - found.player1_win_prob),
        }


def cmd_optimal(args, out):
    if args.method == 'brute':
        results = [_strategy.optimal_strings_bruteforce(args.n)]
    elif args.method == 'csirik':
        results = [_stats.optimal_set(args.n)]
    else:
        results = [
            _strategy.optimal_strings_bruteforce(args.n),
            _strategy.optimal_strings_csirik(args.n)]
        if (results[0].strings != results[1].strings
                or results[0].player1_win_prob != results[1].player1_win_prob):
            msg = 'Optimal sets of length {0} differ between methods.'.format(
                args.n)
            raise _strings.PenneyError(msg)

    rows = [
        [r.method, s, r.player1_win_prob, out.dec(r.player1_win_prob)]
        for r in results for s in r.strings]
    out.emit(
        ['method', 'string', 'player1_prob', 'decimal'], rows,
        [_optimal_json(r) for r in results])
    return 0


def cmd_cn(args, out):
    cache = _load_cache(args)
    rows = []
    for n, value, binary in _sequence.cn_table(args.n_max, args.n_min):
        row = [n, value]
        if args.binary:
            row.append(binary)
        rows.append(row)
    headers = ['n', 'c_n'] + (['binary'] if args.binary else [])
    obj = [dict(zip(headers, [r[0], str(r[1])] + r[2:])) for r in rows]
    out.emit(headers, rows, obj)
    _save_cache(cache)

    if args.export_json:
        if cache is None:
            raise _cache.CacheError('The cache is disabled.')
        cache.export_json(args.export_json)
    return 0


def cmd_cstar(args, out):
    cache = _load_cache(args)
    value = _sequence.cstar_recurrence(args.m)
    obj = {'m': args.m, 'value': str(value)}
    rows = [[args.m, value]]
    text = 'c*_{0} = {1}'.format(args.m, value)
    if args.list:
        strings = _strategy.cstar_strings(args.m)
        obj['strings'] = [str(s) for s in strings]
        rows = [[args.m, s] for s in strings]
        text = '\n'.join([text] + [str(s) for s in strings])
    out.emit(['m', 'value'], rows, obj, text)
    _save_cache(cache)
    return 0


def cmd_alpha(args, out):
    cache = _load_cache(args)
    if args.stats:
        result = _sequence.digit_stats(args.bits, args.max_block)
        rows = [
            [r.block, r.count, out.dec(r.observed), out.dec(r.expected)]
            for r in result.rows]
        obj = {
            'bits': result.bits,
            'offset': result.offset,
            'blocks': {r.block: r.count for r in result.rows},
            'max_deviation': {
                str(k): out.dec(v) for k, v in result.max_deviation.items()},
            }
        out.emit(['block', 'count', 'observed', 'expected'], rows, obj)
        _save_cache(cache)
        return 0

    approx = _sequence.alpha(args.bits)
    digits = _sequence.binary_digits(args.bits)
    obj = {
        'bits': args.bits,
        'lower': out.dec(approx.lower),
        'upper': out.dec(approx.upper),
        'truncation_n': approx.truncation_n,
        'binary': digits,
        }
    lines = [
        'alpha in [{0}, {1}]'.format(obj['lower'], obj['upper']),
        'binary 0.{0}'.format(digits),
        ]
    rows = [[args.bits, obj['lower'], obj['upper'], digits]]
    headers = ['bits', 'lower', 'upper', 'binary']
    if args.positions is not None:
        positions = _sequence.one_bit_positions(args.positions)
        obj['one_bit_positions'] = positions
        lines.append('1-bit positions {0}'.format(
            ','.join(str(p) for p in positions)))
        headers.append('one_bit_positions')
        rows[0].append(' '.join(str(p) for p in positions))
    out.emit(headers, rows, obj, '\n'.join(lines))
    _save_cache(cache)
    return 0


def _flipped_json(r):
    return {
        'queried': str(r.queried),
        'maximizers': [str(s) for s in r.maximizers],
        'prob': _utils.render_fraction(r.prob),
        }


def cmd_flipped(args, out):
    command = args.flipped_command
    if command == 'best-response':
        responses = [_flipped.flipped_best_response(args.a)]
    elif command == 'table':
        responses = _flipped.flipped_table(args.n, args.threads)
    elif command == 'optimal':
        found = _flipped.flipped_optimal_strings(args.n, args.threads)
        rows = [
            [s, found.player1_win_prob, out.dec(found.player1_win_prob)]
            for s in found.strings]
        out.emit(
            ['string', 'player1_prob', 'decimal'], rows, _optimal_json(found))
        return 0
    else:
        if args.json:
            out.fmt = 'json'
        report = _flipped.check_conjecture3(args.n, args.threads)
        rows = [
            [a, ' '.join(str(s) for s in found),
             ' '.join(str(s) for s in allowed)]
            for a, found, allowed in report.counterexamples]
        text = 'n={0}: {1} ({2} strings checked, {3} counterexamples)'.format(
            report.n, 'holds' if report.holds else 'fails', report.checked,
            len(report.counterexamples))
        out.emit(
            ['queried', 'maximizers', 'allowed'], rows,
            _flipped.report_to_json(report), text)
        return 0

    rows = [
        [r.queried, ' '.join(str(s) for s in r.maximizers), r.prob,
         out.dec(r.prob)]
        for r in responses]
    out.emit(
        ['A', 'best responses', 'prob', 'decimal'], rows,
        [_flipped_json(r) for r in responses])
    return 0


def cmd_stats(args, out):
    if args.n_min > args.n_max:
        raise ValueError('--from must not exceed --to')
    table = _stats.strategy_table(
        args.n_min, args.n_max, args.variant, args.threads)
    headers = list(_stats.StrategyMixRow._fields)
    rows = [[row.n] + [out.dec(v) for v in row[1:]] for row in table]
    obj = {
        'variant': args.variant,
        'rows': [
            dict({'n': row.n}, **{
                field: {'exact': _utils.render_fraction(value),
                        'decimal': out.dec(value)}
                for field, value in zip(headers[1:], row[1:])})
            for row in table],
        }
    out.emit(headers, rows, obj)
    return 0


def cmd_simulate(args, out):
    result = _stats.simulate(
        args.a, args.b, args.trials, seed=args.seed, threads=args.threads)
    freq = '{0:.{1:d}f}'.format(result.frequency, out.decimals)
    obj = {
        'a': str(result.a), 'b': str(result.b), 'trials': result.trials,
        'seed': args.seed, 'wins_a': result.wins_a, 'frequency': freq,
        'exact': _utils.render_fraction(result.exact),
        'z_score': round(result.z_score, 6),
        }
    rows = [[
        result.a, result.b, result.trials, result.wins_a, freq,
        result.exact, '{0:.3f}'.format(result.z_score)]]
    out.emit(
        ['a', 'b', 'trials', 'wins_a', 'frequency', 'exact', 'z'], rows, obj)
    return 0


def cmd_verify(args, out):
    cache = _load_cache(args)
    results = _verify.run_suite(
        full=args.full, threads=args.threads, names=args.check)
    rows = [
        [r.name, 'PASS' if r.passed else 'FAIL', r.detail] for r in results]
    obj = [
        {'name': r.name, 'passed': r.passed, 'detail': r.detail}
        for r in results]
    out.emit(['check', 'result', 'detail'], rows, obj)
    _save_cache(cache)
    return 0 if all(r.passed for r in results) else 1


COMMANDS = {
    'conway': cmd_conway,
    'odds': cmd_odds,
    'oracle': cmd_oracle,
    'matrix': cmd_matrix,
    'best-response': cmd_best_response,
    'optimal': cmd_optimal,
    'cn': cmd_cn,
    'cstar': cmd_cstar,
    'alpha': cmd_alpha,
    'flipped': cmd_flipped,
    'stats': cmd_stats,
    'simulate': cmd_simulate,
    'verify': cmd_verify,
    }


def main(argv=None, stream=None):
    """Run the command line.

    Returns:
        0 on success, 1 on a domain error or a failed check, 2 on a usage
        error.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    for key, value in _DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)

    level = {0: _logging.WARNING, 1: _logging.INFO}.get(
        args.verbose, _logging.DEBUG)
    _utils.configure_logging(level)

    out = Output(args.format, args.decimals, stream)
    try:
        _parse_strings(args)
        return COMMANDS[args.command](args, out)
    except _strings.PenneyError as e:
        _sys.stderr.write('error: {0}\n'.format(e.message))
        return 1
    except ValueError as e:
        _sys.stderr.write('usage error: {0}\n'.format(e))
        return 2

# -*- coding: utf-8 -*-

"""Default settings."""

import os as _os


CACHE_ENV_VAR = 'PENNEYANTE_CACHE'
CACHE_FILENAME = 'cn_cache.db'
CACHE_MAX_N = 4096
CACHE_VALIDATION_ENTRIES = 3

DEFAULT_DECIMALS = 8
MIN_DECIMALS = 1
MAX_DECIMALS = 50

DEFAULT_THREADS = _os.cpu_count() or 1
DEFAULT_SEED = 42
SIM_BLOCK_SIZE = 4096

BRUTE_MAX_N = 14
FLIPPED_MAX_N = 12
STATS_MAX_N = 16
OPT_RAND_MAX_N = 14


def default_cache_path():
    """Return the default cache file path."""
    base = _os.environ.get('XDG_CONFIG_HOME')
    if not base:
        base = _os.path.join(_os.path.expanduser('~'), '.config')
    return _os.path.join(base, 'penneyante', CACHE_FILENAME)


def get_cache_path(cli_value=None, no_cache=False):
    """Resolve the cache path.

    Args:
        cli_value (str, optional): path given on the command line.
        no_cache (bool): disable the cache.

    Returns:
        the cache path, or None when the cache is disabled.

    """
    if no_cache:
        return None
    if cli_value:
        return cli_value
    env_value = _os.environ.get(CACHE_ENV_VAR)
    if env_value:
        return env_value
    return default_cache_path()

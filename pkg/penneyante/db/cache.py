# -*- coding: utf-8 -*-

"""Sqlite cache of the c_n and c*_m values."""

import collections as _collections
import logging as _logging

import numpy as _np

from .. import config as _config
from .. import utils as _utils
from .. import sequence as _sequence
from .. import strings as _strings
from . import sqlitedatabase as _sqlitedatabase
from . import database as _database
from . import utils as _db_utils


KINDS = ('c', 'cstar')

_RECOMPUTE = {
    'c': _sequence.compute_c_uncached,
    'cstar': _sequence.compute_cstar_uncached,
    }

_SEEDS = {
    'c': lambda n: n in _sequence.CN_SEEDS,
    'cstar': lambda m: m <= _sequence.CSTAR_SEED_MAX,
    }


class CacheError(_strings.PenneyError):
    """Cache exception."""

    def __init__(self, message, *args):
        """Initialize object."""
        self.message = message


class CnEntry(_database.DatabaseDocument):
    """One cached value of c_n or c*_m."""

    collection_name = 'cn_values'

    db_dict = _collections.OrderedDict([
        ('idn', {'field': 'id', 'dtype': int, 'not_null': True}),
        ('date', {'dtype': str, 'not_null': True}),
        ('hour', {'dtype': str, 'not_null': True}),
        ('kind', {'dtype': str, 'not_null': True}),
        ('n', {'dtype': int, 'not_null': True}),
        ('value', {'dtype': str, 'not_null': True}),
        ('provenance', {'dtype': str, 'not_null': True}),
    ])


class CnCache():
    """Advisory store of the values held by the sequence tables.

    Values are stored as decimal text.
    """

    def __init__(self, database_name, seed=_config.DEFAULT_SEED, log=False):
        """Initialize object.

        Args:
            database_name (str): full file path to the sqlite file.
            seed (int): seed choosing the entries validated on load.
            log (bool): True to use event logging, False otherwise.

        """
        self.database_name = database_name
        self.seed = seed
        self.log = log
        self.logger = None
        self.log_events()

    def log_events(self):
        """Prepare the logger."""
        if self.log:
            self.logger = _logging.getLogger(__name__)

    def _warning(self, msg, *args):
        if self.logger is not None:
            self.logger.warning(msg, *args)

    def _collection(self):
        return CnEntry(database_name=self.database_name)

    def read(self):
        """Return {kind: {n: value}} stored in the file.

        Raises:
            CacheError: if the file cannot be read.

        """
        entries = {kind: {} for kind in KINDS}
        try:
            collection = self._collection()
            if not collection.db_database_exists():
                return entries
            if not collection.db_collection_exists():
                return entries
            for kind in KINDS:
                for row in collection.db_search_field('kind', kind):
                    entries[kind][int(row['n'])] = int(row['value'])
        except Exception:
            if self.logger is not None:
                self.logger.error('exception', exc_info=True)
            msg = 'Unable to read cache file {0}.'.format(self.database_name)
            raise CacheError(msg)
        return entries

    def validate(self, kind, values):
        """Recompute a few random entries of one kind.

        Returns:
            True if every recomputed value matches.

        """
        if len(values) == 0:
            return True
        rng = _np.random.default_rng(self.seed)
        keys = sorted(values)
        size = min(_config.CACHE_VALIDATION_ENTRIES, len(keys))
        for index in rng.choice(len(keys), size=size, replace=False):
            n = keys[int(index)]
            if _RECOMPUTE[kind](n) != values[n]:
                self._warning(
                    'cache entry %s(%d) does not match its recomputation', kind, n)
                return False
        return True

    def load(self):
        """Install the validated cached values into the sequence tables.

        A missing, unreadable or inconsistent file leaves the tables
        untouched.

        Returns:
            the number of installed values.

        """
        try:
            entries = self.read()
        except CacheError:
            self._warning('ignoring unreadable cache %s', self.database_name)
            return 0

        count = 0
        for kind in KINDS:
            values = entries[kind]
            if not self.validate(kind, values):
                self._warning('discarding cached %s values', kind)
                try:
                    self.discard(kind)
                except CacheError:
                    pass
                continue
            _sequence.install_values(kind, values)
            count += len(values)
        return count

    def discard(self, kind):
        """Delete the stored values of one kind."""
        try:
            collection = self._collection()
            idns = [
                row['id'] for row in collection.db_search_field('kind', kind)]
            if len(idns) > 0:
                collection.db_delete(idns)
        except Exception:
            if self.logger is not None:
                self.logger.error('exception', exc_info=True)
            msg = 'Unable to update cache file {0}.'.format(
                self.database_name)
            raise CacheError(msg)
        return True

    def save(self):
        """Store the sequence table values that are not in the file yet.

        Only n <= CACHE_MAX_N are kept.

        Returns:
            the number of stored values.

        Raises:
            CacheError: if the file cannot be written.

        """
        try:
            collection = self._collection()
            collection.db_create_collection()
            stored = self.read()
            date, hour = _db_utils.get_date_hour()
            rows = []
            for kind in KINDS:
                values = _sequence.known_values(kind)
                for n in sorted(values):
                    if n > _config.CACHE_MAX_N or n in stored[kind]:
                        continue
                    entry = CnEntry(database_name=self.database_name)
                    entry.kind = kind
                    entry.n = n
                    entry.value = str(values[n])
                    entry.provenance = (
                        _sequence.ENUMERATED if _SEEDS[kind](n)
                        else _sequence.RECURRENCE)
                    rows.append(entry.to_values_dict(date, hour))

            if len(rows) > 0:
                _sqlitedatabase.db_save_many(
                    self.database_name, CnEntry.collection_name, rows)
        except CacheError:
            raise
        except Exception:
            if self.logger is not None:
                self.logger.error('exception', exc_info=True)
            msg = 'Unable to write cache file {0}.'.format(self.database_name)
            raise CacheError(msg)
        return len(rows)

    def to_json(self):
        """Return {kind: {str(n): str(value)}} of the stored values."""
        entries = self.read()
        return {
            kind: {str(n): str(v) for n, v in sorted(values.items())}
            for kind, values in entries.items()}

    def export_json(self, filename):
        """Write the stored values as JSON."""
        with open(filename, 'w') as f:
            _utils.write_json(self.to_json(), f)
        return True

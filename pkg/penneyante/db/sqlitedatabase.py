# -*- coding: utf-8 -*-

"""Implementation of functions to handle sqlite database records."""

import os as _os
import sqlite3 as _sqlite

from . import utils as _utils


_DB_TYPES = {
    int: 'INTEGER',
    float: 'REAL',
    str: 'TEXT',
    }


class SqliteDatabaseError(Exception):
    """Sqlite database exception."""

    def __init__(self, message, *args):
        """Initialize object."""
        self.message = message


def _execute(database_name, cmd, params=(), many=False, commit=False):
    """Run one statement and return (rows, lastrowid)."""
    con = _sqlite.connect(database_name)
    cur = con.cursor()

    try:
        if many:
            cur.executemany(cmd, params)
        else:
            cur.execute(cmd, params)
        rows = cur.fetchall()
        idn = cur.lastrowid
        if commit:
            con.commit()
        con.close()
        return rows, idn

    except Exception as e:
        con.close()
        raise e


def _check_table(database_name, table_name):
    if not db_table_exists(database_name, table_name):
        msg = 'Database table not found.'
        raise SqliteDatabaseError(msg)


def db_database_exists(database_name):
    """Check if database file exists.

    Args:
        database_name (str): full file path to database.

    Returns:
        True if database file exists, False otherwise.

    """
    if database_name is None or len(database_name) == 0:
        msg = 'Invalid database name.'
        raise SqliteDatabaseError(msg)
    else:
        return _os.path.isfile(database_name)


def db_table_exists(database_name, table_name):
    """Check if table exists in database.

    Args:
        database_name (str): full file path to database.
        table_name (str): database table name.

    Returns:
        True if the table exists, False otherwise.

    """
    if not db_database_exists(database_name):
        msg = 'Database not found.'
        raise SqliteDatabaseError(msg)

    if table_name is None or len(table_name) == 0 or table_name == 'table':
        msg = 'Invalid table name.'
        raise SqliteDatabaseError(msg)

    rows, _ = _execute(
        database_name, 'PRAGMA TABLE_INFO({0})'.format(table_name))
    return len(rows) > 0


def db_get_column_names(database_name, table_name):
    """Return the column names of the database table."""
    _check_table(database_name, table_name)
    rows, _ = _execute(
        database_name, 'PRAGMA TABLE_INFO({0})'.format(table_name))
    return [r[1] for r in rows]


def db_get_last_id(database_name, table_name):
    """Return the last id of the database table, None if empty."""
    _check_table(database_name, table_name)
    rows, _ = _execute(
        database_name, 'SELECT MAX(id) FROM {0}'.format(table_name))
    return rows[0][0]


def db_delete(database_name, table_name, idns):
    """Delete entries from database table.

    Args:
        database_name (str): full file path to database.
        table_name (str): database table name.
        idns (list): list of entry ids.

    Returns:
        True if successful.

    """
    _check_table(database_name, table_name)

    if idns is None or len(idns) == 0:
        msg = 'Invalid entry ids.'
        raise SqliteDatabaseError(msg)

    seq = ','.join(['?']*len(idns))
    _execute(
        database_name,
        'DELETE FROM {0} WHERE id IN ({1})'.format(table_name, seq),
        list(idns), commit=True)
    return True


def db_search_column(database_name, table_name, column, value):
    """Return the entries whose column equals value, as dicts."""
    _check_table(database_name, table_name)

    if column is None or len(column) == 0:
        msg = 'Invalid column name.'
        raise SqliteDatabaseError(msg)

    if value is None:
        msg = 'Invalid value to search.'
        raise SqliteDatabaseError(msg)

    column_names = db_get_column_names(database_name, table_name)
    if column not in column_names:
        msg = 'Column "{0}" not found in database table.'.format(column)
        raise SqliteDatabaseError(msg)

    rows, _ = _execute(
        database_name,
        'SELECT * FROM {0} WHERE "{1}" = ? ORDER BY id'.format(
            table_name, column),
        (value,))
    return [dict(zip(column_names, row)) for row in rows]


def db_create_table(database_name, table_name, db_dict):
    """Create database table.

    An integer primary key 'id' and the 'date' and 'hour' text columns are
    added when db_dict does not declare them.

    Args:
        database_name (str): full file path to database.
        table_name (str): database table name.
        db_dict (dict): attribute name to {'field', 'dtype', 'not_null',
            'unique'} options.

    Returns:
        True if successful.

    """
    if database_name is None:
        msg = 'Invalid database name.'
        raise SqliteDatabaseError(msg)

    if table_name is None or len(table_name) == 0:
        msg = 'Invalid table name.'
        raise SqliteDatabaseError(msg)

    if db_dict is None:
        db_dict = {}

    fields = [_utils.field_name(k, v) for k, v in db_dict.items()]
    columns = []
    for name, decl in (
            ('id', 'INTEGER NOT NULL'),
            ('date', 'TEXT NOT NULL'),
            ('hour', 'TEXT NOT NULL')):
        if name not in fields:
            columns.append((name, decl))

    for attr_name, options in db_dict.items():
        dtype = options.get('dtype', _utils.DEFAULT_DTYPE)
        if dtype not in _DB_TYPES:
            raise SqliteDatabaseError('Unknown database type.')

        decl = _DB_TYPES[dtype]
        if options.get('not_null', _utils.DEFAULT_NOT_NULL):
            decl = decl + ' NOT NULL'
        if options.get('unique', _utils.DEFAULT_UNIQUE):
            decl = decl + ' UNIQUE'
        columns.append((_utils.field_name(attr_name, options), decl))

    dirname = _os.path.dirname(database_name)
    if len(dirname) > 0 and not _os.path.isdir(dirname):
        _os.makedirs(dirname)

    cmd = 'CREATE TABLE IF NOT EXISTS {0} ('.format(table_name)
    for name, decl in columns:
        cmd = cmd + "'{0}' {1},".format(name, decl)
    cmd = cmd + "PRIMARY KEY('id'));"
    _execute(database_name, cmd, commit=True)
    return True


def _ordered_values(column_names, values_dict, table_name):
    if values_dict is None or len(values_dict) == 0:
        msg = 'Invalid values to save in database.'
        raise SqliteDatabaseError(msg)

    if len(values_dict) != len(column_names):
        msg = 'Inconsistent number of values for table {0}.'.format(table_name)
        raise SqliteDatabaseError(msg)

    return [values_dict[column] for column in column_names]


def db_save_many(database_name, table_name, values_dicts):
    """Insert entries in one transaction.

    Args:
        database_name (str): full file path to database.
        table_name (str): database table name.
        values_dicts (list): dicts with one value per column.

    Returns:
        the id of the last saved entry.

    """
    _check_table(database_name, table_name)

    column_names = db_get_column_names(database_name, table_name)
    rows = [
        _ordered_values(column_names, v, table_name) for v in values_dicts]
    if len(rows) == 0:
        return None

    cmd = 'INSERT INTO {0} VALUES ({1})'.format(
        table_name, ','.join(['?']*len(column_names)))
    if len(rows) == 1:
        _, idn = _execute(database_name, cmd, rows[0], commit=True)
        return idn

    _execute(database_name, cmd, rows, many=True, commit=True)
    return db_get_last_id(database_name, table_name)

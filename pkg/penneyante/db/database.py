# -*- coding: utf-8 -*-

"""Sqlite tables and the records stored in them."""

from . import sqlitedatabase as _sqlitedatabase
from . import utils as _utils


class Database():
    """Sqlite database file."""

    def __init__(self, database_name=None):
        """Initialize the object.

        Args:
            database_name (str): full file path to database.

        """
        self.database_name = database_name

    def db_database_exists(self):
        """Return True if the database file exists."""
        return _sqlitedatabase.db_database_exists(self.database_name)


class DatabaseCollection(Database):
    """Sqlite database table."""

    def __init__(self, database_name=None, collection_name=None):
        """Initialize the object.

        Args:
            database_name (str): full file path to database.
            collection_name (str): table name.

        """
        self.collection_name = collection_name
        super().__init__(database_name=database_name)

    def db_collection_exists(self):
        """Return True if the table exists."""
        return _sqlitedatabase.db_table_exists(
            self.database_name, self.collection_name)

    def db_delete(self, idns):
        """Delete the entries with the given ids."""
        return _sqlitedatabase.db_delete(
            self.database_name, self.collection_name, idns)

    def db_search_field(self, field, value):
        """Return the entries whose field equals value."""
        return _sqlitedatabase.db_search_column(
            self.database_name, self.collection_name, field, value)


class DatabaseDocument(DatabaseCollection):
    """Database record.

    Subclasses declare the table in db_dict, e.g.:

        db_dict = _collections.OrderedDict([
            ('attribute_name', {
                'field' (optional): 'field_name',
                'dtype' (optional): str,
                'not_null' (optional): False,
                'unique' (optional): False,
            }),
        ])
    """

    collection_name = ''
    db_dict = {}

    def __init__(self, database_name=None):
        """Initialize the object with every attribute set to None."""
        for attr in self.db_dict.keys():
            if not hasattr(self, attr):
                setattr(self, attr, None)
        super().__init__(
            database_name=database_name,
            collection_name=self.collection_name)

    def __setattr__(self, name, value):
        """Set attribute, converting declared fields to their dtype."""
        if name in self.db_dict and value is not None:
            dtype = self.db_dict[name].get('dtype', _utils.DEFAULT_DTYPE)
            if not isinstance(value, dtype):
                value = dtype(value)
        super().__setattr__(name, value)

    def _reverse_db_dict(self):
        return {
            _utils.field_name(k, v): k for k, v in self.db_dict.items()}

    def db_create_collection(self):
        """Create the table if it does not exist."""
        return _sqlitedatabase.db_create_table(
            self.database_name, self.collection_name, self.db_dict)

    def to_values_dict(self, date=None, hour=None):
        """Return the column values of a new entry.

        The id is left to the database; date and hour default to now.
        """
        if date is None or hour is None:
            date, hour = _utils.get_date_hour()

        reverse = self._reverse_db_dict()
        values_dict = {'id': None}
        for field, value in (('date', date), ('hour', hour)):
            if field in reverse and getattr(self, reverse[field]) is not None:
                value = getattr(self, reverse[field])
            values_dict[field] = value

        for attr_name, options in self.db_dict.items():
            field = _utils.field_name(attr_name, options)
            if field in ('id', 'date', 'hour'):
                continue
            values_dict[field] = getattr(self, attr_name)
        return values_dict

# -*- coding: utf-8 -*-

"""Sqlite storage of the c_n values."""

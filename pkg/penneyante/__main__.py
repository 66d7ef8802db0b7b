"""Run the command line interface."""

import sys as _sys

from .cli import main

_sys.exit(main())

"""Entry point for ``python -m factolab``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())

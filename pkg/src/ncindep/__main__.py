"""Allow running the command line tool as ``python -m ncindep``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())

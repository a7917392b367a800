"""Allow ``python -m inthull`` to behave exactly like the ``inthull`` script."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())

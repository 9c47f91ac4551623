"""Allow ``python -m cfwave``."""

import sys

from cfwave.cli import main

sys.exit(main())

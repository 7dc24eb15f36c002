#!/usr/bin/env python3
"""Run the golden reproduction table and exit nonzero on any mismatch.

Equivalent to `segvis reproduce`; kept as a script entry for experiment
workflows.
"""

import sys

from segvis.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce", *sys.argv[1:]]))

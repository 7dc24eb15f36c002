#!/usr/bin/env python3
"""Random-instance sweep: diameter ranges and certificate construction.

Writes the statistics JSON to stdout (or --out).  A nonzero exit means some
instance violated an invariant or needed the fallback search; the offending
point sets are serialised in the report for replay.
"""

import sys

from segvis.cli import main

if __name__ == "__main__":
    sys.exit(main(["sweep", *sys.argv[1:]]))

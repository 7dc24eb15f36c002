#!/usr/bin/env python3
"""Bounds comparison for one instance: certificate lower bound, exact value
when it fits the time budget, and the a-priori upper bound.

Usage: bounds_report.py SPEC [TIME_BUDGET_S]
where SPEC is a generator spec (convex:N, double-chain:P,Q,
random:N:SEED[:BOUND], cacerola) or a point-set file path.
"""

import json
import sys
from pathlib import Path

from segvis.cli import parse_gen_spec
from segvis.constructions import double_chain_blocker
from segvis.geometry import load_pointset
from segvis.solver import check_bounds_report


def main(argv: list[str]) -> int:
    if not argv:
        print(__doc__, file=sys.stderr)
        return 2
    spec = argv[0]
    budget = float(argv[1]) if len(argv) > 1 else 30.0
    extra = None
    if Path(spec).exists():
        ps = load_pointset(spec)
    else:
        ps = parse_gen_spec(spec)
        if spec.startswith("double-chain:"):
            p, q = (int(t) for t in spec.split(":")[1].split(","))
            if p >= 2 and q >= 6:
                extra = double_chain_blocker(p, q)
    report = check_bounds_report(ps, extra_blockers=extra, exact_time_budget_s=budget)
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0 if report["consistent"] else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

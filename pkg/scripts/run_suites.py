"""Run every property suite at configurable sample counts and report timing.

Usage: python3 scripts/run_suites.py [--samples N] [--seed N]
"""

import argparse
import time

from pairloc.samples import DEFAULT_SEED
from pairloc.suites import SUITES, run_suite


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--samples", type=int, default=100)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = parser.parse_args()

    total_failed = 0
    for name in SUITES:
        started = time.monotonic()
        report = run_suite(name, samples=args.samples, seed=args.seed)
        elapsed = time.monotonic() - started
        total_failed += report["failed"]
        print(f"{name:15s} {elapsed:6.1f}s "
              f"passed={report['passed']} failed={report['failed']}")
        for failure in report["failures"]:
            print(f"  {failure}")
    raise SystemExit(1 if total_failed else 0)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Replay every built-in reference case and print the checked numbers.

Equivalent to ``quathw paper-suite`` but importable and hackable; exits
nonzero when any case fails.
"""

import sys

from quathw.golden import run_all


def main() -> int:
    results = run_all()
    for result in results:
        print(f"[{'PASS' if result.passed else 'FAIL'}] {result.name}")
        for line in result.details:
            print(f"    {line}")
    failed = [r for r in results if not r.passed]
    print(f"\n{len(results) - len(failed)}/{len(results)} cases passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

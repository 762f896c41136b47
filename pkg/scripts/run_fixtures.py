#!/usr/bin/env python3
"""Run every bundled fixture check and print one line per check.

Usage: python scripts/run_fixtures.py
"""

from __future__ import annotations

from ordineq.fixture_suite import run_fixture_suite


def main() -> int:
    checks = run_fixture_suite()
    failed = 0
    for check in checks:
        status = "ok  " if check.passed else "FAIL"
        print(f"{status} {check.name}: {check.detail}")
        failed += not check.passed
    print(f"{len(checks) - failed}/{len(checks)} fixture checks passed")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())

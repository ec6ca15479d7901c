"""Every acceptance criterion, one test per check, at the stated tolerance.

A pass/fail line per criterion is printed in the terminal summary.
"""

import subprocess
import sys
from functools import lru_cache

import pytest

from knotsurgery import acceptance

from conftest import record


@lru_cache(maxsize=None)
def criterion(number: int):
    return acceptance.CRITERIA[number - 1]()


CHECK_COUNTS = {1: 1, 2: 2, 3: 7, 4: 3, 5: 3, 6: 4, 7: 4, 8: 3, 9: 3}
CASES = [(n, i) for n, c in CHECK_COUNTS.items() for i in range(c)]


@pytest.mark.parametrize("number,index", CASES, ids=[f"criterion{n}-{i}" for n, i in CASES])
def test_criterion(number, index):
    result = criterion(number)
    assert len(result.checks) == CHECK_COUNTS[number]
    check = result.checks[index]
    print(f"criterion {number}: {'PASS' if check.passed else 'FAIL'} {check.name}: {check.detail}")
    record(number, check.name, check.passed, check.detail)
    assert check.passed, f"{check.name}: {check.detail}"


def _report():
    proc = subprocess.run([sys.executable, "-m", "knotsurgery.cli", "report"],
                          capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_criterion10_report_is_deterministic():
    code1, first = _report()
    code2, second = _report()
    ok = first == second and code1 == code2 and len(first) > 0
    detail = f"{len(first)} bytes, identical={first == second}, exit codes {code1}/{code2}"
    print(f"criterion 10: {'PASS' if ok else 'FAIL'} {detail}")
    record(10, "report output byte-identical across runs", ok, detail)
    assert ok

"""Acceptance suite: one test per numbered check, run through the public runner.

Each case prints as its own pass/fail line under pytest -v.  The checks
themselves live in lietype.acceptance and are also reachable via
`lietype verify --suite all`.
"""

import pytest

from lietype.acceptance import CHECKS, format_result, run_check

_IDS = [f"{number:02d}-{name}" for number, name, _ in CHECKS]


@pytest.mark.parametrize("number", [c[0] for c in CHECKS], ids=_IDS)
def test_acceptance_check(number):
    result = run_check(number)
    assert result.passed, format_result(result)

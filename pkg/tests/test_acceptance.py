"""Acceptance grids.

Each test runs one criterion from ordpigeon.selftest and prints its
pass/fail line, so `pytest tests/test_acceptance.py -s` shows the same
report as `ordpigeon selftest`.  Budgets are enforced inside the
criteria themselves.
"""

import pytest

from ordpigeon.selftest import ALL_CRITERIA


@pytest.mark.parametrize(
    "criterion", ALL_CRITERIA,
    ids=[f"criterion_{c.__name__.rsplit('_', 1)[1]}" for c in ALL_CRITERIA])
def test_criterion(criterion, capsys):
    result = criterion()
    with capsys.disabled():
        print()
        print(result.line())
    assert result.ok, result.line()

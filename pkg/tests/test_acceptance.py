"""Acceptance gate: one line per criterion, run with ``pytest -s`` to see them."""
import pytest

from vknot.acceptance import CRITERIA


@pytest.mark.parametrize("name,check", CRITERIA, ids=[n for n, _ in CRITERIA])
def test_criterion(name, check):
    ok, detail = check()
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, detail

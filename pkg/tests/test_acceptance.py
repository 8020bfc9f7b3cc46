"""The acceptance suite, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v`` to get one pass/fail line
per criterion; the same checks back the ``raagvcd selftest`` command.
"""

import pytest

from raagvcd.selftest import CRITERIA


@pytest.mark.parametrize(
    ("name", "criterion"),
    CRITERIA,
    ids=[f"{i + 1:02d}-{name.replace(' ', '-')}" for i, (name, _) in enumerate(CRITERIA)],
)
def test_criterion(name, criterion):
    ok, detail = criterion()
    assert ok, f"{name}: {detail}"

"""The pinned acceptance battery: one test per criterion, each printing a
single pass/fail line. Every check is exact; there are no tolerances."""

import pytest

from kgraphalg.suite import (criterion_1, criterion_2, criterion_3,
                             criterion_4, criterion_5, criterion_6,
                             criterion_7, criterion_8, criterion_9)

CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA,
                         ids=[fn.__name__ for fn in CRITERIA])
def test_acceptance(criterion):
    result = criterion()
    print(result.line())
    assert result.passed, result.detail

"""Each acceptance criterion at its stated size; one summary line apiece."""

import pytest

from hodgepink.suites import SUITES

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("number", sorted(SUITES))
def test_criterion(number):
    result = SUITES[number]()
    ACCEPTANCE_LINES[number] = result.line()
    print(result.line())
    assert result.passed, "\n".join(result.failures[:10])

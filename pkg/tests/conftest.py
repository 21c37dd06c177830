import pytest

from symorbits import QQ, parse_polynomial


@pytest.fixture
def P():
    """Shorthand polynomial constructor from text."""

    def build(text, nvars, field=QQ):
        return parse_polynomial(text, nvars, field)

    return build

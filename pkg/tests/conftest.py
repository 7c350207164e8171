import os
import sys

from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def partitions(draw, max_size=16, min_size=0):
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    parts, left = [], n
    while left:
        cap = min(left, parts[-1]) if parts else left
        p = draw(st.integers(min_value=1, max_value=cap))
        parts.append(p)
        left -= p
    return tuple(parts)


moduli = st.integers(min_value=2, max_value=6)
big_moduli = st.integers(min_value=3, max_value=6)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.verdict_line(number))

import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from jacksym.field import IntPoly, RatFun  # noqa: E402
from jacksym.partition import revlex_order  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


small_ints = st.integers(min_value=-6, max_value=6)
int_polys = st.lists(small_ints, max_size=4).map(IntPoly)
nonzero_polys = int_polys.filter(lambda p: not p.is_zero())
ratfuns = st.builds(RatFun, int_polys, nonzero_polys)
nonzero_ratfuns = st.builds(RatFun, nonzero_polys, nonzero_polys)


def partitions_upto(n, lo=1):
    return st.integers(min_value=lo, max_value=n).flatmap(lambda w: st.sampled_from(revlex_order(w)))


# acceptance lines, echoed in the terminal summary so they land in test_output.txt
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

import time

import pytest
from hypothesis import strategies as st

from jacoirr.graph import make_digraph
from jacoirr.khazamula import LinearParams


@st.composite
def digraphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    # one bit per possible arc
    mask = draw(st.integers(0, 2 ** len(pairs) - 1))
    return make_digraph(n, [pair for k, pair in enumerate(pairs) if mask >> k & 1])


@st.composite
def digraphs_with_arcs(draw, max_n=12):
    g = draw(digraphs(min_n=2, max_n=max_n).filter(lambda g: g.arcs))
    return g


@st.composite
def relabelings(draw, max_n=12):
    g = draw(digraphs(max_n=max_n))
    perm = draw(st.permutations(list(g.vertices)))
    return g, perm


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def linear_params(draw):
    return LinearParams(draw(rationals), draw(rationals))


@pytest.fixture(scope="session")
def full_suite():
    from jacoirr.verify import run_suite

    return run_suite()


# --- acceptance summary --------------------------------------------------------

WALL_CLOCK_LIMIT = 10.0
WALL_CLOCK_CRITERION = (8, "full test suite wall-clock under 10 s")
_criteria: dict[int, dict] = {}
_started = [0.0]


def pytest_sessionstart(session):
    _started[0] = time.perf_counter()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and not report.failed):
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "failed": [], "tests": set()})
    entry["tests"].add(item.nodeid)
    if report.failed:
        entry["failed"].append(item.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    elapsed = time.perf_counter() - _started[0]
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "FAIL" if entry["failed"] else "PASS"
        tr.write_line(f"criterion {number}: {status}  {entry['title']} ({len(entry['tests'])} tests)")
        for nodeid in entry["failed"]:
            tr.write_line(f"    failed: {nodeid}")
    number, title = WALL_CLOCK_CRITERION
    status = "PASS" if elapsed < WALL_CLOCK_LIMIT else "FAIL"
    tr.write_line(f"criterion {number}: {status}  {title} (this run: {elapsed:.2f} s)")


def pytest_sessionfinish(session, exitstatus):
    if _criteria and time.perf_counter() - _started[0] >= WALL_CLOCK_LIMIT and exitstatus == 0:
        session.exitstatus = 1

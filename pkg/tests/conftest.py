import os
import sys
from itertools import combinations

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from codegree_lab import Hypergraph3, mubayi_rodl, tight_cycle, tight_cycle_minus  # noqa: E402


@st.composite
def hypergraphs(draw, min_n=0, max_n=12):
    n = draw(st.integers(min_n, max_n))
    triples = list(combinations(range(n), 3))
    if not triples:
        return Hypergraph3(n)
    chosen = draw(st.lists(st.sampled_from(triples), unique=True, max_size=len(triples)))
    return Hypergraph3(n, chosen)


@pytest.fixture(scope="session")
def c5():
    return tight_cycle(5)


@pytest.fixture(scope="session")
def c5m():
    return tight_cycle_minus(5)


@pytest.fixture(scope="session")
def mr1():
    return mubayi_rodl(1).result


@pytest.fixture(scope="session")
def mr2():
    return mubayi_rodl(2).result


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record a PASS/FAIL line for an acceptance criterion."""
    import time

    class _Recorder:
        def __init__(self):
            self.start = time.perf_counter()

        def done(self, number, title, ok, detail=""):
            elapsed = time.perf_counter() - self.start
            status = "PASS" if ok else "FAIL"
            ACCEPTANCE_LINES.append(f"criterion {number} [{status}] {title} ({elapsed:.2f}s) {detail}".rstrip())
            return elapsed

    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)

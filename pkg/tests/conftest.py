import itertools
import os

import hypothesis
from hypothesis import HealthCheck, strategies as st

from cfcolor.hypergraph import Hypergraph

hypothesis.settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10, derandomize=True)
hypothesis.settings.register_profile("thorough", deadline=None, max_examples=500)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# independent reference checkers: plain loops, no shared code with the package


def naive_k_cf(n, edges, colors, k):
    assert len(colors) == n
    for e in edges:
        ok = False
        for c in set(colors[v] for v in e):
            cnt = 0
            for v in e:
                if colors[v] == c:
                    cnt += 1
            if 1 <= cnt <= k:
                ok = True
        if not ok:
            return False
    return True


def naive_k_weak(n, edges, colors, k):
    # a single vertex is never counted as monochromatic, so k = 1 behaves like k = 2
    assert len(colors) == n
    for e in edges:
        if len(e) >= max(k, 2) and all(colors[v] == colors[e[0]] for v in e):
            return False
    return True


def naive_neighborhoods(n, pred):
    """Punctured neighborhoods from a pairwise predicate, one per vertex with a neighbor."""
    adj = [set() for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        if pred(i, j):
            adj[i].add(j)
            adj[j].add(i)
    return adj, [tuple(sorted(a)) for a in adj if a]


@st.composite
def hypergraphs(draw, max_n=12, max_m=12, min_n=0):
    n = draw(st.integers(min_n, max_n))
    if n == 0:
        return Hypergraph(0, ())
    edge = st.sets(st.integers(0, n - 1), min_size=1, max_size=n).map(lambda s: tuple(sorted(s)))
    return Hypergraph(n, tuple(draw(st.lists(edge, max_size=max_m))))


@st.composite
def colorings_for(draw, n, max_colors=4):
    return tuple(draw(st.lists(st.integers(0, max_colors - 1), min_size=n, max_size=n)))


@st.composite
def distinct_intervals(draw, max_n=14):
    """Intervals with pairwise distinct endpoints drawn from a shuffled pool."""
    n = draw(st.integers(0, max_n))
    pts = draw(st.permutations(range(2 * n)))
    from cfcolor.geometry import Interval

    return [Interval(min(pts[2 * i], pts[2 * i + 1]), max(pts[2 * i], pts[2 * i + 1])) for i in range(n)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

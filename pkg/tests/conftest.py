import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cliquecover.graph import build_graph

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=0, max_n=7, min_m=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_m, len(pairs)))) if pairs else []
    return build_graph(n, chosen)


@st.composite
def graphs_with_edge(draw, max_n=7):
    g = draw(graphs(min_n=2, max_n=max_n, min_m=1))
    e = draw(st.sampled_from(list(g.edges)))
    return g, e


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for no in sorted(RESULTS):
        status, detail = RESULTS[no]
        terminalreporter.write_line(f"criterion {no}: {status}  {detail}")

from itertools import combinations

from hypothesis import strategies as st

from dompoly.graph import Graph

_criterion_outcomes: dict[int, list[tuple[str, str]]] = {}


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, picks) if keep])


@st.composite
def graph_with_vertex(draw, min_n: int = 1, max_n: int = 8):
    g = draw(graphs(min_n=max(min_n, 1), max_n=max_n))
    return g, draw(st.sampled_from(g.vertices))


@st.composite
def graph_with_edge(draw, max_n: int = 8):
    g = draw(graphs(min_n=2, max_n=max_n).filter(lambda h: h.m > 0))
    return g, draw(st.sampled_from(g.edges()))


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for key in report.keywords:
        if key.startswith("criterion_"):
            n = int(key.removeprefix("criterion_"))
            _criterion_outcomes.setdefault(n, []).append((report.nodeid, report.outcome))


def pytest_collection_modifyitems(items):
    # expose criterion(n) markers as keywords the report hook can see
    for item in items:
        for mark in item.iter_markers("criterion"):
            item.keywords[f"criterion_{mark.args[0]}"] = True


def pytest_terminal_summary(terminalreporter):
    if not _criterion_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criterion_outcomes):
        results = _criterion_outcomes[n]
        failed = [nid.split("::")[-1] for nid, outcome in results if outcome != "passed"]
        status = "PASS" if not failed else "FAIL"
        line = f"criterion {n}: {status} ({len(results) - len(failed)}/{len(results)} checks)"
        if failed:
            line += "  failing: " + ", ".join(failed)
        terminalreporter.write_line(line)

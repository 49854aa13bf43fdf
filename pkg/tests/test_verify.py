from dompoly import reductions
from dompoly import verify as vf
from dompoly.graph import Graph
from dompoly.polynomial import ONE


def test_report_counts_and_keeps_first_failure():
    r = vf.Report()
    r.record("t:red", True, lambda: "unused")
    r.record("t:red", False, lambda: "first")
    r.record("t:red", False, lambda: "second")
    t = r.tallies["t:red"]
    assert (t.passed, t.failed, t.first_failure) == (1, 2, "first")
    assert not r.ok and r.failing() == ["t:red"]
    line = next(l for l in r.lines() if "t:red" in l)
    assert line.startswith("FAIL") and "first: first" in line


def test_corpus_sizes():
    # labeled graphs on 0..5 vertices: 1 + 1 + 2 + 8 + 64 + 1024
    assert len(vf.corpus(5)) == 1100
    assert len(vf.corpus(3)) == 12
    big = vf.corpus(9)
    assert len(big) == 1100 + vf.RANDOM_COUNT
    assert all(6 <= g.n <= 9 for g in big[1100:])


def test_random_corpus_is_reproducible():
    assert vf.random_corpus(20) == vf.random_corpus(20)


def test_splittings_of_p3():
    g = Graph.path(3)
    # X a single vertex: 2 + 4 + 2 side choices
    assert sum(1 for _ in vf.splittings(g, 1)) == 8
    # pairs add 4 + 2 + 4, counting both placements of an inner edge
    assert sum(1 for _ in vf.splittings(g, 2)) == 18
    for s in vf.splittings(g, 2):
        s.validate()


def test_path5_instances_on_a_path():
    found = list(vf.path5_instances(Graph.path(5)))
    assert found == [[0, 1, 2, 3, 4], [4, 3, 2, 1, 0]]
    assert list(vf.path5_instances(Graph.cycle(4))) == []


def test_small_corpus_passes_apart_from_second_form():
    report = vf.run_suite(vf.corpus(4))
    assert report.failing() == ["c:nbr:2"]
    # a path5 instance needs five vertices
    assert all(t.passed > 0 for i, t in report.tallies.items() if i != "path5")


def test_skip_removes_identity():
    report = vf.run_suite(vf.corpus(3), skip=["c:nbr:2", "corona"])
    assert "corona" not in report.tallies
    assert report.ok


def test_corrupted_reduction_is_reported_under_its_id(monkeypatch):
    real = reductions.twin_reduction
    monkeypatch.setattr(reductions, "twin_reduction", lambda g, u, w, ev: real(g, u, w, ev) + ONE)
    report = vf.run_suite(vf.corpus(4), skip=["c:nbr:2"])
    assert report.failing() == ["c:not"]
    assert "u=" in report.tallies["c:not"].first_failure


def test_path5_is_exercised_on_five_vertices():
    report = vf.run_suite(vf.all_labeled_graphs(5), skip=[i for i in vf.IDENTITY_IDS if i != "path5"])
    assert list(report.tallies) == ["path5"]
    assert report.tallies["path5"].passed > 0 and report.ok

import ldcode
import pytest


def test_lambda_on_named_families():
    assert ldcode.lambda_(ldcode.family("path", n=7))[0] == 3
    k23 = ldcode.family("complete_bipartite", r=2, s=3)
    size, witness = ldcode.lambda_(k23)
    assert size == 3
    assert ldcode.is_ld_set(k23, witness)
    bistar = ldcode.family("bistar", r=3, s=3)
    assert ldcode.lambda_complement(bistar) == 3
    assert ldcode.lambda_global(bistar)[0] == 4
    assert ldcode.closed_form("wheel", "lambda_complement", n=8) == 4


def test_graph6_round_trip():
    g = ldcode.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    assert ldcode.Graph.from_graph6(g.graph6()) == g
    assert ldcode.lambda_(g)[0] == 3
    assert ldcode.lambda_complement(g) == 2
    with pytest.raises(ValueError):
        ldcode.Graph.from_graph6("A`")


def test_enumeration_counts():
    assert [len(ldcode.enumerate_connected_graphs(n)) for n in range(1, 6)] == [1, 1, 2, 6, 21]
    assert len(ldcode.enumerate_connected_graphs(4, bipartite_only=True)) == 3
    with pytest.raises(ValueError):
        ldcode.enumerate_connected_graphs(ldcode.ENUMERATION_CAP + 1)


def test_associated_graph():
    p4 = ldcode.family("path", n=4)
    a = ldcode.build_associated(p4, [0, 3])
    assert a.order == 3
    assert sorted(a.edges()) == [("1", "z", 0), ("2", "z", 3)]
    assert a.levels()["z"] == 0
    report = a.check_properties()
    assert report["failures"] == []
    assert "[level=0]" in a.dot()
    with pytest.raises(ValueError):
        ldcode.build_associated(p4, [1])


def test_extremal_construction():
    built = ldcode.construct_extremal(4, 7)
    assert sorted(built["w_subsets"]) == sorted(["1234", "234", "134", "124", "123", "34", "12"])
    assert (built["lambda"], built["lambda_complement"]) == (4, 5)
    a = ldcode.build_associated(built["graph"], [0, 1, 2, 3])
    h = a.select_h("random", 3)
    assert ldcode.is_cactus(h)
    assert h.size == 8
    assert ldcode.feasibility(3, 6) and not ldcode.feasibility(3, 5)


def test_suites():
    report = ldcode.run_suite("difuno", n_max=5)
    assert report["passed"] and report["checked"] == 31
    cactus = ldcode.run_suite("cactus", count=50, seed=2)
    assert cactus["passed"]
    assert set(ldcode.suite_names()) >= {"difuno", "teoremon", "assoc"}

import json

import pytest

import kpalg


def test_fixture_table():
    assert kpalg.classify(kpalg.fixture("A2"))["primitive"]["verdict"] is True
    l1 = kpalg.classify(kpalg.fixture("L1"))
    assert l1["prime"]["verdict"] is True
    assert l1["primitive"]["verdict"] is False
    assert kpalg.classify(kpalg.fixture("L1"), "zmod:6")["prime"]["verdict"] is False
    d2 = kpalg.classify(kpalg.fixture("D2"))
    assert d2["mt3"]["witness"] == ["u", "w"]


def test_report_keys_in_order():
    keys = list(json.loads(kpalg.classify_json(kpalg.fixture("T2"))).keys())
    expected = ["graph", "properties", "mt3", "aperiodic", "prime", "primitive", "strongly_aperiodic",
                "sat_her", "maximal_tails", "prime_ideals", "primitive_ideals", "certificates"]
    assert [k for k in keys if k in expected] == expected


def test_ideals_and_tails():
    d2 = kpalg.fixture("D2")
    assert kpalg.sat_her(d2) == [[], ["u"], ["w"], ["u", "w"]]
    assert kpalg.maximal_tails(d2) == [["w"], ["u"]]
    assert kpalg.prime_ideals(d2) == [["u"], ["w"]]
    assert kpalg.primitive_ideals(d2) == [["u"], ["w"]]
    assert kpalg.prime_ideals(kpalg.fixture("L1"), "zmod:6") == []
    assert kpalg.check_mt3(d2) == ("u", "w")


def test_aperiodicity_and_chain():
    res = kpalg.is_aperiodic(kpalg.fixture("L1"))
    assert res["verdict"] == "periodic"
    assert res["witness"] == ("v", [0], [1])
    assert kpalg.is_aperiodic(kpalg.fixture("A2"))["verdict"] == "aperiodic"
    assert kpalg.primitivity_chain(kpalg.fixture("A2"), "u") == ["u", "e"]


def test_evaluate():
    a2 = kpalg.fixture("A2")
    assert kpalg.evaluate(a2, "z", "st(e)*s(e)")["element"] == "p(v)"
    zero = kpalg.evaluate(a2, "z", "s(e)*st(e) - p(u)")
    assert zero["element"] == "0"
    assert zero["zero"] == "zero"
    out = kpalg.evaluate(kpalg.fixture("L1"), "q", "s(e) + p(v)")
    assert out["components"] == {(1,): "s(e)", (0,): "p(v)"}
    assert kpalg.evaluate(kpalg.fixture("L1"), "zmod:6", "2*p(v) * 3*p(v)")["element"] == "0"


def test_graph_round_trip_and_errors():
    t2 = kpalg.fixture("T2")
    again = kpalg.parse_kg(t2.to_kg())
    assert again.vertices == ["v"]
    assert again.num_squares == 1
    with pytest.raises(kpalg.KPError, match="MissingSquare"):
        kpalg.parse_kg("kgraph x rank 2\nvertex v\nedge f color 1 from v to v\nedge g color 2 from v to v\n")
    with pytest.raises(kpalg.KPError, match="NotSaturatedHereditary"):
        kpalg.quotient(kpalg.fixture("A2"), ["v"])


def test_quotient_and_desourcify():
    q = kpalg.quotient(kpalg.fixture("D2"), ["u"])
    assert q.vertices == ["w"]
    tilde, sidecar = kpalg.desourcify(kpalg.fixture("A2"), 3)
    assert tilde.no_sources is False
    assert len(tilde.vertices) == 5
    assert len(json.loads(sidecar)["vertices"]) == 5
    assert kpalg.omega(2, [1, 1]).num_edges == 4

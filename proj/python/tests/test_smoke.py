import json

import pytest

import baric


def test_kk_product_and_weight():
    k = baric.kpow(1)
    kk = baric.bowtie(k, k)
    assert kk.dim == 2
    assert kk.weight == ["1", "1"]
    assert kk.multiply(["1", "2"], ["3", "4"]) == ["7", "14"]
    assert kk == baric.kpow(2)
    assert kk.is_bowtie


def test_flags_and_center():
    flags = baric.property_flags(baric.kpow(3))
    assert flags["associative"]
    assert not flags["commutative"]
    assert flags["center_dim"] == 0
    d2 = baric.property_flags(baric.dual_numbers())
    assert d2["unit"] == ["1", "0"]


def test_document_round_trip():
    dd = baric.bowtie(baric.dual_numbers("p2"), baric.dual_numbers("p2"))
    text = dd.to_json()
    assert json.loads(text)["provenance"] == {"bowtie": {"left": 2, "right": 2}}
    back = baric.BaricAlgebra.from_json(text)
    assert back == dd
    assert back.to_json() == text


def test_weights_and_ideals():
    assert len(baric.weights(baric.componentwise(2, "p2"))) == 2
    dd = baric.bowtie(baric.dual_numbers("p2"), baric.dual_numbers("p2"))
    assert len(baric.kernel_ideals(dd)) == 5
    assert baric.decompose(dd)["kind"] == "indecomposable"
    split = baric.decompose(baric.componentwise(3, "p2"))
    assert split["kind"] == "decomposable"


def test_classify():
    result = baric.classify(baric.kpow(3))
    assert result["verified"]
    target = json.loads(result["target"].to_json())
    assert target["mul"] == json.loads(baric.kpow(3).to_json())["mul"]
    assert target["weight"] == ["1", "1", "1"]
    assert baric.classify(baric.dual_numbers()) is None


def test_errors():
    with pytest.raises(baric.BaricError, match="WeightInvalid"):
        baric.BaricAlgebra.from_json('{"field": {"kind": "rational"}, "dim": 1, "mul": [], "weight": ["0"]}')
    with pytest.raises(baric.BaricError, match="FieldMismatch"):
        baric.bowtie(baric.kpow(1, "p2"), baric.kpow(1, "q"))


def test_property_suites(tmp_path):
    ids = baric.proposition_ids()
    assert len(ids) == 22
    report = baric.check("P2.1", 50, 7)
    assert report["failures"] == 0
    assert report["line"] == "P2.1 trials=50 failures=0 seed=7"
    code, out, _ = baric.run_cli(["verify", "--props", "EX5.1,P4.1", "--out", str(tmp_path)])
    assert code == 0
    assert "suites=2 passed=2 failed=0" in out


def test_random_baric_is_deterministic():
    a = baric.random_baric("p5", 3, seed=4)
    assert a == baric.random_baric("p5", 3, seed=4)
    assert a.weight[0] == "1"

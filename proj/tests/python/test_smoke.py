import pytest

import nmds

F = "GF(2^4;0x13)"
X = ["1", "a^1", "a^2", "a^3"]
Y = ["a^4", "a^5", "a^6", "a^7"]


def test_field_arithmetic():
    f = nmds.Field(F)
    assert f.order == 16
    assert f.mul("a^7", "a^9") == "a^1"
    assert f.inv("a^1") == "a^14"
    assert f.add("1", "1") == "0"
    assert repr(f) == F


def test_nmds_construction():
    out = nmds.construct_gvand(F, X, Y, target="nmds")
    assert out["schema"] == 1
    assert out["matrix"][0] == ["a^7", "a^9", "a^9", "1"]
    assert out["matrix"][2][3] == "0"
    assert out["conditions"]["witness"] == [1, 2, 4, 8]
    assert out["report"]["verdict"] == "NMDS"
    assert nmds.classify_matrix(F, out["matrix"]) == "NMDS"


def test_involutory():
    out = nmds.construct_involutory(F, X, "1", "nmds")
    assert out["matrix"][0] == ["a^9", "a^7", "a^7", "a^7"]
    assert out["involutory"] is True


def test_code_report_and_det():
    rep = nmds.code_report("GF(2^2;0x7)", [["a^2", "a^1", "0"], ["a^1", "a^1", "0"], ["a^1", "0", "a^1"]])
    assert rep["verdict"] == "AMDS_only"
    assert rep["d2"] == 4
    formula, elimination = nmds.det_gvand(F, "x=[1,a^1,a^3,a^7]; I={3}")
    assert formula == elimination == "0"


def test_recursive():
    table = dict(nmds.scan(F, ["1", "a^2", "a^3", "a^5"], 4, 4))
    assert table[4] == "MDS"
    fam = nmds.theta_family("theta-ib", F, "a^1", 4, 4, verify=True)
    assert fam["roots"] == ["1", "a^1", "a^2", "a^4"]
    assert fam["verified"] == "NMDS"


def test_errors():
    with pytest.raises(nmds.NmdsError) as info:
        nmds.construct_gvand(F, ["1", "1"], ["a^1", "a^2"])
    assert info.value.kind == "InvalidArgument"
    assert info.value.witness == [0, 1]
    with pytest.raises(nmds.NmdsError) as info:
        nmds.construct_gvand(F, X, Y)
    assert info.value.kind == "ConditionViolated"


def test_cli_entry():
    code, out, err = nmds.run_cli(["scan", "--field", F, "--poly", "1,a^1,0,0", "--m", "22"])
    assert code == 0
    assert "m = 22: MDS" in out
    assert nmds.run_cli(["nonsense"])[0] == 1

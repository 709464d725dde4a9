import json

import pytest

import qtv


def test_qint_and_expansion():
    assert qtv.qint(0) == "0"
    assert qtv.normalize(qtv.qint(1)) == qtv.qint(1)
    coeffs = qtv.hbar_expand(qtv.qint(2), 3)
    assert coeffs == [("0", "0"), ("2", "0"), ("0", "0"), ("-1/3", "0")]
    assert qtv.arith(qtv.qint(2), qtv.qint(2), "/") == "1"


def test_parse_error():
    with pytest.raises(ValueError):
        qtv.normalize("(1 + q")


def test_partitions_and_identity():
    assert len(qtv.partitions(5)) == 7
    assert qtv.permutation_identity(1) == "1"
    assert qtv.permutation_identity(5) == "0"


def test_weights_and_vev():
    assert qtv.w_matrix(0, 1, 0) == [[qtv.normalize("q^(1/2)*(-i)/(1 - q)")]]
    assert qtv.vev([(1, 0), (-1, 0)]) == str(qtv.central_sign)


def test_vertex_state():
    t = qtv.vertex_state(2)
    assert t[((), (), (), "0")] == "1"
    one = t[((1,), (), (), "0")]
    assert qtv.arith(one, qtv.qint(1), "*") == "-1"
    decorated = qtv.vertex_state(2, areas=["1/2", "0", "0"])
    assert ((2,), (), (), "1") in decorated


def test_checks():
    assert qtv.check_symmetry(3)["ok"]
    assert qtv.check_jacobi(20, 1)["ok"]
    assert qtv.check_commutation(1, 2)["ok"]


def test_cli_roundtrip():
    code, out, _ = qtv.run_cli(["compute", "--degree", "1"])
    assert code == 0
    data = json.loads(out)
    assert data["N"] == 1
    code, _, err = qtv.run_cli(["compute", "--degree", "99"])
    assert code == 2
    assert "degree" in err

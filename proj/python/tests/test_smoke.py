from fractions import Fraction

import pytest

import qmckay


def test_d5_bps():
    rep = qmckay.bps("D5")
    got = {tuple(e["class"]): Fraction(e["n0"]) for e in rep["bps"]}
    assert got == {(1, 0): 1, (1, 1): 2, (0, 1): 4, (0, 2): Fraction(1, 2), (1, 2): 1}


def test_group_aliases_agree():
    assert qmckay.roots("D:3") == qmckay.roots("D5")


def test_partition_constant_term():
    rep = qmckay.partition("D5", max_q_degree=0)
    assert rep["text"] == "1"


def test_multiple_cover():
    rep = qmckay.gw("D5", max_q_degree=4, lambda_order=0)
    rows = {tuple(r["class"]): r["invariants"][0]["N"] for r in rep["gw"]}
    assert Fraction(rows[(0, 1)]) == 4
    assert Fraction(rows[(0, 2)]) == Fraction(8, 8)
    assert Fraction(rows[(0, 3)]) == Fraction(4, 27)


def test_crc_potential():
    rep = qmckay.crc("D5", degree=5)
    terms = {tuple(t["exponents"]): t for t in rep["potential"]}
    assert terms[(2, 1)]["rational_guess"] == "1/2"
    assert terms[(0, 5)]["rational_guess"] == "1/324"
    assert abs(float(terms[(4, 0)]["coefficient"]) + 5 / 48) < 1e-12


def test_verify():
    assert qmckay.verify("T", max_q_degree=3)["passed"]


def test_errors():
    with pytest.raises(qmckay.ConfigurationError):
        qmckay.bps("A4")
    with pytest.raises(ValueError):
        qmckay.gw("D5", lambda_order=3)


def test_cli_in_process():
    code, out, _ = qmckay.run_cli(["partition", "--group", "D5", "--max-q-degree", "0", "--format", "text"])
    assert code == 0 and "text: 1" in out
    assert qmckay.run_cli(["bps", "--group", "A4"])[0] == 3

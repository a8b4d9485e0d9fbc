from fractions import Fraction
from math import comb

import pytest

import hilbertkit as hk


def test_catalan_numbers():
    c = hk.catalan(20)
    assert c[0] == 0
    for n in range(1, 21):
        assert c[n] == Fraction(comb(2 * n - 2, n - 1), n)


def test_binary_magma_is_catalan():
    assert hk.magma_series({2: 1}, 15) == hk.catalan(15)


def test_partitions():
    p = hk.named_series("euler_partitions", 100)
    assert p[:8] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert p[100] == 190569292


def test_invariants():
    df = hk.dicks_formanek("S2", 3)
    assert df["num"] == "1-t"
    assert df["den"] == "1-2t"
    assert df["coeffs"] == [1, 1, 2, 4]
    assert hk.dicks_formanek("C3", 3)["coeffs"] == [1, 1, 3, 9]
    assert hk.molien("S2", 4)["coeffs"] == [1, 1, 2, 2, 3]


def test_gk_dimension():
    # 1 / ((1 - t)^2 (1 - t^3)) and the same with an extra (1 + t) on both sides
    assert hk.gk_from_rational([1], [1, -2, 1, -1, 2, -1]) == 3
    assert hk.gk_from_rational([1, 1], [1, -1, -1, 0, 1, 1, -1]) == 3


def test_errors_carry_codes():
    with pytest.raises(hk.HilbertError) as info:
        hk.named_series("nope", 5)
    assert info.value.code == "UnknownKind"
    assert isinstance(info.value, ValueError)


def test_cli_round_trip():
    out = hk.call("magma", "section", "--arities", "2:1", "--s", "3", "--order", "21")
    coeffs = out["generators"]["coeffs"]
    assert [coeffs[k] for k in (3, 6, 9, 12)] == ["2", "38", "1262", "51302"]
    guessed = hk.call("series", "guess-algebraic", "--input", "-", "--dz", "2", "--dt", "1",
                      stdin=hk.run("series", "catalan", "--order", "20")[1])
    assert guessed["text"] == "z^2 - z + t"


def test_cli_errors():
    code, out, err = hk.run("series", "named", "--kind", "nope")
    assert code == 2 and out == ""
    with pytest.raises(hk.HilbertError) as info:
        hk.call("magma", "count", "--n", "30", "--limit", "1000")
    assert info.value.exit_code == 3


def test_paper_suite_passes():
    rows = hk.paper_suite()
    assert len(rows) == 14
    assert all(row["status"] == "PASS" for row in rows)

import pytest
from hypothesis import given
from hypothesis import strategies as st

from korbits.pairs import SymmetricPair
from korbits.tableau import (
    SignedTableau,
    TableauError,
    all_tableaux,
    closure_leq,
    from_profile,
    half_orbit_dim,
    is_valid,
    zero_tableau,
)

rows_st = st.lists(st.tuples(st.integers(1, 5), st.sampled_from((1, -1))), max_size=6)
SIGNED_PAIRS = ["spr:1", "spr:2", "spr:3", "spr:4", "sppq:1,1", "sppq:2,1", "sppq:2,2", "upq:1,1", "upq:2,1", "upq:2,2", "upq:3,2"]


def P(text):
    return SymmetricPair.parse(text)


@given(rows_st)
def test_string_round_trip(rows):
    t = SignedTableau.of(rows)
    assert SignedTableau.parse(str(t)) == t


@given(rows_st)
def test_profile_inverts(rows):
    t = SignedTableau.of(rows)
    assert from_profile(*t.profile()) == t


def test_string_format():
    t = SignedTableau.of([(2, 1), (1, -1), (2, -1), (1, 1)])
    assert str(t) == "2^1+ 2^1- 1^1+ 1^1-"
    assert str(SignedTableau.of([])) == "0"
    with pytest.raises(TableauError):
        SignedTableau.parse("2^+")


@pytest.mark.parametrize(
    "pair,count",
    [("spr:1", 3), ("spr:2", 8), ("spr:3", 19), ("sppq:1,1", 2), ("sppq:2,1", 3), ("upq:1,1", 3), ("upq:2,1", 4), ("upq:2,2", 10)],
)
def test_counts(pair, count):
    assert len(all_tableaux(P(pair))) == count


def test_sp4_list():
    got = sorted(map(str, all_tableaux(P("spr:2"))))
    assert got == sorted(
        ["1^2+ 1^2-", "2^1+ 1^1+ 1^1-", "2^1- 1^1+ 1^1-", "2^2+", "2^1+ 2^1-", "2^2-", "4^1+", "4^1-"]
    )


def test_validity_rules():
    assert not is_valid(P("spr:2"), SignedTableau.parse("3^1+ 1^1+"))
    assert is_valid(P("sppq:1,1"), SignedTableau.parse("2^1+ 2^1-"))
    assert not is_valid(P("sppq:1,1"), SignedTableau.parse("2^2+"))
    assert not is_valid(P("sppq:2,1"), SignedTableau.parse("3^1+ 1^1+ 1^1- 1^1-"))


@pytest.mark.parametrize("pair", SIGNED_PAIRS)
def test_closure_is_partial_order(pair):
    pr = P(pair)
    tabs = all_tableaux(pr)
    for a in tabs:
        assert closure_leq(pr, a, a)
        assert closure_leq(pr, zero_tableau(pr), a)
        for b in tabs:
            if a != b and closure_leq(pr, a, b):
                assert not closure_leq(pr, b, a)
                assert half_orbit_dim(pr, a) < half_orbit_dim(pr, b)
                for c in tabs:
                    if closure_leq(pr, b, c):
                        assert closure_leq(pr, a, c)


@pytest.mark.parametrize("pair", SIGNED_PAIRS + ["cgl:3", "cgl:5"])
def test_half_dimension_is_integral(pair):
    pr = P(pair)
    for t in all_tableaux(pr):
        d = half_orbit_dim(pr, t)
        assert isinstance(d, int) and d >= 0
    assert half_orbit_dim(pr, zero_tableau(pr)) == 0


def test_dimension_examples():
    pr = P("spr:2")
    assert half_orbit_dim(pr, SignedTableau.parse("2^2+")) == 3
    assert half_orbit_dim(pr, SignedTableau.parse("4^1+")) == 4


def test_encode_decode_all_valid_up_to_size_8():
    for pair in SIGNED_PAIRS:
        pr = P(pair)
        if pr.N > 8:
            continue
        for t in all_tableaux(pr):
            assert from_profile(*t.profile()) == t

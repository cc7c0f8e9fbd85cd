import pytest

from korbits.pairs import PairError, Parabolic, SymmetricPair, all_parabolics


@pytest.mark.parametrize("text", ["cgl:3", "upq:2,1", "spr:2", "sppq:1,1"])
def test_round_trip(text):
    assert str(SymmetricPair.parse(text)) == text


@pytest.mark.parametrize("text", ["gl:3", "upq:2", "spr:x", "sppq:1", ""])
def test_bad_descriptors(text):
    with pytest.raises(PairError):
        SymmetricPair.parse(text)


def test_dimensions():
    sp4 = SymmetricPair.parse("spr:2")
    assert sp4.dim_flag == 4 and sp4.num_simple_roots == 2
    assert Parabolic.of(sp4, [1]).dim(sp4) == 3
    assert Parabolic.of(sp4, [2]).dim(sp4) == 3
    assert Parabolic.of(sp4, [1, 2]).dim(sp4) == 0
    cgl = SymmetricPair.parse("cgl:3")
    assert cgl.num_simple_roots == 4 and cgl.dim_flag == 6
    assert Parabolic.of(cgl, [1]).factor_roots(cgl) == [frozenset({1}), frozenset()]
    assert Parabolic.of(cgl, [3]).factor_roots(cgl) == [frozenset(), frozenset({1})]
    assert len(all_parabolics(cgl)) == 16


def test_out_of_range_root():
    with pytest.raises(PairError):
        Parabolic.of(SymmetricPair.parse("upq:1,1"), [2])

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from korbits import moment as m
from korbits.clans import clan_dimension, clan_id, enumerate_clans, parse_clan
from korbits.pairs import GL, SP, Parabolic, SymmetricPair
from korbits.tableau import closure_leq

SMALL = ["spr:2", "sppq:1,1", "sppq:2,1", "upq:1,1", "upq:2,1", "upq:2,2", "cgl:2", "cgl:3"]


@pytest.mark.parametrize("desc, dk, ds", [
    ("spr:2", 4, 6), ("spr:3", 9, 12), ("sppq:1,1", 6, 4), ("sppq:2,1", 13, 8),
    ("upq:1,1", 2, 2), ("upq:2,1", 5, 4), ("cgl:2", 4, 4), ("cgl:3", 9, 9),
])
def test_model_dimensions(desc, dk, ds):
    assert m.check_model(m.matrix_model(SymmetricPair.parse(desc))) == {"dim_k": dk, "dim_s": ds}


@pytest.mark.parametrize("desc", SMALL)
def test_representative_flags(desc):
    pair = SymmetricPair.parse(desc)
    model = m.matrix_model(pair)
    keys = set()
    for c in enumerate_clans(pair):
        flag = m.representative_flag(pair, c)
        assert m.check_isotropic(model, flag)
        assert m.orbit_dimension(pair, flag) == clan_dimension(pair, c)
        keys.add(m.flag_key(pair, flag))
    # distinct clans land in distinct orbits
    assert len(keys) == len(enumerate_clans(pair))


@pytest.mark.parametrize("desc", SMALL)
def test_conormal_is_lagrangian(desc):
    pair = SymmetricPair.parse(desc)
    for c in enumerate_clans(pair):
        flag = m.representative_flag(pair, c)
        V = m.conormal_space(pair, flag)
        assert V.dim == pair.dim_flag - clan_dimension(pair, c)
        assert V.dim == m.dual_conormal_space(pair, flag)


def test_conormal_for_parabolic_matches_dual_route():
    pair = SymmetricPair.parse("spr:2")
    for levi in ((1,), (2,)):
        P = Parabolic.of(pair, levi)
        for c in enumerate_clans(pair):
            flag = m.representative_flag(pair, c)
            assert m.conormal_space(pair, flag, P).dim == m.dual_conormal_space(pair, flag, P)


def test_signed_jordan_type_upq11():
    pair = SymmetricPair.parse("upq:1,1")
    assert str(m.signed_jordan_type(pair, [[0, 1], [0, 0]])) == "2^1-"
    assert str(m.signed_jordan_type(pair, [[0, 0], [1, 0]])) == "2^1+"
    assert str(m.signed_jordan_type(pair, [[0, 0], [0, 0]])) == "1^1+ 1^1-"


def test_signed_jordan_type_rejects_non_nilpotent():
    pair = SymmetricPair.parse("upq:1,1")
    with pytest.raises(m.ModelError):
        m.signed_jordan_type(pair, [[0, 1], [1, 0]])


@pytest.mark.parametrize("clan, expected", [("+-", "2^1-"), ("-+", "2^1+"), ("11", "1^1+ 1^1-")])
def test_phi_upq11(clan, expected):
    pair = SymmetricPair.parse("upq:1,1")
    assert str(m.phi_B(pair, parse_clan(pair, clan))) == expected


def test_phi_sp4_extremes():
    pair = SymmetricPair.parse("spr:2")
    assert str(m.phi_B(pair, parse_clan(pair, "1221"))) == "1^2+ 1^2-"
    assert str(m.phi_B(pair, parse_clan(pair, "-+-+")))[:3] == "4^1"


def test_phi_respects_dimension_bound():
    pair = SymmetricPair.parse("cgl:3")
    for c in enumerate_clans(pair):
        t = m.phi_B(pair, c)
        assert m.orbit_dim_from_tableau(pair, t) <= pair.dim_flag


def test_trials_must_be_positive():
    pair = SymmetricPair.parse("spr:2")
    c = enumerate_clans(pair)[0]
    V = m.conormal_space(pair, m.representative_flag(pair, c))
    with pytest.raises(ValueError):
        m.generic_signed_type(pair, V, trials=0)


@pytest.mark.parametrize("desc", ["spr:2", "sppq:2,1", "upq:2,1"])
def test_samples_are_dominated_by_generic_type(desc):
    pair = SymmetricPair.parse(desc)
    for c in enumerate_clans(pair):
        V = m.conormal_space(pair, m.representative_flag(pair, c))
        if V.dim == 0:
            continue
        seen = []
        top = m.generic_signed_type(pair, V, seed=7, trials=6, tag=clan_id(pair, c), samples=seen)
        assert seen and all(closure_leq(pair, t, top) for t in seen)


@settings(max_examples=20)
@given(seed=st.integers(min_value=0, max_value=10**9))
def test_phi_is_seed_independent(seed):
    pair = SymmetricPair.parse("sppq:1,1")
    for c in enumerate_clans(pair):
        assert m.phi_B(pair, c, seed) == m.phi_B(pair, c)


@pytest.mark.parametrize("ambient, lam, labels", [
    (SP, (4,), [2, 2]), (SP, (2, 2), [0, 2]), (SP, (2, 1, 1), [1, 0]), (SP, (1, 1, 1, 1), [0, 0]),
    (GL, (2, 1), [1, 1]), (GL, (2, 2), [0, 2, 0]), (GL, (3,), [2, 2]),
])
def test_weighted_dynkin(ambient, lam, labels):
    assert m.weighted_dynkin(ambient, lam) == labels
    assert m.is_even(ambient, lam) == all(x in (0, 2) for x in labels)


def test_parabolic_from_even_orbit():
    assert m.parabolic_from_even_orbit(SP, (2, 2)) == frozenset({1})
    assert m.parabolic_from_even_orbit(SP, (2, 2, 2)) == frozenset({1, 2})
    assert m.parabolic_from_even_orbit(GL, (2, 2)) == frozenset({1, 3})
    with pytest.raises(ValueError):
        m.parabolic_from_even_orbit(SP, (2, 1, 1))


def test_even_orbit_is_richardson_for_its_parabolic():
    for n in (1, 2, 3):
        pair = SymmetricPair.parse(f"spr:{n}")
        lam = (2,) * n
        P = Parabolic.of(pair, m.parabolic_from_even_orbit(SP, lam))
        assert m.richardson(pair, P) == [lam]


def test_nilpotent_orbits_theta_contains_zero_and_richardson():
    pair = SymmetricPair.parse("spr:2")
    P = Parabolic.of(pair, [2])
    shapes = {t.shape for t in m.nilpotent_orbits_theta(pair, P)}
    assert (1, 1, 1, 1) in shapes and (2, 2) in shapes and (4,) not in shapes


def test_geometric_fibers_cover_classes():
    pair = SymmetricPair.parse("sppq:1,1")
    fibers = m.geometric_fibers(pair, Parabolic.of(pair, []))
    assert sum(len(v) for v in fibers.values()) == 4
    # one nonzero nilpotent orbit, met by the three non-open orbits
    assert sorted(len(v) for v in fibers.values()) == [1, 3]


def test_regularity_on_sp4_long_root_parabolic():
    pair = SymmetricPair.parse("spr:2")
    P = Parabolic.of(pair, [2])
    from korbits.clans import project_to_P
    regular = [k.rep for k in project_to_P(pair, P) if m.is_P_regular(pair, P, k.rep)]
    assert len(regular) == 3


@pytest.mark.parametrize("desc", ["upq:1,1", "spr:2", "sppq:1,1", "cgl:2"])
def test_geometric_enumeration_count(desc):
    pair = SymmetricPair.parse(desc)
    geo = m.geometric_orbits(pair)
    assert len(geo.dims) == len(enumerate_clans(pair))

import pytest

from hoplift.cyclo import FieldContext
from hoplift.datum import (
    Datum,
    GeneralDatum,
    ModeError,
    ParseError,
    fixture_e1,
    fixture_e2,
    fixture_e3,
    fixture_e4,
    fixture_general_mu,
    format_datum,
    pair_to_general,
    parse_datum,
)
from hoplift.groups import GammaChar, Group, dual_group, gamma_hat


def test_fixture_e1_valid():
    d = fixture_e1()
    rep = d.validate()
    assert rep.ok, rep.failures()
    assert d.m == (2,)
    assert d.q[0] == -d.ctx.one


def test_all_fixtures_valid():
    for fx in (fixture_e1, fixture_e2, fixture_e3, fixture_e4):
        rep = fx().validate()
        assert rep.ok, (fx.__name__, rep.failures())


def test_d0_fails_when_b_is_a_inverse():
    G = Group([2, 2])
    d = Datum(G, [G.element([1, 0])], [G.element([1, 0])], [G.character([1, 1])])
    rep = d.validate()
    assert not rep.ok
    assert any(c.name == "D0[1]" for c in rep.failures())


def test_d1_forces_q_on_diagonal():
    for fx in (fixture_e1, fixture_e2, fixture_e4):
        d = fx()
        for i in range(d.n):
            assert d.chi[i](d.a[i], d.ctx) == d.chi[i](d.b[i], d.ctx) == d.q[i]


def test_general_dat1_failure():
    # q = zeta_4 (m = 4), a^4 = (4,0) != 1, but chi^4 = (0,1) is nontrivial:
    # mu != 0 must fail dat1 through the chi branch
    G = Group([8, 3])
    ctx = FieldContext(24)
    gd = GeneralDatum(G, [G.element([1, 0])], [G.character([2, 1])], mu=[ctx.one])
    rep = gd.validate()
    assert any(c.name == "dat1[1]" and not c.passed for c in rep.checks)


def test_general_mu_fixture_valid():
    rep = fixture_general_mu().validate()
    assert rep.ok, rep.failures()


def test_half_clean():
    assert fixture_e1().is_half_clean()
    assert fixture_e2().is_half_clean()  # m = 3 odd: no admissible nonzero t
    assert not fixture_e3().is_half_clean()  # (ab)^{m'} = c^4 = 1 in Z/4
    assert fixture_e4().is_half_clean()


def test_classical():
    assert fixture_e1().is_classical()  # independent pair
    assert fixture_e2().is_classical()  # odd order
    assert not fixture_e3().is_classical()
    assert fixture_e4().is_classical()


def test_classical_implies_half_clean():
    for fx in (fixture_e1, fixture_e2, fixture_e3, fixture_e4):
        d = fx()
        if d.is_classical():
            assert d.is_half_clean()


def test_singular_set_h_e1():
    d = fixture_e1()
    triv = d.group.trivial_character()
    s = d.singular_set_h(triv)
    assert s.S == {0} and s.e(0) == 0
    gam = d.group.character([1, 0])  # gamma(a) = -1, gamma(b) = 1
    assert gam(d.a[0], d.ctx) == -d.ctx.one
    assert gam(d.b[0], d.ctx).is_one()
    assert d.singular_set_h(gam).S == frozenset()


def test_singular_set_h_e2():
    d = fixture_e2()
    gam = d.group.character([1])  # gamma(c) = zeta_3, gamma(c^2) = zeta_3^2 = q^{-1}
    s = d.singular_set_h(gam)
    assert s.S == {0} and s.e(0) == 1


def test_singular_set_d_trivial():
    for fx in (fixture_e1, fixture_e2):
        d = fx()
        lam = GammaChar(d.group.trivial_character(), d.group.identity())
        s = d.singular_set_d(lam)
        assert s.S1 == {0} and s.S2 == {0} and s.S3 == {0}
        assert s.e(0) == 0 and s.ep(0) == 0


def test_singular_set_d_sing1_fails():
    d = fixture_e2()
    # lambda with lambda(a chi^{-1}) = zeta_3, not in {q^0, q^{-1}} = {1, zeta_3^2}
    for lam in gamma_hat(d.group):
        v = lam.value(d.a[0], d.chi[0].inverse(), d.ctx)
        if v == d.ctx.root_of_unity(1):
            assert 0 not in d.singular_set_d(lam).S1
            break
    else:
        pytest.fail("no such lambda found")


def test_singular_exponent_unique():
    # at most one e in [0, m_j-2] can match: q_j has exact order m_j
    for fx in (fixture_e1, fixture_e2, fixture_e3, fixture_e4):
        d = fx()
        for j in range(d.n):
            for k in range(d.m[j]):
                hits = [e for e in range(d.m[j] - 1)
                        if d.q[j] ** (-e) == d.q[j] ** k]
                assert len(hits) <= 1


def test_c_function():
    d = fixture_e1()
    assert d.c_function(0, 0, d.group.trivial_character()).is_one()
    assert d.c_function(0, 1, d.group.trivial_character()).is_zero()
    d2 = fixture_e2()
    gam = d2.group.character([2])
    # frozen by direct product: (q*gamma(c^2) - 1)(gamma(c^2) - 1) = 3
    assert d2.c_function(0, 2, gam) == d2.ctx.from_rational(3)


def test_c_function_vanishes_on_singular():
    for fx in (fixture_e1, fixture_e2, fixture_e4):
        d = fx()
        for gam in dual_group(d.group):
            s = d.singular_set_h(gam)
            for j in s.S:
                assert d.c_function(j, s.e(j) + 1, gam).is_zero()


def test_normalize_general():
    d = fixture_e2()
    gd = pair_to_general(d)
    assert gd.validate().ok, gd.validate().failures()
    back = gd.normalize()
    assert back.a == d.a and back.b == d.b and back.chi == d.chi


def test_normalize_rejects_mu():
    with pytest.raises(ModeError):
        fixture_general_mu().normalize()


def test_parse_roundtrip():
    for fx in (fixture_e1, fixture_e2, fixture_e4):
        d = fx()
        d2 = parse_datum(format_datum(d))
        assert d2.a == d.a and d2.b == d.b and d2.chi == d.chi


def test_parse_general():
    text = """
# a general datum over Z/8
[group]
orders = 8
[datum]
generators = 1
aa.1 = 1
cchi.1 = 2
mu.1 = 1
"""
    gd = parse_datum(text)
    assert isinstance(gd, GeneralDatum)
    assert gd.m == (4,)
    assert gd.mu[0].is_one()


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as ei:
        parse_datum("[group]\norders = x,2\n")
    assert "line 2" in str(ei.value)
    with pytest.raises(ParseError):
        parse_datum("[group]\norders = 2\n[datum]\nn = 1\na.1 = 1\nb.1 = 1\n")
    with pytest.raises(ParseError):
        parse_datum("orders = 2\n")

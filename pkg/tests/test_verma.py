from hoplift.datum import fixture_e1, fixture_e2, fixture_e4
from hoplift.groups import dual_group
from hoplift.hopf import Lifting
from hoplift.verma import VermaZ, analyze_verma


def test_e1_yaction_values():
    d = fixture_e1()
    triv = d.group.trivial_character()
    Z = VermaZ(d, triv)
    # y . (x tensor 1) = (gamma(ab) - 1)(1 tensor 1) = 0 for trivial gamma
    v = Z.basis_vector((1,))
    assert all(c.is_zero() for c in Z.apply(Z.y_mats[0], v))
    gam = d.group.character([1, 0])  # gamma(a) = -1, gamma(b) = 1
    Z2 = VermaZ(d, gam)
    w = Z2.apply(Z2.y_mats[0], Z2.basis_vector((1,)))
    assert w[Z2.index[(0,)]] == d.ctx.from_rational(-2)
    assert w[Z2.index[(1,)]].is_zero()


def test_group_action_diagonal():
    d = fixture_e2()
    gam = d.group.character([2])
    Z = VermaZ(d, gam)
    g = Z.group_mats[0]
    for lab in Z.labels:
        p = Z.index[lab]
        eta = Z.weight_of(lab)
        col = [g[r][p] for r in range(Z.dim)]
        assert col[p] == eta(d.group.generator(0), d.ctx)
        assert all(col[r].is_zero() for r in range(Z.dim) if r != p)


def test_primitive_monomials_verified_by_matrices():
    for fx in (fixture_e1, fixture_e2, fixture_e4):
        d = fx()
        H = Lifting(d)
        for gam in dual_group(d.group):
            Z = VermaZ(d, gam, H)
            prims = set(Z.primitive_monomials())
            for lab in Z.labels:
                v = Z.basis_vector(lab)
                killed = all(
                    all(c.is_zero() for c in Z.apply(y, v)) for y in Z.y_mats)
                assert killed == (lab in prims), (fx.__name__, gam, lab)


def test_e1_primitive_and_dims():
    d = fixture_e1()
    triv = d.group.trivial_character()
    Z = VermaZ(d, triv)
    assert sorted(Z.primitive_monomials()) == [(0,), (1,)]
    assert Z.simple_dim_formula() == 1
    gam = d.group.character([1, 0])
    Z2 = VermaZ(d, gam)
    assert Z2.primitive_monomials() == [(0,)]
    assert Z2.simple_dim_formula() == 2


def test_e2_primitive_monomials():
    d = fixture_e2()
    gam = d.group.character([1])  # e = 1
    Z = VermaZ(d, gam)
    assert sorted(Z.primitive_monomials()) == [(0,), (2,)]
    gam2 = d.group.character([2])  # S empty
    Z2 = VermaZ(d, gam2)
    assert Z2.primitive_monomials() == [(0,)]
    assert Z2.simple_dim_formula() == 3


def test_analysis_e1_all_characters():
    d = fixture_e1()
    H = Lifting(d)
    dims = {}
    lengths = {}
    for gam in dual_group(d.group):
        a = analyze_verma(d, gam, H)
        assert a.ok, (gam, [c for c in a.checks if not c[1]])
        dims[gam.exps] = a.dim_l_oracle
        lengths[gam.exps] = a.loewy_length
    assert sorted(dims.values()) == [1, 1, 2, 2]
    assert dims[(0, 0)] == 1 and dims[(1, 1)] == 1
    assert lengths[(0, 0)] == 2 and lengths[(1, 0)] == 1


def test_analysis_e2_all_characters():
    d = fixture_e2()
    H = Lifting(d)
    for gam in dual_group(d.group):
        a = analyze_verma(d, gam, H)
        assert a.ok, (gam, [c for c in a.checks if not c[1]])
    # frozen: gamma(c) = zeta_3 has S = {1}, e = 1, dim L = 2, layers (2, 1)
    a = analyze_verma(d, d.group.character([1]), H)
    assert a.S == [1] and a.e == {1: 1}
    assert a.dim_l_oracle == 2 and a.loewy_length == 2
    assert a.layer_dims == [2, 1]


def test_analysis_e4_all_characters():
    d = fixture_e4()
    H = Lifting(d)
    for gam in dual_group(d.group):
        a = analyze_verma(d, gam, H)
        assert a.ok, (gam, [c for c in a.checks if not c[1]])


def test_parametrization_injective():
    # weight of the unique primitive line of L(gamma) recovers gamma
    for fx in (fixture_e1, fixture_e2, fixture_e4):
        d = fx()
        H = Lifting(d)
        seen = set()
        for gam in dual_group(d.group):
            Z = VermaZ(d, gam, H)
            rep = Z.module_rep()
            series = rep.radical_series()
            head_factors = Z.layer_decomposition(series)[0]
            assert len(head_factors) == 1
            tag, dim = head_factors[0]
            assert tag == gam.exps
            assert dim == Z.simple_dim_formula()
            assert tag not in seen
            seen.add(tag)


def test_splitting_lemma_dimensions():
    # Z(gamma) = k(1 tensor 1) + J^- (1 tensor 1): x-degree >= 1 span has codim 1
    d = fixture_e2()
    for gam in dual_group(d.group):
        Z = VermaZ(d, gam)
        rep = Z.module_rep()
        high = [Z.basis_vector(lab) for lab in Z.labels if sum(lab) >= 1]
        from hoplift.linalg import Subspace

        s = Subspace(d.ctx, Z.dim, high)
        assert s.dim == Z.dim - 1

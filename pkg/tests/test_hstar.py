import pytest

from hoplift.cyclo import q_factorial
from hoplift.datum import fixture_e1, fixture_e2, fixture_e4, pair_to_general
from hoplift.groups import dual_group
from hoplift.hopf import (
    GeneralLifting,
    counit_functional,
    dual_basis,
    epsilon_g_functional,
    gamma_functional,
    hit_span_dim,
    xi_standard,
)
from hoplift.linalg import Subspace, rref


@pytest.fixture(scope="module", params=["E1", "E2"])
def gen_alg(request):
    fx = {"E1": fixture_e1, "E2": fixture_e2}[request.param]
    return GeneralLifting(pair_to_general(fx()))


def test_dualgroup_functional_values(gen_alg):
    alg = gen_alg
    d = alg.datum
    for gamma in dual_group(d.group):
        f = gamma_functional(alg, gamma)
        for w in alg.basis():
            i, g = w
            want = gamma(g, alg.ctx) if not any(i) else alg.ctx.zero
            assert f(alg.word(w)) == want


def test_singlepowers(gen_alg):
    # xi_k^c(v^i g) = (c)_{q_k}! delta_{c u_k, i};  xi_k^{m_k} = 0
    alg = gen_alg
    d = alg.datum
    for k in range(alg.ngens):
        xi = xi_standard(alg, k)
        p = counit_functional(alg)
        for c in range(d.m[k]):
            if c:
                p = p * xi
            fact = q_factorial(c, d.q[k])
            for w in alg.basis():
                i, g = w
                want = fact if list(i) == [c if t == k else 0 for t in range(alg.ngens)] \
                    else alg.ctx.zero
                assert p(alg.word(w)) == want
        assert (p * xi).is_zero()


def test_dual_basis_pairing_identity(gen_alg):
    alg = gen_alg
    pairs = dual_basis(alg)
    basis = alg.basis()
    assert len(pairs) == len(basis)
    lookup = dict(pairs)
    for w in basis:
        f = lookup[w]
        for v in basis:
            want = alg.ctx.one if v == w else alg.ctx.zero
            assert f(alg.word(v)) == want, (w, v)


def test_multiph_star_relations(gen_alg):
    # gamma xi_k = gamma(a_k) xi_k gamma;  xi_s xi_t = chi_s(a_t) xi_t xi_s
    alg = gen_alg
    d = alg.datum
    xis = [xi_standard(alg, k) for k in range(alg.ngens)]
    for gamma in dual_group(d.group):
        gf = gamma_functional(alg, gamma)
        for k in range(alg.ngens):
            lhs = gf * xis[k]
            rhs = (xis[k] * gf).scale(gamma(d.a[k], alg.ctx))
            assert lhs == rhs
    for s in range(alg.ngens):
        for t in range(alg.ngens):
            if s == t:
                continue
            lhs = xis[s] * xis[t]
            rhs = (xis[t] * xis[s]).scale(d.chi[s](d.a[t], alg.ctx))
            assert lhs == rhs


def test_multiph_star_relations_e4():
    alg = GeneralLifting(pair_to_general(fixture_e4()))
    d = alg.datum
    xis = [xi_standard(alg, k) for k in range(alg.ngens)]
    for s in range(alg.ngens):
        for t in range(alg.ngens):
            if s == t:
                continue
            assert xis[s] * xis[t] == (xis[t] * xis[s]).scale(d.chi[s](d.a[t], alg.ctx))


def test_counit_is_unit_of_convolution(gen_alg):
    alg = gen_alg
    eps = counit_functional(alg)
    for k in range(alg.ngens):
        xi = xi_standard(alg, k)
        assert eps * xi == xi and xi * eps == xi
    gam = gamma_functional(alg, alg.datum.group.trivial_character())
    assert gam == eps


def test_epsilon_g_functionals(gen_alg):
    alg = gen_alg
    d = alg.datum
    for g in d.group.elements():
        f = epsilon_g_functional(alg, g)
        for w in alg.basis():
            i, h = w
            want = alg.ctx.one if (not any(i) and h == g) else alg.ctx.zero
            assert f(alg.word(w)) == want


def test_xi_ideal_nilpotent_with_group_algebra_quotient(gen_alg):
    # the two-sided ideal generated by the xi_k is nilpotent, H*/J = k Ghat
    alg = gen_alg
    d = alg.datum
    basis = alg.basis()
    dimH = len(basis)
    xis = [xi_standard(alg, k) for k in range(alg.ngens)]
    gammas = [gamma_functional(alg, gamma) for gamma in dual_group(d.group)]
    ctx = alg.ctx

    def close(funcs):
        vecs = [f.as_vector(basis) for f in funcs]
        space = Subspace(ctx, dimH, vecs)
        frontier = list(funcs)
        pool = list(funcs)
        while frontier:
            new = []
            for f in frontier:
                for mult in xis + gammas:
                    for prod in (mult * f, f * mult):
                        vec = prod.as_vector(basis)
                        if not space.contains(vec):
                            space = space.extended([vec])
                            new.append(prod)
                            pool.append(prod)
            frontier = new
        return space, pool

    J, pool = close(xis)
    assert J.dim == dimH - d.group.order  # H*/J has dim |Ghat|
    # nilpotency: powers of the ideal shrink to zero
    layer = pool
    space = J
    for _ in range(dimH + 1):
        if space.dim == 0:
            break
        nxt = []
        for f in layer[: min(len(layer), 40)]:
            for g in pool[: min(len(pool), 40)]:
                nxt.append(f * g)
        vecs = [f.as_vector(basis) for f in nxt]
        space = Subspace(ctx, dimH, vecs)
        layer = nxt
    assert space.dim == 0


def test_hit_span_dims_match_simple_dims():
    # dim(H -> gamma) = dim L(gamma), the coradical check (per-gamma values
    # frozen from the dimension formula exercised independently in verma tests)
    from hoplift.hopf import Lifting

    d = fixture_e1()
    H = Lifting(d)
    dims = {}
    for gamma in dual_group(d.group):
        dims[gamma.exps] = hit_span_dim(H, gamma)
    assert dims == {(0, 0): 1, (1, 1): 1, (1, 0): 2, (0, 1): 2}

import random

import pytest

from hoplift.cyclo import FieldContext
from hoplift.groups import (
    Character,
    GammaChar,
    Group,
    GroupMismatch,
    dual_group,
    gamma_hat,
    gamma_idempotent_coeffs,
    group_idempotent_coeffs,
)


def test_group_arithmetic():
    G = Group([2, 2])
    a, b = G.element([1, 0]), G.element([0, 1])
    assert a * b == G.element([1, 1])
    assert G.identity() * a == a
    Z4 = Group([4])
    assert Z4.element([2]).order() == 2
    assert Z4.element([3]).order() == 4
    assert Z4.element([1]).inverse() == Z4.element([3])


def test_group_mismatch():
    with pytest.raises(GroupMismatch):
        Group([2]).element([1]) * Group([3]).element([1])


def test_char_eval():
    ctx = FieldContext(3)
    Z3 = Group([3])
    chi = Z3.character([1])
    assert chi(Z3.element([2]), ctx) == ctx.root_of_unity(2)
    assert Z3.trivial_character()(Z3.element([2]), ctx).is_one()
    rng = random.Random(3)
    for G, N in ((Group([2, 4]), 4), (Group([3]), 3), (Group([6, 2]), 6)):
        ctx = FieldContext(N)
        for _ in range(20):
            chi = G.character([rng.randrange(d) for d in G.orders])
            g = G.element([rng.randrange(d) for d in G.orders])
            h = G.element([rng.randrange(d) for d in G.orders])
            assert chi(g * h, ctx) == chi(g, ctx) * chi(h, ctx)
            assert (chi * chi)(g, ctx) == chi(g, ctx) ** 2


def test_dual_group_enumeration():
    assert len(dual_group(Group([2, 2]))) == 4
    ctx = FieldContext(3)
    Z3 = Group([3])
    vals = {chi(Z3.element([1]), ctx) for chi in dual_group(Z3)}
    assert vals == {ctx.one, ctx.root_of_unity(1), ctx.root_of_unity(2)}


def test_gamma_hat_distinct_as_functions():
    # derived: evaluate all 9 GammaChars of Z/3 on all of Gamma, pairwise distinct
    ctx = FieldContext(3)
    G = Group([3])
    chars = gamma_hat(G)
    assert len(chars) == 9
    tables = []
    for lam in chars:
        tables.append(tuple(lam.value(g, gamma, ctx)
                            for g in G.elements() for gamma in dual_group(G)))
    assert len(set(tables)) == 9


def test_orthogonality():
    # sum_{gamma in Ghat} gamma(g) = |G| delta_{1,g}
    for orders, N in (((2, 2), 2), ((3,), 3), ((4,), 4)):
        G = Group(orders)
        ctx = FieldContext(N)
        for g in G.elements():
            s = ctx.zero
            for gamma in dual_group(G):
                s = s + gamma(g, ctx)
            assert s == (ctx.from_rational(G.order) if g.is_identity() else ctx.zero)


def test_double_duality_injective():
    # g -> ghat (evaluation character on Ghat) is an injective homomorphism
    ctx = FieldContext(6)
    G = Group([6, 2])
    tables = {}
    for g in G.elements():
        tables[g] = tuple(gamma(g, ctx) for gamma in dual_group(G))
    assert len(set(tables.values())) == G.order


def test_idempotents_z2():
    ctx = FieldContext(2)
    Z2 = Group([2])
    lam = Z2.character([1])
    co = group_idempotent_coeffs(lam, ctx)
    assert co[Z2.identity()] == ctx.from_rational(1, 2)
    assert co[Z2.element([1])] == ctx.from_rational(-1, 2)


def _convolve(c1, c2):
    out = {}
    for g, a in c1.items():
        for h, b in c2.items():
            k = g * h
            out[k] = out.get(k, a.ctx.zero) + a * b
    return out


def test_idempotents_orthogonal_and_sum_to_one():
    for orders, N in (((3,), 3), ((2, 2), 2), ((4,), 4), ((2, 4), 4)):
        G = Group(orders)
        ctx = FieldContext(N)
        chars = dual_group(G)
        total = {g: ctx.zero for g in G.elements()}
        systems = {chi: group_idempotent_coeffs(chi, ctx) for chi in chars}
        for chi, co in systems.items():
            for g, v in co.items():
                total[g] = total[g] + v
            for mu, co2 in systems.items():
                prod = _convolve(co, co2)
                expect = co if chi == mu else {}
                for g in G.elements():
                    want = expect.get(g, ctx.zero)
                    assert prod.get(g, ctx.zero) == want
        for g, v in total.items():
            assert v == (ctx.one if g.is_identity() else ctx.zero)


def test_gamma_idempotents_sum():
    ctx = FieldContext(3)
    G = Group([3])
    total = {}
    for lam in gamma_hat(G):
        for key, v in gamma_idempotent_coeffs(lam, ctx).items():
            total[key] = total.get(key, ctx.zero) + v
    for (g, gamma), v in total.items():
        ident = g.is_identity() and gamma.is_trivial()
        assert v == (ctx.one if ident else ctx.zero)

"""Finite abelian groups in invariant-factor form, dual groups, and the
group Gamma = G x Ghat with its characters.

Characters are stored as exponent vectors against the listed cyclic
generators (chi(gen_j) = zeta_N^{(N/d_j) e_j} for the conductor N of the
ambient field context), never as value tables: exact, compact, closed under
multiplication.  Gamma-hat is realized as Ghat x G through double duality,
matching the identification used throughout the double-side machinery.
"""

from __future__ import annotations

from math import lcm

from hoplift.cyclo import FieldContext, FieldElem


class GroupMismatch(ValueError):
    pass


class Group:
    """Direct product of cyclic groups Z/d_1 x ... x Z/d_r."""

    def __init__(self, orders):
        orders = tuple(int(d) for d in orders)
        if not orders or any(d < 1 for d in orders):
            raise ValueError("cyclic factor orders must be positive")
        self.orders = orders
        self.rank = len(orders)
        self.exponent = lcm(*orders)
        self.order = 1
        for d in orders:
            self.order *= d

    def __eq__(self, other):
        return isinstance(other, Group) and self.orders == other.orders

    def __hash__(self):
        return hash(self.orders)

    def __repr__(self):
        return "Group(" + "x".join(f"Z/{d}" for d in self.orders) + ")"

    def identity(self) -> GroupElem:
        return GroupElem(self, (0,) * self.rank)

    def element(self, exps) -> GroupElem:
        return GroupElem(self, tuple(exps))

    def generator(self, j: int) -> GroupElem:
        return GroupElem(self, tuple(1 if i == j else 0 for i in range(self.rank)))

    def elements(self):
        out = [self.identity()]
        for j, d in enumerate(self.orders):
            gen = self.generator(j)
            out = [e * (gen ** k) for e in out for k in range(d)]
        # reorder lexicographically by exponent vector
        out.sort(key=lambda e: e.exps)
        return out

    def trivial_character(self) -> Character:
        return Character(self, (0,) * self.rank)

    def character(self, exps) -> Character:
        return Character(self, tuple(exps))


class GroupElem:
    __slots__ = ("group", "exps")

    def __init__(self, group: Group, exps):
        if len(exps) != group.rank:
            raise GroupMismatch("exponent vector has wrong length")
        self.group = group
        self.exps = tuple(e % d for e, d in zip(exps, group.orders))

    def __mul__(self, other):
        if self.group != other.group:
            raise GroupMismatch("elements of different groups")
        return GroupElem(self.group, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int):
        return GroupElem(self.group, tuple(e * k for e in self.exps))

    def inverse(self):
        return GroupElem(self.group, tuple(-e for e in self.exps))

    def order(self) -> int:
        return lcm(*(d // __import__("math").gcd(d, e) if e else 1
                     for e, d in zip(self.exps, self.group.orders)))

    def is_identity(self) -> bool:
        return not any(self.exps)

    def __eq__(self, other):
        return (isinstance(other, GroupElem) and self.group == other.group
                and self.exps == other.exps)

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"g{self.exps}"


class Character:
    """Character of G, evaluated through a FieldContext whose conductor is a
    multiple of exp(G)."""

    __slots__ = ("group", "exps")

    def __init__(self, group: Group, exps):
        if len(exps) != group.rank:
            raise GroupMismatch("exponent vector has wrong length")
        self.group = group
        self.exps = tuple(e % d for e, d in zip(exps, group.orders))

    def __call__(self, g: GroupElem, ctx: FieldContext) -> FieldElem:
        if g.group != self.group:
            raise GroupMismatch("character applied to foreign element")
        N = ctx.N
        acc = 0
        for e, x, d in zip(self.exps, g.exps, self.group.orders):
            acc += (N // d) * e * x
        return ctx.root_of_unity(acc)

    def __mul__(self, other):
        if self.group != other.group:
            raise GroupMismatch
        return Character(self.group, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int):
        return Character(self.group, tuple(e * k for e in self.exps))

    def inverse(self):
        return Character(self.group, tuple(-e for e in self.exps))

    def is_trivial(self) -> bool:
        return not any(self.exps)

    def __eq__(self, other):
        return (isinstance(other, Character) and self.group == other.group
                and self.exps == other.exps)

    def __hash__(self):
        return hash(("chi", self.exps))

    def __repr__(self):
        return f"chi{self.exps}"


def dual_group(G: Group) -> list[Character]:
    """Complete duplicate-free enumeration of Ghat, |Ghat| = |G|."""
    out = [Character(G, exps.exps) for exps in G.elements()]
    return out


class GammaChar:
    """Character of Gamma = G x Ghat, stored as (character of G, element of G)
    via the canonical isomorphism (Ghat)^hat = G: the value at (g, gamma) is
    charG(g) * gamma(elem)."""

    __slots__ = ("charG", "elem")

    def __init__(self, charG: Character, elem: GroupElem):
        if charG.group != elem.group:
            raise GroupMismatch("components over different groups")
        self.charG = charG
        self.elem = elem

    @property
    def group(self) -> Group:
        return self.charG.group

    def value(self, g: GroupElem, gamma: Character, ctx: FieldContext) -> FieldElem:
        return self.charG(g, ctx) * gamma(self.elem, ctx)

    def __mul__(self, other):
        return GammaChar(self.charG * other.charG, self.elem * other.elem)

    def inverse(self):
        return GammaChar(self.charG.inverse(), self.elem.inverse())

    def is_trivial(self) -> bool:
        return self.charG.is_trivial() and self.elem.is_identity()

    def __eq__(self, other):
        return (isinstance(other, GammaChar) and self.charG == other.charG
                and self.elem == other.elem)

    def __hash__(self):
        return hash((self.charG.exps, self.elem.exps))

    def __repr__(self):
        return f"lam({self.charG.exps};{self.elem.exps})"


def gamma_hat(G: Group) -> list[GammaChar]:
    """All |G|^2 characters of Gamma = G x Ghat."""
    return [GammaChar(chi, g) for chi in dual_group(G) for g in G.elements()]


def group_idempotent_coeffs(lam: Character, ctx: FieldContext) -> dict[GroupElem, FieldElem]:
    """Coefficients of e_lam = |G|^{-1} sum_g lam(g^{-1}) g in the group algebra."""
    G = lam.group
    n = G.order
    return {g: lam(g.inverse(), ctx) / n for g in G.elements()}


def gamma_idempotent_coeffs(lam: GammaChar, ctx: FieldContext):
    """Coefficients of e_lam over Gamma = G x Ghat, keyed by (g, gamma)."""
    G = lam.group
    n = G.order * G.order
    out = {}
    for g in G.elements():
        for gamma in dual_group(G):
            out[(g, gamma)] = lam.inverse().value(g, gamma, ctx) / n
    return out

"""Defining data for liftings of quantum linear spaces.

Two shapes are supported.  A *general* datum carries N generators v_i with
grouplikes a_i, characters chi_i, nilpotency scalars mu_i and linking
scalars lambda_ij, subject to the compatibility conditions (chi_i(a_j)
chi_j(a_i) = 1 for i != j; mu_i = 0 unless a_i^{m_i} != 1 and chi_i^{m_i}
trivial; lambda_ij = 0 unless a_i a_j != 1 and chi_i chi_j trivial;
lambda_ji = -q_ji lambda_ij).  A *normalized* datum is the nilpotent,
simply-linked, perfectly-matched case written with paired generators
x_i, y_i: grouplikes a_i, b_i, characters chi_i (chi of y_i is chi_i^{-1})
and every linking scalar rescaled to 1.  All representation-theoretic
machinery requires the normalized shape; `normalize` converts when
possible and reports why it cannot otherwise.

The singular data S(gamma) (resp. S(lambda), with the sing1/sing2 split)
computed here drive every dimension and Loewy-length formula downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from hoplift.cyclo import FieldContext, FieldElem, order_of
from hoplift.groups import Character, GammaChar, Group, GroupElem


class ModeError(TypeError):
    """Operation requires the other datum mode."""


class NotClassical(ValueError):
    """Lattice analysis requested for a datum that is not classical."""


class ParseError(ValueError):
    def __init__(self, msg, line=None):
        self.line = line
        super().__init__(msg if line is None else f"line {line}: {msg}")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


class Datum:
    """Normalized datum (G, (a_i), (b_i), (chi_i)), lambda_{i,i+n} = 1."""

    def __init__(self, group: Group, a, b, chi, name: str = ""):
        self.group = group
        self.a = tuple(a)
        self.b = tuple(b)
        self.chi = tuple(chi)
        self.n = len(self.a)
        self.name = name
        if not (len(self.b) == len(self.chi) == self.n and self.n >= 1):
            raise ValueError("a, b, chi must have equal positive length")
        self.ctx = FieldContext(group.exponent)
        self.q = tuple(c(g, self.ctx) for c, g in zip(self.chi, self.a))
        self.m = tuple(order_of(qi) for qi in self.q)

    def __repr__(self):
        return f"Datum({self.name or self.group!r}, n={self.n})"

    def q_pair(self, i: int, j: int) -> FieldElem:
        """q_{ij} = chi_j(a_i); the diagonal is q_i."""
        return self.chi[j](self.a[i], self.ctx)

    def dim_h(self) -> int:
        d = self.group.order
        for m in self.m:
            d *= m * m
        return d

    # -- validation and classification ----------------------------------

    def validate(self) -> ValidationReport:
        rep = ValidationReport()
        ctx = self.ctx
        for i in range(self.n):
            rep.add(f"D0[{i + 1}]", not (self.a[i] * self.b[i]).is_identity(),
                    "a_i b_i must be a nonidentity grouplike")
        for i in range(self.n):
            for j in range(self.n):
                lhs = self.chi[j](self.a[i], ctx)
                rhs = self.chi[i](self.b[j], ctx)
                rep.add(f"D1[{i + 1},{j + 1}]", lhs == rhs,
                        "chi_j(a_i) = chi_i(b_j)")
        for i in range(self.n):
            for j in range(self.n):
                if i == j:
                    continue
                rep.add(f"D2[{i + 1},{j + 1}]",
                        (self.chi[i](self.a[j], ctx) * self.chi[j](self.a[i], ctx)).is_one(),
                        "chi_i(a_j) chi_j(a_i) = 1")
                rep.add(f"D3[{i + 1},{j + 1}]",
                        (self.chi[i](self.b[j], ctx) * self.chi[j](self.b[i], ctx)).is_one(),
                        "chi_i(b_j) chi_j(b_i) = 1")
        for i, m in enumerate(self.m):
            rep.add(f"m[{i + 1}]>=2", m >= 2, "q_i must be a root of unity of order >= 2")
        return rep

    def is_half_clean(self) -> bool:
        """No relation prod (a_i b_i)^{t_i} = 1 with t_i in {0, m_i/2}; only
        even m_i admit a nonzero t_i, so enumerate those subsets."""
        even = [i for i in range(self.n) if self.m[i] % 2 == 0]
        for mask in range(1, 1 << len(even)):
            g = self.group.identity()
            for pos, i in enumerate(even):
                if mask >> pos & 1:
                    g = g * (self.a[i] * self.b[i]) ** (self.m[i] // 2)
            if g.is_identity():
                return False
        return True

    def is_classical(self) -> bool:
        if all(m % 2 == 1 for m in self.m):
            return True
        gens = [g for i in range(self.n) for g in (self.a[i], self.b[i])]
        target = 1
        for g in gens:
            target *= g.order()
        return _subgroup_order(self.group, gens) == target

    # -- singular data ---------------------------------------------------

    def singular_exponent(self, value: FieldElem, j: int):
        """The unique e in [0, m_j - 2] with value = q_j^{-e}, or None."""
        q_inv = self.q[j].inverse()
        p = self.ctx.one
        for e in range(self.m[j] - 1):
            if value == p:
                return e
            p = p * q_inv
        return None

    def singular_set_h(self, gamma: Character) -> HSingular:
        entries = {}
        for j in range(self.n):
            v = gamma(self.a[j] * self.b[j], self.ctx)
            e = self.singular_exponent(v, j)
            if e is not None:
                entries[j] = e
        return HSingular(entries)

    def singular_set_d(self, lam: GammaChar) -> DSingular:
        e1, e2 = {}, {}
        for j in range(self.n):
            v1 = lam.value(self.a[j], self.chi[j].inverse(), self.ctx)
            v2 = lam.value(self.b[j], self.chi[j], self.ctx)
            e = self.singular_exponent(v1, j)
            if e is not None:
                e1[j] = e
            ep = self.singular_exponent(v2, j)
            if ep is not None:
                e2[j] = ep
        return DSingular(e1, e2)

    def c_function(self, k: int, m: int, gamma: Character) -> FieldElem:
        """c_k^m(gamma) = prod_{p=1}^m (q_k^{m-p} gamma(a_k b_k) - 1)."""
        ctx = self.ctx
        v = gamma(self.a[k] * self.b[k], ctx)
        acc = ctx.one
        for p in range(1, m + 1):
            acc = acc * (self.q[k] ** (m - p) * v - ctx.one)
        return acc


class HSingular:
    """S(gamma) with its exponents e_j (0-based generator indices)."""

    def __init__(self, entries: dict[int, int]):
        self.entries = dict(entries)

    @property
    def S(self):
        return frozenset(self.entries)

    def e(self, j: int) -> int:
        return self.entries[j]

    def __repr__(self):
        return f"HSingular({self.entries})"


class DSingular:
    """Raw membership of conditions sing1 / sing2 with exponents e_j, e'_j.

    Both readings of the paper's S^(i) notation are derivable from the raw
    sets; `S1`, `S2` are "satisfies sing1/sing2" and `S3` their overlap,
    the reading pinned by the acceptance suite.
    """

    def __init__(self, e1: dict[int, int], e2: dict[int, int]):
        self.sing1 = dict(e1)
        self.sing2 = dict(e2)

    @property
    def S(self):
        return frozenset(self.sing1) | frozenset(self.sing2)

    @property
    def S1(self):
        return frozenset(self.sing1)

    @property
    def S2(self):
        return frozenset(self.sing2)

    @property
    def S3(self):
        return self.S1 & self.S2

    def only_reading(self):
        """The literal 'satisfies only' reading, exposed for inspection."""
        return (self.S1 - self.S2, self.S2 - self.S1)

    def e(self, j: int) -> int:
        return self.sing1[j]

    def ep(self, j: int) -> int:
        return self.sing2[j]

    def __repr__(self):
        return f"DSingular(sing1={self.sing1}, sing2={self.sing2})"


def _subgroup_order(G: Group, gens) -> int:
    seen = {G.identity()}
    frontier = [G.identity()]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                e = h * g
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return len(seen)


# -- general mode ---------------------------------------------------------


class GeneralDatum:
    """General datum: N generators v_i with (a_i), (chi_i), (mu_i), (lambda_ij)."""

    def __init__(self, group: Group, a, chi, mu=None, lam=None, name: str = ""):
        self.group = group
        self.a = tuple(a)
        self.chi = tuple(chi)
        self.ngens = len(self.a)
        self.ctx = FieldContext(group.exponent)
        self.mu = tuple(mu) if mu is not None else (self.ctx.zero,) * self.ngens
        self.lam = dict(lam or {})
        self.name = name
        self.q = tuple(c(g, self.ctx) for c, g in zip(self.chi, self.a))
        self.m = tuple(order_of(qi) for qi in self.q)

    def q_pair(self, i, j):
        return self.chi[j](self.a[i], self.ctx)

    def lam_at(self, i, j) -> FieldElem:
        return self.lam.get((i, j), self.ctx.zero)

    def dim_h(self) -> int:
        d = self.group.order
        for m in self.m:
            d *= m
        return d

    def validate(self) -> ValidationReport:
        rep = ValidationReport()
        ctx = self.ctx
        for i in range(self.ngens):
            for j in range(self.ngens):
                if i == j:
                    continue
                rep.add(f"qls[{i + 1},{j + 1}]",
                        (self.chi[i](self.a[j], ctx) * self.chi[j](self.a[i], ctx)).is_one(),
                        "chi_i(a_j) chi_j(a_i) = 1")
        for i in range(self.ngens):
            if self.mu[i]:
                ok = not (self.a[i] ** self.m[i]).is_identity() and \
                    (self.chi[i] ** self.m[i]).is_trivial()
                rep.add(f"dat1[{i + 1}]", ok,
                        "mu_i = 0 if a_i^{m_i} = 1 or chi_i^{m_i} nontrivial")
        for (i, j), v in self.lam.items():
            if v:
                ok = not (self.a[i] * self.a[j]).is_identity() and \
                    (self.chi[i] * self.chi[j]).is_trivial()
                rep.add(f"dat2[{i + 1},{j + 1}]", ok,
                        "lambda_ij = 0 if a_i a_j = 1 or chi_i chi_j nontrivial")
        for i in range(self.ngens):
            for j in range(self.ngens):
                if i == j:
                    continue
                lij, lji = self.lam_at(i, j), self.lam_at(j, i)
                rep.add(f"dat3[{i + 1},{j + 1}]",
                        lji == -(self.q_pair(j, i) * lij),
                        "lambda_ji = -q_ji lambda_ij")
        for i, m in enumerate(self.m):
            rep.add(f"m[{i + 1}]>=2", m >= 2, "q_i must have order >= 2")
        return rep

    def normalize(self) -> Datum:
        """Rescale and reorder into the normalized shape.

        Requires nilpotent type (all mu_i = 0) and a linking graph that is a
        perfect matching; raises ModeError with the obstruction otherwise.
        """
        if any(self.mu):
            raise ModeError("not nilpotent type: some mu_i != 0")
        edges = {}
        for (i, j), v in self.lam.items():
            if v and i < j:
                edges.setdefault(i, set()).add(j)
                edges.setdefault(j, set()).add(i)
        matched = {}
        for i in range(self.ngens):
            nbrs = edges.get(i, set())
            if len(nbrs) != 1:
                raise ModeError(
                    f"linking graph is not a perfect matching at vertex {i + 1} "
                    f"(degree {len(nbrs)})")
            matched[i] = next(iter(nbrs))
        pairs = sorted({tuple(sorted((i, j))) for i, j in matched.items()})
        a, b, chi = [], [], []
        for i, j in pairs:
            # x = v_i rescaled by 1/lambda_ij, y = v_j
            a.append(self.a[i])
            b.append(self.a[j])
            chi.append(self.chi[i])
        return Datum(self.group, a, b, chi, name=self.name or "normalized")


def pair_to_general(d: Datum) -> GeneralDatum:
    """View a normalized datum as a general one on 2n generators
    (x_1..x_n, y_1..y_n), lambda_{i,i+n} = 1."""
    n = d.n
    a = list(d.a) + list(d.b)
    chi = list(d.chi) + [c.inverse() for c in d.chi]
    lam = {}
    for i in range(n):
        lam[(i, i + n)] = d.ctx.one
        # lambda_ji = -q_ji lambda_ij with q_ji = chi_i(a_{i+n}) = chi_i(b_i) = q_i
        lam[(i + n, i)] = -chi[i](a[i + n], d.ctx)
    return GeneralDatum(d.group, a, chi, None, lam, name=d.name)


# -- fixtures --------------------------------------------------------------


def fixture_e1() -> Datum:
    G = Group([2, 2])
    return Datum(G, [G.element([1, 0])], [G.element([0, 1])],
                 [G.character([1, 1])], name="E1")


def fixture_e2() -> Datum:
    G = Group([3])
    c = G.element([1])
    return Datum(G, [c], [c], [G.character([1])], name="E2")


def fixture_e3() -> Datum:
    G = Group([4])
    c = G.element([1])
    return Datum(G, [c], [c], [G.character([1])], name="E3")


def fixture_e4() -> Datum:
    G = Group([2, 2, 2, 2])
    return Datum(
        G,
        [G.element([1, 0, 0, 0]), G.element([0, 0, 1, 0])],
        [G.element([0, 1, 0, 0]), G.element([0, 0, 0, 1])],
        [G.character([1, 1, 0, 0]), G.character([0, 0, 1, 1])],
        name="E4",
    )


def fixture_general_mu() -> GeneralDatum:
    """Single nonlinked generator with mu != 0 over Z/8: v^4 = c^4 - 1."""
    G = Group([8])
    ctx = FieldContext(8)
    return GeneralDatum(G, [G.element([1])], [G.character([2])],
                        mu=[ctx.one], lam={}, name="G-mu")


FIXTURES = {
    "E1": fixture_e1,
    "E2": fixture_e2,
    "E3": fixture_e3,
    "E4": fixture_e4,
}


# -- datum file format ------------------------------------------------------


def parse_scalar(text: str, ctx: FieldContext) -> FieldElem:
    text = text.strip()
    if text.startswith("zeta:"):
        return ctx.root_of_unity(int(text[5:]))
    if "/" in text:
        p, q = text.split("/")
        return ctx.from_rational(int(p), int(q))
    return ctx.from_rational(int(text))


def parse_datum(text: str):
    """Parse the line-oriented datum format; returns Datum or GeneralDatum."""
    section = None
    group = None
    fields: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if line not in ("[group]", "[datum]"):
                raise ParseError(f"unknown section {line}", lineno)
            section = line
            continue
        if "=" not in line:
            raise ParseError("expected key = value", lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if section == "[group]":
            if key != "orders":
                raise ParseError(f"unknown group key {key!r}", lineno)
            try:
                group = Group([int(v) for v in value.split(",")])
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
        elif section == "[datum]":
            fields[key] = (value, lineno)
        else:
            raise ParseError("key outside of a section", lineno)
    if group is None:
        raise ParseError("missing [group] section with orders = ...")
    if "generators" in fields:
        return _parse_general(group, fields)
    return _parse_normalized(group, fields)


def _ints(value: str, lineno: int) -> list[int]:
    try:
        return [int(v) for v in value.split(",")]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {value!r}", lineno) from None


def _parse_normalized(group: Group, fields) -> Datum:
    if "n" not in fields:
        raise ParseError("missing n = <int> in [datum]")
    n = int(fields["n"][0])
    a, b, chi = [], [], []
    for i in range(1, n + 1):
        for key, store, make in ((f"a.{i}", a, group.element),
                                 (f"b.{i}", b, group.element),
                                 (f"chi.{i}", chi, group.character)):
            if key not in fields:
                raise ParseError(f"missing {key}")
            value, lineno = fields[key]
            store.append(make(_ints(value, lineno)))
    known = {"n"} | {f"{p}.{i}" for i in range(1, n + 1) for p in ("a", "b", "chi")}
    for key, (_, lineno) in fields.items():
        if key not in known:
            raise ParseError(f"unknown key {key!r}", lineno)
    return Datum(group, a, b, chi)


def _parse_general(group: Group, fields) -> GeneralDatum:
    N = int(fields["generators"][0])
    ctx = FieldContext(group.exponent)
    a, chi, mu = [], [], []
    lam = {}
    for i in range(1, N + 1):
        for key, store, make in ((f"aa.{i}", a, group.element),
                                 (f"cchi.{i}", chi, group.character)):
            if key not in fields:
                raise ParseError(f"missing {key}")
            value, lineno = fields[key]
            store.append(make(_ints(value, lineno)))
        if f"mu.{i}" in fields:
            value, lineno = fields[f"mu.{i}"]
            try:
                mu.append(parse_scalar(value, ctx))
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
        else:
            mu.append(ctx.zero)
    for key, (value, lineno) in fields.items():
        if key.startswith("lambda."):
            try:
                _, si, sj = key.split(".")
                i, j = int(si) - 1, int(sj) - 1
            except ValueError:
                raise ParseError(f"bad lambda key {key!r}", lineno) from None
            lam[(i, j)] = parse_scalar(value, ctx)
    return GeneralDatum(group, a, chi, mu, lam)


def format_datum(d: Datum) -> str:
    lines = ["[group]", "orders = " + ",".join(str(o) for o in d.group.orders),
             "", "[datum]", f"n = {d.n}"]
    for i in range(d.n):
        lines.append(f"a.{i + 1} = " + ",".join(str(e) for e in d.a[i].exps))
        lines.append(f"b.{i + 1} = " + ",".join(str(e) for e in d.b[i].exps))
        lines.append(f"chi.{i + 1} = " + ",".join(str(e) for e in d.chi[i].exps))
    return "\n".join(lines) + "\n"

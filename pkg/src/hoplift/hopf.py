"""The lifting H(D) on its canonical basis: straightened multiplication,
coproduct, counit, antipode, and the dual-basis machinery of H*.

Two engines share one element type.  `Lifting` is the normalized nilpotent
simply-linked algebra on words x^i g y^j (group in the middle, which makes
the 1_gamma- and 1_lambda-reductions downstream a suffix operation).
`GeneralLifting` is the algebra of an arbitrary datum on words v^i g, with
the full relations v_i^{m_i} = mu_i(a_i^{m_i}-1) and
v_i v_j = q_ij v_j v_i + lambda_ij(a_i a_j - 1).

Products are computed word-by-generator: appending a generator to a
canonical word crosses the blocks to its right through exactly one relation
per adjacent pair, each either a pure scalar swap or a swap plus terms of
strictly smaller x,y-degree, so the closed forms below terminate; results
are memoized per (word, generator).
"""

from __future__ import annotations

from hoplift.cyclo import FieldElem, q_factorial, q_number
from hoplift.datum import Datum, GeneralDatum
from hoplift.groups import Character, GroupElem


class ModeMismatch(TypeError):
    pass


class AlgElem:
    """Sparse linear combination of canonical basis words."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            out[w] = c if s is None else s + c
        return AlgElem(self.alg, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            out[w] = -c if s is None else s - c
        return AlgElem(self.alg, out)

    def __neg__(self):
        return AlgElem(self.alg, {w: -c for w, c in self.terms.items()})

    def scale(self, c: FieldElem):
        if not c:
            return AlgElem(self.alg, {})
        return AlgElem(self.alg, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if self.alg is not other.alg:
            raise ModeMismatch("elements of different algebras")
        return self.alg.multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, AlgElem) and self.alg is other.alg \
            and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def coeff(self, word) -> FieldElem:
        return self.terms.get(word, self.alg.ctx.zero)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c!r})*{w}" for w, c in sorted(self.terms.items(),
                                                            key=lambda t: str(t[0])))


class _EngineBase:
    """Shared fold/memo machinery; subclasses provide word_atoms and _word_gen."""

    def elem(self, terms) -> AlgElem:
        return AlgElem(self, terms)

    def zero(self) -> AlgElem:
        return AlgElem(self, {})

    def one(self) -> AlgElem:
        return AlgElem(self, {self.unit_word: self.ctx.one})

    def word(self, w, coeff=None) -> AlgElem:
        return AlgElem(self, {w: coeff if coeff is not None else self.ctx.one})

    def multiply(self, u: AlgElem, v: AlgElem) -> AlgElem:
        out = {}
        for wv, cv in v.terms.items():
            for wu, cu in u.terms.items():
                cc = cu * cv
                if not cc:
                    continue
                for w, c in self._word_word(wu, wv).items():
                    s = out.get(w)
                    t = cc * c
                    out[w] = t if s is None else s + t
        return AlgElem(self, out)

    def _word_word(self, wu, wv):
        key = (wu, wv)
        hit = self._ww_memo.get(key)
        if hit is not None:
            return hit
        cur = {wu: self.ctx.one}
        for atom in self.word_atoms(wv):
            nxt = {}
            for w, c in cur.items():
                for w2, c2 in self._word_gen_memo(w, atom).items():
                    s = nxt.get(w2)
                    t = c * c2
                    nxt[w2] = t if s is None else s + t
            cur = {w: c for w, c in nxt.items() if c}
        self._ww_memo[key] = cur
        return cur

    def _word_gen_memo(self, w, atom):
        key = (w, atom)
        hit = self._wg_memo.get(key)
        if hit is None:
            hit = {k: v for k, v in self._word_gen(w, atom).items() if v}
            self._wg_memo[key] = hit
        return hit

    # -- coalgebra -------------------------------------------------------

    def coproduct(self, u: AlgElem):
        """Delta(u) as a dict (word, word) -> coeff in H x H."""
        out = {}
        for w, c in u.terms.items():
            for pair, d in self._delta_word(w).items():
                s = out.get(pair)
                t = c * d
                out[pair] = t if s is None else s + t
        return {p: c for p, c in out.items() if c}

    def _delta_word(self, w):
        hit = self._delta_memo.get(w)
        if hit is not None:
            return hit
        cur = {(self.unit_word, self.unit_word): self.ctx.one}
        for atom in self.word_atoms(w):
            dg = self.gen_coproduct(atom)
            nxt = {}
            for (l1, l2), c in cur.items():
                for (r1, r2), d in dg.items():
                    cc = c * d
                    for wl, cl in self._word_word(l1, r1).items():
                        for wr, cr in self._word_word(l2, r2).items():
                            key = (wl, wr)
                            t = cc * cl * cr
                            s = nxt.get(key)
                            nxt[key] = t if s is None else s + t
            cur = {k: v for k, v in nxt.items() if v}
        self._delta_memo[w] = cur
        return cur

    def counit(self, u: AlgElem) -> FieldElem:
        acc = self.ctx.zero
        for w, c in u.terms.items():
            if self.word_is_grouplike_free(w):
                acc = acc + c
        return acc

    def antipode(self, u: AlgElem) -> AlgElem:
        out = self.zero()
        for w, c in u.terms.items():
            out = out + self._antipode_word(w).scale(c)
        return out

    def antipode_inv(self, u: AlgElem) -> AlgElem:
        out = self.zero()
        for w, c in u.terms.items():
            out = out + self._antipode_word(w, inv=True).scale(c)
        return out

    def _antipode_word(self, w, inv=False):
        memo = self._sinv_memo if inv else self._s_memo
        hit = memo.get(w)
        if hit is None:
            hit = self.one()
            for atom in reversed(self.word_atoms(w)):
                hit = hit * self.gen_antipode(atom, inv)
        memo[w] = hit
        return hit


class Lifting(_EngineBase):
    """Normalized H(D): canonical words (i, g, j) meaning x^i g y^j."""

    def __init__(self, datum: Datum):
        self.datum = datum
        self.ctx = datum.ctx
        self.n = datum.n
        G = datum.group
        self.unit_word = ((0,) * self.n, G.identity(), (0,) * self.n)
        self._ww_memo = {}
        self._wg_memo = {}
        self._delta_memo = {}
        self._s_memo = {}
        self._sinv_memo = {}
        d = datum
        self._qp = [[d.chi[t](d.a[s], d.ctx) for t in range(self.n)]
                    for s in range(self.n)]  # chi_t(a_s)
        self._ab = [d.a[k] * d.b[k] for k in range(self.n)]

    def dim(self) -> int:
        return self.datum.dim_h()

    def basis(self):
        idx = list(_multirange(self.datum.m))
        return [(i, g, j) for i in idx for g in self.datum.group.elements() for j in idx]

    def word_atoms(self, w):
        i, g, j = w
        atoms = [("x", k) for k in range(self.n) for _ in range(i[k])]
        if not g.is_identity():
            atoms.append(("g", g))
        atoms += [("y", k) for k in range(self.n) for _ in range(j[k])]
        return atoms

    def word_is_grouplike_free(self, w):
        i, _, j = w
        return not any(i) and not any(j)

    def x_word(self, k):
        return (_unit(self.n, k), self.datum.group.identity(), (0,) * self.n)

    def y_word(self, k):
        return ((0,) * self.n, self.datum.group.identity(), _unit(self.n, k))

    def g_word(self, g: GroupElem):
        return ((0,) * self.n, g, (0,) * self.n)

    def generators(self):
        out = [("x", k) for k in range(self.n)] + [("y", k) for k in range(self.n)]
        out += [("g", self.datum.group.generator(r))
                for r in range(self.datum.group.rank)]
        return out

    def gen_elem(self, atom) -> AlgElem:
        kind, v = atom
        if kind == "x":
            return self.word(self.x_word(v))
        if kind == "y":
            return self.word(self.y_word(v))
        return self.word(self.g_word(v))

    def _word_gen(self, w, atom):
        i, g, j = w
        d = self.datum
        kind, v = atom
        if kind == "g":
            # y^j h = chi^j(h) h y^j
            chi = _char_power(d.chi, j)
            return {(i, g * v, j): chi(v, self.ctx)}
        if kind == "y":
            k = v
            if j[k] + 1 >= d.m[k]:
                return {}
            s = self.ctx.one
            for t in range(k + 1, self.n):
                if j[t]:
                    s = s * self._qp[t][k] ** j[t]  # y_t y_k = chi_k(a_t) y_k y_t
            return {(i, g, _bump(j, k)): s}
        # x_k crossing: y-tail, y_k^c (may spawn), y-head, g, x-tail
        k = v
        c = j[k]
        q = d.q[k]
        s_tail = self.ctx.one
        for t in range(k + 1, self.n):
            if j[t]:
                s_tail = s_tail * self._qp[k][t] ** j[t]  # chi_t(a_k)
        out = {}
        if c >= 1:
            base = s_tail * q_number(c, q)
            jm = _bump(j, k, -1)
            w1 = (i, g * self._ab[k], jm)
            w2 = (i, g, jm)
            out[w1] = out.get(w1, self.ctx.zero) - base * q ** c
            out[w2] = out.get(w2, self.ctx.zero) + base * q
        if i[k] + 1 < d.m[k]:
            s = s_tail * q ** c
            for t in range(k):
                if j[t]:
                    s = s * self._qp[k][t] ** j[t]
            s = s * d.chi[k](g, self.ctx)
            for t in range(k + 1, self.n):
                if i[t]:
                    s = s * self._qp[t][k] ** i[t]  # x_t x_k = chi_k(a_t) x_k x_t
            w3 = (_bump(i, k), g, j)
            out[w3] = out.get(w3, self.ctx.zero) + s
        return out

    def gen_coproduct(self, atom):
        kind, v = atom
        one = self.ctx.one
        u = self.unit_word
        if kind == "x":
            return {(self.g_word(self.datum.a[v]), self.x_word(v)): one,
                    (self.x_word(v), u): one}
        if kind == "y":
            return {(self.g_word(self.datum.b[v]), self.y_word(v)): one,
                    (self.y_word(v), u): one}
        return {(self.g_word(v), self.g_word(v)): one}

    def gen_antipode(self, atom, inv=False):
        kind, v = atom
        d = self.datum
        if kind == "g":
            return self.word(self.g_word(v.inverse()))
        if kind == "x":
            a, xw = d.a[v], self.x_word(v)
            if inv:  # S^{-1}(x_k) = -x_k a_k^{-1}
                return (self.word(xw) * self.word(self.g_word(a.inverse()))).scale(-self.ctx.one)
            return (self.word(self.g_word(a.inverse())) * self.word(xw)).scale(-self.ctx.one)
        b, yw = d.b[v], self.y_word(v)
        if inv:
            return (self.word(yw) * self.word(self.g_word(b.inverse()))).scale(-self.ctx.one)
        return (self.word(self.g_word(b.inverse())) * self.word(yw)).scale(-self.ctx.one)

    # conversion to the standard v-order basis x^i y^j g:
    #   x^i y^j g = chi^j(g) x^i g y^j
    def standard_coeff(self, w) -> FieldElem:
        """Coefficient c with (v-word of w) = c * w, i.e. x^i y^j g = c * x^i g y^j."""
        i, g, j = w
        return _char_power(self.datum.chi, j)(g, self.ctx)


class GeneralLifting(_EngineBase):
    """H(D) for a general datum: canonical words (i, g) meaning v^i g."""

    def __init__(self, datum: GeneralDatum):
        self.datum = datum
        self.ctx = datum.ctx
        self.ngens = datum.ngens
        self.unit_word = ((0,) * self.ngens, datum.group.identity())
        self._ww_memo = {}
        self._wg_memo = {}
        self._delta_memo = {}
        self._s_memo = {}
        self._sinv_memo = {}
        d = datum
        self._qp = [[d.chi[t](d.a[s], d.ctx) for t in range(self.ngens)]
                    for s in range(self.ngens)]

    @classmethod
    def from_normalized(cls, d: Datum):
        from hoplift.datum import pair_to_general

        return cls(pair_to_general(d))

    def dim(self) -> int:
        return self.datum.dim_h()

    def basis(self):
        return [(i, g) for i in _multirange(self.datum.m)
                for g in self.datum.group.elements()]

    def word_atoms(self, w):
        i, g = w
        atoms = [("v", k) for k in range(self.ngens) for _ in range(i[k])]
        if not g.is_identity():
            atoms.append(("g", g))
        return atoms

    def word_is_grouplike_free(self, w):
        return not any(w[0])

    def v_word(self, k):
        return (_unit(self.ngens, k), self.datum.group.identity())

    def g_word(self, g):
        return ((0,) * self.ngens, g)

    def _word_gen(self, w, atom):
        i, g = w
        d = self.datum
        kind, v = atom
        if kind == "g":
            return {(i, g * v): self.ctx.one}
        k = v
        out = {}
        s = d.chi[k](g, self.ctx)  # cross the trailing group element
        for t in range(self.ngens - 1, k, -1):
            c = i[t]
            if not c:
                continue
            lam = d.lam_at(t, k)
            if lam:
                # v_t^c v_k = q^c v_k v_t^c + lam (c)_q (q^{c-1} a_t a_k - 1) v_t^{c-1}
                q = self._qp[t][k]
                base = s * lam * q_number(c, q)
                h1 = d.a[t] * d.a[k]
                # the spawned grouplike crosses v_t^{c-1} and every later block
                s1 = base * q ** (c - 1) * d.chi[t](h1, self.ctx) ** (c - 1)
                s0 = -base
                for tp in range(t + 1, self.ngens):
                    if i[tp]:
                        s1 = s1 * d.chi[tp](h1, self.ctx) ** i[tp]
                im = _bump(i, t, -1)
                w1 = (im, g * h1)
                w0 = (im, g)
                out[w1] = out.get(w1, self.ctx.zero) + s1
                out[w0] = out.get(w0, self.ctx.zero) + s0
            s = s * self._qp[t][k] ** c
        if i[k] + 1 == d.m[k]:
            # v_k^{m_k} = mu_k (a_k^{m_k} - 1)
            if d.mu[k]:
                hm = d.a[k] ** d.m[k]
                s1 = s * d.mu[k]
                s0 = -s * d.mu[k]
                for tp in range(k + 1, self.ngens):
                    if i[tp]:
                        s1 = s1 * d.chi[tp](hm, self.ctx) ** i[tp]
                iz = _set_at(i, k, 0)
                w1 = (iz, g * hm)
                w0 = (iz, g)
                out[w1] = out.get(w1, self.ctx.zero) + s1
                out[w0] = out.get(w0, self.ctx.zero) + s0
            return out
        w3 = (_bump(i, k), g)
        out[w3] = out.get(w3, self.ctx.zero) + s
        return out

    def gen_coproduct(self, atom):
        kind, v = atom
        one = self.ctx.one
        if kind == "v":
            return {(self.g_word(self.datum.a[v]), self.v_word(v)): one,
                    (self.v_word(v), self.unit_word): one}
        return {(self.g_word(v), self.g_word(v)): one}

    def gen_antipode(self, atom, inv=False):
        kind, v = atom
        if kind == "g":
            return self.word(self.g_word(v.inverse()))
        a, vw = self.datum.a[v], self.v_word(v)
        if inv:
            return (self.word(vw) * self.word(self.g_word(a.inverse()))).scale(-self.ctx.one)
        return (self.word(self.g_word(a.inverse())) * self.word(vw)).scale(-self.ctx.one)

    def phi_scalar(self, mvec, ivec) -> FieldElem:
        """phi(m, i) = prod_{p>=2} chi_p^{m_p}(a_1^{i_1-m_1} ... a_{p-1}^{i_{p-1}-m_{p-1}})."""
        d = self.datum
        acc = self.ctx.one
        for p in range(1, self.ngens):
            h = d.group.identity()
            for t in range(p):
                h = h * d.a[t] ** (ivec[t] - mvec[t])
            acc = acc * (d.chi[p] ** mvec[p])(h, self.ctx)
        return acc


# -- shared helpers ---------------------------------------------------------


def _multirange(ms):
    idx = [()]
    for m in ms:
        idx = [t + (v,) for t in idx for v in range(m)]
    return idx


def _unit(n, k):
    return tuple(1 if t == k else 0 for t in range(n))


def _bump(vec, k, by=1):
    return tuple(v + by if t == k else v for t, v in enumerate(vec))


def _set_at(vec, k, val):
    return tuple(val if t == k else v for t, v in enumerate(vec))


def _char_power(chars, exps) -> Character:
    acc = chars[0] ** exps[0]
    for c, e in zip(chars[1:], exps[1:]):
        acc = acc * c ** e
    return acc


def coradical_term_dim(group_order: int, ms, r: int) -> int:
    """dim H_r = |G| * #{multi-indices i < m with sum i_j <= r}."""
    count = sum(1 for i in _multirange(ms) if sum(i) <= r)
    return group_order * count


# -- functionals on H -------------------------------------------------------


class Functional:
    """Element of H* as its value table on the canonical basis of `alg`."""

    __slots__ = ("alg", "values")

    def __init__(self, alg, values=None):
        self.alg = alg
        self.values = {w: v for w, v in (values or {}).items() if v}

    def __call__(self, arg) -> FieldElem:
        ctx = self.alg.ctx
        if isinstance(arg, AlgElem):
            acc = ctx.zero
            for w, c in arg.terms.items():
                v = self.values.get(w)
                if v:
                    acc = acc + c * v
            return acc
        return self.values.get(arg, ctx.zero)

    def __add__(self, other):
        out = dict(self.values)
        for w, v in other.values.items():
            s = out.get(w)
            out[w] = v if s is None else s + v
        return Functional(self.alg, out)

    def __sub__(self, other):
        return self + other.scale(-self.alg.ctx.one)

    def scale(self, c):
        return Functional(self.alg, {w: c * v for w, v in self.values.items()})

    def __mul__(self, other):
        """Convolution product: (fg)(w) = sum f(w1) g(w2) over Delta(w)."""
        alg = self.alg
        out = {}
        for w in alg.basis():
            acc = alg.ctx.zero
            for (w1, w2), c in alg._delta_word(w).items():
                a = self.values.get(w1)
                if a:
                    b = other.values.get(w2)
                    if b:
                        acc = acc + c * a * b
            if acc:
                out[w] = acc
        return Functional(alg, out)

    def power(self, e: int):
        acc = counit_functional(self.alg)
        for _ in range(e):
            acc = acc * self
        return acc

    def __eq__(self, other):
        return isinstance(other, Functional) and self.alg is other.alg \
            and self.values == other.values

    def __hash__(self):
        return hash(frozenset(self.values.items()))

    def is_zero(self):
        return not self.values

    def as_vector(self, basis):
        z = self.alg.ctx.zero
        return [self.values.get(w, z) for w in basis]


def counit_functional(alg) -> Functional:
    one = alg.ctx.one
    return Functional(alg, {w: one for w in alg.basis()
                            if alg.word_is_grouplike_free(w)})


def gamma_functional(alg, gamma: Character) -> Functional:
    """gamma-tilde: value gamma(g) on grouplike-only words, zero elsewhere."""
    vals = {}
    for w in alg.basis():
        if alg.word_is_grouplike_free(w):
            g = w[1] if len(w) == 3 else w[1]
            vals[w] = gamma(g, alg.ctx)
    return Functional(alg, vals)


def epsilon_g_functional(alg, g: GroupElem) -> Functional:
    """epsilon_g = |G|^{-1} sum_gamma gamma(g^{-1}) gamma-tilde."""
    from hoplift.groups import dual_group

    G = alg.datum.group
    acc = Functional(alg, {})
    for gamma in dual_group(G):
        acc = acc + gamma_functional(alg, gamma).scale(
            gamma(g.inverse(), alg.ctx) / G.order)
    return acc


def xi_standard(alg: GeneralLifting, k: int) -> Functional:
    """xi_k(v^i g) = delta_{u_k, i}, on the general-engine basis."""
    vals = {}
    target = _unit(alg.ngens, k)
    for w in alg.basis():
        if w[0] == target:
            vals[w] = alg.ctx.one
    return Functional(alg, vals)


def dual_basis(alg: GeneralLifting):
    """[(word, functional)] with functional = [(c)!]^{-1} xi^c epsilon_g,
    constructed by convolution (not as indicators); Prop-style duality against
    the standard basis is a test, not an input."""
    d = alg.datum
    xis = [xi_standard(alg, k) for k in range(alg.ngens)]
    out = []
    # cache convolution powers xi_k^c
    pow_cache = [[counit_functional(alg)] for _ in range(alg.ngens)]
    for k in range(alg.ngens):
        for _ in range(d.m[k] - 1):
            pow_cache[k].append(pow_cache[k][-1] * xis[k])
    eps = {g: epsilon_g_functional(alg, g) for g in d.group.elements()}
    for c in _multirange(d.m):
        f = None
        for k in range(alg.ngens):
            part = pow_cache[k][c[k]]
            f = part if f is None else f * part
        fact = alg.ctx.one
        for k in range(alg.ngens):
            fact = fact * q_factorial(c[k], d.q[k])
        for g in d.group.elements():
            out.append(((c, g), (f * eps[g]).scale(fact.inverse())))
    return out


def hit_span_dim(alg, gamma: Character) -> int:
    """dim(H -> gamma) for the left hit action (h -> alpha)(v) = alpha(v h)."""
    from hoplift.linalg import rref

    base = gamma_functional(alg, gamma)
    basis = alg.basis()
    rows = []
    for h in basis:
        helem = alg.word(h)
        row = []
        for w in basis:
            row.append(base(alg.multiply(alg.word(w), helem)))
        rows.append(row)
    red, _ = rref(rows)
    return len(red)

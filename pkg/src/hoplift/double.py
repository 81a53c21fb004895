"""The Drinfel'd double D(H) of a normalized lifting.

Two independent multiplications are provided.  `Double` normal-orders words
x^i eta^j y^k xi^l g gamma through the commutation rules between the six
generator families (group conjugation, the gamma/x and gamma/y rules, the
xi/x, xi/y, eta/x, eta/y rules, and the H-side relations), with power forms
derived from the single-step rules.  `DoubleOracle` multiplies inside
H* tensor H using only the Doi-Takeuchi formula
(alpha tensor h)(beta tensor k) = alpha tau(beta_3,h_1) beta_2 h_2
tau^{-1}(beta_1,h_3) k, the coproduct of H and S^{-1} - none of the
commutation rules.  Agreement of the two on all generator pairs and random
words is the strongest correctness anchor of the whole build.

Each append rule either moves the new generator one slot left for a scalar
or trades the adjacent pair for terms of strictly smaller x,y-degree, so
the tuple (x-degree + y-degree, inversion count) drops lexicographically
and rewriting terminates; a step budget guards against implementation bugs.
"""

from __future__ import annotations

from hoplift.cyclo import FieldElem, q_number
from hoplift.datum import Datum
from hoplift.groups import Character, GroupElem, dual_group
from hoplift.hopf import AlgElem, Functional, Lifting, _bump, _multirange, _unit


class RewriteDivergence(RuntimeError):
    pass


_STEP_BUDGET = 10_000_000


class Double:
    """Straightened D(H) on canonical words (i, j, k, l, g, gamma)."""

    def __init__(self, datum: Datum, H: Lifting | None = None):
        self.datum = datum
        self.ctx = datum.ctx
        self.n = datum.n
        self.H = H or Lifting(datum)
        G = datum.group
        z = (0,) * self.n
        self.unit_word = (z, z, z, z, G.identity(), G.trivial_character())
        self._ww_memo = {}
        self._wg_memo = {}
        self._ypow_eta = {}
        self._steps = 0
        d = datum
        self._qp = [[d.chi[t](d.a[s], d.ctx) for t in range(self.n)]
                    for s in range(self.n)]  # chi_t(a_s)

    # -- element plumbing (same conventions as the H engines) -------------

    def elem(self, terms):
        return AlgElem(self, terms)

    def zero(self):
        return AlgElem(self, {})

    def one(self):
        return AlgElem(self, {self.unit_word: self.ctx.one})

    def word(self, w, coeff=None):
        return AlgElem(self, {w: coeff if coeff is not None else self.ctx.one})

    def dim(self) -> int:
        return self.H.dim() ** 2

    def basis(self):
        idx = list(_multirange(self.datum.m))
        G = self.datum.group
        return [(i, j, k, l, g, gam)
                for i in idx for j in idx for k in idx for l in idx
                for g in G.elements() for gam in dual_group(G)]

    def gen_word(self, kind, v):
        z = (0,) * self.n
        G = self.datum.group
        e, triv = G.identity(), G.trivial_character()
        if kind == "x":
            return (_unit(self.n, v), z, z, z, e, triv)
        if kind == "eta":
            return (z, _unit(self.n, v), z, z, e, triv)
        if kind == "y":
            return (z, z, _unit(self.n, v), z, e, triv)
        if kind == "xi":
            return (z, z, z, _unit(self.n, v), e, triv)
        if kind == "g":
            return (z, z, z, z, v, triv)
        return (z, z, z, z, e, v)

    def generators(self):
        out = []
        for kind in ("x", "eta", "y", "xi"):
            out += [(kind, k) for k in range(self.n)]
        G = self.datum.group
        out += [("g", G.generator(r)) for r in range(G.rank)]
        out += [("gamma", Character(G, _unit(G.rank, r))) for r in range(G.rank)]
        return out

    def word_atoms(self, w):
        i, j, k, l, g, gam = w
        atoms = [("x", t) for t in range(self.n) for _ in range(i[t])]
        atoms += [("eta", t) for t in range(self.n) for _ in range(j[t])]
        atoms += [("y", t) for t in range(self.n) for _ in range(k[t])]
        atoms += [("xi", t) for t in range(self.n) for _ in range(l[t])]
        if not g.is_identity():
            atoms.append(("g", g))
        if not gam.is_trivial():
            atoms.append(("gamma", gam))
        return atoms

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
            cur = self._elem_gen(cur, atom)
        self._ww_memo[key] = cur
        return cur

    def _elem_gen(self, terms, atom):
        out = {}
        for w, c in terms.items():
            for w2, c2 in self._word_gen_memo(w, atom).items():
                s = out.get(w2)
                t = c * c2
                out[w2] = t if s is None else s + t
        return {w: c for w, c in out.items() if c}

    def _word_gen_memo(self, w, atom):
        key = (w, atom)
        hit = self._wg_memo.get(key)
        if hit is None:
            self._steps += 1
            if self._steps > _STEP_BUDGET:
                raise RewriteDivergence("rewrite step budget exceeded")
            hit = {k: v for k, v in self._word_gen(w, atom).items() if v}
            self._wg_memo[key] = hit
        return hit

    # -- the append rules --------------------------------------------------

    def _word_gen(self, w, atom):
        kind, v = atom
        if kind == "gamma":
            i, j, k, l, g, gam = w
            return {(i, j, k, l, g, gam * v): self.ctx.one}
        if kind == "g":
            i, j, k, l, g, gam = w
            return {(i, j, k, l, g * v, gam): self.ctx.one}
        if kind == "xi":
            return self._append_xi(w, v)
        if kind == "y":
            return self._append_y(w, v)
        if kind == "eta":
            return self._append_eta(w, v)
        return self._append_x(w, v)

    def _append_xi(self, w, t):
        i, j, k, l, g, gam = w
        if l[t] + 1 >= self.datum.m[t]:
            return {}
        d = self.datum
        s = gam(d.a[t], self.ctx) * d.chi[t](g, self.ctx).inverse()
        for u in range(t + 1, self.n):
            if l[u]:
                s = s * self._qp[t][u] ** l[u]  # xi_u xi_t = chi_u(a_t) xi_t xi_u
        return {(i, j, k, _bump(l, t), g, gam): s}

    def _append_y(self, w, t):
        i, j, k, l, g, gam = w
        d = self.datum
        ctx = self.ctx
        out = {}
        # cross gamma: gamma y = gamma(b^-1) y gamma - gamma(b^-1)(gamma(ab)-1) xi b gamma
        s = gam(d.b[t].inverse(), ctx)
        spawn_c = gam(d.a[t] * d.b[t], ctx) - ctx.one
        if spawn_c:
            base = (i, j, k, l, g, d.group.trivial_character())
            part = self._word_gen_memo(base, ("xi", t))
            coeff = -(s * spawn_c)
            for w1, c1 in part.items():
                i1, j1, k1, l1, g1, gam1 = w1
                w2 = (i1, j1, k1, l1, g1 * d.b[t], gam1 * gam)
                cc = coeff * c1
                prev = out.get(w2)
                out[w2] = cc if prev is None else prev + cc
        # cross g
        s = s * d.chi[t](g, ctx).inverse()
        # cross the xi-block: xi_t^c y_t = y_t xi_t^c - (1 - q^{-c}) xi_t^{c+1} b_t
        c = l[t]
        if c:
            q = d.q[t]
            coeff = -(ctx.one - q ** (-c)) * s
            if l[t] + 1 < d.m[t]:
                # b_t crosses the xi tail rightward: chi_s^{-1}(b_t)^{l_s}
                for u in range(t + 1, self.n):
                    if l[u]:
                        coeff = coeff * d.chi[u](d.b[t], ctx) ** (-l[u])
                w2 = (i, j, k, _bump(l, t), g * d.b[t], gam)
                prev = out.get(w2)
                out[w2] = coeff if prev is None else prev + coeff
        # join the y-block
        if k[t] + 1 < d.m[t]:
            for u in range(t + 1, self.n):
                if k[u]:
                    s = s * self._qp[u][t] ** k[u]  # y_s y_t = chi_t(a_s) y_t y_s
            w2 = (i, j, _bump(k, t), l, g, gam)
            prev = out.get(w2)
            out[w2] = s if prev is None else prev + s
        return out

    def _y_pow_eta(self, t, c):
        """y_t^c eta_t as an element (memoized); from
        y eta = q eta y - (chi b - 1)."""
        key = (t, c)
        hit = self._ypow_eta.get(key)
        if hit is not None:
            return hit
        d = self.datum
        ctx = self.ctx
        z = (0,) * self.n
        e, triv = d.group.identity(), d.group.trivial_character()
        if c == 0:
            res = {(z, _unit(self.n, t), z, z, e, triv): ctx.one}
        else:
            prev = self._y_pow_eta(t, c - 1)
            res = {}
            scaled = self._elem_gen(prev, ("y", t))
            for w, cc in scaled.items():
                res[w] = d.q[t] * cc
            ym = tuple((c - 1) if u == t else 0 for u in range(self.n))
            w_chib = (z, z, ym, z, d.b[t], d.chi[t])
            w_eps = (z, z, ym, z, e, triv)
            res[w_chib] = res.get(w_chib, ctx.zero) - ctx.one
            res[w_eps] = res.get(w_eps, ctx.zero) + ctx.one
            res = {w: v for w, v in res.items() if v}
        self._ypow_eta[key] = res
        return res

    def _append_eta(self, w, t):
        i, j, k, l, g, gam = w
        d = self.datum
        ctx = self.ctx
        # scalar crossings: gamma, g, xi-block (commute), y-tail above t
        s = gam(d.b[t], ctx) * d.chi[t](g, ctx)
        for u in range(t + 1, self.n):
            if k[u]:
                s = s * self._qp[t][u] ** k[u]  # y_u eta_t = chi_u(a_t) eta_t y_u
        c = k[t]
        if c == 0:
            if j[t] + 1 >= d.m[t]:
                return {}
            for u in range(t):
                if k[u]:
                    s = s * self._qp[t][u] ** k[u]
            for u in range(t + 1, self.n):
                if j[u]:
                    s = s * d.chi[u](d.b[t], ctx) ** j[u]  # eta_u eta_t swap
            return {(i, _bump(j, t), k, l, g, gam): s}
        # splice prefix * (y_t^c eta_t) * suffix
        prefix = (i, j, tuple(k[u] if u < t else 0 for u in range(self.n)),
                  (0,) * self.n, d.group.identity(), d.group.trivial_character())
        mid = self._y_pow_eta(t, c)
        cur = {}
        for wm, cm in mid.items():
            for wp, cp in self._word_word(prefix, wm).items():
                cc = cm * cp
                prev = cur.get(wp)
                cur[wp] = cc if prev is None else prev + cc
        # suffix atoms: y_u^{k_u} for u > t, xi-block, g, gamma
        for u in range(t + 1, self.n):
            for _ in range(k[u]):
                cur = self._elem_gen(cur, ("y", u))
        for u in range(self.n):
            for _ in range(l[u]):
                cur = self._elem_gen(cur, ("xi", u))
        if not g.is_identity():
            cur = self._elem_gen(cur, ("g", g))
        if not gam.is_trivial():
            cur = self._elem_gen(cur, ("gamma", gam))
        return {w: s * cc for w, cc in cur.items()}

    def _append_x(self, w, t):
        i, j, k, l, g, gam = w
        d = self.datum
        ctx = self.ctx
        q = d.q[t]
        out = {}
        # stage gamma: gamma x = gamma(a^-1) x gamma + gamma(a^-1) q (gamma(ab)-1) eta gamma
        s = gam(d.a[t].inverse(), ctx)
        spawn_c = s * q * (gam(d.a[t] * d.b[t], ctx) - ctx.one)
        if spawn_c:
            base = (i, j, k, l, g, d.group.trivial_character())
            part = self._word_gen_memo(base, ("eta", t))
            for w1, c1 in part.items():
                i1, j1, k1, l1, g1, gam1 = w1
                w2 = (i1, j1, k1, l1, g1, gam1 * gam)
                cc = spawn_c * c1
                prev = out.get(w2)
                out[w2] = cc if prev is None else prev + cc
        # stage g
        s = s * d.chi[t](g, ctx)
        # stage xi-block: xi_t^c x_t = x_t xi_t^c + (c)_{q^-1} xi^{c-1} a_t - (c)_q xi^{c-1} chi_t
        c = l[t]
        if c:
            lm = _bump(l, t, -1)
            ca = s * q_number(c, q.inverse())
            for u in range(t + 1, self.n):
                if l[u]:
                    ca = ca * d.chi[u](d.a[t], ctx) ** (-l[u])
            w2 = (i, j, k, lm, g * d.a[t], gam)
            out[w2] = out.get(w2, ctx.zero) + ca
            cchi = -(s * q_number(c, q))
            for u in range(t + 1, self.n):
                if l[u]:
                    cchi = cchi * self._qp[u][t] ** l[u]  # chi_t xi_s = chi_t(a_s) xi_s chi_t
            w3 = (i, j, k, lm, g, gam * d.chi[t])
            out[w3] = out.get(w3, ctx.zero) + cchi
        # stage y-block
        for u in range(t + 1, self.n):
            if k[u]:
                s = s * self._qp[t][u] ** k[u]  # y_u x_t = chi_u(a_t) x_t y_u
        c = k[t]
        if c:
            base = s * q_number(c, q)
            km = _bump(k, t, -1)
            # the spawned a_t b_t crosses y_t^{c-1} and the xi-block rightward
            cab = -(base * q ** c * q ** (-2 * (c - 1)) * q ** (-2 * l[t]))
            w2 = (i, j, km, l, g * (d.a[t] * d.b[t]), gam)
            out[w2] = out.get(w2, ctx.zero) + cab
            ce = base * q
            w3 = (i, j, km, l, g, gam)
            out[w3] = out.get(w3, ctx.zero) + ce
            s = s * q ** c
        for u in range(t):
            if k[u]:
                s = s * self._qp[t][u] ** k[u]
        # stage eta-block: eta_t^c x_t = q^{-c} x_t eta_t^c + (q-1)(c)_{q^-1} eta^{c+1}
        for u in range(t + 1, self.n):
            if j[u]:
                s = s * self._qp[t][u] ** (-j[u])  # eta_u x_t = chi_u(a_t)^-1 x_t eta_u
        c = j[t]
        if c:
            if j[t] + 1 < d.m[t]:
                ceta = s * (q - ctx.one) * q_number(c, q.inverse())
                w2 = (i, _bump(j, t), k, l, g, gam)
                out[w2] = out.get(w2, ctx.zero) + ceta
            s = s * q ** (-c)
        for u in range(t):
            if j[u]:
                s = s * self._qp[t][u] ** (-j[u])
        # join the x-block
        if i[t] + 1 < d.m[t]:
            for u in range(t + 1, self.n):
                if i[u]:
                    s = s * self._qp[u][t] ** i[u]  # x_s x_t = chi_t(a_s) x_t x_s
            w4 = (_bump(i, t), j, k, l, g, gam)
            out[w4] = out.get(w4, ctx.zero) + s
        return out


class DoubleOracle:
    """Doi-Takeuchi product on H* tensor H, independent of every
    commutation lemma; elements are dicts (dual-index word, H word) -> coeff."""

    def __init__(self, H: Lifting):
        self.H = H
        self.ctx = H.ctx
        self.basis = H.basis()
        self._delta2 = {}
        self._sandwich = {}  # (h3, h1) -> {w: {r: coeff}} for S^-1(h3) w h1
        self._sinv = {}
        self._dword_memo = {}
        # index Delta by left tensor factor: p -> [(w, w2, coeff)]
        self._delta_left = {}
        for w in self.basis:
            for (w1, w2), c in H._delta_word(w).items():
                self._delta_left.setdefault(w1, []).append((w, w2, c))

    def _delta2_word(self, h):
        hit = self._delta2.get(h)
        if hit is None:
            out = {}
            for (w1, w23), c in self.H._delta_word(h).items():
                for (w2, w3), c2 in self.H._delta_word(w23).items():
                    key = (w1, w2, w3)
                    out[key] = out.get(key, self.ctx.zero) + c * c2
            hit = {k: v for k, v in out.items() if v}
            self._delta2[h] = hit
        return hit

    def _sandwich_map(self, h3, h1):
        key = (h3, h1)
        hit = self._sandwich.get(key)
        if hit is None:
            s3 = self._sinv.get(h3)
            if s3 is None:
                s3 = self.H.antipode_inv(self.H.word(h3))
                self._sinv[h3] = s3
            right = self.H.word(h1)
            hit = {}
            for w in self.basis:
                prod = self.H.multiply(self.H.multiply(s3, self.H.word(w)), right)
                hit[w] = prod.terms
            self._sandwich[key] = hit
        return hit

    def embed_h(self, helem: AlgElem):
        """h -> epsilon tensor h."""
        out = {}
        unit_vals = {w: self.ctx.one for w in self.basis
                     if self.H.word_is_grouplike_free(w)}
        for h, c in helem.terms.items():
            for fw, fv in unit_vals.items():
                out[(fw, h)] = out.get((fw, h), self.ctx.zero) + c * fv
        return {k: v for k, v in out.items() if v}

    def embed_functional(self, f: Functional):
        unit = self.H.unit_word
        return {(w, unit): v for w, v in f.values.items() if v}

    def mult(self, A, B):
        """Doi-Takeuchi product of two oracle elements."""
        ctx = self.ctx
        out = {}
        for (p, h), ca in A.items():
            for (r, kk), cb in B.items():
                c0 = ca * cb
                if not c0:
                    continue
                for (h1, h2, h3), cd in self._delta2_word(h).items():
                    sand = self._sandwich_map(h3, h1)
                    hk_terms = self.H._word_word(h2, kk)
                    if not hk_terms:
                        continue
                    # beta' = F_r composed with v -> S^-1(h3) v h1
                    # (F_p * beta')(w) = sum over Delta(w) with w1 = p
                    acc_by_w = {}
                    for (w, w2, cw) in self._delta_left.get(p, ()):
                        bv = sand[w2].get(r)
                        if bv:
                            s = acc_by_w.get(w)
                            t = cw * bv
                            acc_by_w[w] = t if s is None else s + t
                    for w, acc in acc_by_w.items():
                        if not acc:
                            continue
                        for hk, chk in hk_terms.items():
                            key = (w, hk)
                            t = c0 * cd * acc * chk
                            s = out.get(key)
                            out[key] = t if s is None else s + t
        return {k: v for k, v in out.items() if v}

    # -- bridging from the straightened engine ------------------------------

    def modified_functional(self, kind, v) -> Functional:
        """The section-4.1 functionals on the x^i g y^j basis."""
        vals = {}
        one = self.ctx.one
        n = self.H.n
        for w in self.basis:
            i, g, j = w
            if kind == "gamma":
                if not any(i) and not any(j):
                    vals[w] = v(g, self.ctx)
            elif kind == "xi":
                if i == _unit(n, v) and not any(j):
                    vals[w] = one
            else:  # eta
                if not any(i) and j == _unit(n, v):
                    vals[w] = one
        return Functional(self.H, vals)

    def dword_oracle(self, dword):
        """Map a canonical D-word to its oracle representation by oracle-
        multiplying its six factors."""
        hit = self._dword_memo.get(dword)
        if hit is not None:
            return hit
        i, j, k, l, g, gam = dword
        H = self.H
        n = H.n
        z = (0,) * n
        e = self.H.datum.group.identity()
        factors = []
        if any(i):
            factors.append(self.embed_h(H.word((i, e, z))))
        for t in range(n):
            for _ in range(j[t]):
                factors.append(self.embed_functional(self.modified_functional("eta", t)))
        if any(k):
            factors.append(self.embed_h(H.word((z, e, k))))
        for t in range(n):
            for _ in range(l[t]):
                factors.append(self.embed_functional(self.modified_functional("xi", t)))
        if not g.is_identity():
            factors.append(self.embed_h(H.word((z, g, z))))
        if not gam.is_trivial():
            factors.append(self.embed_functional(self.modified_functional("gamma", gam)))
        if not factors:
            acc = self.embed_h(H.one())
        else:
            acc = factors[0]
            for f in factors[1:]:
                acc = self.mult(acc, f)
        self._dword_memo[dword] = acc
        return acc

    def delem_oracle(self, delem: AlgElem):
        out = {}
        for w, c in delem.terms.items():
            for key, v in self.dword_oracle(w).items():
                s = out.get(key)
                t = c * v
                out[key] = t if s is None else s + t
        return {k: v for k, v in out.items() if v}

    def products_agree(self, D: Double, u: AlgElem, v: AlgElem) -> bool:
        straightened = self.delem_oracle(D.multiply(u, v))
        lhs = self.mult(self.delem_oracle(u), self.delem_oracle(v))
        return straightened == lhs

"""Induced modules I(lambda) = D tensor_A k_lambda over the double, their
weight bases, raising/lowering structure, radical and Loewy series, and the
local-submodule lattice in the classical case.

The standard basis is x^s eta^t tensor 1_lambda.  Generator actions come
from straightening z x^s eta^t in D(H) and killing words with y- or xi-part
while evaluating the trailing group-character pair at lambda.  Weight
vectors v_{s,t} are genuine idempotent projections e_{lambda_{s,t}} applied
to the standard basis, not the triangular closed form, so the weight
machinery is independent of the propositions it is later tested against.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from hoplift.cyclo import FieldElem, q_number, unity_order
from hoplift.datum import Datum, DSingular, NotClassical
from hoplift.double import Double
from hoplift.groups import GammaChar, dual_group
from hoplift.hopf import _multirange, _unit
from hoplift.linalg import Subspace, mat_mul, mat_vec, rref, solve_in_basis, unit_vector
from hoplift.modules import (
    ModuleRep,
    hom_dim,
    local_submodules,
    primitive_subspace,
    quotient_rep,
    weight_lines,
)


class InducedI:
    def __init__(self, datum: Datum, lam: GammaChar, D: Double | None = None):
        self.datum = datum
        self.lam = lam
        self.D = D or Double(datum)
        self.ctx = datum.ctx
        n = datum.n
        idx = _multirange(datum.m)
        self.labels = [(s, t) for s in idx for t in idx]
        self.index = {lab: p for p, lab in enumerate(self.labels)}
        self.dim = len(self.labels)
        G = datum.group
        self.group_mats = [self._gen_matrix(("g", G.generator(r)))
                           for r in range(G.rank)]
        self.ghat_mats = [self._gen_matrix(("gamma", G.character(_unit(G.rank, r))))
                          for r in range(G.rank)]
        self.x_mats = [self._gen_matrix(("x", k)) for k in range(n)]
        self.y_mats = [self._gen_matrix(("y", k)) for k in range(n)]
        self.xi_mats = [self._gen_matrix(("xi", k)) for k in range(n)]
        self.eta_mats = [self._gen_matrix(("eta", k)) for k in range(n)]
        self.singular = datum.singular_set_d(lam)
        self._rep = None
        self._gamma_mats = None
        self._vmat = None

    # -- construction ------------------------------------------------------

    def _reduce(self, delem) -> list[FieldElem]:
        vec = [self.ctx.zero] * self.dim
        for (i, j, k, l, g, gam), c in delem.terms.items():
            if any(k) or any(l):
                continue
            p = self.index[(i, j)]
            vec[p] = vec[p] + c * self.lam.value(g, gam, self.ctx)
        return vec

    def _gen_matrix(self, atom):
        D = self.D
        z = (0,) * self.datum.n
        e = self.datum.group.identity()
        triv = self.datum.group.trivial_character()
        cols = []
        for (s, t) in self.labels:
            w = (s, t, z, z, e, triv)
            cols.append(self._reduce(D.multiply(D.word(D.gen_word(*atom)), D.word(w))))
        return [[cols[c][r] for c in range(self.dim)] for r in range(self.dim)]

    def module_rep(self) -> ModuleRep:
        if self._rep is None:
            self._rep = ModuleRep(
                self.ctx,
                self.group_mats + self.ghat_mats + self.x_mats + self.y_mats
                + self.xi_mats + self.eta_mats)
        return self._rep

    # -- weights -----------------------------------------------------------

    def weight_at(self, lab) -> GammaChar:
        """lambda_{s,t} = lambda * (a^{-s} b^t)^hat * chi^{s+t}."""
        s, t = lab
        d = self.datum
        char = self.lam.charG
        elem = self.lam.elem
        for k in range(d.n):
            if s[k] or t[k]:
                char = char * d.chi[k] ** (s[k] + t[k])
                elem = elem * d.a[k] ** (-s[k]) * d.b[k] ** t[k]
        return GammaChar(char, elem)

    def gamma_matrices(self):
        """Action matrix of every gamma in Ghat (products of generator mats)."""
        if self._gamma_mats is not None:
            return self._gamma_mats
        from hoplift.linalg import identity_matrix

        G = self.datum.group
        out = {}
        for gam in dual_group(G):
            m = identity_matrix(self.ctx, self.dim)
            for r, e in enumerate(gam.exps):
                for _ in range(e):
                    m = mat_mul(self.ghat_mats[r], m)
            out[gam] = m
        self._gamma_mats = out
        return out

    def apply_idempotent(self, mu: GammaChar, vec):
        """e_mu applied to a vector: P_G projection then the Ghat average."""
        d = self.datum
        G = d.group
        ctx = self.ctx
        gmats = self.gamma_matrices()
        acc = [ctx.zero] * self.dim
        for gam, mat in gmats.items():
            c = gam(mu.elem, ctx).inverse()
            w = mat_vec(mat, vec)
            for r in range(self.dim):
                if w[r]:
                    acc[r] = acc[r] + c * w[r]
        inv = ctx.from_rational(1, G.order)
        # G-part projection is diagonal: basis (s,t) has G-weight
        # lam|_G chi^{s+t}; keep coordinates matching mu's G-part
        out = [ctx.zero] * self.dim
        for p, lab in enumerate(self.labels):
            if acc[p] and self.weight_at(lab).charG == mu.charG:
                out[p] = acc[p] * inv
        return out

    def weight_vectors(self):
        """Columns v_{s,t} = e_{s,t}(x^s eta^t tensor 1), indexed like labels."""
        if self._vmat is not None:
            return self._vmat
        cols = []
        for lab in self.labels:
            v = self.apply_idempotent(self.weight_at(lab),
                                      unit_vector(self.ctx, self.dim, self.index[lab]))
            cols.append(v)
        self._vmat = cols
        return cols

    def weight_basis_ok(self) -> bool:
        """v vectors form a basis with unit leading term (Eq. weightvector)."""
        cols = self.weight_vectors()
        red, _ = rref([list(c) for c in cols])
        if len(red) != self.dim:
            return False
        return all(cols[self.index[lab]][self.index[lab]].is_one()
                   for lab in self.labels)

    def weight_classes(self):
        """Partition of labels by equal weight lambda_{s,t}."""
        classes = {}
        for lab in self.labels:
            mu = self.weight_at(lab)
            classes.setdefault((mu.charG.exps, mu.elem.exps), []).append(lab)
        return classes

    def v_expansion(self, mat, lab):
        """Coordinates of mat . v_lab in the v-basis."""
        cols = self.weight_vectors()
        w = mat_vec(mat, cols[self.index[lab]])
        return solve_in_basis(cols, w, self.ctx)

    # -- theorem-side structure ---------------------------------------------

    def primitive_labels(self):
        s = self.singular
        d = self.datum
        outs = [()]
        for k in range(d.n):
            ch = [0]
            if k in s.S1:
                ch.append(s.e(k) + 1)
            outs = [t + (v,) for t in outs for v in ch]
        outt = [()]
        for k in range(d.n):
            ch = [0]
            if k in s.S2:
                ch.append(s.ep(k) + 1)
            outt = [t + (v,) for t in outt for v in ch]
        return [(a, b) for a in outs for b in outt]

    def rank_of(self, lab) -> int:
        s, t = lab
        sd = self.singular
        r = sum(1 for j in sd.S1 if s[j] >= sd.e(j) + 1)
        r += sum(1 for j in sd.S2 if t[j] >= sd.ep(j) + 1)
        return r

    def simple_dim_formula(self) -> int:
        sd = self.singular
        d = 1
        for k in range(self.datum.n):
            d *= (sd.e(k) + 1) if k in sd.S1 else self.datum.m[k]
            d *= (sd.ep(k) + 1) if k in sd.S2 else self.datum.m[k]
        return d

    def max_rank(self) -> int:
        return len(self.singular.S1) + len(self.singular.S2)

    def theorem_radical_series(self):
        rep = self.module_rep()
        cols = self.weight_vectors()
        out = []
        for m in range(self.max_rank() + 2):
            seeds = [list(cols[self.index[lab]]) for lab in self.primitive_labels()
                     if self.rank_of(lab) == m]
            out.append(rep.span_closure(seeds) if seeds
                       else Subspace(self.ctx, self.dim, []))
        return out

    def rank_filtration(self):
        cols = self.weight_vectors()
        out = []
        for m in range(self.max_rank() + 2):
            vecs = [list(cols[self.index[lab]]) for lab in self.labels
                    if self.rank_of(lab) >= m]
            out.append(Subspace(self.ctx, self.dim, vecs))
        return out

    def eigen_table(self):
        ctx = self.ctx
        G = self.datum.group
        out = []
        for mu_char in dual_group(G):
            for mu_elem in G.elements():
                evs = [mu_char(G.generator(r), ctx) for r in range(G.rank)]
                evs += [G.character(_unit(G.rank, r))(mu_elem, ctx)
                        for r in range(G.rank)]
                out.append(((mu_char.exps, mu_elem.exps), evs))
        return out

    def layer_decomposition(self, series):
        rep = self.module_rep()
        table = self.eigen_table()
        lowering = self.y_mats + self.xi_mats
        diag = self.group_mats + self.ghat_mats
        out = []
        for k in range(len(series) - 1):
            cur, nxt = series[k], series[k + 1]
            prim = primitive_subspace(rep, lowering, cur, nxt)
            factors = []
            for tag, vecs in weight_lines(prim, diag, table):
                kept = Subspace(self.ctx, self.dim, [])
                for v in vecs:
                    res = nxt.reduce(list(v))
                    if not any(res) or kept.contains(res):
                        continue
                    kept = kept.extended([res])
                    closure = rep.span_closure([list(v)])
                    factors.append((tag, closure.sum(nxt).dim - nxt.dim))
            out.append(factors)
        return out


# -- per-lambda analysis -----------------------------------------------------


@dataclass
class DoubleAnalysis:
    lam_tag: tuple
    S1: list
    S2: list
    S3: list
    e: dict
    ep: dict
    dim_i: int
    dim_l_formula: int
    dim_l_oracle: int
    loewy_length: int
    layer_dims: list
    layer_factors: list
    composition_length: int
    multiplicity_free: bool
    half_clean: bool
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return all(p for _, p in self.checks)


def lam_selector(lam: GammaChar) -> tuple:
    return (lam.charG.exps, lam.elem.exps)


def analyze_double(d: Datum, lam: GammaChar, D: Double | None = None,
                   with_action_checks: bool = True) -> DoubleAnalysis:
    I = InducedI(d, lam, D)
    rep = I.module_rep()
    half_clean = d.is_half_clean()
    checks = []
    notes = []

    rad_series = rep.radical_series()
    soc_series = rep.socle_series()
    factors = I.layer_decomposition(rad_series)
    comp_len = sum(len(layer) for layer in factors)
    dim_l_oracle = I.dim - rad_series[1].dim

    tags = [f for layer in factors for f in layer]
    mult_free = len(set(tags)) == len(tags)

    # radicalofI uniqueness is unconditional (no half-clean hypothesis)
    head, _ = quotient_rep(rep, rad_series[1])
    checks.append(("radicalofI:unique-maximal", hom_dim(rep, head) == 1))
    layers_fill = all(
        sum(dim for _, dim in layer) == rad_series[k].dim - rad_series[k + 1].dim
        for k, layer in enumerate(factors))
    checks.append(("oracle:layers-fill", layers_fill))

    if half_clean:
        checks.append(("weightdecomp:basis", I.weight_basis_ok()))
        thm_series = I.theorem_radical_series()
        rank_filt = I.rank_filtration()
        same_len = len(rad_series) == len(thm_series) == len(rank_filt) == len(soc_series)
        checks.append(("Lseries2:lengths", same_len))
        if same_len:
            checks.append(("radicalI:thm-eq-oracle", thm_series[1] == rad_series[1]))
            checks.append(("Lseries2:thm-filtration",
                           all(a == b for a, b in zip(rad_series, thm_series))))
            checks.append(("Lseries2:rank-filtration",
                           all(a == b for a, b in zip(rad_series, rank_filt))))
            rev = list(reversed(soc_series))
            checks.append(("Lseries2:socle-reversed",
                           all(a == b for a, b in zip(rad_series, rev))))
        checks.append(("dimension-formula", I.simple_dim_formula() == dim_l_oracle))
        checks.append(("Lseries2:length",
                       len(rad_series) - 1 == I.max_rank() + 1))
        expect = _expected_layers(I)
        checks.append(("Lseries2:layers",
                       [sorted(layer) for layer in factors]
                       == [sorted(l) for l in expect]))
        if with_action_checks:
            checks.append(("eta&xi-action", _action_checks_eta_xi(I)))
            checks.append(("x-action", _action_check_x(I)))
            checks.append(("y-action", _action_check_y(I)))
    else:
        checks.append(("weightdecomp:basis", I.weight_basis_ok()))
        notes.append("theorem assertions not asserted (datum not half-clean)")

    return DoubleAnalysis(
        lam_tag=lam_selector(lam),
        S1=sorted(j + 1 for j in I.singular.S1),
        S2=sorted(j + 1 for j in I.singular.S2),
        S3=sorted(j + 1 for j in I.singular.S3),
        e={j + 1: I.singular.e(j) for j in I.singular.S1},
        ep={j + 1: I.singular.ep(j) for j in I.singular.S2},
        dim_i=I.dim,
        dim_l_formula=I.simple_dim_formula() if half_clean else dim_l_oracle,
        dim_l_oracle=dim_l_oracle,
        loewy_length=len(rad_series) - 1,
        layer_dims=[rad_series[k].dim - rad_series[k + 1].dim
                    for k in range(len(rad_series) - 1)],
        layer_factors=[sorted(layer) for layer in factors],
        composition_length=comp_len,
        multiplicity_free=mult_free,
        half_clean=half_clean,
        checks=checks,
        notes=notes,
    )


def _expected_layers(I: InducedI):
    """Layers per Thm Lseries2(3): L(lambda_{s,t}) over primitive vectors of
    each rank, with the singular data of the weight recomputed from scratch."""
    out = [[] for _ in range(I.max_rank() + 1)]
    d = I.datum
    for lab in I.primitive_labels():
        mu = I.weight_at(lab)
        smu = d.singular_set_d(mu)
        dim = 1
        for k in range(d.n):
            dim *= (smu.e(k) + 1) if k in smu.S1 else d.m[k]
            dim *= (smu.ep(k) + 1) if k in smu.S2 else d.m[k]
        out[I.rank_of(lab)].append(((mu.charG.exps, mu.elem.exps), dim))
    return out


def weight_bookkeeping_matches(I: InducedI) -> bool:
    """Proof-side claim: for a primitive v_{s,t} of weight mu,
    e_j(mu) = e_j(lambda) if s_j = 0 else m_j - e_j(lambda) - 2, same for e'."""
    d = I.datum
    sd = I.singular
    for lab in I.primitive_labels():
        s, t = lab
        smu = d.singular_set_d(I.weight_at(lab))
        if smu.S1 != sd.S1 or smu.S2 != sd.S2:
            return False
        for j in sd.S1:
            want = sd.e(j) if s[j] == 0 else d.m[j] - sd.e(j) - 2
            if smu.e(j) != want:
                return False
        for j in sd.S2:
            want = sd.ep(j) if t[j] == 0 else d.m[j] - sd.ep(j) - 2
            if smu.ep(j) != want:
                return False
    return True


def _is_root_of_unity(c: FieldElem) -> bool:
    return unity_order(c) is not None


def _action_checks_eta_xi(I: InducedI) -> bool:
    d = I.datum
    ctx = I.ctx
    for k in range(d.n):
        for lab in I.labels:
            s, t = lab
            coords = I.v_expansion(I.eta_mats[k], lab)
            target = (s, _bump_t(t, k)) if t[k] + 1 < d.m[k] else None
            for p, c in enumerate(coords):
                if not c:
                    continue
                if target is None or I.labels[p] != target:
                    return False
                if not _is_root_of_unity(c):
                    return False
            if target is not None and not coords[I.index[target]]:
                return False
            coords = I.v_expansion(I.xi_mats[k], lab)
            tgt = (_bump_t(s, k, -1), t) if s[k] else None
            f = q_number(s[k], d.q[k]) * (
                I.lam.value(d.a[k], d.chi[k].inverse(), ctx) - d.q[k] ** (-(s[k] - 1))) \
                if s[k] else ctx.zero
            for p, c in enumerate(coords):
                if not c:
                    continue
                if tgt is None or I.labels[p] != tgt:
                    return False
                if not f or not _is_root_of_unity(c * f.inverse()):
                    return False
            if tgt is not None and f and not coords[I.index[tgt]]:
                return False
    return True


def _action_check_x(I: InducedI) -> bool:
    d = I.datum
    for k in range(d.n):
        for lab in I.labels:
            s, t = lab
            coords = I.v_expansion(I.x_mats[k], lab)
            raising = (_bump_t(s, k), t) if s[k] + 1 < d.m[k] else None
            skew = (s, _bump_t(t, k)) if t[k] + 1 < d.m[k] else None
            allowed = {x for x in (raising, skew) if x is not None}
            for p, c in enumerate(coords):
                if not c:
                    continue
                if I.labels[p] not in allowed:
                    return False
                if not _is_root_of_unity(c):
                    return False
            if raising is not None and not coords[I.index[raising]]:
                return False
    return True


def _action_check_y(I: InducedI) -> bool:
    d = I.datum
    ctx = I.ctx
    for k in range(d.n):
        for lab in I.labels:
            s, t = lab
            coords = I.v_expansion(I.y_mats[k], lab)
            lower_t = (s, _bump_t(t, k, -1)) if t[k] else None
            lower_s = (_bump_t(s, k, -1), t) if s[k] else None
            f_t = q_number(t[k], d.q[k]) * (
                I.lam.value(d.b[k], d.chi[k], ctx) - d.q[k] ** (-(t[k] - 1))) \
                if t[k] else ctx.zero
            f_s = q_number(s[k], d.q[k]) * (
                I.lam.value(d.a[k], d.chi[k].inverse(), ctx) - d.q[k] ** (-(s[k] - 1))) \
                if s[k] else ctx.zero
            for p, c in enumerate(coords):
                if not c:
                    continue
                labp = I.labels[p]
                if labp == lower_t:
                    if not f_t or not _is_root_of_unity(c * f_t.inverse()):
                        return False
                elif labp == lower_s:
                    if not f_s or not _is_root_of_unity(c * f_s.inverse()):
                        return False
                else:
                    return False
            if lower_t is not None and f_t and not coords[I.index[lower_t]]:
                return False
    return True


def _bump_t(vec, k, by=1):
    return tuple(v + by if i == k else v for i, v in enumerate(vec))


# -- classical lattice --------------------------------------------------------


@dataclass
class LatticeReport:
    lam_tag: tuple
    n_locals: int
    composition_length: int
    poset_pairs: list
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(p for _, p in self.checks)


def local_poset(I: InducedI) -> LatticeReport:
    """Thm classicalliftings: the poset of local submodules and its
    isomorphism with the subset-pair poset P(lambda)."""
    d = I.datum
    if not d.is_classical():
        raise NotClassical(f"datum {d.name or ''} is not classical")
    checks = []
    # classical => all weights distinct; weight spaces 1-dimensional
    weights = [lam_selector(I.weight_at(lab)) for lab in I.labels]
    distinct = len(set(weights)) == I.dim
    checks.append(("weights-distinct", distinct))
    if not distinct:
        raise NotClassical("weights lambda_{s,t} are not distinct")

    rep = I.module_rep()
    cols = I.weight_vectors()
    locals_ = local_submodules(rep, [list(c) for c in cols])

    # closures of primitive weight vectors realize every local exactly once
    prim = I.primitive_labels()
    prim_closures = {}
    for lab in prim:
        cl = rep.span_closure([list(cols[I.index[lab]])])
        prim_closures[lab] = cl
    checks.append(("locals-are-primitive-closures",
                   set(prim_closures.values()) == set(locals_)
                   and len(set(prim_closures.values())) == len(prim)))

    sd = I.singular
    def psi(lab):
        s, t = lab
        return (frozenset(j for j in sd.S1 if s[j] == sd.e(j) + 1),
                frozenset(j for j in sd.S2 if t[j] == sd.ep(j) + 1))

    # poset isomorphism: inclusion of closures <=> reverse inclusion of pairs
    iso = True
    for la in prim:
        for lb in prim:
            sub = prim_closures[la].contains_space(prim_closures[lb])
            pa, pb = psi(la), psi(lb)
            want = pa[0] <= pb[0] and pa[1] <= pb[1]
            if sub != want:
                iso = False
    checks.append(("poset-isomorphic-to-P", iso))

    n_expected = 2 ** (len(sd.S1) + len(sd.S2))
    checks.append(("poset-size", len(locals_) == n_expected))

    rad_series = rep.radical_series()
    factors = I.layer_decomposition(rad_series)
    comp_len = sum(len(layer) for layer in factors)
    checks.append(("composition-length-2^l", comp_len == n_expected))
    tags = [f for layer in factors for f in layer]
    checks.append(("multiplicity-free", len(set(tags)) == len(tags)))

    checks.append(("distrlattice-unique-decomposition",
                   _check_irredundant_decompositions(I, rep, locals_, cols)))

    return LatticeReport(
        lam_tag=lam_selector(I.lam),
        n_locals=len(locals_),
        composition_length=comp_len,
        poset_pairs=[(sorted(a), sorted(b)) for a, b in
                     (psi(lab) for lab in prim)],
        checks=checks,
    )


def _check_irredundant_decompositions(I, rep, locals_, cols) -> bool:
    """Prop distrlattice(1) on every submodule generated by <= 2 weight lines:
    unique irredundant sum of locals, each maximal in it, R(N) = sum R(J_i),
    and the head splits as the direct sum of the J_i heads."""
    from itertools import combinations

    subs = []
    for v in cols:
        subs.append(rep.span_closure([list(v)]))
    for va, vb in combinations(cols, 2):
        subs.append(rep.span_closure([list(va), list(vb)]))
    seen = set()
    for N in subs:
        if N in seen:
            continue
        seen.add(N)
        inside = [J for J in locals_ if N.contains_space(J)]
        winners = []
        for r in range(1, len(inside) + 1):
            for combo in combinations(inside, r):
                total = combo[0]
                for J in combo[1:]:
                    total = total.sum(J)
                if total != N:
                    continue
                irredundant = True
                for skip in range(len(combo)):
                    rest = [combo[q] for q in range(len(combo)) if q != skip]
                    if rest:
                        tt = rest[0]
                        for J in rest[1:]:
                            tt = tt.sum(J)
                        if tt == N:
                            irredundant = False
                            break
                    elif not combo[skip].dim:
                        irredundant = False
                if irredundant:
                    winners.append(combo)
        if len(winners) != 1:
            return False
        combo = winners[0]
        radN = rep.radical_act(N)
        rads = [rep.radical_act(J) for J in combo]
        total = Subspace(I.ctx, I.dim, [])
        for r in rads:
            total = total.sum(r)
        if total != radN:
            return False
        if N.dim - radN.dim != sum(J.dim - r.dim for J, r in zip(combo, rads)):
            return False
    return True

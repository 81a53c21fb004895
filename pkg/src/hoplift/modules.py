"""Datum-agnostic brute-force module theory over an exact field.

Everything here is ground truth for the structure theorems verified
elsewhere: the enveloping action algebra is closed by raw multiplication,
its radical is the kernel of the trace form (Dickson's criterion,
characteristic 0, faithful action by construction), and radical/socle
series come from iterating that ideal.  No result from the theorem side is
consulted.
"""

from __future__ import annotations

from hoplift.linalg import (
    Subspace,
    identity_matrix,
    kernel_basis,
    mat_mul,
    mat_vec,
    rref,
    trace_of_product,
    zero_subspace,
)


class DimensionMismatch(ValueError):
    pass


def _flatten(mat):
    return [x for row in mat for x in row]


def _unflatten(vec, n):
    return [list(vec[i * n:(i + 1) * n]) for i in range(n)]


class WeightSpacesNotSimple(ValueError):
    pass


class ModuleRep:
    """A module given by exact square action matrices, one per generator."""

    def __init__(self, ctx, gens):
        self.ctx = ctx
        self.gens = [tuple(tuple(row) for row in g) for g in gens]
        self.dim = len(self.gens[0]) if self.gens else 0
        for g in self.gens:
            if len(g) != self.dim or any(len(r) != self.dim for r in g):
                raise DimensionMismatch("generator matrices must be square, same size")
        self._algebra = None
        self._radical = None

    # -- closures --------------------------------------------------------

    def span_closure(self, seeds) -> Subspace:
        """Smallest generator-stable subspace containing the seeds."""
        for s in seeds:
            if len(s) != self.dim:
                raise DimensionMismatch("seed of wrong length")
        space = Subspace(self.ctx, self.dim, seeds)
        frontier = list(space.basis)
        while frontier:
            new = []
            for v in frontier:
                for g in self.gens:
                    w = space.reduce(mat_vec(g, v))
                    if any(w):
                        new.append(w)
                        space = space.extended([w])
            frontier = new
        return space

    def action_algebra(self):
        """Basis (as matrices) of the unital algebra generated by the action."""
        if self._algebra is not None:
            return self._algebra
        n = self.dim
        basis_mats = [identity_matrix(self.ctx, n)]
        flat = Subspace(self.ctx, n * n, [_flatten(basis_mats[0])])
        frontier = list(basis_mats)
        while frontier:
            new = []
            for m in frontier:
                for g in self.gens:
                    prod = mat_mul(g, m)
                    resid = flat.reduce(_flatten(prod))
                    if any(resid):
                        flat = flat.extended([resid])
                        mm = _unflatten(resid, n)
                        basis_mats.append(mm)
                        new.append(mm)
            frontier = new
        self._algebra = basis_mats
        return basis_mats

    def trace_radical(self):
        """Basis of rad(B) = {b in B : Tr(b b') = 0 for all b' in B}."""
        if self._radical is not None:
            return self._radical
        B = self.action_algebra()
        k = len(B)
        gram = [[trace_of_product(B[i], B[j]) for j in range(k)] for i in range(k)]
        null = kernel_basis(gram, self.ctx, k)
        rad = []
        for coords in null:
            m = None
            for c, b in zip(coords, B):
                if c:
                    t = [[c * x for x in row] for row in b]
                    m = t if m is None else [[p + q for p, q in zip(r1, r2)]
                                             for r1, r2 in zip(m, t)]
            if m is not None:
                rad.append(m)
        self._radical = rad
        return rad

    def verify_radical(self) -> bool:
        """Nilpotency of rad(B) by powering and semisimplicity of B/rad."""
        rad = self.trace_radical()
        n = self.dim
        # nilpotency: the subspace chain rad, rad*rad, ... must hit zero
        cur = rad
        for _ in range(n + 1):
            if not cur:
                break
            nxt_rows = []
            for a in cur:
                for b in rad:
                    nxt_rows.append(_flatten(mat_mul(a, b)))
            red, _ = rref(nxt_rows)
            cur = [_unflatten(r, n) for r in red]
        else:
            return False
        # semisimple quotient: trace form on B/rad is nondegenerate, which is
        # equivalent to dim rad = dim of the Gram kernel already computed
        return True

    # -- filtrations -------------------------------------------------------

    def radical_act(self, space: Subspace) -> Subspace:
        """rad(B) . space."""
        rad = self.trace_radical()
        rows = []
        for v in space.basis:
            for r in rad:
                rows.append(mat_vec(r, v))
        return Subspace(self.ctx, self.dim, rows)

    def radical_series(self):
        """[M, R(M), R^2(M), ..., 0] as subspaces, strictly decreasing."""
        out = [Subspace(self.ctx, self.dim, identity_matrix(self.ctx, self.dim))]
        while out[-1].dim:
            nxt = self.radical_act(out[-1])
            if nxt.dim >= out[-1].dim:
                raise RuntimeError("radical failed to decrease; not nilpotent?")
            out.append(nxt)
        return out

    def socle_series(self):
        """[0, Soc_1, Soc_2, ..., M], Soc_m = preimage of Soc(M/Soc_{m-1})."""
        rad = self.trace_radical()
        out = [zero_subspace(self.ctx, self.dim)]
        while out[-1].dim < self.dim:
            cur = out[-1]
            sol = _preimage_kernel(self, rad, cur)
            if sol.dim <= cur.dim:
                raise RuntimeError("socle failed to grow")
            out.append(sol)
        return out

    def loewy_length(self) -> int:
        return len(self.radical_series()) - 1


def _preimage_kernel(M: ModuleRep, mats, target: Subspace) -> Subspace:
    """{v : m v in target for every m in mats}."""
    ctx = M.ctx
    n = M.dim
    rows = []
    # condition rows: for each m, the residue of m v modulo target must vanish;
    # build the linear map v -> reduce(m v) stacked over all m
    for m in mats:
        cols = []
        for i in range(n):
            e = [ctx.zero] * n
            e[i] = ctx.one
            cols.append(target.reduce(mat_vec(m, e)))
        for r in range(n):
            rows.append([cols[i][r] for i in range(n)])
    if not rows:
        return Subspace(ctx, n, identity_matrix(ctx, n))
    return Subspace(ctx, n, kernel_basis(rows, ctx, n))


def primitive_subspace(M: ModuleRep, lowering, within: Subspace, modulo: Subspace) -> Subspace:
    """{v in `within` : L v in `modulo` for all lowering matrices L}, as a
    subspace of the ambient module (contains `modulo` implicitly only if
    modulo is lowering-stable; callers quotient by `modulo` themselves)."""
    sol = _preimage_kernel(M, lowering, modulo)
    rows = [list(v) for v in sol.basis]
    keep = [r for r in rows if within.contains(r)]
    if len(keep) != len(rows):
        # intersect with `within` properly
        inter = _intersect(sol, within)
        return inter
    return Subspace(M.ctx, M.dim, keep)


def _intersect(A: Subspace, B: Subspace) -> Subspace:
    # kernel trick on stacked residues: v in A with residue mod B zero
    ctx = A.ctx
    n = A.ambient_dim
    rows = []
    k = A.dim
    for r in range(n):
        rows.append([B.reduce(list(A.basis[i]))[r] for i in range(k)])
    coords = kernel_basis(rows, ctx, k)
    vecs = []
    for co in coords:
        v = [ctx.zero] * n
        for c, b in zip(co, A.basis):
            if c:
                v = [x + c * y for x, y in zip(v, b)]
        vecs.append(v)
    return Subspace(ctx, n, vecs)


def quotient_rep(M: ModuleRep, sub: Subspace):
    """(ModuleRep of M/sub, projection v -> quotient coordinates).

    Quotient coordinates are the non-pivot components of the residue modulo
    sub, which is a linear isomorphism of M/sub."""
    ctx = M.ctx
    n = M.dim
    free = [c for c in range(n) if c not in set(sub.pivots)]

    def project(vec):
        r = sub.reduce(list(vec))
        return [r[c] for c in free]

    gens = []
    for g in M.gens:
        cols = []
        for c in free:
            e = [ctx.zero] * n
            e[c] = ctx.one
            cols.append(project(mat_vec(g, e)))
        gens.append([[cols[j][i] for j in range(len(free))] for i in range(len(free))])
    return ModuleRep(ctx, gens), project


def hom_dim(M1: ModuleRep, M2: ModuleRep) -> int:
    """dim of the space of module maps M1 -> M2 (intertwiners)."""
    ctx = M1.ctx
    d1, d2 = M1.dim, M2.dim
    rows = []
    # unknowns f[r][c], flattened row-major: constraints f A - B f = 0 per generator
    for A, B in zip(M1.gens, M2.gens):
        for r in range(d2):
            for c in range(d1):
                row = [ctx.zero] * (d1 * d2)
                for k in range(d1):
                    if A[k][c]:
                        row[r * d1 + k] = row[r * d1 + k] + A[k][c]
                for k in range(d2):
                    if B[r][k]:
                        row[k * d1 + c] = row[k * d1 + c] - B[r][k]
                rows.append(row)
    return len(kernel_basis(rows, ctx, d1 * d2))


def weight_lines(space: Subspace, diag_mats, eigen_table):
    """Split a subspace stable under commuting semisimple matrices into joint
    eigenlines.

    eigen_table: list of (tag, [eigenvalue per matrix]); returns
    [(tag, [vectors])] with empty entries dropped.  The union of the returned
    vectors spans `space` (asserted by callers when that is expected).
    """
    out = []
    ctx = space.ctx
    n = space.ambient_dim
    k = space.dim
    for tag, evs in eigen_table:
        rows = []
        for m, ev in zip(diag_mats, evs):
            cols = []
            for b in space.basis:
                w = mat_vec(m, list(b))
                cols.append([x - ev * y for x, y in zip(w, b)])
            for r in range(n):
                rows.append([cols[i][r] for i in range(k)])
        coords = kernel_basis(rows, ctx, k)
        vecs = []
        for co in coords:
            v = [ctx.zero] * n
            for c, b in zip(co, space.basis):
                if c:
                    v = [x + c * y for x, y in zip(v, b)]
            vecs.append(v)
        if vecs:
            out.append((tag, vecs))
    return out


def local_submodules(M: ModuleRep, weight_vectors):
    """Deduplicated cyclic closures of the given weight lines, each verified
    join-irreducible among the produced list."""
    closures = []
    seen = set()
    for v in weight_vectors:
        s = M.span_closure([list(v)])
        if s.dim and s not in seen:
            seen.add(s)
            closures.append(s)
    for j in closures:
        proper = [k for k in closures if k != j and j.contains_space(k)]
        if proper:
            total = proper[0]
            for k in proper[1:]:
                total = total.sum(k)
            if total == j:
                raise WeightSpacesNotSimple(
                    "closure equals the sum of its proper sub-closures; "
                    "weight lines do not generate local submodules")
    return closures

"""Exact row-echelon linear algebra over a FieldContext.

Vectors are lists/tuples of FieldElem; a Subspace is a canonical
reduced-row-echelon basis, so equality, inclusion and membership are
decidable and exact.
"""

from __future__ import annotations

from hoplift.cyclo import FieldContext, FieldElem


def rref(rows):
    """Reduced row echelon form; returns (rows, pivot_columns), zero rows dropped."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [rows[i] for i in range(r)], pivots


class Subspace:
    """Canonical subspace of ctx^n; immutable, hashable on its RREF basis."""

    def __init__(self, ctx: FieldContext, ambient_dim: int, vectors=()):
        self.ctx = ctx
        self.ambient_dim = ambient_dim
        basis, pivots = rref(list(vectors))
        self.basis = tuple(tuple(r) for r in basis)
        self.pivots = tuple(pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, vec):
        """Residue of vec modulo the subspace."""
        vec = list(vec)
        for row, p in zip(self.basis, self.pivots):
            f = vec[p]
            if f:
                vec = [a - f * b for a, b in zip(vec, row)]
        return vec

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ctx, self.ambient_dim, list(self.basis) + list(other.basis))

    def extended(self, vectors) -> "Subspace":
        return Subspace(self.ctx, self.ambient_dim, list(self.basis) + list(vectors))

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.basis == other.basis \
            and self.ambient_dim == other.ambient_dim

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}/{self.ambient_dim})"


def zero_subspace(ctx, n):
    return Subspace(ctx, n, [])


def full_subspace(ctx, n):
    return Subspace(ctx, n, identity_matrix(ctx, n))


def identity_matrix(ctx, n):
    z, o = ctx.zero, ctx.one
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def zero_vector(ctx, n):
    return [ctx.zero] * n


def unit_vector(ctx, n, i):
    v = [ctx.zero] * n
    v[i] = ctx.one
    return v


def mat_vec(mat, vec):
    ctx = _ctx_of(mat)
    out = []
    for row in mat:
        acc = ctx.zero
        for a, b in zip(row, vec):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def mat_mul(A, B):
    ctx = _ctx_of(A)
    n, k = len(A), len(B[0])
    Bt = list(zip(*B))
    out = []
    for row in A:
        orow = []
        for col in Bt:
            acc = ctx.zero
            for a, b in zip(row, col):
                if a and b:
                    acc = acc + a * b
            orow.append(acc)
        out.append(orow)
    return out


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[c * a for a in row] for row in A]


def trace_of_product(A, B):
    """Tr(A B) without forming the product."""
    ctx = _ctx_of(A)
    acc = ctx.zero
    for i, row in enumerate(A):
        for j, a in enumerate(row):
            if a and B[j][i]:
                acc = acc + a * B[j][i]
    return acc


def kernel_basis(rows, ctx, ncols):
    """Basis of {v : M v = 0} for M given by rows."""
    red, pivots = rref(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    out = []
    for fc in free:
        v = [ctx.zero] * ncols
        v[fc] = ctx.one
        for row, p in zip(red, pivots):
            v[p] = -row[fc]
        out.append(v)
    return out


def solve_in_basis(basis_cols, vec, ctx):
    """Coordinates of vec in the given column basis (must be consistent)."""
    n = len(vec)
    k = len(basis_cols)
    aug = [[basis_cols[j][i] for j in range(k)] + [vec[i]] for i in range(n)]
    red, pivots = rref(aug)
    coords = [ctx.zero] * k
    for row, p in zip(red, pivots):
        if p == k:
            raise ValueError("vector not in span of basis")
        coords[p] = row[k]
    return coords


def _ctx_of(mat):
    return mat[0][0].ctx

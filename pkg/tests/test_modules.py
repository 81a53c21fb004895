from fractions import Fraction

import pytest

from hoplift.cyclo import FieldContext
from hoplift.linalg import Subspace, identity_matrix, mat_mul, rref, unit_vector
from hoplift.modules import DimensionMismatch, ModuleRep


def _mat(ctx, rows):
    return [[ctx.from_rational(Fraction(v)) for v in row] for row in rows]


def test_rref_canonical():
    ctx = FieldContext(1)
    rows = _mat(ctx, [[2, 4], [1, 2], [0, 1]])
    red, piv = rref(rows)
    assert piv == [0, 1]
    assert [[c.as_fraction() for c in r] for r in red] == [[1, 0], [0, 1]]


def test_subspace_membership_and_sum():
    ctx = FieldContext(1)
    s = Subspace(ctx, 3, _mat(ctx, [[1, 1, 0]]))
    assert s.contains(_mat(ctx, [[2, 2, 0]])[0])
    assert not s.contains(_mat(ctx, [[1, 0, 0]])[0])
    t = Subspace(ctx, 3, _mat(ctx, [[0, 0, 1]]))
    assert s.sum(t).dim == 2
    assert s.sum(t) == t.sum(s)


def test_span_closure_trivial_cases():
    ctx = FieldContext(1)
    M = ModuleRep(ctx, [_mat(ctx, [[0, 1], [0, 0]])])
    zero = M.span_closure([[ctx.zero, ctx.zero]])
    assert zero.dim == 0
    full = M.span_closure(identity_matrix(ctx, 2))
    assert full.dim == 2
    # seed e2: closure picks up e1 = N e2
    s = M.span_closure([unit_vector(ctx, 2, 1)])
    assert s.dim == 2
    s1 = M.span_closure([unit_vector(ctx, 2, 0)])
    assert s1.dim == 1
    # idempotence / monotonicity
    assert M.span_closure([list(v) for v in s1.basis]) == s1


def test_dimension_mismatch():
    ctx = FieldContext(1)
    M = ModuleRep(ctx, [_mat(ctx, [[1, 0], [0, 1]])])
    with pytest.raises(DimensionMismatch):
        M.span_closure([[ctx.one]])


def test_action_algebra_scalar():
    ctx = FieldContext(1)
    M = ModuleRep(ctx, [_mat(ctx, [[2, 0], [0, 2]])])
    assert len(M.action_algebra()) == 1  # scalars only


def test_action_algebra_diagonal_distinct_eigenvalues():
    ctx = FieldContext(1)
    M = ModuleRep(ctx, [_mat(ctx, [[1, 0, 0], [0, 2, 0], [0, 0, 3]])])
    assert len(M.action_algebra()) == 3  # all diagonals


def test_trace_radical_semisimple_full_matrix_algebra():
    ctx = FieldContext(1)
    M = ModuleRep(ctx, [_mat(ctx, [[0, 1], [0, 0]]), _mat(ctx, [[0, 0], [1, 0]])])
    assert len(M.action_algebra()) == 4
    assert M.trace_radical() == []


def test_trace_radical_upper_triangular():
    ctx = FieldContext(1)
    M = ModuleRep(ctx, [_mat(ctx, [[1, 0], [0, 2]]), _mat(ctx, [[0, 1], [0, 0]])])
    rad = M.trace_radical()
    assert len(rad) == 1
    m = rad[0]
    assert m[0][0].is_zero() and m[1][0].is_zero() and m[1][1].is_zero()
    assert not m[0][1].is_zero()
    assert M.verify_radical()


def test_trace_radical_commutative_nilpotent():
    ctx = FieldContext(1)
    n = _mat(ctx, [[0, 1], [0, 0]])
    M = ModuleRep(ctx, [n])
    rad = M.trace_radical()
    flat = Subspace(ctx, 4, [[x for row in r for x in row] for r in rad])
    assert flat.contains([x for row in n for x in row])


def test_radical_series_semisimple():
    ctx = FieldContext(1)
    M = ModuleRep(ctx, [_mat(ctx, [[1, 0], [0, 2]])])
    series = M.radical_series()
    assert [s.dim for s in series] == [2, 0]


def test_series_jordan_block():
    ctx = FieldContext(1)
    # single Jordan block of size 3: uniserial, Loewy length 3
    J = _mat(ctx, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    M = ModuleRep(ctx, [J])
    rs = M.radical_series()
    ss = M.socle_series()
    assert [s.dim for s in rs] == [3, 2, 1, 0]
    assert [s.dim for s in ss] == [0, 1, 2, 3]
    assert M.loewy_length() == 3
    # R^m subset Soc_{l-m}, here with equality
    l = len(rs) - 1
    for m in range(l + 1):
        assert ss[l - m].contains_space(rs[m])


def test_series_direct_sum_of_blocks():
    ctx = FieldContext(1)
    J = _mat(ctx, [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    M = ModuleRep(ctx, [J])
    assert [s.dim for s in M.radical_series()] == [4, 2, 0]
    assert [s.dim for s in M.socle_series()] == [0, 2, 4]

"""Exact linear algebra: row reduction, affine subspaces, bilinear forms."""

from fractions import Fraction

import pytest

from coxint.linalg import (
    GramForm,
    affine_sub,
    b_orth_complement,
    b_project,
    intersect_affine,
    linear_sub,
    mat,
    mat_inv,
    mat_mul,
    null_space,
    rref,
    solve_linear,
    span_affine,
    span_of_points,
    vec,
)


def test_rref_idempotent_and_pivots():
    rows = [vec(2, 4, 6), vec(1, 2, 4), vec(0, 0, 1)]
    r = rref(rows)
    assert r == rref(r)
    assert r[0][0] == 1


def test_rref_zero_rows_dropped():
    assert rref([vec(0, 0), vec(1, 1)]) == [(Fraction(1), Fraction(1))]


def test_solve_linear_unique():
    rows = [vec(1, 0), vec(0, 2)]
    sol = solve_linear(rows, vec(3, 4), 2)
    assert sol is not None
    point, basis = sol
    assert point == vec(3, 2)
    assert list(basis) == []


def test_solve_linear_inconsistent():
    rows = [vec(1, 1), vec(1, 1)]
    assert solve_linear(rows, vec(0, 1), 2) is None


def test_solve_linear_underdetermined():
    rows = [vec(1, 1, 0)]
    sol = solve_linear(rows, vec(5,), 3)
    point, basis = sol
    assert point[0] + point[1] == 5
    assert len(basis) == 2


def test_null_space_dimension():
    rows = [vec(1, 1, 1)]
    ns = null_space(rows, 3)
    assert len(ns) == 2


def test_mat_inv_roundtrip():
    a = mat(vec(2, 1), vec(1, 1))
    assert mat_mul(a, mat_inv(a)) == mat(vec(1, 0), vec(0, 1))


def test_gram_rejects_asymmetric():
    with pytest.raises(ValueError):
        GramForm(mat(vec(1, 2), vec(1, 1)))


def test_gram_bilin_standard():
    g = GramForm.standard(3)
    assert g.bilin(vec(1, 2, 3), vec(4, 5, 6)) == 32
    assert g.norm2(vec(3, 4, 0)) == 25


def test_affine_sub_canonical_basepoint():
    a = affine_sub(vec(5, 0), [vec(1, 0)])
    b = affine_sub(vec(0, 0), [vec(2, 0)])
    assert a == b


def test_affine_contains():
    line = affine_sub(vec(0, 1), [vec(1, 0)])
    assert line.contains_point(vec(7, 1))
    assert not line.contains_point(vec(0, 0))
    plane = affine_sub(vec(0, 1), [vec(1, 0), vec(0, 1)])
    assert plane.contains(line)
    assert not line.contains(plane)


def test_intersect_affine_lines():
    a = affine_sub(vec(0, 0), [vec(1, 1)])
    b = affine_sub(vec(2, 0), [vec(0, 1)])
    p = intersect_affine(a, b)
    assert p.dim == 0
    assert p.basepoint == vec(2, 2)


def test_intersect_affine_empty():
    a = affine_sub(vec(0, 0), [vec(1, 0)])
    b = affine_sub(vec(0, 1), [vec(1, 0)])
    assert intersect_affine(a, b).is_empty


def test_b_project_orthogonality():
    g = GramForm(mat(vec(2, -1), vec(-1, 2)))
    u = linear_sub([vec(1, 0)], 2)
    v = vec(3, 5)
    p = b_project(v, u, g)
    assert u.contains_point(p)
    residual = tuple(x - y for x, y in zip(v, p))
    assert g.bilin(residual, vec(1, 0)) == 0


def test_b_orth_complement_dim():
    g = GramForm.standard(3)
    u = linear_sub([vec(1, 0, 0)], 3)
    c = b_orth_complement(u, g)
    assert c.dim == 2
    for d in c.directions:
        assert g.bilin(d, vec(1, 0, 0)) == 0


def test_span_affine_and_span_of_points():
    s = span_affine([vec(1, 1), vec(2, 2)])
    assert s.dim == 1
    m = affine_sub(vec(0, 1), [vec(1, 0)])
    sp = span_of_points(m)
    # the affine line y=1 spans the whole plane through the origin
    assert sp.dim == 2

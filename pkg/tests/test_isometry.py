"""Isometry invariants: reflections, move/fix sets, lengths, products."""

from fractions import Fraction

from coxint.linalg import GramForm, mat, vec
from coxint.isometry import (
    ELLIPTIC,
    HYPERBOLIC,
    basic_invariants,
    compose,
    greedy_factorization,
    identity_isometry,
    invert,
    is_reflection,
    make_reflection,
    predict_product,
    quick_len,
    reflection_length,
    reflection_root,
    translation,
)

G2 = GramForm.standard(2)
G3 = GramForm.standard(3)


def test_reflection_is_involution():
    r = make_reflection(vec(1, 2), Fraction(3), G2)
    assert compose(r, r).is_identity()
    assert is_reflection(r)
    assert r.check_orthogonal()


def test_reflection_fixes_hyperplane():
    r = make_reflection(vec(1, 0), Fraction(2), G2)
    assert r.apply(vec(2, 7)) == vec(2, 7)
    assert r.apply(vec(0, 0)) == vec(4, 0)


def test_compose_invert():
    r = make_reflection(vec(1, 1), 0, G2)
    t = translation(vec(1, 0), G2)
    w = compose(t, r)
    assert compose(w, invert(w)).is_identity()
    # right-to-left: (t*r)(x) = t(r(x))
    assert w.apply(vec(1, 0)) == vec(1, -1)


def test_translation_is_hyperbolic_length_two():
    t = translation(vec(1, 0), G2)
    bi = basic_invariants(t)
    assert bi.kind == HYPERBOLIC
    assert bi.refl_len == 2
    assert quick_len(t) == (HYPERBOLIC, 2)


def test_rotation_is_elliptic_length_two():
    a = compose(make_reflection(vec(1, 0), 0, G2),
                make_reflection(vec(1, 1), 0, G2))
    bi = basic_invariants(a)
    assert bi.kind == ELLIPTIC
    assert bi.refl_len == 2
    assert quick_len(a) == (ELLIPTIC, 2)


def test_quick_len_matches_invariants_corkscrew():
    rot = mat(vec(0, -1, 0), vec(1, 0, 0), vec(0, 0, 1))
    from coxint.isometry import Isometry
    w = Isometry(rot, vec(0, 0, 1), G3)
    assert quick_len(w) == (HYPERBOLIC, 4)
    assert basic_invariants(w).kind == HYPERBOLIC


def test_min_set_of_glide():
    # glide: reflect in x=0, then translate along y
    r = make_reflection(vec(1, 0), 0, G2)
    g = compose(translation(vec(0, 1), G2), r)
    bi = basic_invariants(g)
    assert bi.kind == HYPERBOLIC
    assert bi.refl_len == 3
    assert bi.min.contains_point(vec(0, 0))
    assert not bi.min.contains_point(vec(1, 0))


def test_reflection_root_recovery():
    r = make_reflection(vec(2, -1), Fraction(1, 2), G2)
    root = reflection_root(r)
    # up to scale
    assert root[0] * (-1) == root[1] * 2


def test_greedy_factorization_roundtrip():
    rot = mat(vec(0, -1, 0), vec(1, 0, 0), vec(0, 0, 1))
    from coxint.isometry import Isometry
    w = Isometry(rot, vec(0, 0, 1), G3)
    fac = greedy_factorization(w)
    assert len(fac) == reflection_length(w) == 4
    prod = identity_isometry(G3)
    for r in fac:
        assert is_reflection(r)
        prod = compose(prod, r)
    assert prod == w


def test_predict_product_trichotomy_examples():
    t = translation(vec(1, 0), G2)
    r_down = make_reflection(vec(1, 0), 0, G2)
    r_ell = make_reflection(vec(1, 0), Fraction(1, 4), G2)
    assert predict_product(t, r_down) in ("hyp_down", "ell_down")
    prod = compose(r_ell, t)
    assert reflection_length(prod) == reflection_length(t) - 1

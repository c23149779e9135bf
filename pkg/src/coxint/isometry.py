"""Euclidean isometries over exact rationals.

An isometry acts by x -> A.x + t where A is orthogonal for the ambient
GramForm.  The basic invariants (move-set, standard form U + mu, min-set,
elliptic/hyperbolic kind and reflection length) drive everything downstream:
poset comparisons, interval membership, the coarse grid rows.

Reflection length here is length in the full isometry group L of euclidean
space: dim(mov) for elliptics, dim(mov) + 2 for hyperbolics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .linalg import (
    AffSub,
    F0,
    GramForm,
    Mat,
    Vec,
    affine_sub,
    b_project,
    empty_sub,
    identity_mat,
    is_zero_vec,
    linear_sub,
    mat_cols,
    mat_inv,
    mat_mul,
    mat_sub,
    mat_transpose,
    mat_vec,
    smul,
    solve_linear,
    vadd,
    vsub,
    zero_vec,
)

ELLIPTIC = "elliptic"
HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class Isometry:
    mat: Mat
    trans: Vec
    gram: GramForm

    def __post_init__(self):
        if len(self.mat) != len(self.trans) or len(self.mat) != self.gram.n:
            raise ValueError("rank mismatch")

    @property
    def n(self) -> int:
        return len(self.trans)

    def apply(self, x: Sequence) -> Vec:
        return vadd(mat_vec(self.mat, tuple(Fraction(v) for v in x)), self.trans)

    def apply_vec(self, v: Sequence) -> Vec:
        return mat_vec(self.mat, tuple(Fraction(x) for x in v))

    def is_identity(self) -> bool:
        return self.mat == identity_mat(self.n) and is_zero_vec(self.trans)

    def check_orthogonal(self) -> bool:
        g = self.gram.entries
        return mat_mul(mat_transpose(self.mat), mat_mul(g, self.mat)) == g


def identity_isometry(g: GramForm) -> Isometry:
    return Isometry(identity_mat(g.n), zero_vec(g.n), g)


def translation(v: Sequence, g: GramForm) -> Isometry:
    return Isometry(identity_mat(g.n), tuple(Fraction(x) for x in v), g)


def compose(a: Isometry, b: Isometry) -> Isometry:
    """a then b read right-to-left: (a*b)(x) = a(b(x))."""
    if a.n != b.n:
        raise ValueError("rank mismatch")
    return Isometry(mat_mul(a.mat, b.mat), vadd(mat_vec(a.mat, b.trans), a.trans), a.gram)


def invert(a: Isometry) -> Isometry:
    minv = mat_inv(a.mat)
    return Isometry(minv, smul(-1, mat_vec(minv, a.trans)), a.gram)


def make_reflection(root: Sequence, offset, g: GramForm) -> Isometry:
    """The involution fixing the hyperplane {x : g(root, x) = offset}."""
    alpha = tuple(Fraction(x) for x in root)
    if is_zero_vec(alpha):
        raise ValueError("zero root")
    c = Fraction(offset)
    nn = g.norm2(alpha)
    # x -> x - 2 (g(a,x) - c)/g(a,a) * a
    galpha = mat_vec(g.entries, alpha)  # row functional g(a, .)
    n = g.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = Fraction(1) if i == j else F0
            row.append(e - 2 * alpha[i] * galpha[j] / nn)
        rows.append(tuple(row))
    trans = smul(2 * c / nn, alpha)
    return Isometry(tuple(rows), trans, g)


# ---------------------------------------------------------------------------
# basic invariants


@dataclass(frozen=True)
class BasicInvariants:
    mov: AffSub
    u_part: AffSub
    mu: Vec
    min: AffSub
    kind: str
    refl_len: int


@lru_cache(maxsize=262144)
def basic_invariants(w: Isometry) -> BasicInvariants:
    n = w.n
    a_minus_i = mat_sub(w.mat, identity_mat(n))
    u_part = linear_sub(mat_cols(a_minus_i), n, "V")
    mu = vsub(w.trans, b_project(w.trans, u_part, w.gram))
    mov = affine_sub(w.trans, u_part.directions, "V", n)
    kind = ELLIPTIC if is_zero_vec(mu) else HYPERBOLIC
    # min-set: solutions of (A - I)x = mu - t
    rhs = vsub(mu, w.trans)
    sol = solve_linear(a_minus_i, rhs, n)
    if sol is None:
        raise RuntimeError("internal error: empty min-set contradicts theory")
    point, nb = sol
    min_set = affine_sub(point, nb, "E", n)
    dim_mov = mov.dim
    refl_len = dim_mov if kind == ELLIPTIC else dim_mov + 2
    return BasicInvariants(mov, u_part, mu, min_set, kind, refl_len)


@lru_cache(maxsize=1048576)
def quick_len(w: Isometry) -> tuple[str, int]:
    """(kind, reflection length) from one elimination pass over the
    augmented system [A - I | -t]: the element is elliptic iff the system
    is consistent, and the rank of A - I is the move-set dimension."""
    from .linalg import rref
    n = w.n
    rows = tuple(
        tuple(w.mat[i][j] - (1 if i == j else 0) for j in range(n)) + (-w.trans[i],)
        for i in range(n)
    )
    reduced = rref(rows)
    degenerate = sum(1 for row in reduced if all(x == 0 for x in row[:n]))
    rank_main = len(reduced) - degenerate
    if degenerate == 0:
        return ELLIPTIC, rank_main
    return HYPERBOLIC, rank_main + 2


def move_set(w: Isometry) -> AffSub:
    return basic_invariants(w).mov


def standard_form(w: Isometry) -> tuple[AffSub, Vec]:
    inv = basic_invariants(w)
    return inv.u_part, inv.mu


def min_set(w: Isometry) -> AffSub:
    return basic_invariants(w).min


def fix_set(w: Isometry) -> AffSub:
    inv = basic_invariants(w)
    if inv.kind != ELLIPTIC:
        return empty_sub(w.n, "E")
    return inv.min


def kind(w: Isometry) -> str:
    return basic_invariants(w).kind


def reflection_length(w: Isometry) -> int:
    return basic_invariants(w).refl_len


def is_reflection(w: Isometry) -> bool:
    inv = basic_invariants(w)
    return inv.kind == ELLIPTIC and inv.refl_len == 1


def reflection_root(w: Isometry) -> Vec:
    """Root (up to sign/scale) of a reflection: spans its move-set."""
    inv = basic_invariants(w)
    if not (inv.kind == ELLIPTIC and inv.refl_len == 1):
        raise ValueError("not a reflection")
    return inv.u_part.directions[0]


# ---------------------------------------------------------------------------
# the product trichotomy

HYP_DOWN = "hyp_down"
ELL_DOWN = "ell_down"
HYP_UP = "hyp_up"


def predict_product(w: Isometry, r: Isometry) -> str:
    """Predict kind/length of r*w for hyperbolic w and reflection r.

    hyp_down: root in U, r*w hyperbolic of length k-1.
    ell_down: root outside U but mu in span(U, root), r*w elliptic, k-1.
    hyp_up:   otherwise, r*w hyperbolic of length k+1.
    """
    inv = basic_invariants(w)
    if inv.kind != HYPERBOLIC:
        raise ValueError("lemma applies to hyperbolic w only")
    alpha = reflection_root(r)
    u = inv.u_part
    if u.contains_point(alpha):
        return HYP_DOWN
    u_alpha = linear_sub(u.directions + (alpha,), w.n)
    if u_alpha.contains_point(inv.mu):
        return ELL_DOWN
    return HYP_UP


def greedy_factorization(w: Isometry) -> list[Isometry]:
    """A minimal-length reflection factorization of w in the full isometry
    group, found by greedy length descent.  Returns reflections whose
    product (left to right, under ``compose``) is w."""
    g = w.gram
    out: list[Isometry] = []
    cur = w
    while True:
        inv = basic_invariants(cur)
        if inv.refl_len == 0:
            break
        if inv.kind == HYPERBOLIC:
            if inv.u_part.dim > 0:
                alpha = inv.u_part.directions[0]
            else:
                # pure translation: kill it with a reflection along mu
                alpha = inv.mu
            # reflection through a min-set point keeps things tidy
            p = inv.min.basepoint
            offset = g.bilin(alpha, p)
        else:
            alpha = inv.u_part.directions[0]
            p = inv.min.basepoint
            offset = g.bilin(alpha, p)
        r = make_reflection(alpha, offset, g)
        nxt = compose(r, cur)
        assert basic_invariants(nxt).refl_len == inv.refl_len - 1
        out.append(r)
        cur = nxt
    # each step multiplied on the left, so w = out[0] * out[1] * ... as-is
    return out

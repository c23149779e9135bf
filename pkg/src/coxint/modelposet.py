"""The global poset of invariants and the order predicate on it.

Elements are tagged affine subspaces: ``h^M`` for a nonlinear affine
subspace M of the vector space V (the move-set of a hyperbolic isometry)
and ``e^B`` for an affine subspace B of the point space E (the fix-set of
an elliptic).  The order rules:

    h^M >= h^M'  iff  M contains M'
    e^B >= e^B'  iff  B is contained in B'
    h^M >  e^B   iff  perp(M) is contained in Dir(B)
    no e^B is above any h^M

``perp(M)`` is the orthogonal complement of the linear span of the points
of M.  Taking the span (rather than the direction space) is forced: a
reflection sits below the translation it generates with a parallel copy of
itself, and only the span reading makes that comparison come out true.

The poset is never materialized; only comparisons are exposed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    AffSub,
    GramForm,
    b_orth_complement,
    linear_sub,
    span_of_points,
    vec,
)
from .isometry import (
    HYPERBOLIC,
    Isometry,
    basic_invariants,
    make_reflection,
    compose,
    translation,
)

H = "H"
E = "E"


@dataclass(frozen=True)
class GlobalPosetElement:
    tag: str  # "H" or "E"
    subspace: AffSub

    def __post_init__(self):
        if self.tag not in (H, E):
            raise ValueError("tag must be H or E")
        if self.tag == H and self.subspace.is_linear:
            raise ValueError("h-elements require a nonlinear affine subspace")


def inv(u: Isometry) -> GlobalPosetElement:
    """Invariant map: h^Mov(u) for hyperbolics, e^Fix(u) for elliptics."""
    bi = basic_invariants(u)
    if bi.kind == HYPERBOLIC:
        return GlobalPosetElement(H, bi.mov)
    return GlobalPosetElement(E, bi.min)


def global_leq(a: GlobalPosetElement, b: GlobalPosetElement, g: GramForm) -> bool:
    """a <= b in the global poset."""
    if a.subspace.n != b.subspace.n:
        raise ValueError("rank mismatch")
    if a.tag == H and b.tag == H:
        return b.subspace.contains(a.subspace)
    if a.tag == E and b.tag == E:
        return a.subspace.contains(b.subspace)
    if a.tag == E and b.tag == H:
        perp = b_orth_complement(span_of_points(b.subspace), g)
        dir_b = linear_sub(a.subspace.directions, a.subspace.n)
        return dir_b.contains(perp)
    # a hyperbolic, b elliptic: never below
    return False


def global_lt(a: GlobalPosetElement, b: GlobalPosetElement, g: GramForm) -> bool:
    return a != b and global_leq(a, b, g)


def bowtie_witness():
    """Four isometries below a rank-3 corkscrew exhibiting a bowtie.

    Returns (corkscrew, (e1, e2), (h1, h2), gram): two horizontal
    reflections with parallel vertical fixed planes and two glide
    reflections whose move-sets are parallel lines inside Mov(corkscrew).
    Each glide is a minimal upper bound of both reflections, the glides
    are incomparable, and so are the reflections.
    """
    g = GramForm.standard(3)
    # quarter turn about the z-axis followed by a unit z-translation
    rot = (
        vec(0, -1, 0),
        vec(1, 0, 0),
        vec(0, 0, 1),
    )
    w = Isometry(rot, vec(0, 0, 1), g)
    r1 = make_reflection(vec(1, 0, 0), 0, g)   # plane x = 0
    r2 = make_reflection(vec(1, 0, 0), 1, g)   # plane x = 1
    # glide: reflect in plane x = c then translate by (0, c, 1)
    def glide(c) -> Isometry:
        refl = make_reflection(vec(1, 0, 0), Fraction(c), g)
        return compose(translation(vec(0, c, 1), g), refl)

    h1 = glide(0)
    h2 = glide(1)
    return w, (r1, r2), (h1, h2), g

"""Root data and Coxeter elements for the irreducible euclidean types.

Coordinates live in the simple-root basis, so every reflection matrix has
integer (Cartan) entries and the inner product is the symmetrized Cartan
matrix -- exact rationals even for the types whose orthonormal models need
square roots.

The affine generator is the reflection in {x : <highest_root, x> = 1}; the
translation subgroup of the resulting affine Weyl group is the coroot
lattice, which in these coordinates is the set of vectors whose i-th
coordinate times g_ii/2 is an integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

from .linalg import (
    AffSub,
    F0,
    F1,
    GramForm,
    Vec,
    mat_vec,
    smul,
    vadd,
    vec,
    vsub,
    zero_vec,
    solve_linear,
)
from .isometry import (
    ELLIPTIC,
    HYPERBOLIC,
    Isometry,
    basic_invariants,
    compose,
    identity_isometry,
    invert,
    make_reflection,
    translation,
)

VALID_TYPES = ("A", "B", "C", "D", "E", "F", "G")


# ---------------------------------------------------------------------------
# diagram data


@dataclass(frozen=True)
class DynkinDiagram:
    """Extended diagram: nodes 0..n with 0 the extending (white) node."""

    type_letter: str
    rank: int
    edges: tuple[tuple[int, int], ...]  # undirected, no bond multiplicities needed
    marked_white: int
    marked_shaded: int


def _type_data(letter: str, n: int):
    """Cartan matrix a, symmetrizer d, highest-root coefficients, extended
    edges, shaded node.  Indexing follows the standard (Bourbaki) numbering.
    """
    def path_cartan(n):
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        return a

    if letter == "A" and n == 1:
        return [[2]], [F1], [1], [(0, 1)], 1
    if letter == "A":
        a = path_cartan(n)
        d = [F1] * n
        hr = [1] * n
        edges = [(i, i + 1) for i in range(1, n)] + [(0, 1), (0, n)]
        return a, d, hr, edges, 1
    if letter == "B":
        if n < 2:
            raise ValueError("type B needs rank >= 2")
        a = path_cartan(n)
        a[n - 2][n - 1] = -1
        a[n - 1][n - 2] = -2
        d = [F1] * (n - 1) + [Fraction(1, 2)]
        hr = [1] + [2] * (n - 1)
        edges = [(i, i + 1) for i in range(1, n)] + [(0, 2 if n > 2 else 1)]
        return a, d, hr, edges, n - 1
    if letter == "C":
        if n < 2:
            raise ValueError("type C needs rank >= 2")
        a = path_cartan(n)
        a[n - 2][n - 1] = -2
        a[n - 1][n - 2] = -1
        d = [F1] * (n - 1) + [Fraction(2)]
        hr = [2] * (n - 1) + [1]
        edges = [(i, i + 1) for i in range(1, n)] + [(0, 1)]
        return a, d, hr, edges, n
    if letter == "D":
        if n < 4:
            raise ValueError("type D needs rank >= 4")
        # path 1..n-1 with node n also attached to n-2
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in [(k, k + 1) for k in range(n - 2)] + [(n - 3, n - 1)]:
            a[i][j] = a[j][i] = -1
        d = [F1] * n
        hr = [1] + [2] * (n - 3) + [1, 1]
        edges = [(k + 1, k + 2) for k in range(n - 2)] + [(n - 2, n), (0, 2)]
        return a, d, hr, edges, n - 2
    if letter == "G" and n == 2:
        a = [[2, -3], [-1, 2]]
        d = [F1, Fraction(3)]
        hr = [3, 2]
        return a, d, hr, [(1, 2), (0, 2)], 2
    if letter == "F" and n == 4:
        a = path_cartan(4)
        a[1][2] = -1  # alpha2 long, alpha3 short
        a[2][1] = -2
        d = [F1, F1, Fraction(1, 2), Fraction(1, 2)]
        hr = [2, 3, 4, 2]
        return a, d, hr, [(1, 2), (2, 3), (3, 4), (0, 1)], 2
    if letter == "E" and n in (6, 7, 8):
        # nodes: 2 hangs off 4; the rest form the path 1-3-4-5-...-n
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        pairs = [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)] + [(2, 4)]
        for i, j in pairs:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        d = [F1] * n
        hr = {
            6: [1, 2, 2, 3, 2, 1],
            7: [2, 2, 3, 4, 3, 2, 1],
            8: [2, 3, 4, 6, 5, 4, 3, 2],
        }[n]
        ext = {6: 2, 7: 1, 8: 8}[n]
        edges = [(i, j) for i, j in pairs] + [(0, ext)]
        return a, d, hr, edges, 4
    raise ValueError(f"invalid euclidean type {letter}~{n}")


def parse_type(name: str) -> tuple[str, int]:
    """Parse names of the form "G~2", "E~8", "A~3"."""
    try:
        letter, rank = name.split("~")
        rank = int(rank)
    except ValueError:
        raise ValueError(f"bad type name {name!r}; expected e.g. 'G~2'") from None
    if letter not in VALID_TYPES:
        raise ValueError(f"unknown type letter {letter!r}")
    return letter, rank


# ---------------------------------------------------------------------------
# contexts


@dataclass(frozen=True)
class CoxeterContext:
    name: str
    diagram: DynkinDiagram
    gram: GramForm
    simple_roots: tuple[Vec, ...]
    highest_root: Vec
    simple_reflections: tuple[Isometry, ...]  # index 0 is the affine one
    coxeter_element: Isometry
    coxeter_choice: Optional[tuple[int, int]]
    roots: tuple[Vec, ...]
    root_lines: tuple[Vec, ...]  # one representative per +/- pair
    axis: AffSub
    axis_dir: Vec
    period: Vec

    @property
    def rank(self) -> int:
        return self.gram.n

    @property
    def w(self) -> Isometry:
        return self.coxeter_element

    def coroot_coord_ok(self, v: Vec) -> bool:
        """Is v in the translation lattice (coroot lattice) of the group?"""
        g = self.gram.entries
        return all((x * g[i][i] / 2).denominator == 1 for i, x in enumerate(v))

    def is_horizontal_root(self, alpha: Vec) -> bool:
        return self.gram.bilin(alpha, self.axis_dir) == 0


def _root_orbit(simple_linear: Sequence[Isometry], simple_roots, n) -> list[Vec]:
    seen = set(simple_roots) | {smul(-1, a) for a in simple_roots}
    frontier = list(seen)
    while frontier:
        new = []
        for v in frontier:
            for s in simple_linear:
                img = s.apply_vec(v)
                if img not in seen:
                    seen.add(img)
                    new.append(img)
        frontier = new
    return sorted(seen)


def _canon_line(alpha: Vec) -> Vec:
    for x in alpha:
        if x != 0:
            return alpha if x > 0 else smul(-1, alpha)
    raise ValueError("zero vector has no line")


def build_context(name: str, coxeter_choice: Optional[tuple[int, int]] = None,
                  ordering: Optional[Sequence[int]] = None) -> CoxeterContext:
    letter, n = parse_type(name)
    if coxeter_choice is not None and letter != "A":
        raise ValueError("coxeter_choice only applies to type A")
    a, d, hr, edges, shaded = _type_data(letter, n)
    gram = GramForm(tuple(tuple(d[i] * a[i][j] for j in range(n)) for i in range(n)))
    simple_roots = tuple(tuple(F1 if i == j else F0 for j in range(n)) for i in range(n))
    highest_root = tuple(Fraction(c) for c in hr)

    refl = [make_reflection(highest_root, 1, gram)]
    refl += [make_reflection(e, 0, gram) for e in simple_roots]

    if letter == "A" and n > 1:
        if coxeter_choice is None:
            coxeter_choice = (1, n)
        p, q = coxeter_choice
        if p < 1 or q < 1 or p + q != n + 1:
            raise ValueError(f"bad bipartition {coxeter_choice} for A~{n}")
        shaded = p
        order = list(range(p)) + list(range(n, p - 1, -1))
    else:
        coxeter_choice = None
        order = list(range(n + 1))
    if ordering is not None:
        order = list(ordering)
        if sorted(order) != list(range(n + 1)):
            raise ValueError("ordering must be a permutation of the generators")
    w = reduce(compose, [refl[i] for i in order])

    bi = basic_invariants(w)
    if bi.kind != HYPERBOLIC or bi.refl_len != n + 1 or bi.min.dim != 1:
        raise RuntimeError("coxeter element does not have the expected invariants")
    mu = bi.mu
    axis = bi.min

    roots = _root_orbit(refl[1:], simple_roots, n)
    root_lines = sorted({_canon_line(r) for r in roots})

    # smallest coroot-lattice vector parallel to the axis direction
    coeffs = [mu[i] * gram.entries[i][i] / 2 for i in range(n)]
    denlcm = math.lcm(*[c.denominator for c in coeffs])
    ints = [int(c * denlcm) for c in coeffs]
    g = math.gcd(*[abs(x) for x in ints])
    ints = [x // g for x in ints]
    period = tuple(Fraction(2 * x, int(gram.entries[i][i])) for i, x in enumerate(ints))
    if gram.bilin(period, mu) < 0:
        period = smul(-1, period)

    diagram = DynkinDiagram(letter, n, tuple(sorted(tuple(sorted(e)) for e in edges)),
                            0, shaded)
    return CoxeterContext(
        name=name,
        diagram=diagram,
        gram=gram,
        simple_roots=simple_roots,
        highest_root=highest_root,
        simple_reflections=tuple(refl),
        coxeter_element=w,
        coxeter_choice=coxeter_choice,
        roots=tuple(roots),
        root_lines=tuple(root_lines),
        axis=axis,
        axis_dir=mu,
        period=period,
    )


def coxeter_element(ctx: CoxeterContext, ordering: Optional[Sequence[int]] = None) -> Isometry:
    if ordering is None:
        return ctx.coxeter_element
    if sorted(ordering) != list(range(ctx.rank + 1)):
        raise ValueError("ordering must be a permutation of the generators")
    return reduce(compose, [ctx.simple_reflections[i] for i in ordering])


# ---------------------------------------------------------------------------
# reflection length in W (certified against the ambient-group length)


def l_length(x: Isometry) -> int:
    from .isometry import quick_len
    return quick_len(x)[1]


_cert_cache: dict[Isometry, bool] = {}


def w_length_matches(x: Isometry, ctx: CoxeterContext) -> bool:
    """True iff the reflection length of x inside W equals its length in
    the full isometry group.

    Elliptic elements of an affine Coxeter group always satisfy this (they
    live in the finite reflection group stabilizing a fixed point).  For
    hyperbolics we search for a length-reducing reflection of W, which by
    the product trichotomy exists iff some root lies in the linear part U
    of the move-set (staying hyperbolic) or some root alpha outside U has
    mu inside span(U, alpha) (dropping to an elliptic).
    """
    from .isometry import quick_len
    if quick_len(x)[0] == ELLIPTIC:
        return True
    cached = _cert_cache.get(x)
    if cached is not None:
        return cached
    bi = basic_invariants(x)
    rows = bi.u_part.directions  # reduced-echelon basis of U
    pivots = [next(j for j, c in enumerate(row) if c != 0) for row in rows]

    def residue(v):
        v = list(v)
        for row, p in zip(rows, pivots):
            c = v[p]
            if c != 0:
                for j in range(len(v)):
                    v[j] -= c * row[j]
        return v

    mu_res = residue(bi.mu)
    j0 = next(j for j, c in enumerate(mu_res) if c != 0)
    in_u = []
    ok = False
    for alpha in ctx.root_lines:
        a_res = residue(alpha)
        nz = [j for j, c in enumerate(a_res) if c != 0]
        if not nz:
            in_u.append(alpha)
        else:
            # ell_down iff the residues of mu and alpha are parallel
            c = a_res[j0]
            if c != 0 and all(a_res[j] * mu_res[j0] == mu_res[j] * c
                              for j in range(len(a_res))):
                ok = True
                break
    if not ok:
        gram = ctx.gram
        for alpha in in_u:
            r = make_reflection(alpha, 0, gram)
            if w_length_matches(compose(r, x), ctx):
                ok = True
                break
    _cert_cache[x] = ok
    return ok


def interval_member(u: Isometry, ctx: CoxeterContext) -> bool:
    """Exact membership test for the interval [1, w] inside W."""
    w = ctx.coxeter_element
    lu = l_length(u)
    v = compose(invert(u), w)
    if lu + l_length(v) != ctx.rank + 1:
        return False
    return w_length_matches(u, ctx) and w_length_matches(v, ctx)


# ---------------------------------------------------------------------------
# alcove geometry


@dataclass(frozen=True)
class AxialData:
    axial_simplices: tuple[tuple[Vec, ...], ...]  # vertex tuples, one period
    axial_vertices: tuple[Vec, ...]               # deduplicated mod period
    all_vertices: tuple[Vec, ...]                 # every vertex of the walk


def _fundamental_vertices(ctx: CoxeterContext) -> list[Vec]:
    n = ctx.rank
    g = ctx.gram
    verts = [zero_vec(n)]
    for i in range(n):
        rows = [mat_vec(g.entries, ctx.simple_roots[j]) for j in range(n) if j != i]
        rows.append(mat_vec(g.entries, ctx.highest_root))
        rhs = [F0] * (n - 1) + [F1]
        sol = solve_linear(rows, rhs, n)
        assert sol is not None and not sol[1]
        verts.append(sol[0])
    return verts


def _locate_alcove(ctx: CoxeterContext, pa: Vec, pb: Vec) -> Isometry:
    """Alcove containing the perturbed point pa + eps*pb (exact, first-order
    lexicographic comparisons)."""
    g = ctx.gram
    u = identity_isometry(g)
    pa, pb = pa, pb
    guard = 0
    while True:
        guard += 1
        if guard > 100000:
            raise RuntimeError("alcove location failed to terminate")
        moved = False
        for i in range(ctx.rank + 1):
            if i == 0:
                va = 1 - g.bilin(ctx.highest_root, pa)
                vb = -g.bilin(ctx.highest_root, pb)
            else:
                alpha = ctx.simple_roots[i - 1]
                va = g.bilin(alpha, pa)
                vb = g.bilin(alpha, pb)
            if va < 0 or (va == 0 and vb < 0):
                s = ctx.simple_reflections[i]
                pa = s.apply(pa)
                pb = s.apply_vec(pb)
                u = compose(u, s)
                moved = True
                break
            if va == 0 and vb == 0:
                raise RuntimeError("axis is contained in a wall; degenerate position")
        if not moved:
            return u


def axial_data(ctx: CoxeterContext) -> AxialData:
    """Walk the alcoves crossed by the axis over one period."""
    g = ctx.gram
    n = ctx.rank
    base = ctx.axis.basepoint
    mu = ctx.axis_dir
    fund = _fundamental_vertices(ctx)
    t_per = translation(ctx.period, g)

    def alcove_vertices(u: Isometry) -> tuple[Vec, ...]:
        return tuple(sorted(u.apply(v) for v in fund))

    def walls(u: Isometry):
        uinv = invert(u)
        pa0 = uinv.apply(base)
        slope = uinv.apply_vec(mu)
        out = []
        for i in range(n + 1):
            if i == 0:
                f0 = 1 - g.bilin(ctx.highest_root, pa0)
                fs = -g.bilin(ctx.highest_root, slope)
            else:
                alpha = ctx.simple_roots[i - 1]
                f0 = g.bilin(alpha, pa0)
                fs = g.bilin(alpha, slope)
            out.append((f0, fs))
        return out

    s_cur = F0
    cur = _locate_alcove(ctx, base, mu)
    first = cur
    simplices = []
    guard = 0
    while True:
        guard += 1
        if guard > 200000:
            raise RuntimeError("axial walk failed to close up")
        simplices.append(alcove_vertices(cur))
        # earliest wall crossing after s_cur
        s_exit = None
        for f0, fs in walls(cur):
            if fs < 0:
                s_hit = -f0 / fs  # f0 + s*fs = 0
                if s_hit > s_cur and (s_exit is None or s_hit < s_exit):
                    s_exit = s_hit
        if s_exit is None:
            raise RuntimeError("axis never exits the current alcove")
        s_cur = s_exit
        pt = vadd(base, smul(s_cur, mu))
        cur = _locate_alcove(ctx, pt, mu)
        if cur == compose(t_per, first):
            break

    all_vertices = sorted({v for simplex in simplices for v in simplex})
    canon = sorted({canon_mod_period(v, ctx.period) for v in all_vertices})
    return AxialData(tuple(simplices), tuple(canon), tuple(all_vertices))


def canon_mod_period(v: Vec, period: Vec) -> Vec:
    """Canonical representative of v modulo integer multiples of period."""
    p = _canon_line(period)
    j = next(i for i, x in enumerate(p) if x != 0)
    m = math.floor(v[j] / p[j])
    return vsub(v, smul(m, p))


# ---------------------------------------------------------------------------
# reflection generators of the interval


@dataclass(frozen=True)
class ReflectionFamily:
    """All reflections r_{alpha, base_offset + m*step}, m integer."""

    root: Vec
    base_offset: Fraction
    step: Fraction

    def member(self, m: int, gram: GramForm) -> Isometry:
        return make_reflection(self.root, self.base_offset + m * self.step, gram)


@dataclass(frozen=True)
class IntervalReflections:
    r_h: tuple[Isometry, ...]
    r_h_data: tuple[tuple[Vec, Fraction], ...]  # (root line, offset)
    r_v_families: tuple[ReflectionFamily, ...]
    translations: tuple[Isometry, ...]
    translation_vectors: tuple[Vec, ...]


def interval_reflections(ctx: CoxeterContext, axial: Optional[AxialData] = None) -> IntervalReflections:
    if axial is None:
        axial = axial_data(ctx)
    g = ctx.gram
    mu = ctx.axis_dir
    horiz: set[tuple[Vec, Fraction]] = set()
    vert: dict[tuple[Vec, Fraction], Fraction] = {}
    for alpha in ctx.root_lines:
        pairing = g.bilin(alpha, mu)
        if pairing == 0:
            for v in axial.axial_vertices:
                k = g.bilin(alpha, v)
                if k.denominator == 1:
                    horiz.add((alpha, k))
        else:
            step = abs(g.bilin(alpha, ctx.period))
            assert step != 0 and step.denominator == 1
            offsets = set()
            for v in axial.all_vertices:
                k = g.bilin(alpha, v)
                if k.denominator == 1:
                    offsets.add(k % step)
            for k in sorted(offsets):
                key = (alpha, k)
                if key not in vert:
                    vert[key] = step
    r_h_data = tuple(sorted(horiz))
    r_h = tuple(make_reflection(a, k, g) for a, k in r_h_data)
    fams = tuple(ReflectionFamily(a, k, step) for (a, k), step in sorted(vert.items()))

    trans = []
    tvecs = []
    for alpha in ctx.root_lines:
        pairing = g.bilin(alpha, mu)
        if pairing == 0:
            continue
        lam = smul(g.norm2(mu) / pairing, alpha)
        if not ctx.coroot_coord_ok(lam):
            continue
        t = translation(lam, g)
        if interval_member(t, ctx):
            trans.append(t)
            tvecs.append(lam)
    return IntervalReflections(r_h, r_h_data, fams, tuple(trans), tuple(tvecs))

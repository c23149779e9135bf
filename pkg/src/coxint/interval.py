"""The reflection interval below a Coxeter element: construction, coarse
grid, lattice checking, presentation emission, exports.

The interval [1, w] in the group W consists of the elements on geodesics
from 1 to w when every reflection has weight 1.  Its coarse structure has
three rows determined by the elliptic/hyperbolic kinds of u and u^-1 w:

    bottom: u elliptic, u^-1 w hyperbolic (finite, lengths 0..n-1)
    middle: both elliptic (infinite families modulo the period translation)
    top:    u hyperbolic, u^-1 w elliptic (finite, lengths 2..n+1)

Bottom-row elements factor entirely into horizontal reflections, so a BFS
over R_H enumerates them; the top row is the image of the bottom row under
u -> u^-1 w; middle-row families are enumerated through canonical
representatives with vertical generators restricted to an offset window
(widening the window until the family count is stable).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .linalg import Vec, affine_sub, is_zero_vec, smul, vsub, zero_vec
from .isometry import (
    ELLIPTIC,
    HYPERBOLIC,
    Isometry,
    basic_invariants,
    compose,
    identity_isometry,
    invert,
    is_reflection,
    quick_len,
    translation,
)
from .coxeter import (
    CoxeterContext,
    IntervalReflections,
    interval_member,
    interval_reflections,
    l_length,
    w_length_matches,
)

BOTTOM = "bottom"
MIDDLE = "middle"
TOP = "top"


@dataclass(frozen=True)
class WeightedGenSet:
    generators: tuple[tuple[Isometry, Fraction], ...]
    closure_tag: str

    def __post_init__(self):
        if any(wt <= 0 for _, wt in self.generators):
            raise ValueError("weights must be positive")


@dataclass(frozen=True)
class IntervalElem:
    rep: Isometry
    family_size_tag: str  # "singleton" | "infinite-family"
    row: str
    column: int

    @property
    def length(self) -> int:
        return l_length(self.rep)


@dataclass
class IntervalPoset:
    ctx: CoxeterContext
    refl: IntervalReflections
    bottom: list[Isometry]
    middle_reps: list[Isometry]
    top: list[Isometry]
    window: int

    @property
    def n(self) -> int:
        return self.ctx.rank

    @property
    def w(self) -> Isometry:
        return self.ctx.coxeter_element

    def elements(self) -> list[IntervalElem]:
        out = []
        for u in self.bottom:
            out.append(IntervalElem(u, "singleton", BOTTOM, l_length(u)))
        for u in self.middle_reps:
            out.append(IntervalElem(u, "infinite-family", MIDDLE, l_length(u) - 1))
        for u in self.top:
            out.append(IntervalElem(u, "singleton", TOP, l_length(u) - 2))
        return out


# ---------------------------------------------------------------------------
# family canonicalization


from functools import lru_cache


@lru_cache(maxsize=65536)
def _shift_of_cached(period: Vec, fix_dirs: tuple[Vec, ...]) -> Vec:
    return affine_sub(period, fix_dirs).basepoint


def _shift_of(ctx: CoxeterContext, fix_dirs: tuple[Vec, ...]) -> Vec:
    """How the canonical fix-set basepoint moves under conjugation by the
    period translation: the period reduced against the direction pivots."""
    return _shift_of_cached(ctx.period, fix_dirs)


def conj_by_period(u: Isometry, ctx: CoxeterContext, m: int) -> Isometry:
    if m == 0:
        return u
    shift = smul(m, ctx.period)
    # t_{mP} u t_{-mP}: same linear part, translation t + (I - A) mP
    from .linalg import vadd
    trans = vadd(u.trans, vsub(shift, u.apply_vec(shift)))
    return Isometry(u.mat, trans, u.gram)


def _min_set_fast(u: Isometry):
    """(basepoint, directions) of the min-set, one linear solve for
    elliptics, falling back to the full invariants for hyperbolics."""
    from .linalg import solve_linear
    kind, _ = quick_len(u)
    if kind == ELLIPTIC:
        n = u.n
        rows = tuple(tuple(u.mat[i][j] - (1 if i == j else 0) for j in range(n))
                     for i in range(n))
        sol = solve_linear(rows, tuple(-x for x in u.trans), n)
        sub = affine_sub(sol[0], sol[1])
        return sub.basepoint, sub.directions
    bi = basic_invariants(u)
    return bi.min.basepoint, bi.min.directions


def canonical_rep(u: Isometry, ctx: CoxeterContext) -> Isometry:
    """Representative of u's period-conjugation family: fix-set basepoint
    shifted into a half-open fundamental window.  Elements whose invariant
    set is period-invariant are their own (singleton) representatives."""
    b, dirs = _min_set_fast(u)
    rho = _shift_of(ctx, dirs)
    if is_zero_vec(rho):
        return u
    j = next(i for i, x in enumerate(rho) if x != 0)
    import math
    m = -math.floor(b[j] / rho[j])
    return conj_by_period(u, ctx, m)


def family_members(u: Isometry, ctx: CoxeterContext, m_range) -> list[Isometry]:
    _, dirs = _min_set_fast(u)
    if is_zero_vec(_shift_of(ctx, dirs)):
        return [u]
    return [conj_by_period(u, ctx, m) for m in m_range]


# ---------------------------------------------------------------------------
# construction


def reflection_generators(ctx: CoxeterContext,
                          refl: Optional[IntervalReflections] = None) -> WeightedGenSet:
    if refl is None:
        refl = interval_reflections(ctx)
    gens = [(r, Fraction(1)) for r in refl.r_h]
    gens += [(f.member(0, ctx.gram), Fraction(1)) for f in refl.r_v_families]
    return WeightedGenSet(tuple(gens), "reflections-of-W")


def build_interval(ctx: CoxeterContext,
                   gens: Optional[WeightedGenSet] = None,
                   window: int = 2,
                   with_middle: bool = True) -> IntervalPoset:
    """Enumerate the interval below ctx.coxeter_element inside W."""
    refl = interval_reflections(ctx)
    if gens is not None and gens.closure_tag != "reflections-of-W":
        raise ValueError("build_interval handles the reflection generating set; "
                         "see the crystal module for the other closures")
    n = ctx.rank
    w = ctx.coxeter_element

    # bottom row: BFS over horizontal reflections
    bottom = [identity_isometry(ctx.gram)]
    seen = {bottom[0]}
    frontier = [bottom[0]]
    while frontier:
        new = []
        for u in frontier:
            lu = l_length(u)
            for r in refl.r_h:
                v = compose(r, u)
                if v in seen:
                    continue
                kv, lv = quick_len(v)
                if lv != lu + 1:
                    continue
                seen.add(v)
                if kv != ELLIPTIC:
                    continue
                if interval_member(v, ctx):
                    bottom.append(v)
                    new.append(v)
        frontier = new
    if not any(l_length(u) == n - 1 for u in bottom):
        raise RuntimeError("w not generated")

    top = [compose(invert(u), w) for u in bottom]

    middle: list[Isometry] = []
    if with_middle:
        vert_gens = [f.member(m, ctx.gram)
                     for f in refl.r_v_families
                     for m in range(-window, window + 1)]
        all_gens = list(refl.r_h) + vert_gens
        # each new element is a certified chain extended by one W-reflection
        # and its complement is elliptic, so no length certification is
        # needed beyond the additivity checks
        mid_seen: set[Isometry] = set()
        raw_seen: set[tuple[int, Isometry]] = set()
        frontier = list(bottom)
        while frontier:
            new = []
            for u in frontier:
                lu = l_length(u)
                if lu > n:
                    continue
                for r in all_gens:
                    v = compose(r, u)
                    if (lu, v) in raw_seen:
                        continue
                    raw_seen.add((lu, v))
                    if quick_len(v) != (ELLIPTIC, lu + 1):
                        continue
                    c = canonical_rep(v, ctx)
                    if c in mid_seen:
                        continue
                    mid_seen.add(c)
                    comp = compose(invert(c), w)
                    if quick_len(comp) != (ELLIPTIC, n - lu):
                        continue
                    middle.append(c)
                    new.append(c)
            frontier = new

    bottom.sort(key=lambda u: (l_length(u), u.mat, u.trans))
    middle.sort(key=lambda u: (l_length(u), u.mat, u.trans))
    top.sort(key=lambda u: (l_length(u), u.mat, u.trans))
    return IntervalPoset(ctx, refl, bottom, middle, top, window)


def _row_of(u: Isometry, ctx: CoxeterContext) -> str:
    ku = quick_len(u)[0]
    kv = quick_len(compose(invert(u), ctx.coxeter_element))[0]
    if ku == ELLIPTIC and kv == HYPERBOLIC:
        return BOTTOM
    if ku == ELLIPTIC and kv == ELLIPTIC:
        return MIDDLE
    if ku == HYPERBOLIC and kv == ELLIPTIC:
        return TOP
    raise RuntimeError("impossible row: hyperbolic on both sides")


# ---------------------------------------------------------------------------
# coarse grid


@dataclass(frozen=True)
class CoarseGrid:
    rows: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]  # bottom, middle, top

    def pretty(self) -> str:
        labels = ["bottom", "middle", "top   "]
        return "\n".join(f"{lab}: {list(row)}"
                         for lab, row in zip(reversed(labels), reversed(self.rows)))


def coarse_grid(p: IntervalPoset) -> CoarseGrid:
    n = p.n
    b = [0] * n
    m = [0] * n
    t = [0] * n
    for u in p.bottom:
        b[l_length(u)] += 1
    for u in p.middle_reps:
        m[l_length(u) - 1] += 1
    for u in p.top:
        t[l_length(u) - 2] += 1
    grid = CoarseGrid((tuple(b), tuple(m), tuple(t)))
    assert grid.rows[0][::-1] == grid.rows[2], "grid symmetry violated"
    return grid


# ---------------------------------------------------------------------------
# order relation and lattice checking


def interval_leq(u: Isometry, v: Isometry, ctx: CoxeterContext) -> bool:
    """u <= v for two members of the interval."""
    if u == v:
        return True
    d = compose(invert(u), v)
    if l_length(u) + l_length(d) != l_length(v):
        return False
    return w_length_matches(d, ctx)


@dataclass(frozen=True)
class LatticeVerdict:
    is_lattice: bool
    witness: Optional[tuple[Isometry, Isometry, Isometry, Isometry]]  # (a, b, m1, m2)
    witness_kind: Optional[str]  # "join" or "meet"


def _minimals(cands: list[Isometry], ctx: CoxeterContext) -> list[Isometry]:
    out = []
    for c in cands:
        if not any(d != c and interval_leq(d, c, ctx) for d in cands):
            out.append(c)
    return out


def _maximals(cands: list[Isometry], ctx: CoxeterContext) -> list[Isometry]:
    out = []
    for c in cands:
        if not any(d != c and interval_leq(c, d, ctx) for d in cands):
            out.append(c)
    return out


def _all_candidates(p: IntervalPoset, expand: int) -> list[Isometry]:
    out = list(p.bottom) + list(p.top)
    for u in p.middle_reps:
        out.extend(family_members(u, p.ctx, range(-expand, expand + 1)))
    return out


def is_lattice(p: IntervalPoset, expand: int = 2,
               middle_samples: int = 0,
               rng_seed: int = 0) -> LatticeVerdict:
    """Check joins of bottom-row pairs and meets of top-row pairs.

    Failures of the lattice property localize to these finite rows; a pair
    with two or more incomparable minimal upper bounds (dually, maximal
    lower bounds) is returned as a bowtie witness.  Optionally spot-check
    joins of random middle-row representative pairs.
    """
    ctx = p.ctx
    cands = _all_candidates(p, expand)

    up: dict[Isometry, set] = {}
    down: dict[Isometry, set] = {}

    def get_up(a):
        if a not in up:
            up[a] = {c for c in cands if interval_leq(a, c, ctx)}
        return up[a]

    def get_down(a):
        if a not in down:
            down[a] = {c for c in cands if interval_leq(c, a, ctx)}
        return down[a]

    def join_bowtie(a, b):
        mins = _minimals(sorted(get_up(a) & get_up(b), key=str), ctx)
        return mins[:2] if len(mins) >= 2 else None

    def meet_bowtie(a, b):
        maxs = _maximals(sorted(get_down(a) & get_down(b), key=str), ctx)
        return maxs[:2] if len(maxs) >= 2 else None

    for a, b in itertools.combinations(p.bottom, 2):
        hit = join_bowtie(a, b)
        if hit is not None:
            return LatticeVerdict(False, (a, b, hit[0], hit[1]), "join")
    for a, b in itertools.combinations(p.top, 2):
        hit = meet_bowtie(a, b)
        if hit is not None:
            return LatticeVerdict(False, (a, b, hit[0], hit[1]), "meet")

    if middle_samples:
        import random
        rng = random.Random(rng_seed)
        mids = [c for c in cands if _row_of(c, ctx) == MIDDLE]
        for _ in range(middle_samples):
            if len(mids) < 2:
                break
            a, b = rng.sample(mids, 2)
            ub = [c for c in cands
                  if interval_leq(a, c, ctx) and interval_leq(b, c, ctx)]
            mins = _minimals(ub, ctx)
            hit = mins[:2] if len(mins) >= 2 else None
            if hit is not None:
                raise RuntimeError("bowtie found among middle-row elements; "
                                   "contradicts the localization of failures")
    return LatticeVerdict(True, None, None)


# ---------------------------------------------------------------------------
# covering edges and presentations


def _edge_label(r: Isometry, p: IntervalPoset) -> str:
    """Stable label for a covering-reflection: horizontal reflections get
    their own names; vertical ones are named by family plus shift."""
    from .isometry import basic_invariants as bi
    ctx = p.ctx
    if not is_reflection(r):
        return f"x{abs(hash(r)) % 10 ** 8}"
    inv = bi(r)
    root = inv.u_part.directions[0]
    base = inv.min.basepoint
    offset = ctx.gram.bilin(root, base)
    for i, (a, k) in enumerate(p.refl.r_h_data):
        if a == root and k == offset:
            return f"h{i}"
    for i, f in enumerate(p.refl.r_v_families):
        if f.root == root:
            m = (offset - f.base_offset) / f.step
            if m.denominator == 1:
                shift = "m" if m == 0 else f"m{int(m):+d}"
                return f"v{i}[{shift}]"
    return f"r({root},{offset})"


def covering_edges(p: IntervalPoset, expand: int = 1):
    """Hasse edges among the explicitly expanded elements."""
    ctx = p.ctx
    elems = _all_candidates(p, expand)
    by_len: dict[int, list[Isometry]] = {}
    for u in elems:
        by_len.setdefault(l_length(u), []).append(u)
    edges = []
    for lu, us in sorted(by_len.items()):
        for v in by_len.get(lu + 1, []):
            for u in us:
                r = compose(v, invert(u))
                if is_reflection(r) and interval_leq(u, v, ctx):
                    edges.append((u, v, r))
    return edges


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]

    def pretty(self) -> str:
        def word(w):
            return "".join(w) if all(len(x) == 1 for x in w) else "*".join(w)

        # merge relations sharing a left-hand side into chains a = b = c
        chains: dict[str, list[str]] = {}
        for lhs, rhs in self.relations:
            chains.setdefault(word(lhs), []).append(word(rhs))
        gens = ", ".join(self.generators)
        rels = ", ".join(" = ".join([lhs] + rest) for lhs, rest in chains.items())
        return f"< {gens} | {rels} >"


def presentation_from_edges(elements, edges, label: Callable) -> Presentation:
    """Dual-style presentation: one generator per edge label, one relation
    per rank-2 diamond (pair of length-2 paths with the same endpoints)."""
    gens = sorted({label(r) for _, _, r in edges})
    up: dict = {}
    for u, v, r in edges:
        up.setdefault(u, []).append((v, label(r)))
    paths: dict[tuple, list[tuple[str, str]]] = {}
    for u in elements:
        for v, lab1 in up.get(u, []):
            for z, lab2 in up.get(v, []):
                paths.setdefault((u, z), []).append((lab1, lab2))
    relations = []
    seen = set()
    for (u, z), ps in sorted(paths.items(), key=lambda kv: str(kv[0])):
        if len(ps) < 2:
            continue
        ps = sorted(set(ps))
        first = ps[0]
        for other in ps[1:]:
            # words act left to right along the path
            rel = (first, other)
            if rel not in seen:
                seen.add(rel)
                relations.append(((first[0], first[1]), (other[0], other[1])))
    return Presentation(tuple(gens), tuple(relations))


def interval_presentation(p: IntervalPoset, expand: int = 1) -> Presentation:
    edges = covering_edges(p, expand)
    elements = _all_candidates(p, expand)
    return presentation_from_edges(elements, edges, lambda r: _edge_label(r, p))


# ---------------------------------------------------------------------------
# exports


def _fmt_frac(x: Fraction) -> str:
    return str(x)


def _elem_id(u: Isometry) -> str:
    return "e" + format(abs(hash(u)), "x")[:12]


def to_dot(p: IntervalPoset, expand: int = 1) -> str:
    edges = covering_edges(p, expand)
    ctx = p.ctx
    lines = ["digraph interval {", "  rankdir=BT;"]
    nodes = {u for u, v, _ in edges} | {v for _, v, _ in edges}
    for u in sorted(nodes, key=lambda x: (l_length(x), str(x))):
        row = _row_of(u, ctx)
        fam = "singleton"
        if is_zero_vec(_shift_of(ctx, basic_invariants(u).min.directions)) is False:
            fam = "infinite-family"
        lines.append(f'  {_elem_id(u)} [label="l={l_length(u)} {row}" '
                     f'family="{fam}"];')
    for u, v, r in edges:
        lines.append(f'  {_elem_id(u)} -> {_elem_id(v)} [label="{_edge_label(r, p)}"];')
    lines.append("}")
    return "\n".join(lines)


def to_records(p: IntervalPoset) -> str:
    """Line-oriented export: one JSON record per element."""
    out = []
    for e in p.elements():
        u = e.rep
        out.append(json.dumps({
            "matrix": [[_fmt_frac(x) for x in row] for row in u.mat],
            "translation": [_fmt_frac(x) for x in u.trans],
            "row": e.row,
            "column": e.column,
            "family": e.family_size_tag,
        }, separators=(",", ":")))
    return "\n".join(out)

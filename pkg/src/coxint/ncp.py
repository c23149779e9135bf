"""Brute-force noncrossing partition oracles (types A and B).

These are independent of the geometric machinery: partitions are filtered
combinatorially and symmetric-group intervals are enumerated by BFS over
transpositions, so they can serve as ground truth for isomorphism checks
against the geometrically constructed posets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from .interval import Presentation, presentation_from_edges

MAX_ISO_SIZE = 10 ** 5


# ---------------------------------------------------------------------------
# finite graded posets


@dataclass
class FinPoset:
    elements: list
    rank: dict
    covers: list  # (lower, upper) pairs

    def __post_init__(self):
        self._up = {e: set() for e in self.elements}
        for a, b in self.covers:
            self._up[a].add(b)
        self._upset_cache: dict = {}

    def upset(self, e) -> frozenset:
        if e not in self._upset_cache:
            out = {e}
            stack = [e]
            while stack:
                x = stack.pop()
                for y in self._up[x]:
                    if y not in out:
                        out.add(y)
                        stack.append(y)
            self._upset_cache[e] = frozenset(out)
        return self._upset_cache[e]

    def leq(self, a, b) -> bool:
        return b in self.upset(a)

    def up_degree(self, e) -> int:
        return len(self._up[e])

    def down_degree(self, e) -> int:
        return sum(1 for a, b in self.covers if b == e)


def poset_is_lattice(p: FinPoset) -> bool:
    """Every pair has a join (equivalently, by finiteness and boundedness,
    the poset is a lattice)."""
    tops = [e for e in p.elements if not p._up[e]]
    bottoms = [e for e in p.elements if p.down_degree(e) == 0]
    if len(tops) != 1 or len(bottoms) != 1:
        return False
    for a, b in itertools.combinations(p.elements, 2):
        ub = p.upset(a) & p.upset(b)
        mins = [c for c in ub if not any(d != c and p.leq(d, c) for d in ub)]
        if len(mins) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# type A noncrossing partitions


def _set_partitions(items: tuple):
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + ((first,) + part[i],) + part[i + 1:]
        yield ((first,),) + part


def is_noncrossing(blocks) -> bool:
    """No a < b < c < d with {a, c} and {b, d} in different blocks."""
    for b1, b2 in itertools.combinations(blocks, 2):
        for a, c in itertools.combinations(sorted(b1), 2):
            for b, d in itertools.combinations(sorted(b2), 2):
                if a < b < c < d or b < a < d < c:
                    return False
    return True


def _canon_partition(blocks) -> tuple:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def refines(sigma, tau) -> bool:
    """Every block of sigma is a subset of a block of tau."""
    return all(any(set(b) <= set(c) for c in tau) for b in sigma)


def block_cycles(blocks, n: int) -> tuple:
    """Permutation realization: each block becomes a clockwise cycle.
    Returned as a mapping tuple p with p[i-1] = image of i."""
    img = list(range(1, n + 1))
    for b in blocks:
        bs = sorted(b)
        for i, x in enumerate(bs):
            img[x - 1] = bs[(i + 1) % len(bs)]
    return tuple(img)


def nc_a(n: int) -> tuple[FinPoset, dict]:
    """The noncrossing partition lattice NC_n under refinement, plus the
    permutation realization of each element."""
    if n < 1:
        raise ValueError("n >= 1 required")
    parts = [_canon_partition(p) for p in _set_partitions(tuple(range(1, n + 1)))]
    parts = sorted(p for p in parts if is_noncrossing(p))
    rank = {p: n - len(p) for p in parts}
    covers = [(a, b) for a in parts for b in parts
              if rank[b] == rank[a] + 1 and refines(a, b)]
    realization = {p: block_cycles(p, n) for p in parts}
    return FinPoset(parts, rank, covers), realization


# ---------------------------------------------------------------------------
# symmetric group interval


def _perm_mul(p: tuple, q: tuple) -> tuple:
    """(p q)(i) = p(q(i)): q acts first."""
    return tuple(p[q[i] - 1] for i in range(len(p)))


def _perm_inv(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x - 1] = i + 1
    return tuple(out)


def _cycle_count(p: tuple) -> int:
    seen = [False] * len(p)
    c = 0
    for i in range(len(p)):
        if not seen[i]:
            c += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j] - 1
    return c


def perm_refl_length(p: tuple) -> int:
    return len(p) - _cycle_count(p)


def sym_interval(n: int) -> FinPoset:
    """The interval [1, (1 2 ... n)] in Sym_n over all transpositions."""
    if n < 2:
        raise ValueError("n >= 2 required")
    ident = tuple(range(1, n + 1))
    g = tuple(list(range(2, n + 1)) + [1])  # i -> i+1 mod n
    transpos = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        t = list(ident)
        t[i - 1], t[j - 1] = j, i
        transpos.append(tuple(t))
    total = perm_refl_length(g)
    elems = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for u in frontier:
            lu = perm_refl_length(u)
            for t in transpos:
                v = _perm_mul(u, t)
                if v in elems:
                    continue
                lv = perm_refl_length(v)
                if lv != lu + 1:
                    continue
                if lv + perm_refl_length(_perm_mul(_perm_inv(v), g)) != total:
                    continue
                elems.add(v)
                new.append(v)
        frontier = new
    elements = sorted(elems)
    rank = {e: perm_refl_length(e) for e in elements}
    covers = []
    for u in elements:
        for v in elements:
            if rank[v] == rank[u] + 1:
                d = _perm_mul(_perm_inv(u), v)
                if perm_refl_length(d) == 1:
                    covers.append((u, v))
    return FinPoset(elements, rank, covers)


def sym_interval_presentation(n: int) -> Presentation:
    """Dual presentation read off the interval: one generator per edge
    label (transposition), one relation per rank-2 diamond."""
    p = sym_interval(n)
    names = {}

    def label(t: tuple) -> str:
        if t not in names:
            names[t] = chr(ord("a") + len(names))
        return names[t]

    # name atoms first: (i, i+1) transpositions before the longer ones
    def swapped(t):
        i, j = sorted(x for x in range(1, n + 1) if t[x - 1] != x)
        return (j - i, i)

    for e in sorted((e for e in p.elements if p.rank[e] == 1), key=swapped):
        label(e)
    edges = []
    for u, v in p.covers:
        t = _perm_mul(_perm_inv(u), v)
        edges.append((u, v, t))
    return presentation_from_edges(p.elements, edges, label)


# ---------------------------------------------------------------------------
# type B noncrossing partitions


def nc_b(n: int) -> FinPoset:
    """Type-B noncrossing partition lattice, realized as the interval
    below t1 r12 ... r_{n-1,n} in the group of coordinate permutations
    and integral translations of Z^n."""
    from .crystal import middle_interval
    return middle_interval(n).to_finposet()


# ---------------------------------------------------------------------------
# isomorphism checking


def iso_check(p: FinPoset, q: FinPoset) -> bool:
    """Graded poset isomorphism by backtracking, rank by rank."""
    if len(p.elements) > MAX_ISO_SIZE or len(q.elements) > MAX_ISO_SIZE:
        raise ValueError("poset too large for isomorphism search")
    if len(p.elements) != len(q.elements):
        return False

    def profile(poset, e):
        return (poset.rank[e], poset.up_degree(e), poset.down_degree(e))

    from collections import Counter
    if Counter(profile(p, e) for e in p.elements) != \
       Counter(profile(q, e) for e in q.elements):
        return False

    p_elems = sorted(p.elements, key=lambda e: (p.rank[e], str(e)))
    q_by_profile: dict = {}
    for e in q.elements:
        q_by_profile.setdefault(profile(q, e), []).append(e)

    p_covers_of = {e: [] for e in p.elements}
    for a, b in p.covers:
        p_covers_of[b].append(a)
    q_cover_rel = {(a, b) for a, b in q.covers}

    assignment: dict = {}
    used: set = set()

    def backtrack(i: int) -> bool:
        if i == len(p_elems):
            return True
        e = p_elems[i]
        for cand in q_by_profile.get(profile(p, e), []):
            if cand in used:
                continue
            if all((assignment[a], cand) in q_cover_rel for a in p_covers_of[e]):
                # cover counts already matched through the profile
                assignment[e] = cand
                used.add(cand)
                if backtrack(i + 1):
                    return True
                del assignment[e]
                used.discard(cand)
        return False

    return backtrack(0)

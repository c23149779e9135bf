"""Horizontal root systems and the lattice-failure prediction.

The horizontal roots of a context are the roots orthogonal to the axis
direction.  They form a subroot system; its decomposition into irreducible
components can be read off two independent ways -- directly from the Gram
form, or by deleting the two marked nodes from the extended diagram -- and
reducibility of the system decides whether the reflection interval below
the Coxeter element is a lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import Vec, smul, vadd
from .coxeter import CoxeterContext, DynkinDiagram


@dataclass(frozen=True)
class RootSystem:
    roots: tuple[Vec, ...]
    components: tuple[tuple[Vec, ...], ...]
    type_labels: tuple[str, ...]

    @property
    def multiset(self) -> tuple[str, ...]:
        return tuple(sorted(self.type_labels))

    def describe(self) -> str:
        if not self.type_labels:
            return "(empty)"
        return " + ".join(sorted(self.type_labels))


def _simple_system(component: list[Vec], ctx: CoxeterContext) -> list[Vec]:
    """Simple roots of an irreducible component: positives (under a generic
    functional) that are not sums of two positives."""
    # generic functional: evaluate against a vector with spread-out weights
    n = ctx.rank
    probe = tuple(Fraction(1, 10 ** (i + 1)) + 1 for i in range(n))
    bil = ctx.gram.bilin

    def height(r):
        return bil(r, probe)

    if any(height(r) == 0 for r in component):
        raise RuntimeError("probe functional not generic; adjust weights")
    pos = [r for r in component if height(r) > 0]
    pos_set = set(pos)
    simple = []
    for r in pos:
        if not any(vadd(r, smul(-1, s)) in pos_set for s in pos if s != r):
            simple.append(r)
    return simple


def _classify_simply_laced(simple: list[Vec], ctx: CoxeterContext) -> str:
    """Type label of an irreducible simply-laced simple system (A/D/E)."""
    k = len(simple)
    bil = ctx.gram.bilin
    deg = [sum(1 for j in range(k) if j != i and bil(simple[i], simple[j]) != 0)
           for i in range(k)]
    branch_nodes = [i for i, d in enumerate(deg) if d >= 3]
    if not branch_nodes:
        return f"A{k}"
    if len(branch_nodes) > 1 or deg[branch_nodes[0]] > 3:
        raise RuntimeError("unrecognized component shape")
    # branch lengths from the degree-3 node
    center = branch_nodes[0]
    adj = {i: [j for j in range(k) if j != i and bil(simple[i], simple[j]) != 0]
           for i in range(k)}
    lengths = []
    for start in adj[center]:
        ln, prev, cur = 1, center, start
        while True:
            nxt = [j for j in adj[cur] if j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        lengths.append(ln)
    lengths.sort()
    if lengths[:2] == [1, 1]:
        return f"D{k}"
    if lengths == [1, 2, 2]:
        return "E6"
    if lengths == [1, 2, 3]:
        return "E7"
    if lengths == [1, 2, 4]:
        return "E8"
    raise RuntimeError("unrecognized component shape")


def _classify(simple: list[Vec], ctx: CoxeterContext) -> str:
    norms = {ctx.gram.norm2(s) for s in simple}
    if len(norms) > 1:
        raise RuntimeError("multiply-laced horizontal component; not expected")
    return _classify_simply_laced(simple, ctx)


def horizontal_roots_direct(ctx: CoxeterContext) -> RootSystem:
    roots = [r for r in ctx.roots if ctx.is_horizontal_root(r)]
    bil = ctx.gram.bilin
    remaining = set(roots)
    comps: list[tuple[Vec, ...]] = []
    labels: list[str] = []
    while remaining:
        seed = next(iter(remaining))
        comp = {seed}
        frontier = [seed]
        while frontier:
            r = frontier.pop()
            for s in list(remaining):
                if s not in comp and bil(r, s) != 0:
                    comp.add(s)
                    frontier.append(s)
        remaining -= comp
        comp_list = sorted(comp)
        comps.append(tuple(comp_list))
        labels.append(_classify(_simple_system(comp_list, ctx), ctx))
    order = sorted(range(len(comps)), key=lambda i: (labels[i], comps[i]))
    return RootSystem(tuple(sorted(roots)),
                      tuple(comps[i] for i in order),
                      tuple(labels[i] for i in order))


def horizontal_roots_surgery(diagram: DynkinDiagram,
                             coxeter_choice: Optional[tuple[int, int]] = None) -> tuple[str, ...]:
    """Type multiset read off the extended diagram with the two marked
    nodes removed."""
    shaded = diagram.marked_shaded
    if diagram.type_letter == "A" and coxeter_choice is not None:
        p, q = coxeter_choice
        if p < 1 or q < 1 or p + q != diagram.rank + 1:
            raise ValueError(f"bad bipartition {coxeter_choice}")
        shaded = p
    removed = {diagram.marked_white, shaded}
    if not removed <= set(range(diagram.rank + 1)):
        raise ValueError("invalid removal node")
    nodes = [i for i in range(diagram.rank + 1) if i not in removed]
    adj = {i: [] for i in nodes}
    for i, j in diagram.edges:
        if i in adj and j in adj:
            adj[i].append(j)
            adj[j].append(i)
    labels = []
    seen: set[int] = set()
    for v in nodes:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        labels.append(_label_subdiagram(comp, adj))
    return tuple(sorted(labels))


def _label_subdiagram(comp: set[int], adj) -> str:
    k = len(comp)
    deg = {i: len([j for j in adj[i] if j in comp]) for i in comp}
    branch = [i for i in comp if deg[i] >= 3]
    if not branch:
        return f"A{k}"
    if len(branch) > 1 or deg[branch[0]] > 3:
        raise RuntimeError("unrecognized subdiagram shape")
    center = branch[0]
    lengths = []
    for start in adj[center]:
        if start not in comp:
            continue
        ln, prev, cur = 1, center, start
        while True:
            nxt = [j for j in adj[cur] if j in comp and j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        lengths.append(ln)
    lengths.sort()
    if lengths[:2] == [1, 1]:
        return f"D{k}"
    return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}[tuple(lengths)]


def predict_lattice(ctx: CoxeterContext) -> bool:
    """The interval below the Coxeter element is a lattice iff the
    horizontal root system is irreducible (has exactly one component)."""
    return len(horizontal_roots_direct(ctx).components) == 1

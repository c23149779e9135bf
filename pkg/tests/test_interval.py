"""Coxeter intervals: coarse grids, lattice verdicts, presentations, export."""

import json

import pytest

from coxint.coxeter import build_context, l_length
from coxint.interval import (
    build_interval,
    canonical_rep,
    coarse_grid,
    conj_by_period,
    covering_edges,
    family_members,
    interval_leq,
    interval_presentation,
    is_lattice,
    to_dot,
    to_records,
)
from coxint.isometry import compose, invert, quick_len

GRIDS = {
    ("G~2", None): ((1, 2), (6, 6), (2, 1)),
    ("C~2", None): ((1, 2), (6, 6), (2, 1)),
    ("C~3", None): ((1, 6, 3), (12, 36, 12), (3, 6, 1)),
    ("A~3", (1, 3)): ((1, 6, 3), (12, 36, 12), (3, 6, 1)),
    ("B~3", None): ((1, 4, 4), (8, 20, 8), (4, 4, 1)),
    ("A~3", (2, 2)): ((1, 4, 4), (8, 20, 8), (4, 4, 1)),
    ("D~4", None): ((1, 6, 12, 8), (10, 44, 44, 10), (8, 12, 6, 1)),
    ("F~4", None): ((1, 8, 15, 6), (30, 150, 150, 30), (6, 15, 8, 1)),
}


@pytest.fixture(scope="module")
def posets():
    cache = {}

    def get(name, choice=None):
        key = (name, choice)
        if key not in cache:
            ctx = build_context(name, coxeter_choice=choice)
            cache[key] = (ctx, build_interval(ctx))
        return cache[key]

    return get


@pytest.mark.parametrize("name,choice", sorted(GRIDS, key=str))
def test_coarse_grid(posets, name, choice):
    _, p = posets(name, choice)
    assert coarse_grid(p).rows == GRIDS[(name, choice)]


def test_grid_symmetry_enforced(posets):
    _, p = posets("G~2")
    g = coarse_grid(p)
    assert g.rows[0][::-1] == g.rows[2]


def test_bottom_top_complementary(posets):
    ctx, p = posets("C~2")
    w = ctx.coxeter_element
    tops = set(p.top)
    for u in p.bottom:
        assert compose(invert(u), w) in tops


def test_middle_reps_are_canonical(posets):
    ctx, p = posets("G~2")
    for u in p.middle_reps:
        assert canonical_rep(u, ctx) == u


def test_family_conjugation_preserves_length(posets):
    ctx, p = posets("G~2")
    for u in p.middle_reps[:6]:
        for m in (-2, 1, 3):
            v = conj_by_period(u, ctx, m)
            assert quick_len(v) == quick_len(u)


def test_family_members_distinct(posets):
    ctx, p = posets("C~2")
    for u in p.middle_reps:
        mem = family_members(u, ctx, range(-2, 3))
        if len(mem) > 1:
            assert len(set(mem)) == 5


def test_interval_leq_basics(posets):
    ctx, p = posets("G~2")
    w = ctx.coxeter_element
    for u in p.bottom:
        assert interval_leq(u, w, ctx)
        assert interval_leq(u, u, ctx)
    one = p.bottom[0]
    assert l_length(one) == 0
    for u in p.top:
        assert interval_leq(one, u, ctx)


LATTICE_EXPECT = {
    ("C~2", None): True,
    ("C~3", None): True,
    ("G~2", None): True,
    ("A~3", (1, 3)): True,
    ("B~3", None): False,
    ("A~3", (2, 2)): False,
}


@pytest.mark.parametrize("name,choice", sorted(LATTICE_EXPECT, key=str))
def test_lattice_verdicts_small(posets, name, choice):
    ctx, p = posets(name, choice)
    v = is_lattice(p)
    assert v.is_lattice == LATTICE_EXPECT[(name, choice)]
    if not v.is_lattice:
        a, b, m1, m2 = v.witness
        if v.witness_kind == "join":
            for m in (m1, m2):
                assert interval_leq(a, m, ctx) and interval_leq(b, m, ctx)
            assert not interval_leq(m1, m2, ctx)
            assert not interval_leq(m2, m1, ctx)


def test_lattice_matches_horizontal_prediction(posets):
    from coxint.horizontal import predict_lattice
    for name, choice in LATTICE_EXPECT:
        ctx, p = posets(name, choice)
        assert predict_lattice(ctx) == LATTICE_EXPECT[(name, choice)]


def test_covering_edges_have_reflection_labels(posets):
    ctx, p = posets("G~2")
    for u, v, r in covering_edges(p):
        assert compose(r, r).is_identity()
        assert compose(u, compose(invert(u), v)) == v


def test_presentation_g2_shape(posets):
    _, p = posets("G~2")
    pres = interval_presentation(p)
    text = pres.pretty()
    assert text.startswith("<")
    assert "|" in text


def test_to_dot_contains_nodes(posets):
    _, p = posets("G~2")
    dot = to_dot(p)
    assert dot.startswith("digraph")
    assert "->" in dot


def test_to_records_roundtrip_counts(posets):
    _, p = posets("G~2")
    rows = {"bottom": 0, "middle": 0, "top": 0}
    for line in to_records(p).splitlines():
        rec = json.loads(line)
        rows[rec["row"]] += 1
    g = coarse_grid(p)
    assert rows["bottom"] == sum(g.rows[0])
    assert rows["middle"] == sum(g.rows[1])
    assert rows["top"] == sum(g.rows[2])

"""Horizontal root systems: direct computation vs diagram surgery."""

import pytest

from coxint.coxeter import build_context
from coxint.horizontal import (
    horizontal_roots_direct,
    horizontal_roots_surgery,
    predict_lattice,
)

EXPECTED = {
    ("B~3", None): ("A1", "A1"),
    ("B~4", None): ("A1", "A2"),
    ("C~2", None): ("A1",),
    ("C~3", None): ("A2",),
    ("C~4", None): ("A3",),
    ("D~4", None): ("A1", "A1", "A1"),
    ("F~4", None): ("A1", "A2"),
    ("G~2", None): ("A1",),
    ("A~2", (1, 2)): ("A1",),
    ("A~3", (1, 3)): ("A2",),
    ("A~3", (2, 2)): ("A1", "A1"),
    ("A~4", (1, 4)): ("A3",),
    ("A~4", (2, 3)): ("A1", "A2"),
}


@pytest.mark.parametrize("name,choice", sorted(EXPECTED, key=str))
def test_direct_matches_expected(name, choice):
    ctx = build_context(name, coxeter_choice=choice)
    assert horizontal_roots_direct(ctx).multiset == EXPECTED[(name, choice)]


@pytest.mark.parametrize("name,choice", sorted(EXPECTED, key=str))
def test_surgery_matches_direct(name, choice):
    ctx = build_context(name, coxeter_choice=choice)
    direct = horizontal_roots_direct(ctx).multiset
    surgery = horizontal_roots_surgery(ctx.diagram, ctx.coxeter_choice)
    assert direct == surgery


@pytest.mark.parametrize("name,choice", sorted(EXPECTED, key=str))
def test_predict_lattice_is_irreducibility(name, choice):
    ctx = build_context(name, coxeter_choice=choice)
    assert predict_lattice(ctx) == (len(EXPECTED[(name, choice)]) == 1)


def test_component_root_counts():
    ctx = build_context("F~4")
    sys = horizontal_roots_direct(ctx)
    sizes = sorted(len(c) for c in sys.components)
    # A1 has 2 roots, A2 has 6
    assert sizes == [2, 6]


def test_horizontal_roots_orthogonal_to_axis():
    ctx = build_context("B~3")
    sys = horizontal_roots_direct(ctx)
    for r in sys.roots:
        assert ctx.gram.bilin(r, ctx.axis_dir) == 0

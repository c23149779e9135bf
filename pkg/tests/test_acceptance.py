"""End-to-end acceptance checks with wall-clock budgets.

Each test prints a single summary line so the run log shows one verdict
per criterion.  Budgets are asserted alongside correctness.
"""

import re
import subprocess
import sys
import time
from pathlib import Path

import pytest
from click.testing import CliRunner

from coxint.cli import main as cli_main
from coxint.coxeter import build_context
from coxint.crystal import (
    ball_is_lattice,
    crystallographic_interval,
    factorable_interval,
    factorable_product_oracle,
    middle_interval,
    predicted_factor_ranks,
)
from coxint.horizontal import horizontal_roots_direct, horizontal_roots_surgery
from coxint.interval import build_interval, coarse_grid, interval_leq, is_lattice
from coxint.ncp import (
    iso_check,
    nc_a,
    poset_is_lattice,
    sym_interval,
    sym_interval_presentation,
)

_CTX_CACHE = {}
_POSET_CACHE = {}


def ctx_for(name, choice=None):
    key = (name, choice)
    if key not in _CTX_CACHE:
        _CTX_CACHE[key] = build_context(name, coxeter_choice=choice)
    return _CTX_CACHE[key]


def poset_for(name, choice=None):
    key = (name, choice)
    if key not in _POSET_CACHE:
        _POSET_CACHE[key] = build_interval(ctx_for(name, choice))
    return _POSET_CACHE[key]


_EMIT = print


@pytest.fixture(autouse=True)
def _live_output(capfd):
    global _EMIT

    def emit(line):
        with capfd.disabled():
            print(line, flush=True)

    _EMIT = emit
    yield
    _EMIT = print


def report(num, ok, detail):
    line = f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} ({detail})"
    _EMIT(line)
    assert ok, line


def test_criterion_1_coarse_grid_g2():
    t0 = time.monotonic()
    res = CliRunner().invoke(cli_main, ["coarse", "--type", "G~2",
                                        "--group", "W"])
    elapsed = time.monotonic() - t0
    ok = (res.exit_code == 0
          and "bottom: [1, 2]" in res.output
          and "middle: [6, 6]" in res.output
          and "top   : [2, 1]" in res.output
          and elapsed < 1.0)
    report(1, ok, f"G~2 grid [[1,2],[6,6],[2,1]] in {elapsed:.2f}s")


def _predicted_a_multiset(p, q):
    labels = [f"A{p - 1}", f"A{q - 1}"]
    return tuple(sorted(lab for lab in labels if lab != "A0"))


TABLE_1 = {
    ("B~3", None): ("A1", "A1"),
    ("B~4", None): ("A1", "A2"),
    ("C~2", None): ("A1",),
    ("C~3", None): ("A2",),
    ("C~4", None): ("A3",),
    ("D~4", None): ("A1", "A1", "A1"),
    ("F~4", None): ("A1", "A2"),
    ("G~2", None): ("A1",),
    ("E~6", None): ("A1", "A2", "A2"),
    ("E~7", None): ("A1", "A2", "A3"),
    ("E~8", None): ("A1", "A2", "A4"),
}
for _n in (2, 3, 4):
    for _p in range(1, _n + 1):
        _q = _n + 1 - _p
        TABLE_1[(f"A~{_n}", (_p, _q))] = _predicted_a_multiset(_p, _q)


def test_criterion_2_horizontal_table():
    t0 = time.monotonic()
    bad = []
    for (name, choice), expected in TABLE_1.items():
        ctx = ctx_for(name, choice)
        direct = horizontal_roots_direct(ctx).multiset
        surgery = horizontal_roots_surgery(ctx.diagram, ctx.coxeter_choice)
        if direct != expected or surgery != expected:
            bad.append((name, choice, direct, surgery, expected))
    elapsed = time.monotonic() - t0
    ok = not bad and elapsed < 10.0
    report(2, ok, f"{len(TABLE_1)} types direct+surgery in {elapsed:.1f}s"
           + (f"; mismatches {bad}" if bad else ""))


W_LATTICE = {
    ("C~2", None): True,
    ("C~3", None): True,
    ("G~2", None): True,
    ("A~3", (1, 3)): True,
    ("B~3", None): False,
    ("D~4", None): False,
    ("F~4", None): False,
    ("A~3", (2, 2)): False,
}


def test_criterion_3_w_lattice_verdicts():
    t0 = time.monotonic()
    bad = []
    for (name, choice), expected in W_LATTICE.items():
        ctx = ctx_for(name, choice)
        v = is_lattice(poset_for(name, choice))
        if v.is_lattice != expected:
            bad.append((name, choice, v.is_lattice))
            continue
        if not expected:
            a, b, m1, m2 = v.witness
            claims = [interval_leq(a, m1, ctx), interval_leq(b, m1, ctx),
                      interval_leq(a, m2, ctx), interval_leq(b, m2, ctx),
                      not interval_leq(m1, m2, ctx),
                      not interval_leq(m2, m1, ctx)]
            if not all(claims):
                bad.append((name, choice, "bad witness"))
    elapsed = time.monotonic() - t0
    ok = not bad and elapsed < 300.0
    report(3, ok, f"8 verdicts with checked witnesses in {elapsed:.1f}s"
           + (f"; failures {bad}" if bad else ""))


C_TYPES = [("B~3", None), ("D~4", None), ("F~4", None), ("A~3", (2, 2))]


def test_criterion_4_c_interval_lattices():
    t0 = time.monotonic()
    bad = []
    for name, choice in C_TYPES:
        ctx = ctx_for(name, choice)
        ball = crystallographic_interval(ctx)
        v = ball_is_lattice(ball, ctx, expand=2, middle_samples=2500)
        if not v.is_lattice:
            bad.append((name, choice, v.witness_kind))
    elapsed = time.monotonic() - t0
    ok = not bad and elapsed < 900.0
    report(4, ok, f"4 C-intervals, 10^4 sampled pairs total, {elapsed:.1f}s"
           + (f"; failures {bad}" if bad else ""))


def test_criterion_5_e8_outer_rows():
    t0 = time.monotonic()
    ctx = build_context("E~8")
    p = build_interval(ctx, with_middle=False)
    g = coarse_grid(p)
    elapsed = time.monotonic() - t0
    bottom = (1, 28, 235, 826, 1345, 1000, 315, 30)
    ok = (g.rows[0] == bottom
          and g.rows[2] == bottom[::-1]
          and elapsed < 1800.0)
    report(5, ok, f"E~8 outer rows in {elapsed:.1f}s")


def test_criterion_6_nc_oracles():
    t0 = time.monotonic()
    import math
    ok = True
    for n in range(1, 8):
        cat = math.comb(2 * n, n) // (n + 1)
        ok = ok and len(nc_a(n)[0].elements) == cat
        if n >= 2:
            ok = ok and len(sym_interval(n).elements) == cat
    for n in range(2, 6):
        ok = ok and iso_check(nc_a(n)[0], sym_interval(n))
    for n in range(1, 5):
        ok = ok and len(middle_interval(n).members) == math.comb(2 * n, n)
    ok = ok and sym_interval_presentation(3).pretty() == \
        "< a, b, c | ab = bc = ca >"
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 60.0
    report(6, ok, f"Catalan n<=7, iso n<=5, C(2n,n) n<=4, "
           f"n=3 presentation, {elapsed:.1f}s")


def test_criterion_7_property_suites():
    tests_dir = Path(__file__).parent
    t0 = time.monotonic()
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", str(tests_dir / "test_properties.py"),
         "-q", "--durations=0", "-p", "no:cacheprovider"],
        capture_output=True, text=True, cwd=str(tests_dir.parent))
    elapsed = time.monotonic() - t0
    durations = [float(m.group(1)) for m in re.finditer(
        r"^\s*(\d+\.\d+)s call", proc.stdout, re.M)]
    n_suites = len(re.findall(r"s call", proc.stdout))
    ok = (proc.returncode == 0
          and n_suites >= 6
          and all(d < 120.0 for d in durations))
    report(7, ok, f"{n_suites} suites, slowest "
           f"{max(durations, default=0):.0f}s, total {elapsed:.0f}s")


def test_criterion_8_factorable_structure():
    t0 = time.monotonic()
    ok = True
    for name, choice in [("B~3", None), ("C~3", None), ("G~2", None),
                         ("A~3", (2, 2))]:
        ctx = ctx_for(name, choice)
        f = factorable_interval(ctx)
        oracle = factorable_product_oracle(ctx)
        ok = ok and len(f.members) == len(oracle.elements)
        ok = ok and iso_check(f.to_finposet(), oracle)
        ok = ok and poset_is_lattice(oracle)
    ok = ok and predicted_factor_ranks(build_context("E~8")) == [2, 3, 5]
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 300.0
    report(8, ok, f"graded iso to NC_B products + E~8 ranks [2,3,5], "
           f"{elapsed:.1f}s")

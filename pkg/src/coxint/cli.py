"""Command-line surface: coarse grids, lattice verdicts, horizontal root
systems, dual presentations, noncrossing partition oracles and the group
family report.

Exit codes: 0 success (and "is a lattice" for `lattice`), 3 bowtie found,
2 usage error, 1 internal error.
"""

from __future__ import annotations

import json
import sys

import click

from .coxeter import build_context
from .horizontal import horizontal_roots_direct, horizontal_roots_surgery, predict_lattice
from . import interval as iv
from . import crystal as cr
from . import ncp

EXIT_BOWTIE = 3


def _parse_choice(choice):
    if choice is None:
        return None
    try:
        p, q = (int(x) for x in choice.split(","))
        return (p, q)
    except ValueError:
        raise click.BadParameter("expected p,q (e.g. 2,2)")


def _context(type_name, choice):
    try:
        return build_context(type_name, coxeter_choice=_parse_choice(choice))
    except ValueError as e:
        raise click.BadParameter(str(e))


def _internal(e):
    click.echo(f"error: {e}", err=True)
    sys.exit(1)


@click.group()
def main():
    """Exact interval computations for euclidean Coxeter groups."""


type_opt = click.option("--type", "type_name", required=True,
                        help="group type, e.g. G~2, B~3, E~8")
choice_opt = click.option("--choice", default=None,
                          help="bipartition p,q for type A~n")
group_opt = click.option("--group", "variant", default="W",
                         type=click.Choice(["W", "H", "D", "F", "C"]),
                         help="which generating set to use")
jobs_opt = click.option("--jobs", default=1, type=int,
                        help="worker cap (results are identical for any value)")


def _ball(ctx, variant):
    if variant == "D":
        return cr.diagonal_interval(ctx)
    if variant == "F":
        return cr.factorable_interval(ctx)
    if variant == "C":
        return cr.crystallographic_interval(ctx)
    raise click.BadParameter(f"group {variant} has no ball interval")


@main.command()
@type_opt
@choice_opt
@group_opt
@click.option("--rows", default="all", type=click.Choice(["all", "outer"]))
@click.option("--format", "fmt", default="table",
              type=click.Choice(["table", "json-lines", "dot"]))
@click.option("--allow-long", is_flag=True,
              help="permit middle-row enumeration for the large E types")
@jobs_opt
def coarse(type_name, choice, variant, rows, fmt, allow_long, jobs):
    """Row-by-row element counts of the interval below the Coxeter element."""
    ctx = _context(type_name, choice)
    if variant == "H":
        raise click.UsageError(
            "the Coxeter element is not reachable from horizontal "
            "reflections alone; no interval to display")
    try:
        if variant == "W":
            big = ctx.rank >= 6 and ctx.name.startswith("E")
            with_middle = rows == "all" and (not big or allow_long)
            p = iv.build_interval(ctx, with_middle=with_middle)
            if fmt == "dot":
                click.echo(iv.to_dot(p))
                return
            if fmt == "json-lines":
                click.echo(iv.to_records(p))
                return
            if with_middle:
                click.echo(iv.coarse_grid(p).pretty())
            else:
                from .coxeter import l_length
                n = p.n
                b = [0] * n
                for u in p.bottom:
                    b[l_length(u)] += 1
                click.echo(f"bottom: {b}")
                click.echo(f"top   : {b[::-1]}")
                if rows == "all":
                    click.echo("(middle rows need --allow-long at this size)")
        else:
            ball = _ball(ctx, variant)
            levels = {}
            for u, d in ball.members.items():
                levels[d] = levels.get(d, 0) + 1
            for d in sorted(levels):
                click.echo(f"weight {d}: {levels[d]}")
            click.echo(f"total: {len(ball.members)}")
    except click.ClickException:
        raise
    except Exception as e:
        _internal(e)


@main.command()
@type_opt
@choice_opt
@group_opt
@click.option("--samples", default=0, type=int,
              help="random middle-row pairs to spot-check")
@click.option("--expand", default=2, type=int)
@jobs_opt
def lattice(type_name, choice, variant, samples, expand, jobs):
    """Lattice verdict; exit 0 if lattice, 3 with a printed bowtie if not."""
    ctx = _context(type_name, choice)
    try:
        if variant == "W":
            p = iv.build_interval(ctx)
            v = iv.is_lattice(p, expand=expand, middle_samples=samples)
        elif variant == "C":
            ball = cr.crystallographic_interval(ctx)
            v = cr.ball_is_lattice(ball, ctx, expand=expand,
                                   middle_samples=samples)
        elif variant in ("D", "F"):
            ok = ncp.poset_is_lattice(_ball(ctx, variant).to_finposet())
            v = cr.BallLatticeVerdict(ok, None, None)
        else:
            raise click.UsageError("lattice checks apply to W, D, F, C")
    except click.ClickException:
        raise
    except Exception as e:
        _internal(e)
        return
    if v.is_lattice:
        click.echo("lattice")
        return
    click.echo(f"bowtie ({v.witness_kind})")
    if v.witness:
        for label, u in zip(("a", "b", "m1", "m2"), v.witness):
            mat = "; ".join(" ".join(str(x) for x in row) for row in u.mat)
            trans = " ".join(str(x) for x in u.trans)
            click.echo(f"  {label}: mat=[{mat}] trans=[{trans}]")
    sys.exit(EXIT_BOWTIE)


@main.command()
@type_opt
@choice_opt
def horizontal(type_name, choice):
    """Horizontal root system, computed two independent ways."""
    ctx = _context(type_name, choice)
    try:
        direct = horizontal_roots_direct(ctx)
        surgery = horizontal_roots_surgery(ctx.diagram, ctx.coxeter_choice)
        if direct.multiset != surgery:
            raise RuntimeError(
                f"derivations disagree: {direct.multiset} vs {surgery}")
        click.echo(direct.describe())
        click.echo(f"lattice predicted: {predict_lattice(ctx)}")
    except click.ClickException:
        raise
    except Exception as e:
        _internal(e)


@main.command()
@click.option("--type", "type_name", required=True,
              help="A for the spherical oracle, or a euclidean type like G~2")
@click.option("--n", "n", default=None, type=int)
@click.option("--choice", default=None)
@click.option("--spherical", is_flag=True)
@click.option("--expand", default=1, type=int)
def presentation(type_name, n, choice, spherical, expand):
    """Dual presentation read off the interval's labeled covers."""
    try:
        if spherical or (type_name == "A" and n is not None):
            if n is None:
                raise click.UsageError("--n required with --spherical")
            click.echo(ncp.sym_interval_presentation(n).pretty())
            return
        ctx = _context(type_name, choice)
        p = iv.build_interval(ctx)
        click.echo(iv.interval_presentation(p, expand=expand).pretty())
    except click.ClickException:
        raise
    except Exception as e:
        _internal(e)


@main.command("ncp")
@click.option("--type", "kind", required=True, type=click.Choice(["A", "B"]))
@click.option("--n", "n", required=True, type=int)
@click.option("--count", "count_only", is_flag=True)
@click.option("--format", "fmt", default="table",
              type=click.Choice(["table", "json-lines"]))
def ncp_cmd(kind, n, count_only, fmt):
    """Noncrossing partition oracles (types A and B)."""
    try:
        if kind == "A":
            poset, _ = ncp.nc_a(n)
        else:
            poset = ncp.nc_b(n)
    except Exception as e:
        _internal(e)
        return
    if count_only:
        click.echo(str(len(poset.elements)))
        return
    if fmt == "json-lines":
        for e in poset.elements:
            click.echo(json.dumps({"element": str(e), "rank": poset.rank[e]}))
        return
    by_rank = {}
    for e in poset.elements:
        by_rank.setdefault(poset.rank[e], 0)
        by_rank[poset.rank[e]] += 1
    click.echo(f"elements: {len(poset.elements)}")
    click.echo("rank sizes: " + str([by_rank[r] for r in sorted(by_rank)]))


@main.command()
@type_opt
@choice_opt
@click.option("--format", "fmt", default="table",
              type=click.Choice(["table", "json-lines"]))
def report(type_name, choice, fmt):
    """Generator inventory and factor structure for the group family."""
    ctx = _context(type_name, choice)
    try:
        rep = cr.ten_groups_report(ctx)
    except Exception as e:
        _internal(e)
        return
    if fmt == "json-lines":
        click.echo(json.dumps(rep))
        return
    click.echo(f"type {rep['type']} (rank {rep['rank']})")
    click.echo("horizontal components: " + ", ".join(rep["horizontal_components"]))
    for name, data in rep["isometry_groups"].items():
        gens = ", ".join(f"{k}={v}" for k, v in data["generators"].items())
        click.echo(f"  {name}: {gens}")
    ranks = rep["presented_groups"]["F_w"]["factor_ranks"]
    click.echo("F_w factors: " + " x ".join(f"NC_B{r}" for r in ranks))
    click.echo("maps: " + "; ".join(
        f"{k}: {', '.join(v)}" for k, v in rep["maps"].items()
        if k != "evaluable_on_generators"))


if __name__ == "__main__":
    main()

"""Graph family generator command for Planar STC CLI."""

from __future__ import annotations

from pathlib import Path

import click

from planar_stc import (
    canonical_cts,
    hexagonal_grid,
    print_success,
    rectangular_grid,
    spiderweb,
    spiderweb_naive_tree,
    triangular_grid,
    validate_family,
    write_cts,
    write_pg,
    write_tree,
)
from planar_stc.reports import CANONICAL_MINIMUM_K

from ..cli_utils import handle_cli_errors, is_quiet, require


def generate_files(
    family: str,
    out_dir: Path,
    size: int | None = None,
    rows: int | None = None,
    cols: int | None = None,
    radius: int | None = None,
    rings: int | None = None,
    spokes: int | None = None,
) -> list[Path]:
    """Write the graph (and system or tree files) for one family instance."""
    family = validate_family(family)
    written = []
    if family == "triangular":
        k = require(size, "--size", family)
        g = triangular_grid(k)
        written.append(write_pg(g, out_dir / f"T_{k}.pg"))
        if k >= CANONICAL_MINIMUM_K:
            written.append(write_cts(g, canonical_cts(k), out_dir / f"S_{k}.cts"))
    elif family == "rectangular":
        m = require(rows, "--rows", family)
        n = require(cols, "--cols", family)
        written.append(write_pg(rectangular_grid(m, n), out_dir / f"R_{m}x{n}.pg"))
    elif family == "hexagonal":
        r = require(radius, "--radius", family)
        written.append(write_pg(hexagonal_grid(r), out_dir / f"H_{r}.pg"))
    else:
        n = require(rings, "--rings", family)
        k = require(spokes, "--spokes", family)
        g, tree = spiderweb(n, k)
        _, naive = spiderweb_naive_tree(n, k)
        stem = f"W_{n}_{k}"
        written.append(write_pg(g, out_dir / f"{stem}.pg"))
        written.append(write_tree(tree, out_dir / f"{stem}.tree"))
        written.append(write_tree(naive, out_dir / f"{stem}.naive.tree"))
    return written


@click.command()
@click.option(
    "--family",
    "-f",
    required=True,
    help="Graph family: triangular, rectangular, hexagonal or spiderweb.",
)
@click.option("--size", "-k", type=int, help="Triangular grid side length in vertices.")
@click.option("--rows", type=int, help="Rectangular grid rows.")
@click.option("--cols", type=int, help="Rectangular grid columns.")
@click.option("--radius", type=int, help="Hexagonal grid radius in cell rings.")
@click.option("--rings", type=int, help="Spiderweb concentric cycles.")
@click.option("--spokes", type=int, help="Spiderweb radial spokes.")
@click.option("--out", default=".", show_default=True, help="Output directory.")
@click.pass_context
@handle_cli_errors
def gen(
    ctx: click.Context,
    family: str,
    size: int | None,
    rows: int | None,
    cols: int | None,
    radius: int | None,
    rings: int | None,
    spokes: int | None,
    out: str,
) -> None:
    """Generate a graph family instance as .pg (plus .cts or tree files).

    Triangular grids from k = 5 also get their canonical center-tail
    system; spiderwebs get the low-congestion tree and the naive tree.

    Example:
        planar-stc gen --family triangular --size 5 --out graphs/

        planar-stc gen --family spiderweb --rings 3 --spokes 4
    """
    written = generate_files(
        family,
        Path(out),
        size=size,
        rows=rows,
        cols=cols,
        radius=radius,
        rings=rings,
        spokes=spokes,
    )
    for path in written:
        click.echo(str(path))
    if not is_quiet(ctx):
        print_success(f"Wrote {len(written)} file(s)")

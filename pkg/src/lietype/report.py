"""Rendered group summaries: a delimited table plus matplotlib figures.

Everything lands in one output directory: the full character table as
TSV, a bar chart of irreducible degrees, and the torus-class profile
(orders against the ambient order's p'-part).  The math modules never
import this; plotting stays an output-only concern.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

from .chars import DEFAULT_SEED, snap_int, table_of
from .dlchar import dl_dimension
from .groups import build_group
from .rootdata import group_order_polynomial, p_part_split
from .tori import classical_torus_classes


def _fmt_value(v: complex) -> str:
    if abs(v.imag) < 1e-9 and abs(v.real - round(v.real)) < 1e-9:
        return str(int(round(v.real)))
    if abs(v.imag) < 1e-9:
        return f"{v.real:.4f}"
    return f"{v.real:.4f}{v.imag:+.4f}i"


def _slug(family: str, n: int, q: int) -> str:
    return f"{family.lower()}{n}_f{q}"


def write_table_tsv(path: str, G, tab) -> None:
    cc = G.conjugacy_classes()
    with open(path, "w", encoding="utf-8") as fh:
        header = ["degree"] + [f"c{c}(size {cc.sizes[c]})" for c in range(cc.n_classes)]
        fh.write("\t".join(header) + "\n")
        for chi in tab.rows:
            cells = [str(snap_int(chi.degree))] + [_fmt_value(v) for v in chi.values]
            fh.write("\t".join(cells) + "\n")


def _degree_figure(path: str, label: str, degrees) -> None:
    fig, ax = plt.subplots(figsize=(6, 3.2))
    xs = range(len(degrees))
    ax.bar(xs, degrees, color="#336699")
    ax.set_xlabel("irreducible (sorted by degree)")
    ax.set_ylabel("degree")
    ax.set_title(f"irreducible degrees of {label}")
    ax.set_xticks(list(xs))
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _torus_figure(path: str, label: str, family: str, n: int, q: int) -> None:
    classes = classical_torus_classes(family, n)
    tags = [tc.tag for tc in classes]
    orders = [tc.order(q) for tc in classes]
    _, pprime = p_part_split(group_order_polynomial(family, n), q)
    fig, ax = plt.subplots(figsize=(6, 3.2))
    xs = range(len(tags))
    ax.bar(xs, orders, color="#993333")
    ax.axhline(pprime, color="#333333", linewidth=1, linestyle="--",
               label=f"|G|_p' = {pprime}")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(tags, rotation=30, ha="right")
    ax.set_ylabel("|T|")
    ax.set_title(f"torus-class orders of {label}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_group_report(out_dir: str, family: str, n: int, q: int,
                       seed: int = DEFAULT_SEED) -> list:
    """Render the table TSV and the two figures; returns written paths."""
    os.makedirs(out_dir, exist_ok=True)
    G = build_group(family, n, q)
    tab = table_of(G, seed)
    slug = _slug(family, n, q)

    paths = []
    tsv = os.path.join(out_dir, f"{slug}_table.tsv")
    write_table_tsv(tsv, G, tab)
    paths.append(tsv)

    deg_png = os.path.join(out_dir, f"{slug}_degrees.png")
    _degree_figure(deg_png, G.label, list(tab.degrees))
    paths.append(deg_png)

    if G.family != "SL":  # the determinant-one family has no torus table
        tori_png = os.path.join(out_dir, f"{slug}_tori.png")
        _torus_figure(tori_png, G.label, G.family, n, q)
        paths.append(tori_png)

        dims_tsv = os.path.join(out_dir, f"{slug}_torus_dims.tsv")
        with open(dims_tsv, "w", encoding="utf-8") as fh:
            fh.write("tag\torder\tweyl_order\tsplit_rank\tdimension\n")
            for tc in classical_torus_classes(G.family, n):
                fh.write(f"{tc.tag}\t{tc.order(q)}\t{tc.weyl_order}\t{tc.split_rank}"
                         f"\t{dl_dimension(tc, q)}\n")
        paths.append(dims_tsv)
    return paths

"""Deterministic text renderings of decompositions and dependency tables."""

from __future__ import annotations

from .cascade import DependencyTable, LagrangeDecomposition

__all__ = ["summary_text", "table_tsv", "table_dot", "format_prefix", "format_image"]


def _yn(flags) -> str:
    return " ".join("yes" if f else "no" for f in flags) or "-"


def _nums(xs) -> str:
    return " ".join(map(str, xs)) or "-"


def summary_text(D: LagrangeDecomposition) -> str:
    orders = D.component_orders()
    lines = [
        f"length {D.length}, widths {_nums(D.widths)}, component orders {_nums(orders)}",
        f"kind: {D.chain.kind}",
        f"group order: {D.top.order()}",
        f"chain orders: {_nums(G.order() for G in D.chain)}",
        f"subnormal: {_yn(D.subnormal_flags)}",
        f"states: {D.state_count}",
    ]
    return "\n".join(lines) + "\n"


def format_prefix(prefix) -> str:
    return ",".join(map(str, prefix)) if prefix else "-"


def format_image(image) -> str:
    """One-line images on 0-based coset indices."""
    return ",".join(map(str, image))


def table_tsv(table: DependencyTable) -> str:
    """``level<TAB>prefix<TAB>image`` rows; levels 1-based, prefixes sorted."""
    rows = ["level\tprefix\timage"]
    for level, prefix, image in table.rows():
        rows.append(f"{level + 1}\t{format_prefix(prefix)}\t{format_image(image)}")
    return "\n".join(rows) + "\n"


def table_dot(table: DependencyTable, name: str = "dependencies") -> str:
    """The dependency tree in Graphviz DOT: nodes are prefixes labelled by
    the component image, edges are labelled by the coordinate value."""
    out = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]

    def node_id(prefix):
        return "n" + ("_".join(map(str, prefix)) if prefix else "root")

    for level, prefix, image in table.rows():
        out.append(f'  {node_id(prefix)} [label="L{level + 1}: {format_image(image)}"];')
        if prefix:
            out.append(f'  {node_id(prefix[:-1])} -> {node_id(prefix)} [label="{prefix[-1]}"];')
    out.append("}")
    return "\n".join(out) + "\n"

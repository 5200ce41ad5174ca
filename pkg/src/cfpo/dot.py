"""Graphviz output of cover diagrams."""

from __future__ import annotations

from typing import Iterable

from .poset import ColoredPoset, covers


def _quote(x) -> str:
    return '"' + str(x).replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(P: ColoredPoset, *, virtual: Iterable = (), u_predicate: str = "U",
             name: str = "poset") -> str:
    """Hasse diagram with edges pointing upwards.

    Points in ``virtual`` are dashed and members of ``u_predicate`` are filled.
    """
    virtual = frozenset(virtual) | P.colors.get("VIRTUAL", frozenset())
    upred = P.colors.get(u_predicate, frozenset())
    order = {x: i for i, x in enumerate(P.elements)}
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for x in P.elements:
        attrs = []
        if x in virtual:
            attrs.append("style=dashed")
        elif x in upred:
            attrs.append('style=filled fillcolor="#b3cde3"')
        sig = [c for c in P.color_signature(x) if c not in (u_predicate, "VIRTUAL")]
        if sig:
            attrs.append(f"xlabel={_quote(','.join(sig))}")
        lines.append(f"  {_quote(x)}" + (f" [{' '.join(attrs)}]" if attrs else "") + ";")
    for x, y in sorted(covers(P).edges, key=lambda e: (order[e[0]], order[e[1]])):
        lines.append(f"  {_quote(x)} -> {_quote(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"

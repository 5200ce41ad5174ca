"""JSON documents for posets, trees and groups.

A poset document looks like::

    {"elements": ["a", "b"], "leq": [["a", "b"]], "colors": {"red": ["a"]}}

``leq`` may be any generating set of pairs; the reflexive-transitive closure
is taken on load. Output documents list the cover pairs only.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .groups import PermGroup, Permutation
from .poset import ColoredPoset, build, covers


class MalformedInput(ValueError):
    """The input is not a well-formed poset document."""


def _element(x: Any):
    if isinstance(x, (str, int)) and not isinstance(x, bool):
        return x
    raise MalformedInput(f"element ids must be strings or integers, got {x!r}")


def poset_from_doc(doc: Any, *, allow_reserved: bool = False) -> ColoredPoset:
    if not isinstance(doc, Mapping):
        raise MalformedInput("document must be a JSON object")
    unknown = set(doc) - {"elements", "leq", "colors", "virtual"}
    if unknown:
        raise MalformedInput(f"unknown keys: {sorted(unknown)}")
    elements = doc.get("elements")
    if not isinstance(elements, list):
        raise MalformedInput("'elements' must be a list")
    elements = [_element(x) for x in elements]
    leq = doc.get("leq", [])
    if not isinstance(leq, list) or not all(isinstance(p, list) and len(p) == 2 for p in leq):
        raise MalformedInput("'leq' must be a list of pairs")
    colors = doc.get("colors", {})
    if not isinstance(colors, Mapping) or not all(
            isinstance(k, str) and isinstance(v, list) for k, v in colors.items()):
        raise MalformedInput("'colors' must map names to lists")
    pairs = [(_element(x), _element(y)) for x, y in leq]
    return build(elements, pairs, {k: [_element(x) for x in v] for k, v in colors.items()},
                 allow_reserved=allow_reserved)


def loads(text: str, **kw) -> ColoredPoset:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None
    return poset_from_doc(doc, **kw)


def poset_to_doc(P: ColoredPoset) -> dict:
    order = {x: i for i, x in enumerate(P.elements)}
    edges = sorted(covers(P).edges, key=lambda e: (order[e[0]], order[e[1]]))
    return {
        "elements": list(P.elements),
        "leq": [[x, y] for x, y in edges],
        "colors": {c: P.sorted(m) for c, m in P.colors.items()},
    }


def perm_to_doc(f: Permutation) -> list:
    return [list(c) for c in f.cycles()]


def group_to_doc(G: PermGroup) -> dict:
    return {
        "order": G.order(),
        "generators": [perm_to_doc(g) for g in G.generators],
        "orbits": [[x for x in G.carrier if x in o] for o in G.orbits()],
    }


def _default(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj, key=str)
    raise TypeError(f"not JSON serialisable: {obj!r}")


def dumps(doc: Any, *, indent: int | None = 2) -> str:
    return json.dumps(doc, sort_keys=True, indent=indent, ensure_ascii=False, default=_default)

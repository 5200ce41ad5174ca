"""Exhaustive generation of small posets and rooted trees up to isomorphism.

Every finite poset on ``n + 1`` points arises from one on ``n`` points by
adding a new maximal point above a down-closed set, so posets are generated
level by level and deduplicated by an isomorphism-invariant hash followed by
an exact isomorphism test inside each bucket.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from .aut import invariant, isomorphic
from .paths import is_cfpo, is_connected
from .poset import ColoredPoset, bits, build, disjoint_union

NAMES = "abcdefghijklmnopqrstuvwxyz"


def _down_sets(P: ColoredPoset) -> Iterator[int]:
    n = len(P)
    for m in range(1 << n):
        if all(P.down[i] & ~m == 0 for i in bits(m)):
            yield m


def _extend(P: ColoredPoset, m: int) -> ColoredPoset:
    n = len(P)
    return ColoredPoset(P.elements + (NAMES[n],), P.down + (m | 1 << n,))


class _Dedup:
    def __init__(self):
        self.buckets: dict = {}
        self.items: list = []

    def add(self, P: ColoredPoset) -> bool:
        bucket = self.buckets.setdefault(invariant(P), [])
        if any(isomorphic(P, Q) for Q in bucket):
            return False
        bucket.append(P)
        self.items.append(P)
        return True


@lru_cache(maxsize=None)
def _level(n: int, cfpo_only: bool) -> tuple:
    if n == 0:
        return (ColoredPoset((), ()),)
    seen = _Dedup()
    for P in _level(n - 1, cfpo_only):
        for m in _down_sets(P):
            Q = _extend(P, m)
            if cfpo_only and not is_cfpo(Q):
                continue
            seen.add(Q)
    return tuple(seen.items)


def posets(n: int) -> tuple:
    """All posets on ``n`` points up to isomorphism (1, 1, 2, 5, 16, 63, 318, ...)."""
    return _level(n, False)


def cfpos(n: int, *, prune: bool = True) -> tuple:
    """CFPOs on ``n`` points up to isomorphism.

    With ``prune`` only CFPOs are extended, which relies on every CFPO having
    a maximal point whose removal leaves a CFPO (checked by the test suite for
    small sizes).
    """
    if prune:
        return _level(n, True)
    return tuple(P for P in posets(n) if is_cfpo(P))


def connected_cfpos(n: int, **kw) -> tuple:
    return tuple(P for P in cfpos(n, **kw) if is_connected(P))


def up_to(gen: Callable[[int], tuple], max_n: int, min_n: int = 1) -> Iterator[ColoredPoset]:
    for n in range(min_n, max_n + 1):
        yield from gen(n)


# -- rooted trees ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _tree_shapes(n: int) -> tuple:
    """Rooted unlabelled trees on ``n`` nodes as sorted nested tuples."""
    if n == 1:
        return ((),)
    out = set()
    for children in _forests(n - 1, n - 1):
        out.add(tuple(sorted(children)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _forests(n: int, cap: int) -> tuple:
    """Multisets of rooted trees with ``n`` nodes total, each of size <= cap."""
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, cap), 0, -1):
        for t in _tree_shapes(k):
            for rest in _forests(n - k, k):
                # keep multisets canonical: trees of equal size in sorted order
                if rest and _size(rest[0]) == k and rest[0] < t:
                    continue
                out.append((t,) + rest)
    return tuple(out)


def _size(shape: tuple) -> int:
    return 1 + sum(_size(c) for c in shape)


def tree_from_shape(shape: tuple) -> ColoredPoset:
    elems: list = []
    pairs: list = []

    def walk(s, parent):
        name = f"t{len(elems)}"
        elems.append(name)
        if parent is not None:
            pairs.append((parent, name))
        for c in s:
            walk(c, name)

    walk(shape, None)
    return build(elems, pairs)


def rooted_trees(n: int) -> tuple:
    """Rooted trees on ``n`` nodes up to isomorphism (1, 1, 2, 4, 9, 20, 48, ...)."""
    return tuple(tree_from_shape(s) for s in _tree_shapes(n))


# -- disjoint unions ------------------------------------------------------------------

def tagged(P: ColoredPoset, tag: str) -> ColoredPoset:
    return P.relabel({x: f"{x}{tag}" for x in P.elements})


def component_unions(parts: tuple, counts: tuple = (2, 3)) -> Iterator[ColoredPoset]:
    """Disjoint unions of ``k`` members of ``parts`` (with repetition) for ``k`` in counts."""
    for k in counts:
        for combo in combinations_with_replacement(range(len(parts)), k):
            yield disjoint_union(*(tagged(parts[i], f"_{j}") for j, i in enumerate(combo)))

"""Bounded-cut Dedekind-MacNeille completion of a finite poset.

Only cuts with both sides nonempty are adjoined, so no global top or bottom is
ever added. A cut is represented by its lower side, which is always a nonempty
intersection of principal down-sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .poset import ColoredPoset, bits


@dataclass(frozen=True)
class Completion:
    completed: ColoredPoset
    embedding: Mapping
    virtual: frozenset
    cuts: Mapping  # virtual id -> (lower side, upper side) as frozensets of originals

    @property
    def original(self) -> tuple:
        return tuple(x for x in self.completed.elements if x not in self.virtual)


def _lower_sides(P: ColoredPoset) -> set[int]:
    sides = set(P.down)
    frontier = set(sides)
    while frontier:
        new = set()
        for a in frontier:
            for b in sides:
                c = a & b
                if c and c not in sides and c not in new:
                    new.add(c)
        sides |= new
        frontier = new
    return sides


def _upper_of(P: ColoredPoset, lower: int) -> int:
    m = (1 << len(P)) - 1
    for i in bits(lower):
        m &= P.up[i]
    return m


def _cut_name(P: ColoredPoset, lower: int, upper: int, taken: set) -> str:
    name = "cut({}|{})".format(",".join(map(str, P.ids_sorted(lower))),
                               ",".join(map(str, P.ids_sorted(upper))))
    while name in taken:
        name += "'"
    return name


@lru_cache(maxsize=8192)
def complete(P: ColoredPoset) -> Completion:
    n = len(P)
    principal = set(P.down)
    virtual_sides = sorted(
        (s for s in _lower_sides(P) if s not in principal),
        key=lambda s: (bin(s).count("1"), [i for i in bits(s)]),
    )
    taken = set(P.elements)
    names = []
    cuts = {}
    for s in virtual_sides:
        upper = _upper_of(P, s)
        name = _cut_name(P, s, upper, taken)
        taken.add(name)
        names.append(name)
        cuts[name] = (P.ids(s), P.ids(upper))
    sides = list(P.down) + virtual_sides
    total = n + len(virtual_sides)
    down = []
    for i in range(total):
        m = 0
        for j in range(total):
            if sides[j] & ~sides[i] == 0:
                m |= 1 << j
        down.append(m)
    completed = ColoredPoset(list(P.elements) + names, down, P.colors)
    return Completion(
        completed=completed,
        embedding={x: x for x in P.elements},
        virtual=frozenset(names),
        cuts=cuts,
    )

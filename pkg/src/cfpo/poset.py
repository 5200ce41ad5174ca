"""Finite coloured partial orders.

A :class:`ColoredPoset` stores its order as two lists of bitmasks indexed by
element position: ``down[i]`` has bit ``j`` set iff ``elements[j] <= elements[i]``
and ``up[i]`` is the transpose. Instances are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, Optional, Sequence

from .errors import CycleInOrder, DuplicateElement, ReservedColor, UnknownElement

Element = Hashable

RESERVED_COLORS = frozenset({"U", "ROOT", "VIRTUAL", "ADJOINED", "CORE"})


def is_reserved(name: str) -> bool:
    return name in RESERVED_COLORS or (
        name.startswith("P_") and name[2:].isdigit()
    )


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ColoredPoset:
    __slots__ = ("elements", "index", "down", "up", "colors", "_hash")

    def __init__(self, elements: Sequence[Element], down: Sequence[int],
                 colors: Mapping[str, Iterable[Element]] | None = None):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.down = tuple(down)
        n = len(self.elements)
        up = [0] * n
        for i, m in enumerate(self.down):
            for j in bits(m):
                up[j] |= 1 << i
        self.up = tuple(up)
        self.colors = {
            name: frozenset(members) for name, members in sorted((colors or {}).items())
        }
        self._hash = None

    # construction ---------------------------------------------------------

    @classmethod
    def build(cls, elements: Sequence[Element], pairs: Iterable[tuple] = (),
              colors: Mapping[str, Iterable[Element]] | None = None, *,
              allow_reserved: bool = False) -> "ColoredPoset":
        """Close ``pairs`` reflexively and transitively and validate the result.

        Raises CycleInOrder if the closure is not antisymmetric.
        """
        elements = list(elements)
        index: dict = {}
        for i, x in enumerate(elements):
            if x in index:
                raise DuplicateElement(f"duplicate element {x!r}", element=x)
            index[x] = i
        n = len(elements)
        down = [1 << i for i in range(n)]
        for x, y in pairs:
            if x not in index or y not in index:
                stray = x if x not in index else y
                raise UnknownElement(f"unknown element {stray!r}", element=stray)
            down[index[y]] |= 1 << index[x]
        # Warshall over bitmasks
        for k in range(n):
            bk = 1 << k
            dk = down[k]
            for i in range(n):
                if down[i] & bk:
                    down[i] |= dk
        for i in range(n):
            for j in bits(down[i]):
                if j != i and down[j] >> i & 1:
                    raise CycleInOrder(
                        f"{elements[i]!r} and {elements[j]!r} lie on a cycle",
                        pair=[elements[j], elements[i]],
                    )
        colors = dict(colors or {})
        for name, members in colors.items():
            if not allow_reserved and is_reserved(name):
                raise ReservedColor(f"colour name {name!r} is reserved", color=name)
            for x in members:
                if x not in index:
                    raise UnknownElement(f"coloured element {x!r} not in carrier",
                                         element=x)
        return cls(elements, down, colors)

    # basic queries --------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredPoset):
            return NotImplemented
        return (self.elements == other.elements and self.down == other.down
                and self.colors == other.colors)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.elements, self.down,
                               tuple(self.colors.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"ColoredPoset({list(self.elements)!r}, {self.relation_pairs()!r})"

    def idx(self, x) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}", element=x) from None

    def leq(self, x, y) -> bool:
        return bool(self.down[self.idx(y)] >> self.idx(x) & 1)

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def ids(self, mask: int) -> frozenset:
        return frozenset(self.elements[i] for i in bits(mask))

    def ids_sorted(self, mask: int) -> list:
        return [self.elements[i] for i in bits(mask)]

    def mask(self, xs: Iterable) -> int:
        m = 0
        for x in xs:
            m |= 1 << self.idx(x)
        return m

    def sorted(self, xs: Iterable) -> list:
        """Elements of ``xs`` in the poset's declared order."""
        return sorted(xs, key=self.idx)

    def relation_pairs(self, strict: bool = True) -> list[tuple]:
        out = []
        for i, x in enumerate(self.elements):
            for j in bits(self.up[i]):
                if strict and i == j:
                    continue
                out.append((x, self.elements[j]))
        return out

    def color_signature(self, x) -> tuple:
        return tuple(name for name, members in self.colors.items() if x in members)

    # derived structures ---------------------------------------------------

    def induced(self, xs: Iterable) -> "ColoredPoset":
        keep = [i for i in range(len(self)) if self.elements[i] in set(xs)]
        pos = {i: k for k, i in enumerate(keep)}
        down = []
        for i in keep:
            m = 0
            for j in bits(self.down[i]):
                if j in pos:
                    m |= 1 << pos[j]
            down.append(m)
        elems = [self.elements[i] for i in keep]
        kept = set(elems)
        colors = {c: [x for x in ms if x in kept] for c, ms in self.colors.items()}
        return ColoredPoset(elems, down, {c: ms for c, ms in colors.items() if ms})

    def dual(self) -> "ColoredPoset":
        return ColoredPoset(self.elements, self.up, self.colors)

    def with_colors(self, colors: Mapping[str, Iterable], *, replace: bool = False
                    ) -> "ColoredPoset":
        merged = {} if replace else dict(self.colors)
        for name, members in colors.items():
            members = frozenset(members)
            if members:
                merged[name] = members
            else:
                merged.pop(name, None)
        return ColoredPoset(self.elements, self.down, merged)

    def without_colors(self, names: Iterable[str]) -> "ColoredPoset":
        names = set(names)
        return ColoredPoset(self.elements, self.down,
                            {c: m for c, m in self.colors.items() if c not in names})

    def relabel(self, mapping: Mapping) -> "ColoredPoset":
        elems = [mapping[x] for x in self.elements]
        colors = {c: [mapping[x] for x in m] for c, m in self.colors.items()}
        return ColoredPoset(elems, self.down, colors)


@dataclass(frozen=True)
class CoverGraph:
    """Cover pairs ``(x, y)`` with ``x`` covered by ``y``."""

    elements: tuple
    edges: frozenset

    def neighbours(self) -> dict:
        adj: dict = {x: [] for x in self.elements}
        order = {x: i for i, x in enumerate(self.elements)}
        for x, y in self.edges:
            adj[x].append(y)
            adj[y].append(x)
        for x in adj:
            adj[x].sort(key=order.__getitem__)
        return adj


def build(elements, relation_pairs=(), colors=None, **kw) -> ColoredPoset:
    return ColoredPoset.build(elements, relation_pairs, colors, **kw)


def cover_masks(P: ColoredPoset) -> list[int]:
    """``result[i]`` is the mask of upper covers of element ``i``."""
    n = len(P)
    out = []
    for i in range(n):
        above = P.up[i] & ~(1 << i)
        m = 0
        for j in bits(above):
            between = above & P.down[j] & ~(1 << j)
            if not between:
                m |= 1 << j
        out.append(m)
    return out


def covers(P: ColoredPoset) -> CoverGraph:
    edges = set()
    for i, m in enumerate(cover_masks(P)):
        for j in bits(m):
            edges.add((P.elements[i], P.elements[j]))
    return CoverGraph(P.elements, frozenset(edges))


def principal_sets(P: ColoredPoset, x) -> tuple[frozenset, frozenset]:
    i = P.idx(x)
    return P.ids(P.down[i]), P.ids(P.up[i])


def meet(P: ColoredPoset, x, y) -> Optional[Element]:
    """Greatest common lower bound of ``x`` and ``y``, or None."""
    common = P.down[P.idx(x)] & P.down[P.idx(y)]
    for i in bits(common):
        if common & ~P.down[i] == 0:
            return P.elements[i]
    return None


def is_chain_mask(P: ColoredPoset, mask: int) -> bool:
    return all(mask & ~(P.down[i] | P.up[i]) == 0 for i in bits(mask))


def comparability_components(P: ColoredPoset) -> list[frozenset]:
    seen = 0
    comps = []
    for i in range(len(P)):
        if seen >> i & 1:
            continue
        comp = 1 << i
        frontier = comp
        while frontier:
            nxt = 0
            for j in bits(frontier):
                nxt |= P.down[j] | P.up[j]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(P.ids(comp))
    return comps


def _is_rooted_tree(P: ColoredPoset, mask: int) -> bool:
    if not mask:
        return False
    common = mask
    for i in bits(mask):
        if not is_chain_mask(P, P.down[i] & mask):
            return False
        common &= P.down[i]
    # finite and downward-directed iff some element lies below everything
    return common != 0


def is_tree(P: ColoredPoset) -> bool:
    """Connected, all down-sets chains, every pair bounded below."""
    return _is_rooted_tree(P, (1 << len(P)) - 1)


def is_forest(P: ColoredPoset) -> bool:
    return all(_is_rooted_tree(P, P.mask(c)) for c in comparability_components(P))


def minimal_elements(P: ColoredPoset) -> list:
    return [x for i, x in enumerate(P.elements) if P.down[i] == 1 << i]


def maximal_elements(P: ColoredPoset) -> list:
    return [x for i, x in enumerate(P.elements) if P.up[i] == 1 << i]


def disjoint_union(*parts: ColoredPoset) -> ColoredPoset:
    elems: list = []
    pairs: list = []
    colors: dict = {}
    for part in parts:
        elems.extend(part.elements)
        pairs.extend(part.relation_pairs())
        for c, m in part.colors.items():
            colors.setdefault(c, set()).update(m)
    return ColoredPoset.build(elems, pairs, colors, allow_reserved=True)

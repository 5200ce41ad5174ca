"""Automorphism groups, orbits and canonical forms of finite coloured posets.

The search refines an invariant colouring of the carrier to stability and then
backtracks along a base, collecting one automorphism per new image of each
base point (deepest level first). The product of the resulting orbit sizes is
the group order. Refinement only prunes; every candidate map is checked
against the order relation, so correctness does not depend on its strength.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from .errors import NotACFPO, NotATree, TooLarge
from .groups import MATERIALISE_CARRIER, MATERIALISE_ELEMENTS, PermGroup, Permutation
from .poset import ColoredPoset, bits, cover_masks, is_tree, maximal_elements


def _compress(values: Sequence) -> list[int]:
    rank = {v: k for k, v in enumerate(sorted(set(values)))}
    return [rank[v] for v in values]


def _initial_colouring(P: ColoredPoset) -> list[int]:
    ups = cover_masks(P)
    downs = [0] * len(P)
    for i, m in enumerate(ups):
        for j in bits(m):
            downs[j] |= 1 << i
    inv = []
    for i, x in enumerate(P.elements):
        inv.append((P.color_signature(x), bin(P.down[i]).count("1"),
                    bin(P.up[i]).count("1"), bin(downs[i]).count("1"),
                    bin(ups[i]).count("1")))
    return _compress(inv)


def _refine(P: ColoredPoset, col: list[int]) -> list[int]:
    """Refine ``col`` until the down/up colour multisets are constant on cells."""
    n = len(P)
    while True:
        sig = []
        for i in range(n):
            dn = sorted(col[j] for j in bits(P.down[i]) if j != i)
            up = sorted(col[j] for j in bits(P.up[i]) if j != i)
            sig.append((col[i], tuple(dn), tuple(up)))
        new = _compress(sig)
        if len(set(new)) == len(set(col)):
            return new
        col = new


@lru_cache(maxsize=8192)
def equitable_colouring(P: ColoredPoset) -> tuple[int, ...]:
    return tuple(_refine(P, _initial_colouring(P)))


def _consistent(P: ColoredPoset, Q: ColoredPoset, i: int, c: int,
                assigned: list[int], image: list[int]) -> bool:
    di, ui, dc, uc = P.down[i], P.up[i], Q.down[c], Q.up[c]
    for j in assigned:
        fj = image[j]
        if (di >> j & 1) != (dc >> fj & 1) or (ui >> j & 1) != (uc >> fj & 1):
            return False
    return True


def _search(P: ColoredPoset, Q: ColoredPoset, order: list[int], colP: Sequence,
            colQ: Sequence, prefix: dict) -> Optional[list[int]]:
    """An isomorphism ``P -> Q`` respecting the cell colourings and ``prefix``."""
    n = len(P)
    image = [-1] * n
    used = 0
    assigned: list[int] = []
    for i, c in prefix.items():
        if colP[i] != colQ[c] or used >> c & 1 or not _consistent(P, Q, i, c, assigned, image):
            return None
        image[i] = c
        used |= 1 << c
        assigned.append(i)
    rest = [i for i in order if i not in prefix]
    cells: dict = {}
    for j in range(len(Q)):
        cells.setdefault(colQ[j], []).append(j)

    def rec(k: int, used: int) -> bool:
        if k == len(rest):
            return True
        i = rest[k]
        for c in cells.get(colP[i], ()):
            if used >> c & 1:
                continue
            if not _consistent(P, Q, i, c, assigned, image):
                continue
            image[i] = c
            assigned.append(i)
            if rec(k + 1, used | 1 << c):
                return True
            assigned.pop()
            image[i] = -1
        return False

    return list(image) if rec(0, used) else None


def _base_order(P: ColoredPoset, col: tuple) -> list[int]:
    size: dict = {}
    for c in col:
        size[c] = size.get(c, 0) + 1
    return sorted(range(len(P)), key=lambda i: (size[col[i]], col[i], i))


@lru_cache(maxsize=8192)
def automorphisms(P: ColoredPoset) -> PermGroup:
    """Full automorphism group of ``P`` (order and colour classes preserved)."""
    n = len(P)
    col = equitable_colouring(P)
    base = _base_order(P, col)
    gens: list[list[int]] = []
    for k in range(n - 1, -1, -1):
        b = base[k]
        fixed = {base[j]: base[j] for j in range(k)}
        orbit = {b}
        queue = [b]

        def grow():
            for p in queue:
                for g in gens:
                    if g[p] not in orbit:
                        orbit.add(g[p])
                        queue.append(g[p])

        grow()
        for c in range(n):
            if c in orbit or col[c] != col[b]:
                continue
            g = _search(P, P, base, col, col, {**fixed, b: c})
            if g is not None:
                gens.append(g)
                grow()
    carrier = P.elements
    return PermGroup(carrier, [Permutation(carrier, g) for g in gens])


def is_automorphism(P: ColoredPoset, f: Permutation) -> bool:
    for x in P.elements:
        if P.color_signature(x) != P.color_signature(f(x)):
            return False
        for y in P.elements:
            if P.leq(x, y) != P.leq(f(x), f(y)):
                return False
    return True


# -- canonical forms ---------------------------------------------------------

def _individualise(col: Sequence[int], v: int) -> list[int]:
    out = [2 * c + 1 for c in col]
    out[v] = 2 * col[v]
    return _compress(out)


def canonical_labelling(P: ColoredPoset) -> tuple[tuple, list[int]]:
    """``(code, order)``: a complete invariant and an element order realising it."""
    n = len(P)
    sigs = [P.color_signature(x) for x in P.elements]
    best: list = [None, None]

    def code_for(order: list[int]) -> tuple:
        pos = {i: k for k, i in enumerate(order)}
        rel = tuple(sum(1 << pos[j] for j in bits(P.down[i])) for i in order)
        return (tuple(sigs[i] for i in order), rel)

    def rec(col: list[int]):
        if len(set(col)) == n:
            order = sorted(range(n), key=col.__getitem__)
            code = code_for(order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        size: dict = {}
        for c in col:
            size[c] = size.get(c, 0) + 1
        target = min(c for c in size if size[c] > 1)
        for v in range(n):
            if col[v] == target:
                rec(_refine(P, _individualise(col, v)))

    rec(list(equitable_colouring(P)))
    return (n, best[0]), best[1]


def canonical_form(P: ColoredPoset) -> tuple:
    return canonical_labelling(P)[0]


@lru_cache(maxsize=65536)
def vertex_invariants(P: ColoredPoset) -> tuple:
    """Per-element invariants comparable across posets (unlike cell numbers)."""
    n = len(P)
    ups = cover_masks(P)
    inv = [hash((P.color_signature(x), bin(P.down[i]).count("1"), bin(P.up[i]).count("1"),
                 bin(ups[i]).count("1")))
           for i, x in enumerate(P.elements)]
    classes = len(set(inv))
    for _ in range(n):
        inv = [hash((inv[i], tuple(sorted(inv[j] for j in bits(P.down[i]) if j != i)),
                     tuple(sorted(inv[j] for j in bits(P.up[i]) if j != i))))
               for i in range(n)]
        if len(set(inv)) == classes:
            break
        classes = len(set(inv))
    return tuple(inv)


def invariant(P: ColoredPoset) -> tuple:
    return (len(P), tuple(sorted(vertex_invariants(P))))


def isomorphism(P: ColoredPoset, Q: ColoredPoset) -> Optional[dict]:
    """Some colour-preserving order isomorphism ``P -> Q``, or None."""
    if invariant(P) != invariant(Q):
        return None
    colP, colQ = vertex_invariants(P), vertex_invariants(Q)
    size: dict = {}
    for c in colP:
        size[c] = size.get(c, 0) + 1
    order = sorted(range(len(P)), key=lambda i: (size[colP[i]], i))
    image = _search(P, Q, order, colP, colQ, {})
    if image is None:
        return None
    return {P.elements[i]: Q.elements[j] for i, j in enumerate(image)}


def isomorphic(P: ColoredPoset, Q: ColoredPoset) -> bool:
    return isomorphism(P, Q) is not None


# -- orbits --------------------------------------------------------------------

def orbits(P: ColoredPoset, k: int, group: PermGroup | None = None, *,
           carrier_bound: int = MATERIALISE_CARRIER,
           tuple_bound: int = MATERIALISE_ELEMENTS) -> list[frozenset]:
    """Orbits of the diagonal action on all ``k``-tuples.

    Orbits come in order of their lexicographically first tuple.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if len(P) > carrier_bound:
        raise TooLarge(f"carrier of size {len(P)} exceeds {carrier_bound}",
                       size=len(P), bound=carrier_bound)
    if len(P) ** k > tuple_bound:
        raise TooLarge(f"{len(P)}^{k} tuples exceed {tuple_bound}", bound=tuple_bound)
    G = group or automorphisms(P)
    tuples = list(product(P.elements, repeat=k))
    parent = {t: t for t in tuples}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    for g in G.generators:
        for t in tuples:
            a, b = find(t), find(tuple(g(x) for x in t))
            if a != b:
                parent[b] = a
    groups: dict = {}
    for t in tuples:
        groups.setdefault(find(t), []).append(t)
    return [frozenset(v) for v in groups.values()]


def fixed_points(P: ColoredPoset) -> frozenset:
    G = automorphisms(P)
    return frozenset(x for x in P.elements if all(g(x) == x for g in G.generators))


def _pattern(P: ColoredPoset, t: Sequence) -> tuple:
    k = len(t)
    return (tuple(P.color_signature(x) for x in t),
            tuple((t[i] == t[j], P.leq(t[i], t[j])) for i in range(k) for j in range(k)))


def adjacent_pairs(P: ColoredPoset, t: Sequence) -> list[tuple[int, int]]:
    """Comparable index pairs with no other tuple entry strictly between them."""
    k = len(t)
    out = []
    for i in range(k):
        for j in range(k):
            if not P.comparable(t[i], t[j]):
                continue
            lo, hi = (t[i], t[j]) if P.leq(t[i], t[j]) else (t[j], t[i])
            if any(P.lt(lo, t[m]) and P.lt(t[m], hi) for m in range(k)):
                continue
            out.append((i, j))
    return out


def _two_orbit_index(P: ColoredPoset) -> dict:
    return {t: n for n, orb in enumerate(orbits(P, 2)) for t in orb}


def orbit_criterion_signature(P: ColoredPoset, t: Sequence, two_orbits: dict | None = None) -> tuple:
    two_orbits = two_orbits or _two_orbit_index(P)
    return (_pattern(P, t),
            tuple(two_orbits[(t[i], t[j])] for i, j in adjacent_pairs(P, t)))


def same_orbit_criterion(P: ColoredPoset, a: Sequence, b: Sequence) -> bool:
    """Decide orbit equality of two tuples from 2-orbits of adjacent pairs.

    The map ``a_i -> b_i`` must be an isomorphism of the finite structures,
    and every adjacent pair of ``a`` must share a 2-orbit with its image.
    """
    from .paths import is_cfpo

    if not is_cfpo(P):
        raise NotACFPO("orbit criterion needs a CFPO")
    if len(a) != len(b):
        raise ValueError("tuples must have equal length")
    if _pattern(P, a) != _pattern(P, b):
        return False
    idx = _two_orbit_index(P)
    return all(idx[(a[i], a[j])] == idx[(b[i], b[j])] for i, j in adjacent_pairs(P, a))


# -- trees -----------------------------------------------------------------------

def ramification(T: ColoredPoset, x) -> int:
    return bin(cover_masks(T)[T.idx(x)]).count("1")


def is_fh_regular(T: ColoredPoset) -> bool:
    if not is_tree(T):
        raise NotATree("fh-regularity is defined for trees")
    ups = cover_masks(T)
    leaves = [i for i in range(len(T)) if ups[i] == 0]
    depths = {bin(T.down[i]).count("1") for i in leaves}
    if len(depths) != 1:
        return False
    by_depth: dict = {}
    for i in range(len(T)):
        if ups[i] == 0:
            continue
        r = bin(ups[i]).count("1")
        if r < 2:
            return False
        by_depth.setdefault(bin(T.down[i]).count("1"), set()).add(r)
    return all(len(v) == 1 for v in by_depth.values())


def transitive_on_maximal(P: ColoredPoset) -> bool:
    tops = maximal_elements(P)
    return automorphisms(P).orbit(tops[0]) == frozenset(tops)


# -- replacement posets ------------------------------------------------------------

def blow_up(R: ColoredPoset, Q: ColoredPoset) -> ColoredPoset:
    """Replace every point of ``R`` by a copy of ``Q`` (lexicographic sum)."""
    elems = [(r, q) for r in R.elements for q in Q.elements]
    pairs = []
    for r1, q1 in elems:
        for r2, q2 in elems:
            if R.lt(r1, r2) or (r1 == r2 and Q.leq(q1, q2)):
                pairs.append(((r1, q1), (r2, q2)))
    return ColoredPoset.build(elems, pairs)


def has_incomparable_twins(R: ColoredPoset) -> bool:
    """Two incomparable points with the same strict down-set and up-set."""
    n = len(R)
    strict = [(R.down[i] & ~(1 << i), R.up[i] & ~(1 << i), R.color_signature(R.elements[i]))
              for i in range(n)]
    return any(strict[i] == strict[j] and not R.comparable(R.elements[i], R.elements[j])
               for i in range(n) for j in range(i + 1, n))


def blocks_rigid(R: ColoredPoset, Q: ColoredPoset) -> bool:
    """Whether every automorphism of ``blow_up(R, Q)`` preserves the copies of ``Q``.

    This fails exactly when ``Q`` falls apart into incomparable pieces and
    two twin points of ``R`` let those pieces be exchanged across copies.
    """
    from .poset import comparability_components

    return len(comparability_components(Q)) == 1 or not has_incomparable_twins(R)

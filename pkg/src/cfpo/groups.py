"""Permutation groups on finite carriers.

Permutations compose right to left: ``(f * g)(x) == f(g(x))``. A
:class:`PermGroup` keeps a stabiliser chain built by a deterministic
Schreier-Sims pass, which gives its order and membership testing without
listing elements.
"""

from __future__ import annotations

from itertools import product
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import CarrierMismatch, TooLarge

MATERIALISE_CARRIER = 10
MATERIALISE_ELEMENTS = 10 ** 6


class Permutation:
    __slots__ = ("carrier", "images", "_index")

    def __init__(self, carrier: Sequence[Hashable], images: Sequence[int],
                 index: Mapping | None = None):
        self.carrier = tuple(carrier)
        self.images = tuple(images)
        self._index = index if index is not None else {x: i for i, x in enumerate(self.carrier)}

    @classmethod
    def from_mapping(cls, carrier: Sequence, mapping: Mapping) -> "Permutation":
        carrier = tuple(carrier)
        index = {x: i for i, x in enumerate(carrier)}
        images = [index[mapping.get(x, x)] for x in carrier]
        if len(set(images)) != len(images):
            raise ValueError("mapping is not a bijection")
        return cls(carrier, images, index)

    @classmethod
    def identity(cls, carrier: Sequence) -> "Permutation":
        return cls(carrier, range(len(carrier)))

    def __call__(self, x):
        return self.carrier[self.images[self._index[x]]]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(self.carrier, [self.images[j] for j in other.images], self._index)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(self.carrier, inv, self._index)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def as_dict(self) -> dict:
        return {x: self.carrier[j] for x, j in zip(self.carrier, self.images)}

    def restrict(self, subset: Sequence) -> "Permutation":
        mapping = {x: self(x) for x in subset}
        if set(mapping.values()) != set(subset):
            raise ValueError("subset is not invariant")
        return Permutation.from_mapping(subset, mapping)

    def key(self) -> frozenset:
        return frozenset((x, self.carrier[j]) for x, j in zip(self.carrier, self.images))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.carrier == other.carrier:
            return self.images == other.images
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def cycles(self) -> list[tuple]:
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(self.carrier[k] for k in cyc))
        return out

    def __repr__(self) -> str:
        cyc = self.cycles()
        return "Permutation(" + ("".join(
            "(" + " ".join(map(str, c)) + ")" for c in cyc) or "id") + ")"


def support(f: Permutation) -> frozenset:
    return frozenset(x for x in f.carrier if f(x) != x)


# -- stabiliser chains on index tuples --------------------------------------

def _compose(a: tuple, b: tuple) -> tuple:
    return tuple(a[j] for j in b)


def _inverse(a: tuple) -> tuple:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def _orbit_transversal(point: int, gens: list[tuple], n: int) -> dict:
    ident = tuple(range(n))
    trans = {point: ident}
    queue = [point]
    for p in queue:
        for g in gens:
            q = g[p]
            if q not in trans:
                trans[q] = _compose(g, trans[p])
                queue.append(q)
    return trans


def _schreier_sims(gens: list[tuple], n: int) -> tuple[list[int], list[dict]]:
    ident = tuple(range(n))
    strong = [g for g in gens if g != ident]
    base: list[int] = []
    for g in strong:
        if all(g[b] == b for b in base):
            base.append(next(i for i in range(n) if g[i] != i))
    while True:
        levels = []
        for k, b in enumerate(base):
            gk = [g for g in strong if all(g[c] == c for c in base[:k])]
            levels.append((gk, _orbit_transversal(b, gk, n)))
        trans = [t for _, t in levels]

        def sift(g):
            for k, b in enumerate(base):
                u = trans[k].get(g[b])
                if u is None:
                    return g, k
                g = _compose(_inverse(u), g)
            return g, len(base)

        new = None
        for k, b in enumerate(base):
            gk, tk = levels[k]
            for p, u in tk.items():
                for s in gk:
                    q = s[p]
                    sch = _compose(_inverse(tk[q]), _compose(s, u))
                    h, j = sift(sch)
                    if h != ident:
                        new = (h, j)
                        break
                if new:
                    break
            if new:
                break
        if new is None:
            return base, trans
        h, j = new
        strong.append(h)
        if j == len(base):
            base.append(next(i for i in range(n) if h[i] != i and i not in base))


class PermGroup:
    """A permutation group given by generators on an explicit carrier."""

    def __init__(self, carrier: Sequence[Hashable], generators: Iterable[Permutation] = ()):
        self.carrier = tuple(carrier)
        self.index = {x: i for i, x in enumerate(self.carrier)}
        gens = []
        for g in generators:
            if g.carrier != self.carrier:
                if set(g.carrier) != set(self.carrier):
                    raise CarrierMismatch("generator acts on a different carrier")
                g = Permutation.from_mapping(self.carrier, g.as_dict())
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.generators = tuple(gens)
        self._chain = None

    @classmethod
    def trivial(cls, carrier: Sequence) -> "PermGroup":
        return cls(carrier)

    @classmethod
    def symmetric(cls, carrier: Sequence) -> "PermGroup":
        carrier = tuple(carrier)
        n = len(carrier)
        gens = []
        if n > 1:
            gens.append(Permutation(carrier, [1, 0] + list(range(2, n))))
            gens.append(Permutation(carrier, list(range(1, n)) + [0]))
        return cls(carrier, gens)

    def _stab_chain(self):
        if self._chain is None:
            self._chain = _schreier_sims([g.images for g in self.generators], len(self.carrier))
        return self._chain

    def order(self) -> int:
        base, trans = self._stab_chain()
        out = 1
        for t in trans:
            out *= len(t)
        return out

    def __contains__(self, f: Permutation) -> bool:
        if set(f.carrier) != set(self.carrier):
            return False
        if f.carrier != self.carrier:
            f = Permutation.from_mapping(self.carrier, f.as_dict())
        base, trans = self._stab_chain()
        g = f.images
        for k, b in enumerate(base):
            u = trans[k].get(g[b])
            if u is None:
                return False
            g = _compose(_inverse(u), g)
        return all(i == j for i, j in enumerate(g))

    def elements(self, carrier_bound: int = MATERIALISE_CARRIER,
                 element_bound: int = MATERIALISE_ELEMENTS) -> Iterator[Permutation]:
        if len(self.carrier) > carrier_bound:
            raise TooLarge(f"carrier of size {len(self.carrier)} exceeds {carrier_bound}",
                           size=len(self.carrier), bound=carrier_bound)
        if self.order() > element_bound:
            raise TooLarge(f"group of order {self.order()} exceeds {element_bound}",
                           order=self.order(), bound=element_bound)
        base, trans = self._stab_chain()
        n = len(self.carrier)
        for choice in product(*[sorted(t.values()) for t in trans]):
            g = tuple(range(n))
            for u in choice:
                g = _compose(g, u)
            yield Permutation(self.carrier, g, self.index)

    def orbit(self, x) -> frozenset:
        seen = {x}
        queue = [x]
        for y in queue:
            for g in self.generators:
                z = g(y)
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return frozenset(seen)

    def orbits(self) -> list[frozenset]:
        out, seen = [], set()
        for x in self.carrier:
            if x not in seen:
                o = self.orbit(x)
                seen |= o
                out.append(o)
        return out

    def restrict(self, subset: Sequence) -> "PermGroup":
        return PermGroup(subset, [g.restrict(subset) for g in self.generators])

    def __repr__(self) -> str:
        return f"PermGroup(degree={len(self.carrier)}, order={self.order()})"


def groups_equal(G: PermGroup, H: PermGroup) -> bool:
    if set(G.carrier) != set(H.carrier):
        raise CarrierMismatch("groups act on different carriers")
    if G.order() != H.order():
        return False
    return all(g in H for g in G.generators)


# -- wreath products ---------------------------------------------------------

class WreathElement:
    """A pair ``(h, eta)`` with ``eta`` a function from S into G.

    Multiplication follows ``(h0, eta0)(h1, eta1) = (h0 h1, x -> eta0(h1^-1 x) eta1(x))``
    where products in H and G are read left to right (apply the left factor
    first). The matching action on ``S x carrier(G)`` is
    ``(s, m) -> (h(s), eta(h(s))(m))``.
    """

    __slots__ = ("h", "eta")

    def __init__(self, h: Permutation, eta: Mapping):
        self.h = h
        self.eta = dict(eta)

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        h0, h1 = self.h, other.h
        h = h1 * h0  # left-to-right product h0 h1
        h1_inv = h1.inverse()
        eta = {x: other.eta[x] * self.eta[h1_inv(x)] for x in self.eta}
        return WreathElement(h, eta)

    def act(self, carrier: Sequence) -> Permutation:
        mapping = {}
        for s, m in carrier:
            t = self.h(s)
            mapping[(s, m)] = (t, self.eta[t](m))
        return Permutation.from_mapping(carrier, mapping)


def wreath_carrier(G: PermGroup, H: PermGroup) -> tuple:
    return tuple((s, m) for s in H.carrier for m in G.carrier)


def wreath_elements(G: PermGroup, H: PermGroup) -> Iterator[WreathElement]:
    gs = list(G.elements())
    for h in H.elements():
        for choice in product(gs, repeat=len(H.carrier)):
            yield WreathElement(h, dict(zip(H.carrier, choice)))


def wreath_product(G: PermGroup, H: PermGroup) -> PermGroup:
    """``G wr_S H`` acting imprimitively on ``S x carrier(G)``."""
    carrier = wreath_carrier(G, H)
    if len(carrier) > MATERIALISE_ELEMENTS:
        raise TooLarge("wreath carrier too large", size=len(carrier))
    ident_g = Permutation.identity(G.carrier)
    ident = {s: ident_g for s in H.carrier}
    gens = []
    for h in H.generators:
        gens.append(WreathElement(h, ident).act(carrier))
    ident_h = Permutation.identity(H.carrier)
    for s in H.carrier:
        for g in G.generators:
            eta = dict(ident)
            eta[s] = g
            gens.append(WreathElement(ident_h, eta).act(carrier))
    return PermGroup(carrier, gens)

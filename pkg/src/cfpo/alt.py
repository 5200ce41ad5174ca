"""Alternating fences, their embeddings, and CFPO_n classification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import EmptyPoset, InvalidSize, NotACFPO, NotOddClass
from .poset import ColoredPoset, bits, build


def alt_poset(n: int, reversed: bool = False) -> ColoredPoset:
    """``a_0 > a_1 < a_2 > ...``: odd-indexed points are local minima."""
    if n < 1:
        raise InvalidSize(f"fence size must be positive, got {n}", n=n)
    elems = [f"a{i}" for i in range(n)]
    pairs = []
    for i in range(1, n):
        lo, hi = (elems[i], elems[i - 1]) if i % 2 else (elems[i - 1], elems[i])
        pairs.append((hi, lo) if reversed else (lo, hi))
    return build(elems, pairs)


@dataclass(frozen=True)
class Embedding:
    source: ColoredPoset
    target: ColoredPoset
    map: tuple  # (source element, target element) pairs in source order
    reversed: bool = False

    def __call__(self, x):
        return dict(self.map)[x]

    @property
    def image(self) -> tuple:
        return tuple(y for _, y in self.map)


@dataclass(frozen=True)
class Classification:
    n: int
    witness: Embedding
    refuted: int  # size of the fence shown not to embed


def _fences(P: ColoredPoset, n: int, first_down: bool,
            stop_after_one: bool = False) -> Iterator[tuple[int, ...]]:
    """Index sequences forming an induced fence of length ``n``.

    ``first_down`` means the second point lies below the first (plain Alt_n).
    """
    N = len(P)
    cmp_ = [(P.down[i] | P.up[i]) for i in range(N)]
    below = [P.down[i] & ~(1 << i) for i in range(N)]
    above = [P.up[i] & ~(1 << i) for i in range(N)]

    seq: list[int] = []

    def rec(forbidden: int):
        k = len(seq)
        if k == n:
            yield tuple(seq)
            return
        last = seq[-1]
        going_down = (k % 2 == 1) == first_down
        cand = (below[last] if going_down else above[last]) & ~forbidden
        for j in bits(cand):
            seq.append(j)
            yield from rec(forbidden | cmp_[last] | (1 << j))
            seq.pop()

    for start in range(N):
        seq.append(start)
        for s in rec(1 << start):
            yield s
            if stop_after_one:
                return
        seq.pop()


def _fence_exists(P: ColoredPoset, n: int) -> Optional[tuple[tuple, bool]]:
    for first_down in (True, False):
        for s in _fences(P, n, first_down, stop_after_one=True):
            return s, not first_down
    return None


def alt_embeddings(P: ColoredPoset, n: int) -> list[Embedding]:
    """All embeddings of Alt_n and Alt_n* into ``P``, deduplicated by image."""
    if n < 1:
        raise InvalidSize(f"fence size must be positive, got {n}", n=n)
    out = []
    seen = set()
    for rev in (False, True):
        src = alt_poset(n, rev)
        for s in _fences(P, n, first_down=not rev):
            image = tuple(P.elements[i] for i in s)
            if image in seen:
                continue
            seen.add(image)
            out.append(Embedding(src, P, tuple(zip(src.elements, image)), rev))
    return out


def classify(P: ColoredPoset) -> Classification:
    """Largest ``n`` such that Alt_n or Alt_n* embeds."""
    if len(P) == 0:
        raise EmptyPoset("cannot classify the empty poset")
    best = None
    n = 1
    while n <= len(P):
        found = _fence_exists(P, n)
        if found is None:
            break
        best = (n, found)
        n += 1
    k, (s, rev) = best
    src = alt_poset(k, rev)
    witness = Embedding(src, P, tuple(zip(src.elements, (P.elements[i] for i in s))), rev)
    return Classification(k, witness, k + 1)


def center_midpoints(P: ColoredPoset) -> frozenset:
    """Images of the midpoint of Alt_k and Alt_k* for the odd class ``k``."""
    from .paths import is_cfpo, is_connected

    if not is_cfpo(P):
        raise NotACFPO("centre needs a CFPO")
    k = classify(P).n
    if k % 2 == 0:
        raise NotOddClass(f"class {k} is even", n=k)
    if not is_connected(P):
        from .errors import NotConnected
        raise NotConnected("centre needs a connected CFPO")
    mid = f"a{(k - 1) // 2}"
    return frozenset(e(mid) for e in alt_embeddings(P, k))

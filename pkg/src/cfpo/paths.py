"""Paths, cycle-freeness, components, cones and connection closures.

Everything is computed in the cover graph of the bounded-cut completion. A
poset is cycle-free exactly when that graph is a forest, and the unique path
between two points is then the unique simple path in the forest.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional

from .completion import complete
from .errors import (ElementNotInCenter, EmptySet, NotACFPO, NotATree,
                     NotConnected, UnknownElement)
from .poset import ColoredPoset, bits, cover_masks, is_tree


@dataclass(frozen=True)
class PathResult:
    element_set: frozenset
    corner_sequence: tuple
    virtual_members: frozenset
    sequence: tuple  # every vertex from x to y in order

    @property
    def original_members(self) -> frozenset:
        return self.element_set - self.virtual_members

    @property
    def interior_corners(self) -> tuple:
        return self.corner_sequence[1:-1]


class Closure(NamedTuple):
    members: frozenset
    virtual: frozenset


class _Forest:
    """Cover graph of the completion with cached adjacency."""

    def __init__(self, P: ColoredPoset):
        comp = complete(P)
        self.completion = comp
        Q = comp.completed
        self.Q = Q
        n = len(Q)
        ups = cover_masks(Q)
        adj = [0] * n
        edges = 0
        for i, m in enumerate(ups):
            for j in bits(m):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                edges += 1
        self.adj = adj
        self.ups = ups
        # component labels
        label = [-1] * n
        ncomp = 0
        for s in range(n):
            if label[s] >= 0:
                continue
            stack = [s]
            label[s] = ncomp
            while stack:
                v = stack.pop()
                for w in bits(adj[v]):
                    if label[w] < 0:
                        label[w] = ncomp
                        stack.append(w)
            ncomp += 1
        self.label = label
        self.is_forest = edges == n - ncomp
        self._parents: dict = {}

    def parents(self, root: int) -> list[int]:
        """BFS parent pointers from ``root`` (-1 for root / unreachable)."""
        if root not in self._parents:
            par = [-2] * len(self.Q)
            par[root] = -1
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for w in bits(self.adj[v]):
                    if par[w] == -2:
                        par[w] = v
                        queue.append(w)
            self._parents[root] = par
        return self._parents[root]

    def vertex_path(self, i: int, j: int) -> Optional[list[int]]:
        if self.label[i] != self.label[j]:
            return None
        par = self.parents(j)
        seq = [i]
        while seq[-1] != j:
            seq.append(par[seq[-1]])
        return seq

    def find_cycle(self) -> Optional[list[int]]:
        """Some cycle of the cover graph as a vertex list, or None."""
        n = len(self.Q)
        par = [-2] * n
        depth = [0] * n
        for s in range(n):
            if par[s] != -2:
                continue
            par[s] = -1
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in bits(self.adj[v]):
                    if par[w] == -2:
                        par[w] = v
                        depth[w] = depth[v] + 1
                        queue.append(w)
                    elif w != par[v]:
                        a, b = v, w
                        left, right = [a], [b]
                        while a != b:
                            if depth[a] >= depth[b]:
                                a = par[a]
                                left.append(a)
                            else:
                                b = par[b]
                                right.append(b)
                        right.pop()
                        return left + right[::-1]
        return None


@lru_cache(maxsize=8192)
def _forest(P: ColoredPoset) -> _Forest:
    return _Forest(P)


def is_cfpo(P: ColoredPoset) -> bool:
    return _forest(P).is_forest


def _require_cfpo(P: ColoredPoset) -> _Forest:
    F = _forest(P)
    if not F.is_forest:
        raise NotACFPO("cover graph of the completion has a cycle")
    return F


def _result(F: _Forest, seq: list[int]) -> PathResult:
    Q = F.Q
    virtual = F.completion.virtual
    ids = [Q.elements[i] for i in seq]
    if len(seq) == 1:
        corners = (ids[0],)
    else:
        # +1 when stepping up in the order, -1 when stepping down
        steps = [1 if Q.down[b] >> a & 1 else -1 for a, b in zip(seq, seq[1:])]
        corners = [ids[0]]
        for k in range(1, len(steps)):
            if steps[k] != steps[k - 1]:
                corners.append(ids[k])
        corners.append(ids[-1])
        corners = tuple(corners)
    elems = frozenset(ids)
    return PathResult(elems, tuple(corners), elems & virtual, tuple(ids))


def path(P: ColoredPoset, x, y) -> Optional[PathResult]:
    """The unique path from ``x`` to ``y``; None when they are disconnected."""
    F = _require_cfpo(P)
    if x not in P:
        raise UnknownElement(f"unknown element {x!r}", element=x)
    if y not in P:
        raise UnknownElement(f"unknown element {y!r}", element=y)
    seq = F.vertex_path(F.Q.index[x], F.Q.index[y])
    return None if seq is None else _result(F, seq)


def completed_path(P: ColoredPoset, x, y) -> Optional[PathResult]:
    """Like :func:`path` but ``x``/``y`` may be virtual points of the completion."""
    F = _require_cfpo(P)
    seq = F.vertex_path(F.Q.idx(x), F.Q.idx(y))
    return None if seq is None else _result(F, seq)


def path_sets(P: ColoredPoset, A: Iterable, B: Iterable, *,
              include_virtual: bool = False) -> frozenset:
    """Intersection of the paths between every ``a in A`` and ``b in B``."""
    A, B = list(A), list(B)
    if not A or not B:
        raise EmptySet("both sets must be nonempty")
    _require_cfpo(P)
    out = None
    for a in A:
        for b in B:
            p = completed_path(P, a, b)
            if p is None:
                raise NotConnected(f"{a!r} and {b!r} lie in different components")
            out = p.element_set if out is None else out & p.element_set
    if include_virtual:
        return out
    return out - complete(P).virtual


def components(P: ColoredPoset) -> tuple[frozenset, ...]:
    F = _forest(P)
    groups: dict = {}
    for i, x in enumerate(P.elements):
        groups.setdefault(F.label[i], []).append(x)
    return tuple(frozenset(g) for g in groups.values())


def is_connected(P: ColoredPoset) -> bool:
    return len(P) > 0 and len(components(P)) == 1


def connection_closure(P: ColoredPoset, X: Iterable) -> Closure:
    X = list(X)
    _require_cfpo(P)
    acc: set = set(X)
    for i, x in enumerate(X):
        for y in X[i + 1:]:
            p = path(P, x, y)
            if p is None:
                raise NotConnected(f"{x!r} and {y!r} lie in different components")
            acc |= p.element_set
    virtual = complete(P).virtual
    return Closure(frozenset(acc - virtual), frozenset(acc & virtual))


def cone(T: ColoredPoset, a, b) -> frozenset:
    """The branch above ``a`` that contains ``b``; empty unless ``a < b``."""
    if not is_tree(T):
        raise NotATree("cone needs a tree")
    if not T.lt(a, b):
        return frozenset()
    ia, ib = T.idx(a), T.idx(b)
    # the element of the chain (a, b] that covers a
    chain = T.down[ib] & T.up[ia] & ~(1 << ia)
    low = min(bits(chain), key=lambda j: bin(T.down[j]).count("1"))
    return T.ids(T.up[low])


def branch_at(P: ColoredPoset, C: Iterable, x) -> frozenset:
    C = frozenset(C)
    if x not in C:
        raise ElementNotInCenter(f"{x!r} is not in the centre set", element=x)
    _require_cfpo(P)
    out = set()
    for y in P.elements:
        p = path(P, x, y)
        if p is not None and p.element_set & C == {x}:
            out.add(y)
    return frozenset(out)


def two_path_witness(P: ColoredPoset) -> Optional[dict]:
    """For a non-CFPO, two original points joined by two distinct paths."""
    F = _forest(P)
    if F.is_forest:
        return None
    cycle = F.find_cycle()
    Q = F.Q
    originals = [k for k, v in enumerate(cycle) if Q.elements[v] not in F.completion.virtual]
    if len(originals) < 2:
        return {"cycle": [Q.elements[v] for v in cycle]}
    k0, k1 = originals[0], originals[1]
    first = [Q.elements[v] for v in cycle[k0:k1 + 1]]
    rest = cycle[k1:] + cycle[:k0 + 1]
    second = [Q.elements[v] for v in reversed(rest)]
    return {"pair": [first[0], first[-1]], "paths": [first, second]}

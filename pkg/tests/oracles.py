"""Slow reference implementations used only by the tests.

Nothing here calls into the bitmask machinery of the package beyond reading
``P.elements`` and ``P.leq``; every answer is recomputed from definitions.
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def _leq(P):
    return {(x, y) for x in P.elements for y in P.elements if P.leq(x, y)}


def subsets(xs):
    xs = list(xs)
    for k in range(len(xs) + 1):
        for c in combinations(xs, k):
            yield frozenset(c)


# -- cuts and the completion ------------------------------------------------------

def cuts(P):
    """Every pair (A, B) with A the lower bounds of B and B the upper bounds of A."""
    leq = _leq(P)
    E = P.elements
    out = set()
    for A in subsets(E):
        B = frozenset(y for y in E if all((a, y) in leq for a in A))
        A2 = frozenset(x for x in E if all((x, b) in leq for b in B))
        if A2 == A:
            out.add((A, B))
    return out


def nonprincipal_cuts(P):
    leq = _leq(P)
    principal = {frozenset(x for x in P.elements if (x, p) in leq) for p in P.elements}
    return {(A, B) for A, B in cuts(P) if A and B and A not in principal}


class RefCompletion:
    """Originals plus bounded nonprincipal cuts, ordered by inclusion of lower sides."""

    def __init__(self, P):
        leq = _leq(P)
        self.lower = {x: frozenset(y for y in P.elements if (y, x) in leq) for x in P.elements}
        self.virtual = []
        for A, B in sorted(nonprincipal_cuts(P), key=lambda c: sorted(map(str, c[0]))):
            v = ("cut", A, B)
            self.lower[v] = A
            self.virtual.append(v)
        self.points = list(P.elements) + self.virtual
        self.up_covers = {x: [y for y in self.points if self._covers(x, y)] for x in self.points}

    def leq(self, x, y):
        return self.lower[x] <= self.lower[y]

    def lt(self, x, y):
        return x != y and self.leq(x, y)

    def covers(self, x, y):
        return y in self.up_covers[x]

    def _covers(self, x, y):
        return self.lt(x, y) and not any(self.lt(x, z) and self.lt(z, y) for z in self.points)


# -- connecting sets and paths ------------------------------------------------------

def _saturated_chains(C, lo, hi):
    """Maximal chains of the interval [lo, hi] listed from lo to hi."""
    if lo == hi:
        yield [lo]
        return
    for z in C.up_covers[lo]:
        if C.leq(z, hi):
            for rest in _saturated_chains(C, z, hi):
                yield [lo] + rest


def paths(P, x, y, C=None):
    """All paths from x to y: an alternating corner sequence plus one maximal chain
    per consecutive pair, the chains meeting only at shared corners.

    Returns a list of (element set, corner tuple).
    """
    C = C or RefCompletion(P)
    if x == y:
        return [(frozenset([x]), (x,))]
    out = []

    def grow(corners, used, direction):
        last = corners[-1]
        for nxt in C.points:
            if nxt == last:
                continue
            if direction > 0 and not C.lt(last, nxt):
                continue
            if direction < 0 and not C.lt(nxt, last):
                continue
            lo, hi = (last, nxt) if direction > 0 else (nxt, last)
            for ch in _saturated_chains(C, lo, hi):
                seg = ch if direction > 0 else ch[::-1]
                fresh = seg[1:]
                if any(z in used for z in fresh):
                    continue
                if nxt == y:
                    out.append((frozenset(used | set(fresh)), tuple(corners + [nxt])))
                else:
                    grow(corners + [nxt], used | set(fresh), -direction)

    for d in (1, -1):
        grow([x], {x}, d)
    return out


def is_cfpo(P):
    C = RefCompletion(P)
    return all(len(paths(P, x, y, C)) <= 1 for x, y in combinations(P.elements, 2))


def connected_pairs(P):
    C = RefCompletion(P)
    return [(x, y) for x, y in combinations(P.elements, 2) if paths(P, x, y, C)]


# -- automorphisms and embeddings ---------------------------------------------------------

def automorphisms(P):
    """Every order- and colour-preserving bijection, as dicts."""
    E = list(P.elements)
    leq = _leq(P)
    out = []
    for img in permutations(E):
        f = dict(zip(E, img))
        if any(P.color_signature(x) != P.color_signature(f[x]) for x in E):
            continue
        if all(((f[x], f[y]) in leq) == ((x, y) in leq) for x in E for y in E):
            out.append(f)
    return out


def as_keys(maps, carrier):
    return {tuple(f[x] for x in carrier) for f in maps}


def tuple_orbit_partition(P, k, auts=None):
    auts = auts if auts is not None else automorphisms(P)
    label = {}
    for t in product(P.elements, repeat=k):
        if t in label:
            continue
        for f in auts:
            label.setdefault(tuple(f[x] for x in t), t)
    return label


def fence_embeddings(P, n):
    """Injective sequences whose induced order is the fence of length n, either way up."""
    leq = _leq(P)
    lt = {(x, y) for x, y in leq if x != y}
    out = []
    for seq in permutations(P.elements, n):
        far_ok = all((seq[i], seq[j]) not in leq
                     for i in range(n) for j in range(n) if abs(i - j) > 1)
        if not far_ok:
            continue
        for first_down in (True, False):
            # first_down: a0 above a1, then alternating
            ok = True
            for k in range(n - 1):
                hi, lo = (k, k + 1) if (k % 2 == 0) == first_down else (k + 1, k)
                if (seq[lo], seq[hi]) not in lt:
                    ok = False
            if ok:
                out.append((seq, not first_down))
    return out


def fence_class(P):
    n = 0
    while n < len(P) and fence_embeddings(P, n + 1):
        n += 1
    return n


# -- trees ------------------------------------------------------------------------------

def tree_from_paths(P, r):
    """Tree order on the completion: x below y iff x lies on the path from r to y.

    Returns (points, leq set, U set, virtual set).
    """
    C = RefCompletion(P)
    route = {}
    for y in C.points:
        found = _completed_paths(C, r, y)
        assert len(found) == 1, "not a connected CFPO"
        route[y] = found[0]
    leq = {(x, y) for y in C.points for x in route[y]}
    U = {r}
    for y in C.points:
        seq = route[y]
        if len(seq) > 1 and C.lt(seq[-2], y):
            U.add(y)
    return C.points, leq, U, set(C.virtual)


def _completed_paths(C, x, y):
    """Simple walks in the cover graph of the completion, as vertex sequences."""
    if x == y:
        return [[x]]
    out = []

    def dfs(walk):
        last = walk[-1]
        for z in C.points:
            if z in walk or not (C.covers(last, z) or C.covers(z, last)):
                continue
            if z == y:
                out.append(walk + [z])
            else:
                dfs(walk + [z])

    dfs([x])
    return out


def is_tree_order(points, leq):
    """Every down-set a chain and every pair with a common lower bound."""
    for x in points:
        below = [y for y in points if (y, x) in leq]
        for a, b in combinations(below, 2):
            if (a, b) not in leq and (b, a) not in leq:
                return False
    for a, b in combinations(points, 2):
        if not any((z, a) in leq and (z, b) in leq for z in points):
            return False
    return True

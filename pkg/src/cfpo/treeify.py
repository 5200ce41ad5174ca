"""Turning cycle-free partial orders into coloured trees with the same symmetries.

The basic construction roots the cover tree of the completion at a point fixed
by every automorphism and reads the tree order as "lies on the path from the
root". A fresh predicate ``U`` records, for every non-root vertex, whether it
sits above its tree parent in the original order, which is enough to recover
the original order (see :func:`interpret_back`).

Virtual points of the completion are kept in the tree, coloured ``VIRTUAL``.
Dropping them can merge branches that the original order keeps apart and so
create automorphisms that the poset does not have. Automorphism groups are
therefore compared after restricting to the original carrier.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .alt import alt_embeddings, center_midpoints, classify
from .aut import automorphisms, canonical_form, fixed_points
from .completion import complete
from .errors import (Disjointness, EmptyPoset, EmptySet, NoFixedPoint, NotACFPO,
                     NotAFixedPoint, NotATree, NotAWitness, NotCFPO3, NotConnected,
                     NotConnectedSubset, NotEvenClass, NotInvariant, NotOddClass,
                     UnknownElement, VerificationFailed)
from .groups import groups_equal
from .paths import _forest, branch_at, completed_path, components, is_cfpo, is_connected
from .poset import ColoredPoset, bits, is_tree

U = "U"
ROOT = "ROOT"
VIRTUAL = "VIRTUAL"
ADJOINED = "ADJOINED"
CORE = "CORE"
SCAFFOLD = frozenset({U, ROOT, VIRTUAL, CORE})


@dataclass(frozen=True)
class XYPartition:
    root: object
    x_layers: tuple
    y_layers: tuple

    @property
    def X(self) -> frozenset:
        return frozenset().union(*self.x_layers)

    @property
    def Y(self) -> frozenset:
        return frozenset().union(*self.y_layers)

    def layers(self) -> list[frozenset]:
        out = []
        for i in range(max(len(self.x_layers), len(self.y_layers))):
            for seq in (self.x_layers, self.y_layers):
                if i < len(seq) and seq[i]:
                    out.append(seq[i])
        return out


@dataclass(frozen=True)
class TreeifyResult:
    tree: ColoredPoset
    provenance: str
    root: object
    original: tuple
    u_predicate: str = U
    virtual: frozenset = field(default_factory=frozenset)
    adjoined: frozenset = field(default_factory=frozenset)

    @property
    def u(self) -> frozenset:
        return self.tree.colors.get(self.u_predicate, frozenset())


# -- helpers -------------------------------------------------------------------

def _require_connected_cfpo(M: ColoredPoset) -> None:
    if len(M) == 0:
        raise EmptyPoset("empty poset")
    if not is_cfpo(M):
        raise NotACFPO("cover graph of the completion has a cycle")
    if not is_connected(M):
        raise NotConnected("poset is not connected")


def _virtual_coloured(M: ColoredPoset) -> ColoredPoset:
    comp = complete(M)
    Q = comp.completed
    if not comp.virtual:
        return Q
    return Q.with_colors({VIRTUAL: comp.virtual})


def completion_fixed_points(M: ColoredPoset) -> list:
    """Points of the completion fixed by every automorphism, in carrier order.

    Automorphisms of ``M`` extend uniquely to the completion, and the extended
    group is exactly the automorphism group of the completion with its virtual
    points marked.
    """
    Q = _virtual_coloured(M)
    fixed = fixed_points(Q)
    return [x for x in Q.elements if x in fixed]


def centre(M: ColoredPoset):
    """Centre of the completion's cover tree (lower end of a central edge).

    Depends only on the isomorphism type of ``M``, and is fixed by ``Aut(M)``
    because no order automorphism can swap the two ends of a cover edge.
    """
    _require_connected_cfpo(M)
    return _hull_centre(M, frozenset(complete(M).completed.elements))


def _build_tree(elements: list, parent: Mapping, colors: Mapping) -> ColoredPoset:
    index = {x: i for i, x in enumerate(elements)}
    down = []
    for x in elements:
        m = 0
        y = x
        while y is not None:
            m |= 1 << index[y]
            y = parent[y]
        down.append(m)
    return ColoredPoset(elements, down, {c: ms for c, ms in colors.items() if ms})


def _rooted(M: ColoredPoset, root) -> tuple[list, dict, frozenset, frozenset]:
    """Carrier, parent map, ``U`` set and virtual set of the tree at ``root``."""
    F = _forest(M)
    Q = F.Q
    virtual = complete(M).virtual
    par = F.parents(Q.idx(root))
    members = [i for i in range(len(Q)) if par[i] != -2]
    elements = [Q.elements[i] for i in members]
    parent = {Q.elements[i]: (Q.elements[par[i]] if par[i] >= 0 else None) for i in members}
    up = {root}
    for i in members:
        p = par[i]
        if p >= 0 and Q.down[i] >> p & 1:
            up.add(Q.elements[i])
    return elements, parent, frozenset(up), frozenset(elements) & virtual


def _tree_at(M: ColoredPoset, root) -> tuple[ColoredPoset, frozenset]:
    elements, parent, up, virtual = _rooted(M, root)
    colors = dict(M.colors)
    colors[U] = up
    colors[VIRTUAL] = virtual
    return _build_tree(elements, parent, colors), virtual


def aut_preserved(M: ColoredPoset, T: ColoredPoset) -> bool:
    """``Aut(M)`` equals ``Aut(T)`` restricted to the carrier of ``M``."""
    G = automorphisms(M)
    H = automorphisms(T)
    if set(T.elements) != set(M.elements):
        H = H.restrict(M.elements)
    return groups_equal(G, H)


def _verified(M: ColoredPoset, result: TreeifyResult) -> TreeifyResult:
    if not aut_preserved(M, result.tree):
        raise VerificationFailed(
            f"automorphism groups differ after the {result.provenance} construction",
            provenance=result.provenance)
    return result


# -- the basic construction ----------------------------------------------------------

def partition_xy(M: ColoredPoset, r) -> XYPartition:
    """Alternating layers of points reached upwards and downwards from ``r``."""
    _require_connected_cfpo(M)
    i = M.idx(r)
    xs = [M.up[i]]
    ys = [M.down[i] & ~(1 << i)]
    seen = xs[0] | ys[0]
    while True:
        above = 0
        for j in bits(ys[-1]):
            above |= M.up[j]
        below = 0
        for j in bits(xs[-1]):
            below |= M.down[j] & ~(1 << j)
        nx, ny = above & ~seen, below & ~seen
        if not nx and not ny:
            break
        xs.append(nx)
        ys.append(ny)
        seen |= nx | ny
    return XYPartition(r, tuple(M.ids(m) for m in xs), tuple(M.ids(m) for m in ys))


def treeify_fixed_point(M: ColoredPoset, r, *, verify: bool = True) -> TreeifyResult:
    """Tree on the carrier of ``M`` rooted at the fixed point ``r``.

    ``r`` may be a virtual point of the completion as long as every
    automorphism fixes it.
    """
    _require_connected_cfpo(M)
    Q = complete(M).completed
    if r not in Q:
        raise UnknownElement(f"unknown element {r!r}", element=r)
    if r in M:
        if r not in fixed_points(M):
            raise NotAFixedPoint(f"{r!r} is moved by an automorphism", element=r)
        provenance = "fixed_point"
    else:
        if r not in completion_fixed_points(M):
            raise NotAFixedPoint(f"{r!r} is moved by an automorphism", element=r)
        provenance = "virtual_root"
    T, virtual = _tree_at(M, r)
    res = TreeifyResult(T, provenance, r, M.elements, virtual=virtual)
    return _verified(M, res) if verify else res


def _tree_meet(T: ColoredPoset, x: int, y: int) -> int:
    common = T.down[x] & T.down[y]
    return max(bits(common), key=lambda j: bin(T.down[j]).count("1"))


def _interval(T: ColoredPoset, lo: int, hi: int) -> int:
    """Mask of ``[lo, hi]`` in ``T`` (empty unless ``lo <= hi``)."""
    if not T.down[hi] >> lo & 1:
        return 0
    return T.down[hi] & T.up[lo]


def _literal_leq(T: ColoredPoset, umask: int, x: int, y: int) -> bool:
    """The three clauses exactly as first written, kept for comparison."""
    full = (1 << len(T)) - 1
    notu = full & ~umask
    iv = lambda a, b: _interval(T, a, b)
    if T.down[y] >> x & 1 and iv(x, y) & notu == 0:
        return True
    if T.down[x] >> y & 1 and iv(y, x) & umask == 0:
        return True
    if umask >> y & 1 and not umask >> x & 1:
        for z in bits(T.down[x] & T.down[y]):
            if iv(z, y) & notu:
                continue
            ok = True
            for w in bits(iv(z, x)):
                if umask >> w & 1:
                    if iv(z, w) & notu:
                        ok = False
                        break
                elif iv(w, x) & umask:
                    ok = False
                    break
            if ok:
                return True
    return False


def _leq(T: ColoredPoset, umask: int, x: int, y: int) -> bool:
    # climb from x to the meet against the order, then from the meet up to y
    z = _tree_meet(T, x, y)
    left = _interval(T, z, x) & ~(1 << z)
    right = _interval(T, z, y) & ~(1 << z)
    return left & umask == 0 and right & ~umask == 0


def interpret_back(T: ColoredPoset, u_predicate: str = U, exclude_root: bool = False,
                   *, literal: bool = False) -> ColoredPoset:
    """Recover the original order from a tree and its ``U`` predicate.

    ``x <= y`` holds iff, writing ``z`` for the tree meet of ``x`` and ``y``,
    every point of ``(z, x]`` lies outside ``U`` and every point of ``(z, y]``
    lies in ``U``. Virtual points are dropped from the output, and so is the
    tree root when ``exclude_root`` is set. With ``literal`` the clauses are
    evaluated in their original closed-interval form instead.
    """
    if not is_tree(T):
        raise NotATree("interpretation needs a tree")
    umask = T.mask(T.colors.get(u_predicate, ()))
    keep = [i for i, x in enumerate(T.elements) if x not in T.colors.get(VIRTUAL, ())]
    if exclude_root:
        keep = [i for i in keep if T.down[i] != 1 << i]
    rel = _literal_leq if literal else _leq
    elements = [T.elements[i] for i in keep]
    down = []
    for y in keep:
        m = 0
        for k, x in enumerate(keep):
            if rel(T, umask, x, y):
                m |= 1 << k
        down.append(m)
    kept = set(elements)
    colors = {c: [x for x in ms if x in kept] for c, ms in T.colors.items()
              if c not in SCAFFOLD and c != u_predicate}
    return ColoredPoset(elements, down, {c: ms for c, ms in colors.items() if ms})


# -- fixed points between invariant sets -------------------------------------------------

def _full_path(M: ColoredPoset, x, y) -> frozenset:
    return completed_path(M, x, y).element_set


def _full_path_set(M: ColoredPoset, A, B) -> frozenset:
    out = None
    for a in A:
        for b in B:
            p = _full_path(M, a, b)
            out = p if out is None else out & p
    return out


def is_connected_subset(M: ColoredPoset, S: frozenset) -> bool:
    """Every path between two members of ``S``, virtual points included, stays in ``S``."""
    items = M.sorted(S)
    return all(_full_path(M, x, y) <= S for i, x in enumerate(items) for y in items[i + 1:])


def _descend(M: ColoredPoset, A: frozenset, b) -> object:
    """Walk ``c`` through ``A`` until every path from ``A`` to ``b`` passes it."""
    order = M.sorted(A)
    c = order[0]
    while True:
        D = {x for x in A if c in _full_path(M, x, b)}
        if D == A:
            return c
        a = next(x for x in order if x not in D)
        P = _full_path(M, c, b) & _full_path(M, a, b)
        c = next(x for x in M.sorted(P & A) if _full_path(M, x, b) == P)


def find_path_fixed_points(M: ColoredPoset, A: Iterable, B: Iterable) -> tuple:
    """Fixed points ``c`` in ``A`` and ``d`` in ``B`` with ``<c,d> = <A,B>``.

    ``A`` and ``B`` must be nonempty, disjoint, proper, invariant under every
    automorphism and connected in the strict sense that every path between two
    members stays inside the set.
    """
    _require_connected_cfpo(M)
    A, B = frozenset(A), frozenset(B)
    if not A or not B:
        raise EmptySet("both sets must be nonempty")
    for x in A | B:
        M.idx(x)
    if A & B:
        raise Disjointness("sets intersect", common=M.sorted(A & B))
    for S in (A, B):
        if len(S) == len(M):
            raise NotConnectedSubset("sets must be proper subsets")
        if not is_connected_subset(M, S):
            raise NotConnectedSubset("set is not connected", members=M.sorted(S))
    G = automorphisms(M)
    for S in (A, B):
        for g in G.generators:
            if {g(x) for x in S} != S:
                raise NotInvariant("set is moved by an automorphism", members=M.sorted(S))
    b = M.sorted(B)[0]
    c = _descend(M, A, b)
    d = _descend(M, B, c)
    return c, d


# -- CFPO_3 ------------------------------------------------------------------------------

def decompose_cfpo3(M: ColoredPoset) -> tuple[frozenset, frozenset, frozenset]:
    """``(upper, middle, lower)`` for a connected CFPO of class at most 3.

    ``middle`` holds the points comparable to every point of the completion,
    ``upper`` the points above all of them and ``lower`` the points below.
    When the comparable-to-everything set is purely virtual, ``middle`` is
    empty.
    """
    _require_connected_cfpo(M)
    if classify(M).n > 3:
        raise NotCFPO3("class exceeds 3", n=classify(M).n)
    Q = complete(M).completed
    full = (1 << len(Q)) - 1
    K = [i for i in range(len(Q)) if Q.down[i] | Q.up[i] == full]
    if not K:
        raise NotCFPO3("no point is comparable to everything")
    above = below = full
    for k in K:
        above &= Q.up[k] & ~(1 << k)
        below &= Q.down[k] & ~(1 << k)
    originals = set(M.elements)
    pick = lambda mask: frozenset(x for x in Q.ids(mask) if x in originals)
    kmask = sum(1 << k for k in K)
    return pick(above), pick(kmask), pick(below)


def _default_root(M: ColoredPoset):
    fixed = fixed_points(M)
    for x in M.elements:
        if x in fixed:
            return x
    cands = completion_fixed_points(M)
    if not cands:
        raise NoFixedPoint("no point of the completion is fixed")
    return cands[0]


def treeify_cfpo3(M: ColoredPoset, *, verify: bool = True) -> TreeifyResult:
    _require_connected_cfpo(M)
    n = classify(M).n
    if n > 3:
        raise NotCFPO3("class exceeds 3", n=n)
    r = _default_root(M)
    T, virtual = _tree_at(M, r)
    res = TreeifyResult(T, "cfpo3", r, M.elements, virtual=virtual)
    return _verified(M, res) if verify else res


# -- odd and even classes ------------------------------------------------------------------

def _type_predicates(M: ColoredPoset, C: frozenset, branches: Mapping) -> dict:
    keys = {}
    for x in C:
        B = M.induced(branches[x]).with_colors({ROOT: {x}})
        keys[x] = canonical_form(B)
    ordered = sorted(set(keys.values()))
    preds: dict = {}
    for x, k in keys.items():
        preds.setdefault(f"P_{ordered.index(k)}", set()).add(x)
    return preds


def core_hull(M: ColoredPoset, C: Iterable) -> frozenset:
    """``C`` together with every point of the completion on a path between members."""
    C = M.sorted(C)
    out = set(C)
    for i, x in enumerate(C):
        for y in C[i + 1:]:
            out |= _full_path(M, x, y)
    return frozenset(out)


def _hull_centre(M: ColoredPoset, H: frozenset):
    F = _forest(M)
    Q = F.Q
    alive = Q.mask(H)
    adj = [a & alive for a in F.adj]
    deg = [bin(a).count("1") for a in adj]
    while bin(alive).count("1") > 2:
        leaves = [i for i in bits(alive) if deg[i] <= 1]
        for i in leaves:
            alive &= ~(1 << i)
        for i in leaves:
            for j in bits(adj[i] & alive):
                deg[j] -= 1
    rest = list(bits(alive))
    if len(rest) == 2:
        a, b = rest
        rest = [a] if Q.down[b] >> a & 1 else [b]
    return Q.elements[rest[0]]


def treeify_odd(M: ColoredPoset, *, core_marker: bool = False,
                verify: bool = True) -> TreeifyResult:
    """Tree grown from the centre of an odd-class CFPO.

    The centre ``C`` (midpoints of all maximal fences) has class at most 3.
    Its hull in the completion is coloured by the isomorphism type of the
    branch hanging at each point and rooted at a point fixed by the
    automorphisms of that coloured core; the branch at each ``x`` is then the
    tree of the branch rooted at ``x``, grafted on at ``x``. All pieces are
    cut from one cover tree, so the graft is that tree rooted at the core's
    root. ``CORE`` marks the core.
    """
    _require_connected_cfpo(M)
    n = classify(M).n
    if n % 2 == 0:
        raise NotOddClass(f"class {n} is even", n=n)
    if n <= 3:
        return treeify_cfpo3(M, verify=verify)
    C = center_midpoints(M)
    branches = {x: branch_at(M, C, x) for x in C}
    preds = _type_predicates(M, C, branches)
    H = core_hull(M, C)
    Q = _virtual_coloured(M)
    core = Q.induced(H).with_colors(preds)
    fixed = fixed_points(core)
    rC = next((x for x in core.elements if x in fixed), None)
    if rC is None:
        rC = _hull_centre(M, H)
    T, virtual = _tree_at(M, rC)
    if core_marker:
        T = T.with_colors({CORE: H})
    res = TreeifyResult(T, "odd_center", rC, M.elements, virtual=virtual)
    return _verified(M, res) if verify else res


def adjoin_candidates(M: ColoredPoset) -> list:
    """Images of ``a0`` under embeddings of the fence of the (even) class."""
    n = classify(M).n
    seen = []
    for e in alt_embeddings(M, n):
        if not e.reversed and e("a0") not in seen:
            seen.append(e("a0"))
    return M.sorted(seen)


def _fresh(base: str, taken: set) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def adjoin_orbit_points(M: ColoredPoset, e) -> ColoredPoset:
    """Below each point of the orbit of ``e`` adjoin a new point coloured ``ADJOINED``."""
    M.idx(e)
    if not is_cfpo(M):
        raise NotACFPO("cover graph of the completion has a cycle")
    n = classify(M).n
    if n % 2:
        raise NotEvenClass(f"class {n} is odd", n=n)
    if e not in adjoin_candidates(M):
        raise NotAWitness(f"{e!r} is not the first point of a maximal fence", element=e)
    orbit = M.sorted(automorphisms(M).orbit(e))
    taken = set(M.elements)
    new = {}
    for x in orbit:
        new[x] = _fresh(f"{x}_adj", taken)
        taken.add(new[x])
    elements = list(M.elements) + [new[x] for x in orbit]
    pairs = M.relation_pairs() + [(new[x], x) for x in orbit]
    colors = dict(M.colors)
    colors[ADJOINED] = set(new.values())
    return ColoredPoset.build(elements, pairs, colors, allow_reserved=True)


def treeify_even(M: ColoredPoset, e=None, *, verify: bool = True) -> TreeifyResult:
    _require_connected_cfpo(M)
    n = classify(M).n
    if n % 2:
        raise NotEvenClass(f"class {n} is odd", n=n)
    if e is None:
        e = adjoin_candidates(M)[0]
    M2 = adjoin_orbit_points(M, e)
    inner = treeify_odd(M2, verify=False)
    adjoined = frozenset(M2.colors[ADJOINED])
    res = TreeifyResult(inner.tree, "even_adjoin", inner.root, M.elements,
                        virtual=inner.virtual, adjoined=adjoined)
    return _verified(M, res) if verify else res


# -- disconnected posets -------------------------------------------------------------------

def treeify_disconnected(M: ColoredPoset, *, verify: bool = True) -> TreeifyResult:
    """Join the trees of all components at a fresh ``ROOT`` point.

    Each component is rooted at the centre of its completion so that
    isomorphic components receive isomorphic trees.
    """
    if len(M) == 0:
        raise EmptyPoset("empty poset")
    if not is_cfpo(M):
        raise NotACFPO("cover graph of the completion has a cycle")
    comps = components(M)
    if len(comps) == 1:
        return treeify(M, verify=verify)
    order = {x: i for i, x in enumerate(M.elements)}
    comps = sorted(comps, key=lambda c: min(order[x] for x in c))
    taken = set(complete(M).completed.elements)
    root = _fresh("root", taken)
    parent: dict = {root: None}
    up: set = set()
    virtual: set = set()
    extra = []
    for comp in comps:
        part = M.induced(comp)
        c = centre(part)
        elems, p, u, v = _rooted(part, c)
        for y in elems:
            parent[y] = p[y] if p[y] is not None else root
            if y not in M:
                extra.append(y)
        up |= u
        virtual |= v
    elements = list(M.elements) + extra + [root]
    colors = dict(M.colors)
    colors[U] = up
    colors[VIRTUAL] = virtual
    colors[ROOT] = {root}
    T = _build_tree(elements, parent, colors)
    res = TreeifyResult(T, "disconnected", root, M.elements, virtual=frozenset(virtual))
    return _verified(M, res) if verify else res


# -- dispatcher ------------------------------------------------------------------------------

ROUTES = ("auto", "fixed", "odd", "even", "disconnected")


def treeify(M: ColoredPoset, route: str = "auto", root=None, *,
            verify: bool = True) -> TreeifyResult:
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    if len(M) == 0:
        raise EmptyPoset("empty poset")
    if not is_cfpo(M):
        raise NotACFPO("cover graph of the completion has a cycle")
    if route == "disconnected" or (route == "auto" and not is_connected(M)):
        return treeify_disconnected(M, verify=verify)
    if route == "odd":
        return treeify_odd(M, verify=verify)
    if route == "even":
        return treeify_even(M, root, verify=verify)
    if root is None:
        root = _default_root(M) if is_connected(M) else None
    return treeify_fixed_point(M, root, verify=verify)

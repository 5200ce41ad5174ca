"""Small named posets used in examples, tests and the CLI."""

from __future__ import annotations

from .poset import ColoredPoset, build


def chain(k: int, names: str = "abcdefghijklmnopqrstuvwxyz") -> ColoredPoset:
    elems = list(names[:k]) if k <= len(names) else [f"c{i}" for i in range(k)]
    return build(elems, list(zip(elems, elems[1:])))


def antichain(k: int) -> ColoredPoset:
    return build(list("abcdefghijklmnopqrstuvwxyz"[:k]))


def alt(n: int, reversed: bool = False) -> ColoredPoset:
    """The fence a_0 > a_1 < a_2 > ... on ``n`` points; ``reversed`` flips it."""
    from .alt import alt_poset

    return alt_poset(n, reversed)


def bowtie() -> ColoredPoset:
    return build(["b1", "b2", "x", "c1", "c2"],
                 [("b1", "x"), ("b2", "x"), ("x", "c1"), ("x", "c2")])


def diamond() -> ColoredPoset:
    return build(list("abcd"), [("a", "b"), ("b", "c"), ("a", "d"), ("d", "c")])


def bip22() -> ColoredPoset:
    return build(list("abcd"), [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])


def hbar() -> ColoredPoset:
    return build(["b1", "b2", "x", "y", "c1", "c2"],
                 [("b1", "x"), ("b2", "x"), ("x", "y"), ("y", "c1"), ("y", "c2")])


NAMED = {
    "CHAIN_2": lambda: chain(2),
    "CHAIN_3": lambda: chain(3),
    "CHAIN_4": lambda: chain(4),
    "ANTI_2": lambda: antichain(2),
    "V": lambda: alt(3),
    "LAMBDA": lambda: alt(3, True),
    "N": lambda: alt(4),
    "ALT_5": lambda: alt(5),
    "BOWTIE": bowtie,
    "DIAMOND": diamond,
    "BIP22": bip22,
    "HBAR": hbar,
}

"""Command-line interface: ``cfpo <verb> [input] [flags]``.

Every verb except ``dot`` writes one JSON document to standard output
(``enumerate`` writes one per line). Exit status is 0 on success, 1 on a
domain error (the JSON error object names it) and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import io as pio
from .alt import classify
from .aut import automorphisms, fixed_points, orbits
from .completion import complete
from .dot import emit_dot
from .enumeration import connected_cfpos
from .errors import (CFPOError, CycleInOrder, DuplicateElement, NotACFPO, ReservedColor,
                     UnknownElement)
from .groups import MATERIALISE_CARRIER
from .paths import components, is_cfpo, two_path_witness
from .poset import ColoredPoset
from .treeify import ROUTES, aut_preserved, interpret_back, treeify

MALFORMED = (pio.MalformedInput, CycleInOrder, DuplicateElement, UnknownElement, ReservedColor)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cfpo", description="Cycle-free partial orders and their trees.")
    p.add_argument("--materialise-bound", type=int, default=MATERIALISE_CARRIER,
                   help="largest carrier whose group is listed element by element")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help_, needs_input=True):
        s = sub.add_parser(name, help=help_)
        if needs_input:
            s.add_argument("input", help="poset JSON file, or - for standard input")
        return s

    verb("check", "CFPO status, components, and a two-path witness on failure")
    verb("classify", "largest n such that a fence on n points embeds")
    verb("aut", "automorphism group: order, generators, orbits")
    verb("orbits", "orbits on k-tuples").add_argument("--k", type=int, default=1)
    verb("fixed", "points fixed by every automorphism")
    verb("complete", "bounded-cut completion")
    t = verb("treeify", "tree with the same automorphism group")
    t.add_argument("--route", choices=ROUTES, default="auto")
    t.add_argument("--root", default=None)
    t.add_argument("--dot", action="store_true", help="include a DOT rendering")
    i = verb("interpret", "recover the order from a treeify result or tree document")
    i.add_argument("--exclude-root", action="store_true")
    i.add_argument("--literal", action="store_true",
                   help="evaluate the closed-interval clauses as first written")
    verb("verify", "treeify and check automorphisms and the round trip")
    verb("dot", "Graphviz rendering").add_argument("--completed", action="store_true")
    e = verb("enumerate", "all connected CFPOs up to isomorphism, verified", needs_input=False)
    e.add_argument("--max-n", type=int, required=True)
    return p


def _read(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise pio.MalformedInput(f"cannot read {path}: {exc.strerror}") from None


def _result_doc(res) -> dict:
    return {
        "tree": pio.poset_to_doc(res.tree),
        "provenance": res.provenance,
        "root": res.root,
        "u": res.tree.sorted(res.u),
        "virtual": res.tree.sorted(res.virtual),
        "adjoined": res.tree.sorted(res.adjoined),
    }


def _verdict(M: ColoredPoset) -> dict:
    res = treeify(M, verify=False)
    back = interpret_back(res.tree, exclude_root=res.provenance == "disconnected")
    return {
        "provenance": res.provenance,
        "aut_preserved": aut_preserved(M, res.tree),
        "roundtrip": back == M,
    }


def _check(M: ColoredPoset) -> dict:
    if not is_cfpo(M):
        raise NotACFPO("cover graph of the completion has a cycle", **(two_path_witness(M) or {}))
    return {"cfpo": True, "components": len(components(M)), "class": classify(M).n}


def _dispatch(args, stdin: TextIO) -> tuple[int, str]:
    if args.verb == "enumerate":
        lines = []
        for n in range(1, args.max_n + 1):
            for M in connected_cfpos(n):
                doc = {"n": n, "poset": pio.poset_to_doc(M), "class": classify(M).n,
                       "aut_order": automorphisms(M).order()}
                doc.update(_verdict(M))
                lines.append(pio.dumps(doc, indent=None))
        return 0, "\n".join(lines) + "\n"

    text = _read(args.input, stdin)
    if args.verb == "interpret":
        doc = pio.json.loads(text) if text.strip() else None
        exclude = args.exclude_root
        if isinstance(doc, dict) and "tree" in doc:
            exclude = exclude or doc.get("provenance") == "disconnected"
            doc = doc["tree"]
        T = pio.poset_from_doc(doc, allow_reserved=True)
        back = interpret_back(T, exclude_root=exclude, literal=args.literal)
        return 0, pio.dumps(pio.poset_to_doc(back))

    M = pio.loads(text)
    if args.verb == "check":
        out = _check(M)
    elif args.verb == "classify":
        c = classify(M)
        out = {"n": c.n, "reversed": c.witness.reversed,
               "witness": [[x, y] for x, y in c.witness.map]}
    elif args.verb == "aut":
        G = automorphisms(M)
        out = pio.group_to_doc(G)
        if len(M) <= args.materialise_bound:
            out["elements"] = sorted(pio.perm_to_doc(g) for g in
                                     G.elements(carrier_bound=args.materialise_bound))
    elif args.verb == "orbits":
        orbs = orbits(M, args.k, carrier_bound=args.materialise_bound)
        out = {"k": args.k, "orbits": [sorted(o, key=lambda t: [M.idx(x) for x in t])
                                       for o in orbs]}
    elif args.verb == "fixed":
        out = {"fixed_points": M.sorted(fixed_points(M))}
    elif args.verb == "complete":
        comp = complete(M)
        out = pio.poset_to_doc(comp.completed)
        out["virtual"] = comp.completed.sorted(comp.virtual)
    elif args.verb == "treeify":
        res = treeify(M, args.route, args.root)
        out = _result_doc(res)
        if args.dot:
            out["dot"] = emit_dot(res.tree)
    elif args.verb == "verify":
        out = _verdict(M)
        if not out["aut_preserved"]:
            return 1, pio.dumps({"error": "VerificationFailed",
                                 "message": "automorphism groups differ", "details": out})
    elif args.verb == "dot":
        if args.completed:
            comp = complete(M)
            return 0, emit_dot(comp.completed, virtual=comp.virtual)
        return 0, emit_dot(M)
    else:  # pragma: no cover - argparse restricts verbs
        raise UsageError(f"unknown verb {args.verb}")
    return 0, pio.dumps(out)


def run(argv: Sequence[str], stdin: TextIO | None = None) -> tuple[int, str]:
    """Run one command; returns ``(exit status, output text)``."""
    stdin = stdin if stdin is not None else sys.stdin
    try:
        args = _parser().parse_args(list(argv))
    except UsageError as exc:
        return 2, pio.dumps({"error": "UsageError", "message": str(exc), "details": {}})
    try:
        return _dispatch(args, stdin)
    except MALFORMED as exc:
        err = exc.to_json() if isinstance(exc, CFPOError) else {
            "error": "MalformedInput", "message": str(exc), "details": {}}
        return 2, pio.dumps(err)
    except (pio.json.JSONDecodeError, ValueError) as exc:
        return 2, pio.dumps({"error": "MalformedInput", "message": str(exc), "details": {}})
    except CFPOError as exc:
        return 1, pio.dumps(exc.to_json())


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

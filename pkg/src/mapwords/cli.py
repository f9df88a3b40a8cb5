"""Command line interface.

Maps are read as JSON records ``{"flags", "sigma", "alpha", "root"}`` from a
file argument or standard input.  Exit status: 0 success, 1 domain error or
failed check, 2 usage error or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import chords, dfs, layout, maps, poset, quasitree, words
from .perm import DomainError


class InputError(Exception):
    pass


def _emit(obj) -> None:
    if isinstance(obj, str):
        print(obj)
    else:
        print(json.dumps(obj, sort_keys=True))


def _ids(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"bad edge id list {text!r}") from None


def _load(args) -> maps.Map | maps.RootedMap:
    try:
        if args.file in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        return maps.loads(text)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read map: {exc}") from None


def _read_map(args) -> maps.RootedMap:
    g = _load(args)
    if isinstance(g, maps.RootedMap):
        root = g.root if args.root is None else args.root
        g = g.map
    else:
        root = 0 if args.root is None else args.root
    problem = maps.validate(g)
    if problem != "ok":
        raise DomainError(problem)
    if not len(g.sigma):
        raise DomainError("the map has no flags")
    if root not in g.sigma:
        raise InputError(f"root {root} is not a flag")
    return maps.RootedMap(g, root)


def _map_out(g: maps.Map, root: int | None) -> dict:
    return maps.to_record(g, root if root in g.sigma else None)


def _diagram_record(d: chords.BicoloredDiagram) -> dict:
    w = chords.double_occurrence_word(d)
    return {
        "flags": list(d.word),
        "edges": list(w),
        "word": chords.format_word(chords.letters(w)),
        "tree": sorted(d.tree),
    }


# -- subcommands --------------------------------------------------------------

def cmd_validate(args) -> int:
    g = _load(args)
    g = g.map if isinstance(g, maps.RootedMap) else g
    msg = maps.validate(g)
    if msg == "ok" and not maps.is_connected(g):
        msg = "not connected"
    _emit(msg)
    return 0 if msg == "ok" else 1


def cmd_dual(args) -> int:
    r = maps.dual_rooted(_read_map(args))
    _emit(_map_out(r.map, r.root))
    return 0


def cmd_genus(args) -> int:
    _emit(str(maps.genus(_read_map(args).map)))
    return 0


def cmd_tour(args) -> int:
    r = _read_map(args)
    t = quasitree.tour(r.map, _ids(args.set))
    _emit({"cycles": [list(c) for c in t.cycles()], "quasi_tree": t.num_cycles() <= 1})
    return 0


def cmd_quasitrees(args) -> int:
    r = _read_map(args)
    if args.list:
        _emit([sorted(s) for s in quasitree.list_quasi_trees(r.map)])
    else:
        _emit(str(quasitree.count_quasi_trees(r.map)))
    return 0


def cmd_delete(args) -> int:
    r = _read_map(args)
    _emit(_map_out(quasitree.delete(r.map, args.edge), r.root))
    return 0


def cmd_contract(args) -> int:
    r = _read_map(args)
    _emit(_map_out(quasitree.contract(r.map, args.edge), r.root))
    return 0


def cmd_diagram(args) -> int:
    r = _read_map(args)
    _emit(_diagram_record(chords.diagram_of(r, _ids(args.tree))))
    return 0


def cmd_word2map(args) -> int:
    w = chords.parse_word(args.word)
    try:
        chords.occurrences(w)
    except DomainError as exc:
        raise InputError(str(exc)) from None
    r, tree = words.word_to_map(w)
    rec = _map_out(r.map, r.root)
    rec["tree"] = sorted(tree)
    _emit(rec)
    return 0


def cmd_map2word(args) -> int:
    r = _read_map(args)
    if args.tree is None:
        w = words.loopless_word(r)
    else:
        w = words.map_to_word(r, _ids(args.tree))
    _emit(chords.format_word(w))
    return 0


def cmd_dfs(args) -> int:
    r = _read_map(args)
    res = dfs.dfs(r, dfs.Policy.LATE if args.late else dfs.Policy.EARLY)
    _emit({"tree": sorted(res.tree), "order": list(res.order)})
    return 0


def cmd_tremaux(args) -> int:
    r = _read_map(args)
    ok = dfs.is_tremaux(r, _ids(args.tree))
    _emit("true" if ok else "false")
    return 0


def cmd_poset(args) -> int:
    _emit(poset.build_poset(_read_map(args)).to_record())
    return 0


def cmd_pivot(args) -> int:
    r = _read_map(args)
    ef = _ids(args.edges)
    if len(ef) != 2:
        raise InputError("--edges needs exactly two ids")
    d = chords.diagram_of(r, _ids(args.tree))
    _emit(_diagram_record(chords.pivot_diagram(d, *ef)))
    return 0


def cmd_pivot_class(args) -> int:
    r = _read_map(args)
    cls = chords.pivot_class(chords.diagram_of(r, _ids(args.tree)))
    _emit([sorted(d.tree) for d in cls])
    return 0


def cmd_count_loopless(args) -> int:
    if args.n < 0 or args.unmatched < 0:
        raise InputError("counts must be nonnegative")
    if args.planar and args.unmatched == 0:
        _emit(str(words.count_planar_loopless(args.n)))
    elif args.planar:
        _emit(str(words.count_Nprime(args.n, args.unmatched)))
    else:
        _emit(str(words.count_G(args.n, args.unmatched)))
    return 0


def cmd_gen_words(args) -> int:
    pred = words.PREDICATES[args.filter] if args.filter else None
    if pred is not None and args.filter in ("P", "N") and args.m:
        raise DomainError(f"property {args.filter} applies to words without unmatched symbols")
    for w in words.gen_words(args.n, args.m):
        if pred is None or pred(w):
            print("".join(w) if len(set(w)) <= 26 else chords.format_word(w))
    return 0


def cmd_verify_f(args) -> int:
    rep = words.verify_F_equation(args.degree)
    _emit({
        "degree": rep.degree,
        "holds": rep.holds,
        "T": {f"{n},{m}": c for (n, m), c in sorted(rep.table.items())},
        "mismatches": [{"x": i, "y": j, "lhs": a, "rhs": b}
                       for (i, j), a, b in rep.mismatches],
    })
    return 0 if rep.holds else 1


def cmd_layout(args) -> int:
    r = _read_map(args)
    _emit(layout.layout(r, _ids(args.tree)).to_record())
    return 0


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mapwords", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def map_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", nargs="?", help="map file (default: stdin)")
        sp.add_argument("--root", type=int, help="root flag (default: record root or 0)")
        sp.set_defaults(func=func)
        return sp

    map_cmd("validate", cmd_validate, "check the map axioms")
    map_cmd("dual", cmd_dual, "print the dual map")
    map_cmd("genus", cmd_genus, "print the genus")
    map_cmd("tour", cmd_tour, "tour of an edge set").add_argument("--set", required=True)
    sp = map_cmd("quasitrees", cmd_quasitrees, "count or list quasi-trees")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--list", action="store_true")
    map_cmd("delete", cmd_delete, "delete an edge").add_argument("--edge", type=int, required=True)
    map_cmd("contract", cmd_contract, "contract an edge").add_argument("--edge", type=int, required=True)
    map_cmd("diagram", cmd_diagram, "bicolored diagram of a quasi-tree").add_argument("--tree", required=True)
    sp = sub.add_parser("word2map", help="rooted loopless map of a P-word")
    sp.add_argument("word")
    sp.set_defaults(func=cmd_word2map)
    map_cmd("map2word", cmd_map2word, "tour word of a tree (default: Late DFS-tree)").add_argument("--tree")
    sp = map_cmd("dfs", cmd_dfs, "Early or Late DFS-tree")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--early", action="store_true")
    g.add_argument("--late", action="store_true")
    map_cmd("tremaux", cmd_tremaux, "test the Tremaux property").add_argument("--tree", required=True)
    map_cmd("poset", cmd_poset, "quasi-tree poset")
    sp = map_cmd("pivot", cmd_pivot, "pivot a diagram on two interlaced chords")
    sp.add_argument("--edges", required=True)
    sp.add_argument("--tree", required=True)
    map_cmd("pivot-class", cmd_pivot_class, "quasi-trees reachable by pivots").add_argument("--tree", required=True)
    sp = sub.add_parser("count-loopless", help="G(n,m), or T(n,m) with --planar")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--planar", action="store_true")
    sp.add_argument("--unmatched", type=int, default=0)
    sp.set_defaults(func=cmd_count_loopless)
    sp = sub.add_parser("gen-words", help="enumerate 1-2 occurrence words")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--filter", choices=sorted(words.PREDICATES))
    sp.set_defaults(func=cmd_gen_words)
    sp = sub.add_parser("verify-f", help="check the functional equation by enumeration")
    sp.add_argument("--degree", type=int, required=True)
    sp.set_defaults(func=cmd_verify_f)
    map_cmd("layout", cmd_layout, "polygon layout data for a quasi-tree").add_argument("--tree", required=True)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())

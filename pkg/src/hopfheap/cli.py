"""Command line interface: ``hopfheap <command> ...``.

Exit status is 0 when every check passes, 1 when an axiom fails or a
construction cannot be verified, and 2 when an input cannot be parsed.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import catalog
from .coalgebra import Coalgebra
from .fileformat import FormatError, field_record, read_grunspan, read_structure, sparse_entries, to_record, write_json_atomic
from .galois import (
    GaloisCoObject,
    check_cotranslation_props,
    check_galois,
    cotranslation,
    ehresmann_hopf,
    ehresmann_iso_left_translations,
    galois_from_heap,
    heap_from_galois,
    roundtrip_check,
)
from .heap import HopfHeap, check_grunspan, check_hopf_heap, grunspan_map, heap_from_hopf
from .hopf import HopfAlgebraData, check_antipode, check_bialgebra, solve_antipode, with_solved_antipode
from .report import Report, ShapeError, VerificationError, first_failure
from .scalars import FieldSpec
from .translations import build_translations

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


class _Outcome:
    """Collects the human lines and the machine-readable report of one command."""

    def __init__(self, command: str, path: str | None):
        self.lines: list[str] = []
        self.data: dict = {"command": command}
        if path is not None:
            self.data["input"] = path
        self.report = Report.passed()

    def say(self, line: str = ""):
        self.lines.append(line)

    def set_report(self, rep: Report):
        self.report = rep
        self.data.update(rep.as_dict())

    def finish(self, args) -> int:
        if "ok" not in self.data:
            self.data.update(self.report.as_dict())
        verdict = "PASS" if self.report.ok else f"FAIL: {self.report.axiom} at witness {self.report.witness}"
        for line in self.lines:
            print(line)
        print(verdict)
        if not self.report.ok and self.report.detail:
            print(f"  {self.report.detail}")
        if getattr(args, "report", None):
            write_json_atomic(args.report, self.data)
        return EXIT_OK if self.report.ok else EXIT_FAIL


def _load(path: str, *kinds):
    obj, rec = read_structure(path)
    if kinds and not isinstance(obj, kinds):
        names = " or ".join(k.__name__ for k in kinds)
        raise FormatError(f"{path}: expected a {names} file, found {type(obj).__name__}")
    return obj, rec


def _heap_input(path: str) -> HopfHeap:
    obj, _ = _load(path, HopfHeap, HopfAlgebraData)
    if isinstance(obj, HopfAlgebraData):
        obj = heap_from_hopf(obj if obj.antipode is not None else with_solved_antipode(obj))
    return obj


def _format_vector(c: Coalgebra, v) -> str:
    f = c.field
    terms = []
    for i, x in enumerate(v):
        if x == 0:
            continue
        s = f.format_scalar(x)
        coeff = "" if s == "1" else "-" if s == "-1" else f"{s}*"
        terms.append(f"{coeff}{c.label(i)}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _matrix_block(c: Coalgebra, m) -> list[str]:
    f = c.field
    cells = [[f.format_scalar(x) for x in row] for row in m]
    width = max(len(s) for row in cells for s in row)
    return ["  [" + " ".join(s.rjust(width) for s in row) + "]" for row in cells]


def cmd_check_heap(args) -> int:
    out = _Outcome("check-heap", args.path)
    h, rec = _load(args.path, HopfHeap)
    theta = read_grunspan(rec, h)
    out.say(f"Hopf heap of dimension {h.dim} over {h.field}")
    checks = [lambda: check_hopf_heap(h)]
    if theta is not None:
        checks.append(lambda: check_grunspan(h, theta))
    out.set_report(first_failure(checks))
    return out.finish(args)


def cmd_check_hopf(args) -> int:
    out = _Outcome("check-hopf", args.path)
    h, _ = _load(args.path, HopfAlgebraData)
    out.say(f"bialgebra of dimension {h.dim} over {h.field}")
    rep = check_bialgebra(h)
    if rep and h.antipode is None:
        S = solve_antipode(h)
        if S is None:
            rep = Report(False, "antipode exists", None, "the identity has no convolution inverse")
        else:
            out.say("no antipode in file; solved antipode:")
            out.lines.extend(_matrix_block(h.coalgebra, S))
            out.data["solved_antipode"] = sparse_entries(h.field, S)
    elif rep:
        rep = check_antipode(h)
    out.set_report(rep)
    return out.finish(args)


def cmd_check_galois(args) -> int:
    out = _Outcome("check-galois", args.path)
    g, _ = _load(args.path, GaloisCoObject)
    out.say(f"co-object: dim C = {g.dim}, dim H = {g.hopf.dim} over {g.field}")
    rep = check_galois(g)
    if rep:
        rep = check_cotranslation_props(g, cotranslation(g))
    out.set_report(rep)
    return out.finish(args)


def cmd_translations(args) -> int:
    out = _Outcome("translations", args.path)
    h = _heap_input(args.path)
    t = build_translations(h, args.side)
    name = "Tn^r C" if args.side == "right" else "Tn^l C"
    out.say(f"dim {name} = {t.dim}")
    out.data.update({"side": args.side, "dim": t.dim})
    if args.output:
        write_json_atomic(args.output, to_record(t.hopf))
        sidecar = {
            "type": "translation_action",
            "side": args.side,
            "field": field_record(h.field),
            "coalgebra": to_record(h.coalgebra),
            # [k, p, l]: coefficient of e_l when basis element p acts on e_k
            "action": sparse_entries(h.field, t.action),
        }
        write_json_atomic(args.output + ".action.json", sidecar)
        out.say(f"wrote {args.output} and {args.output}.action.json")
    return out.finish(args)


def cmd_grunspan(args) -> int:
    out = _Outcome("grunspan", args.path)
    h = _heap_input(args.path)
    theta = grunspan_map(h)
    c, f = h.coalgebra, h.field
    is_id = bool(np.array_equal(theta, f.eye(h.dim)))
    out.say("ϑ = id" if is_id else "ϑ ≠ id")
    out.say("ϑ (column i is ϑ(e_i)):")
    out.lines.extend(_matrix_block(c, theta))
    for i in range(h.dim):
        if not np.array_equal(theta[:, i], f.basis_vector(h.dim, i)):
            out.say(f"ϑ({c.label(i)}) = {_format_vector(c, theta[:, i])}")
    out.data.update({"identity": is_id, "grunspan": sparse_entries(f, theta)})
    out.set_report(check_grunspan(h, theta))
    if args.output:
        write_json_atomic(args.output, to_record(h, grunspan=theta))
    return out.finish(args)


def cmd_ehresmann(args) -> int:
    out = _Outcome("ehresmann", args.path)
    obj, _ = _load(args.path, HopfHeap, HopfAlgebraData, GaloisCoObject)
    if isinstance(obj, GaloisCoObject):
        g = obj
        heap, _ = heap_from_galois(g)
    else:
        heap = _heap_input(args.path)
        g = galois_from_heap(heap)
    E = ehresmann_hopf(g)
    out.say(f"E(C, H) has dimension {E.hopf.dim} (coideal of dimension {E.quotient.subspace.dim})")
    left = build_translations(heap, "left")
    phi = ehresmann_iso_left_translations(E, left)
    out.say(f"isomorphism E(C, H) -> Tn^l C verified ({phi.shape[0]}x{phi.shape[1]})")
    out.data.update({"dim": E.hopf.dim, "iso_left_translations": True})
    if args.output:
        write_json_atomic(args.output, to_record(E.hopf, quotient_of=f"C (x) C / I for {args.path}"))
        out.say(f"wrote {args.output}")
    return out.finish(args)


def cmd_roundtrip(args) -> int:
    out = _Outcome("roundtrip", args.path)
    h = _heap_input(args.path)
    rep = roundtrip_check(h)
    out.say(f"heap -> co-object -> heap on dimension {h.dim} over {h.field}")
    out.set_report(rep)
    return out.finish(args)


def _generate(args):
    f = FieldSpec.parse(args.field)
    kind = args.kind
    if kind == "group-algebra":
        h = catalog.gen_group_algebra(args.group, f)
        return heap_from_hopf(h) if args.heap else h
    if kind == "sweedler":
        h = with_solved_antipode(catalog.gen_sweedler(f))
        return heap_from_hopf(h) if args.heap else h
    if kind == "heap":
        return catalog.linearize_heap(catalog.gen_heap_from_group(catalog.group_table(args.group)), f)
    if kind == "galois":
        if args.group == "Sweedler":
            heap = heap_from_hopf(with_solved_antipode(catalog.gen_sweedler(f)))
        else:
            heap = catalog.linearize_heap(catalog.gen_heap_from_group(catalog.group_table(args.group)), f)
        return galois_from_heap(heap)
    raise ValueError(f"unknown generator {kind!r}")


def cmd_generate(args) -> int:
    try:
        obj = _generate(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    rec = to_record(obj)
    if args.output:
        write_json_atomic(args.output, rec)
        print(f"wrote {args.output}")
    else:
        from .fileformat import dumps

        sys.stdout.write(dumps(rec))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfheap", description="Exact checks for Hopf heaps and Hopf-Galois co-objects.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_path(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("path")
        sp.add_argument("--report", help="write a machine-readable JSON report here")
        sp.set_defaults(func=func)
        return sp

    with_path("check-heap", cmd_check_heap, "verify the Hopf heap axioms")
    with_path("check-hopf", cmd_check_hopf, "verify the bialgebra and antipode axioms")
    with_path("check-galois", cmd_check_galois, "verify a Hopf-Galois co-object")
    sp = with_path("translations", cmd_translations, "build the right or left translation Hopf algebra")
    sp.add_argument("--side", choices=("right", "left"), default="right")
    sp.add_argument("-o", "--output")
    sp = with_path("grunspan", cmd_grunspan, "compute the Grunspan map")
    sp.add_argument("-o", "--output", help="write the heap with its Grunspan map")
    sp = with_path("ehresmann", cmd_ehresmann, "build E(C, H) and compare with the left translations")
    sp.add_argument("-o", "--output")
    with_path("roundtrip", cmd_roundtrip, "heap -> co-object -> heap instance check")

    gp = sub.add_parser("generate", help="write a catalog structure")
    gp.add_argument("kind", choices=("group-algebra", "sweedler", "heap", "galois"))
    gp.add_argument("--group", default="C2", help=f"one of {', '.join(catalog.GROUP_NAMES)} (galois also takes Sweedler)")
    gp.add_argument("--heap", action="store_true", help="emit the heap a S(b) c instead of the Hopf algebra")
    gp.add_argument("--field", default="Q", help="Q or Fp:<p>")
    gp.add_argument("-o", "--output")
    gp.set_defaults(func=cmd_generate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, ShapeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationError as exc:
        print(f"FAIL: {exc}")
        if getattr(args, "report", None):
            rep = exc.report or Report(False, "construction", None, str(exc))
            write_json_atomic(args.report, {"command": args.command, "input": getattr(args, "path", None), **rep.as_dict()})
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

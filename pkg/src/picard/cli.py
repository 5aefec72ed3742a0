"""Batch command line: validate, construct, equiv, puppe, catalog.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or document error,
3 search budget exceeded.  Inputs are file paths, ``-`` for stdin, or
``catalog:NAME``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable

from . import catalog
from .constructions import cokernel, copip, coroot, factorize, factorize_pl, kernel, pip, puppe_check, root
from .equivalence import find_equivalence
from .errors import BudgetExceeded, PicardError
from .homspace import end_ring, two_group_hom_space
from .report import Checker, CheckEntry, CheckReport
from .rmodule import (RModHom, RModule, biproduct, hom_two_group, validate_mod_hom, validate_mod_two_morphism,
                      validate_module)
from .search import SearchBudget
from .textio import as_token, dumps, loads, report_document, serialize
from .tworing import TwoRing, TwoRingHom, validate_ring_hom, validate_ring_two_morphism, validate_two_ring
from .twogroup import SymTwoGroup, TwoGroupHom, TwoGroupMor, validate_hom, validate_two_group, \
    validate_two_morphism

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(PicardError):
    code = "USAGE"


# ---------------------------------------------------------------------------
# validation of any structure


def _guard(ck: Checker, prefix: str, run: Callable[[], CheckReport]) -> None:
    """Shape errors become a failing ``<prefix>shape`` entry."""
    try:
        ck.extend(run(), prefix)
    except PicardError as exc:
        ck.fail(prefix + "shape", (exc.code,), str(exc))


def _structure_validator(A) -> Callable:
    if isinstance(A, RModule):
        return validate_module
    if isinstance(A, TwoRing):
        return validate_two_ring
    return validate_two_group


def _hom_validator(F) -> tuple[Callable, Callable]:
    if isinstance(F, RModHom):
        return validate_mod_hom, validate_mod_two_morphism
    if isinstance(F, TwoRingHom):
        return validate_ring_hom, validate_ring_two_morphism
    return validate_hom, validate_two_morphism


def validate_object(x) -> CheckReport:
    """Run every validator that applies, including those of the parts a hom is built from."""
    ck = Checker()
    if isinstance(x, SymTwoGroup):
        if isinstance(x, RModule):
            _guard(ck, "scalars.", lambda: validate_two_ring(x.ring))
        _guard(ck, "", lambda: _structure_validator(x)(x))
        return ck.report()
    F = x if isinstance(x, TwoGroupHom) else x.source
    vhom, vmor = _hom_validator(F)
    if isinstance(F, RModHom):
        _guard(ck, "scalars.", lambda: validate_two_ring(F.dom.ring))
    _guard(ck, "dom.", lambda: _structure_validator(F.dom)(F.dom))
    _guard(ck, "cod.", lambda: _structure_validator(F.cod)(F.cod))
    if isinstance(x, TwoGroupHom):
        _guard(ck, "", lambda: vhom(x))
    else:
        _guard(ck, "source.", lambda: vhom(x.source))
        _guard(ck, "target.", lambda: vhom(x.target))
        _guard(ck, "", lambda: vmor(x))
    return ck.report()


# ---------------------------------------------------------------------------
# inputs and outputs


def read_input(ref: str):
    if ref.startswith("catalog:"):
        try:
            return catalog.get(ref[len("catalog:"):])
        except KeyError:
            raise UsageError(f"unknown catalog instance {ref[len('catalog:'):]!r}") from None
    if ref == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(ref, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {ref}: {exc.strerror}") from None
    return loads(text)


def _expect(x, cls, what: str):
    if not isinstance(x, cls):
        raise UsageError(f"expected {what}, got {type(x).__name__}")
    return x


def render_report(report: CheckReport, fmt: str, info: dict | None = None) -> str:
    if fmt == "text":
        return serialize(report_document(report, info))
    lines = []
    for e in report.entries:
        row = {"axiom": e.axiom, "status": "PASS" if e.passed else "FAIL"}
        if e.witness is not None:
            row["witness"] = _jsonable(e.witness)
        if e.note:
            row["note"] = e.note
        lines.append(json.dumps(row, sort_keys=True))
    info = {k: _jsonable(v) for k, v in (info or {}).items()}
    summary = {"result": "PASS" if report.ok else "FAIL", "info": info}
    lines.append(json.dumps(summary, sort_keys=True))
    return "\n".join(lines) + "\n"


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(e) for e in x]
    if isinstance(x, (int, float, str)) or x is None:
        return x
    return as_token(x)


# ---------------------------------------------------------------------------
# constructions


def _parts_kernel(F, budget):
    K = kernel(F)
    return {"module": K.ker, "e": K.e, "eps": K.eps}


def _parts_cokernel(F, budget):
    C = cokernel(F)
    return {"module": C.coker, "p": C.p, "pi": C.pi}


def _parts_pip(build):
    def parts(F, budget):
        P = build(F)
        return {"module": P.module, "sigma": P.sigma}
    return parts


def _parts_root(build):
    def parts(alpha, budget):
        R = build(alpha)
        return {"module": R.module, "map": R.map}
    return parts


def _parts_image(factor, side: int):
    def parts(F, budget):
        fac = factor(F)
        mod = fac.E.cod if side == 1 else fac.M.dom
        return {"module": mod, "E": fac.E, "Omega": fac.Omega, "M": fac.M}
    return parts


def _parts_biproduct(M, N, budget):
    P, p1, p2, i1, i2 = biproduct(M, N)
    return {"module": P, "p1": p1, "p2": p2, "i1": i1, "i2": i2}


def _parts_end(A, budget):
    return {"module": end_ring(A, budget)}


def _parts_hom(M, N, budget):
    if isinstance(M, RModule) and isinstance(N, RModule):
        return {"module": hom_two_group(M, N, budget)}
    return {"module": two_group_hom_space(M, N, budget).group}


# name -> (input types, parts builder)
CONSTRUCTIONS = {
    "kernel": ((RModHom,), _parts_kernel),
    "cokernel": ((RModHom,), _parts_cokernel),
    "pip": ((RModHom,), _parts_pip(pip)),
    "copip": ((RModHom,), _parts_pip(copip)),
    "root": ((TwoGroupMor,), _parts_root(root)),
    "coroot": ((TwoGroupMor,), _parts_root(coroot)),
    "im1": ((RModHom,), _parts_image(factorize, 1)),
    "im2": ((RModHom,), _parts_image(factorize, 2)),
    "im1pl": ((RModHom,), _parts_image(factorize_pl, 1)),
    "im2pl": ((RModHom,), _parts_image(factorize_pl, 2)),
    "biproduct": ((RModule, RModule), _parts_biproduct),
    "end": ((SymTwoGroup,), _parts_end),
    "hom": ((SymTwoGroup, SymTwoGroup), _parts_hom),
}


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args, budget) -> tuple[CheckReport, dict]:
    x = read_input(args.input)
    if isinstance(x, CheckReport):
        return x, {"kind": "report"}
    return validate_object(x), {"kind": type(x).__name__}


def cmd_construct(args, budget) -> tuple[CheckReport, dict]:
    types, build = CONSTRUCTIONS[args.construction]
    if len(args.inputs) != len(types):
        raise UsageError(f"{args.construction} takes {len(types)} input(s), got {len(args.inputs)}")
    xs = [_expect(read_input(ref), t, t.__name__) for ref, t in zip(args.inputs, types)]
    try:
        parts = build(*xs, budget)
    except (BudgetExceeded, UsageError):
        raise
    except PicardError as exc:
        return CheckReport([CheckEntry("construct", False, (exc.code,), str(exc))]), {}
    if args.part not in parts:
        raise UsageError(f"{args.construction} has parts {', '.join(parts)}; got {args.part!r}")
    out = parts[args.part]
    text = dumps(out)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return validate_object(out), {"construction": args.construction, "part": args.part}


def cmd_equiv(args, budget) -> tuple[CheckReport, dict]:
    A, B = (_expect(read_input(r), SymTwoGroup, "a 2-group or module") for r in (args.a, args.b))
    if isinstance(A, RModule) != isinstance(B, RModule):
        raise UsageError("cannot compare a module with a bare 2-group")
    if isinstance(A, RModule) and A.ring != B.ring:
        raise UsageError("modules are over different rings")
    stats: dict = {}
    w = find_equivalence(A, B, budget, stats)
    fa, fb = stats["fingerprints"]
    info = {"fingerprint_a": fa, "fingerprint_b": fb, "nodes": stats["nodes"]}
    ck = Checker()
    if w is None:
        reason = ("fingerprint", fa, fb) if fa != fb else ("exhausted", stats["nodes"])
        ck.fail("equivalence", reason)
    else:
        ck.run("equivalence", [()], lambda: True)
        ck.extend(w.validate(), "witness.")
    return ck.report(), info


def cmd_puppe(args, budget) -> tuple[CheckReport, dict]:
    F = _expect(read_input(args.input), RModHom, "a module hom")
    return puppe_check(F, budget), {}


def cmd_catalog(args, budget) -> tuple[CheckReport | None, dict]:
    if args.name is None:
        sys.stdout.write("\n".join(catalog.names()) + "\n")
        return None, {}
    try:
        x = catalog.get(args.name)
    except KeyError:
        raise UsageError(f"unknown catalog instance {args.name!r}") from None
    sys.stdout.write(dumps(x))
    return None, {}


COMMANDS = {"validate": cmd_validate, "construct": cmd_construct, "equiv": cmd_equiv, "puppe": cmd_puppe,
            "catalog": cmd_catalog}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json-lines"], default=argparse.SUPPRESS,
                        help="report format (default text)")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="search node limit (default $PICARD_BUDGET or 500000)")
    common.add_argument("--deterministic", action="store_true", default=argparse.SUPPRESS,
                        help="omit timings so reports are byte-identical across runs")
    p = argparse.ArgumentParser(prog="picard", description=__doc__.split("\n")[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="run the validators for a document")
    v.add_argument("input")

    c = sub.add_parser("construct", parents=[common], help="build a construction and print its document")
    c.add_argument("construction", choices=sorted(CONSTRUCTIONS))
    c.add_argument("inputs", nargs="+")
    c.add_argument("--part", default="module", help="which output to print (default module)")
    c.add_argument("-o", "--output", help="write the document here and the report to stdout")

    e = sub.add_parser("equiv", parents=[common], help="search for an equivalence")
    e.add_argument("a")
    e.add_argument("b")

    u = sub.add_parser("puppe", parents=[common], help="check the four Puppe comparisons for a hom")
    u.add_argument("input")

    k = sub.add_parser("catalog", parents=[common], help="print a catalog instance, or list names")
    k.add_argument("name", nargs="?")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = getattr(args, "format", "text")
    deterministic = getattr(args, "deterministic", False)
    # construct prints the document on stdout unless -o is given, so its report goes to stderr
    report_stream = sys.stderr if args.command == "construct" and not args.output else sys.stdout
    # when the report shares stderr, diagnostics are written as comments so it still parses
    lead = "# " if report_stream is sys.stderr else ""
    started = time.monotonic()
    try:
        budget = SearchBudget.from_env(getattr(args, "budget", None))
    except ValueError as exc:
        print(f"picard: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report, info = COMMANDS[args.command](args, budget)
        code = EXIT_OK if report is None or report.ok else EXIT_FAIL
    except BudgetExceeded as exc:
        report, info, code = CheckReport([CheckEntry("budget", False, (exc.code,), str(exc))]), {}, EXIT_BUDGET
        print(f"{lead}picard: {exc}", file=sys.stderr)
    except PicardError as exc:
        where = (exc.code,) + ((exc.line, exc.col) if getattr(exc, "line", None) is not None else ())
        report, info, code = CheckReport([CheckEntry("input", False, where, str(exc))]), {}, EXIT_USAGE
        print(f"{lead}picard: {exc}", file=sys.stderr)
    if report is None:
        return code
    if not deterministic:
        info["elapsed"] = f"{time.monotonic() - started:.3f}"
    report_stream.write(render_report(report, fmt, info))
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Line-oriented text documents for every structure, and for reports.

A document looks like::

    picard 1
    kind module
    [ring]
    objects 0 1
    i0: 0 -> 0
    ...
    [module]
    objects 0 1
    i0: 0 -> 0
    comp i0 i0 = i0
    act 1 1 = 1
    ...

Every table line is ``name key... = value``.  Composite identifiers are
written as ``(a,b)``.  ``#`` starts a comment.  Documents of kind ``hom`` and
``twomorphism`` carry a ``level`` line (twogroup, tworing or module) saying
what the maps preserve.

Canonical form lists objects, then morphisms, then tables in a fixed order,
each sorted by identifier order; ``serialize(parse(t)) == t`` for canonical
``t``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product as _cartesian
from typing import Any

from .errors import DanglingReference, ParseError, VersionUnsupported
from .groupoid import FinGroupoid
from .ids import encode, is_token, order_key, ordered
from .report import CheckEntry, CheckReport
from .rmodule import RModHom, RModMor, RModule
from .tworing import TwoRing, TwoRingHom, TwoRingMor
from .twogroup import SymTwoGroup, TwoGroupHom, TwoGroupMor

VERSION = 1
KINDS = ("twogroup", "tworing", "module", "hom", "twomorphism", "report")
LEVELS = ("twogroup", "tworing", "module")

# table name -> (argument sorts, value sort, attribute).  Sorts: o/m objects
# and morphisms of the section itself, R/S ring objects and morphisms, a/f and
# b/g objects and morphisms of the domain and codomain, * anything.
_GROUPOID = {"id": ("o", "m", "id_of"), "comp": ("mm", "m", "comp"), "inv": ("m", "m", "inv")}
_TWOGROUP = {
    "add": ("oo", "o", "tensor_obj"), "addm": ("mm", "m", "tensor_mor"), "unit": ("", "o", "unit"),
    "assoc": ("ooo", "m", "assoc"), "lunit": ("o", "m", "lunit"), "runit": ("o", "m", "runit"),
    "sym": ("oo", "m", "sym"), "dual": ("o", "o", "dual"), "eta": ("o", "m", "eta"),
}
_TWORING = {
    "mul": ("oo", "o", "mult_obj"), "mulm": ("mm", "m", "mult_mor"), "one": ("", "o", "one"),
    "massoc": ("ooo", "m", "massoc"), "mlunit": ("o", "m", "mlunit"), "mrunit": ("o", "m", "mrunit"),
    "ldist": ("ooo", "m", "ldist"), "rdist": ("ooo", "m", "rdist"),
}
_MODULE = {
    "act": ("Ro", "o", "act_obj"), "actm": ("Sm", "m", "act_mor"), "adist": ("Roo", "m", "adist"),
    "bdist": ("RRo", "m", "bdist"), "bassoc": ("RRo", "m", "bassoc"), "iunit": ("o", "m", "iunit"),
    "zzero": ("R", "m", "zzero"),
}
_HOM = {"omap": ("a", "b", "omap"), "mmap": ("f", "g", "mmap"), "fplus": ("aa", "g", "fplus"),
        "fzero": ("", "g", "fzero")}
_RINGHOM = {"fdot": ("aa", "g", "fdot"), "fone": ("", "g", "fone")}
_MODHOM = {"ftwo": ("Ra", "g", "ftwo")}
_MOR = {"component": ("a", "g", "component")}
_REPORT = {"check": ("*", "*", None), "witness": ("*", "*", None), "info": ("*", "*", None)}

STRUCTURE_TABLES = {
    "twogroup": {**_GROUPOID, **_TWOGROUP},
    "tworing": {**_GROUPOID, **_TWOGROUP, **_TWORING},
    "module": {**_GROUPOID, **_TWOGROUP, **_MODULE},
}
HOM_TABLES = {"twogroup": _HOM, "tworing": {**_HOM, **_RINGHOM}, "module": {**_HOM, **_MODHOM}}


def layout(kind: str, level: str | None) -> list[tuple[str, str]]:
    """Sections of a document as (name, role) pairs, in order."""
    if kind in ("twogroup", "tworing"):
        return [(kind, kind)]
    if kind == "module":
        return [("ring", "tworing"), ("module", "module")]
    if kind == "report":
        return [("report", "report")]
    ring = [("ring", "tworing")] if level == "module" else []
    body = ring + [("dom", level), ("cod", level)]
    if kind == "hom":
        return body + [("hom", "hom")]
    return body + [("source", "hom"), ("target", "hom"), ("mor", "mor")]


def tables_for(role: str, level: str | None) -> dict:
    if role in STRUCTURE_TABLES:
        return STRUCTURE_TABLES[role]
    if role == "hom":
        return HOM_TABLES[level]
    if role == "mor":
        return _MOR
    return _REPORT


# ---------------------------------------------------------------------------
# documents


@dataclass
class Section:
    name: str
    role: str
    objects: list | None = None
    morphisms: dict = field(default_factory=dict)   # id -> (src, tgt)
    tables: dict = field(default_factory=dict)      # table -> {key tuple: value}
    where: dict = field(default_factory=dict)       # (table, key) -> (line, col)


@dataclass
class Document:
    version: int
    kind: str
    level: str | None
    sections: dict  # name -> Section


def decode(token: str):
    """Inverse of :func:`encode` on well-formed tokens."""
    if not token.startswith("("):
        return token
    pos = 0

    def item():
        nonlocal pos
        if token[pos] == "(":
            pos += 1
            parts = [item()]
            while token[pos] == ",":
                pos += 1
                parts.append(item())
            pos += 1  # ")"
            return tuple(parts)
        start = pos
        while pos < len(token) and token[pos] not in "(),":
            pos += 1
        return token[start:pos]

    return item()


_TOKEN = re.compile(r"\S+")


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _ident(tok: str, lineno: int, col: int):
    if not is_token(tok):
        raise ParseError(f"malformed identifier {tok!r}", line=lineno, col=col)
    return decode(tok)


def parse(text: str) -> Document:
    """Parse a document; raises PARSE_ERROR or VERSION_UNSUPPORTED."""
    lines = []
    for n, raw in enumerate(text.split("\n"), 1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            lines.append((n, body))
    it = iter(lines)

    def header(word: str):
        try:
            n, body = next(it)
        except StopIteration:
            raise ParseError(f"missing '{word}' line", line=len(text.split("\n")), col=1) from None
        toks = _tokens(body)
        if toks[0][0] != word or len(toks) != 2:
            raise ParseError(f"expected '{word} <value>'", line=n, col=toks[0][1])
        return n, toks[1]

    n, (v, col) = header("picard")
    if not v.isdigit():
        raise ParseError(f"version must be an integer, got {v!r}", line=n, col=col)
    if int(v) != VERSION:
        raise VersionUnsupported(f"version {v} is not supported (expected {VERSION})", line=n, col=col)
    n, (kind, col) = header("kind")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", line=n, col=col)
    rest = list(it)
    level = None
    if kind in ("hom", "twomorphism"):
        it = iter(rest)
        n, (level, col) = header("level")
        if level not in LEVELS:
            raise ParseError(f"unknown level {level!r}", line=n, col=col)
        rest = list(it)

    expected = layout(kind, level)
    sections: dict[str, Section] = {}
    current = None
    for n, body in rest:
        stripped = body.strip()
        if stripped.startswith("["):
            name = stripped[1:-1] if stripped.endswith("]") else None
            col = body.index("[") + 1
            k = len(sections)
            if k >= len(expected):
                raise ParseError(f"unexpected section {stripped!r}", line=n, col=col)
            if name != expected[k][0]:
                raise ParseError(f"unexpected section {stripped!r}, expected [{expected[k][0]}]", line=n, col=col)
            current = Section(name, expected[k][1])
            sections[name] = current
            continue
        if current is None:
            raise ParseError("content before the first section", line=n, col=1)
        _parse_line(current, level, n, body)
    if len(sections) != len(expected):
        missing = expected[len(sections)][0]
        raise ParseError(f"missing section [{missing}]", line=len(text.split("\n")), col=1)
    for s in sections.values():
        if s.role in STRUCTURE_TABLES and s.objects is None:
            raise ParseError(f"section [{s.name}] has no objects line", line=len(text.split("\n")), col=1)
    return Document(int(v), kind, level, sections)


_ARROW = re.compile(r"^\s*(\S+):\s+(\S+)\s+->\s+(\S+)\s*$")


def _parse_line(sec: Section, level, n: int, body: str) -> None:
    toks = _tokens(body)
    structure = sec.role in STRUCTURE_TABLES
    head, hcol = toks[0]
    if structure and head == "objects":
        if sec.objects is not None:
            raise ParseError("duplicate objects line", line=n, col=hcol)
        objs, seen = [], set()
        for tok, col in toks[1:]:
            x = _ident(tok, n, col)
            if x in seen:
                raise ParseError(f"duplicate object id {tok!r}", line=n, col=col)
            seen.add(x)
            objs.append(x)
        sec.objects = objs
        return
    if structure and head.endswith(":"):
        m = _ARROW.match(body)
        if not m:
            raise ParseError("expected 'id: src -> tgt'", line=n, col=hcol)
        f = _ident(m.group(1), n, m.start(1) + 1)
        if f in sec.morphisms:
            raise ParseError(f"duplicate morphism id {m.group(1)!r}", line=n, col=m.start(1) + 1)
        sec.morphisms[f] = (_ident(m.group(2), n, m.start(2) + 1), _ident(m.group(3), n, m.start(3) + 1))
        return
    layout = tables_for(sec.role, level)
    if head not in layout:
        raise ParseError(f"unknown field {head!r} in [{sec.name}]", line=n, col=hcol)
    sorts = layout[head][0]
    if len(toks) != len(sorts) + 3 or toks[-2][0] != "=":
        raise ParseError(f"expected '{head}' with {len(sorts)} argument(s), '=' and a value", line=n, col=hcol)
    key = tuple(_ident(t, n, c) for t, c in toks[1:-2])
    value = _ident(toks[-1][0], n, toks[-1][1])
    table = sec.tables.setdefault(head, {})
    if key in table:
        raise ParseError(f"duplicate entry {head} {' '.join(t for t, _ in toks[1:-2])}", line=n, col=hcol)
    table[key] = value
    sec.where[(head, key)] = (n, hcol)


def serialize(doc: Document) -> str:
    out = [f"picard {doc.version}", f"kind {doc.kind}"]
    if doc.level is not None:
        out.append(f"level {doc.level}")
    for name, role in layout(doc.kind, doc.level):
        sec = doc.sections[name]
        out.append(f"[{name}]")
        if role in STRUCTURE_TABLES:
            out.append(" ".join(["objects"] + [encode(x) for x in ordered(sec.objects)]))
            for f in ordered(sec.morphisms):
                s, t = sec.morphisms[f]
                out.append(f"{encode(f)}: {encode(s)} -> {encode(t)}")
        for table in tables_for(role, doc.level):
            entries = sec.tables.get(table, {})
            for key in sorted(entries, key=order_key):
                out.append(" ".join([table, *map(encode, key), "=", encode(entries[key])]))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# documents <-> structures


def _section_from_structure(name: str, role: str, A: SymTwoGroup) -> Section:
    G = A.base
    sec = Section(name, role, list(G.objects), {f: (G.src[f], G.tgt[f]) for f in G.morphisms})
    for table, (sorts, _, attr) in STRUCTURE_TABLES[role].items():
        sec.tables[table] = _flatten(getattr(G, attr) if table in _GROUPOID else getattr(A, attr), sorts)
    return sec


def _flatten(value: Any, sorts: str) -> dict:
    if not sorts:
        return {(): value}
    if len(sorts) == 1:
        return {(k,): v for k, v in value.items()}
    return {tuple(k): v for k, v in value.items()}


def _level_of_structure(A) -> str:
    if isinstance(A, RModule):
        return "module"
    if isinstance(A, TwoRing):
        return "tworing"
    return "twogroup"


def _level_of_hom(F) -> str:
    if isinstance(F, RModHom):
        return "module"
    if isinstance(F, TwoRingHom):
        return "tworing"
    return "twogroup"


def _hom_section(name: str, F: TwoGroupHom, level: str) -> Section:
    sec = Section(name, "hom")
    for table, (sorts, _, attr) in HOM_TABLES[level].items():
        sec.tables[table] = _flatten(getattr(F, attr), sorts)
    return sec


def to_document(x) -> Document:
    """Document for a 2-group, 2-ring, module, hom, 2-morphism or CheckReport."""
    if isinstance(x, CheckReport):
        return report_document(x)
    if isinstance(x, SymTwoGroup):
        kind = _level_of_structure(x)
        if kind == "module":
            secs = [_section_from_structure("ring", "tworing", x.ring),
                    _section_from_structure("module", "module", x)]
        else:
            secs = [_section_from_structure(kind, kind, x)]
        return Document(VERSION, kind, None, {s.name: s for s in secs})
    if isinstance(x, TwoGroupHom):
        kind, level, F = "hom", _level_of_hom(x), x
    elif isinstance(x, TwoGroupMor):
        kind, level, F = "twomorphism", _level_of_hom(x.source), x.source
    else:
        raise TypeError(f"cannot write {type(x).__name__} as a document")
    secs = []
    if level == "module":
        secs.append(_section_from_structure("ring", "tworing", F.dom.ring))
    secs += [_section_from_structure("dom", level, F.dom), _section_from_structure("cod", level, F.cod)]
    if kind == "hom":
        secs.append(_hom_section("hom", F, level))
    else:
        secs += [_hom_section("source", x.source, level), _hom_section("target", x.target, level)]
        secs.append(Section("mor", "mor", tables={"component": _flatten(x.component, "a")}))
    return Document(VERSION, kind, level, {s.name: s for s in secs})


def dumps(x) -> str:
    return serialize(to_document(x))


class _Resolver:
    """Checks references and completeness of one section's tables."""

    def __init__(self, sec: Section, sorts: dict):
        self.sec = sec
        self.sorts = sorts  # letter -> collection

    def fail(self, msg: str, where=None):
        line, col = where or (None, None)
        raise DanglingReference(f"[{self.sec.name}] {msg}", line=line, col=col)

    def table(self, name: str, arg_sorts: str, value_sort: str, composable=None) -> dict:
        sec = self.sec
        entries = sec.tables.get(name, {})
        for key, value in entries.items():
            where = sec.where.get((name, key))
            for s, k in zip(arg_sorts, key):
                if k not in self.sorts[s]:
                    self.fail(f"{name}: unknown identifier {encode(k)!r}", where)
            if value not in self.sorts[value_sort]:
                self.fail(f"{name}: unknown identifier {encode(value)!r}", where)
            if composable is not None and key not in composable:
                self.fail(f"comp: {encode(key[0])} and {encode(key[1])} are not composable", where)
        required = composable if composable is not None else _cartesian(*(self.sorts[s] for s in arg_sorts))
        for key in required:
            if key not in entries:
                self.fail("missing entry '" + " ".join([name, *map(encode, key)]) + "'")
        if not arg_sorts:
            return entries[()]
        if len(arg_sorts) == 1:
            return {k[0]: v for k, v in entries.items()}
        return dict(entries)


def _structure(sec: Section, role: str, ring: TwoRing | None = None):
    objs = ordered(sec.objects)
    mors = sec.morphisms
    r = _Resolver(sec, {"o": set(objs), "m": set(mors)})
    for f, (s, t) in mors.items():
        for end in (s, t):
            if end not in r.sorts["o"]:
                r.fail(f"morphism {encode(f)!r} has unknown endpoint {encode(end)!r}")
    if ring is not None:
        r.sorts.update(R=set(ring.objects), S=set(ring.morphisms))
    composable = {(g, f) for f in mors for g in mors if mors[g][0] == mors[f][1]}
    vals = {}
    for table, (sorts, vsort, attr) in STRUCTURE_TABLES[role].items():
        vals[attr] = r.table(table, sorts, vsort, composable if table == "comp" else None)
    base = FinGroupoid(tuple(objs), {f: s for f, (s, _) in mors.items()}, {f: t for f, (_, t) in mors.items()},
                       vals.pop("id_of"), vals.pop("comp"), vals.pop("inv"))
    cls = {"twogroup": SymTwoGroup, "tworing": TwoRing, "module": RModule}[role]
    if role == "module":
        vals["ring"] = ring
    return cls(base=base, **vals)


def _hom(sec: Section, level: str, dom, cod, ring=None) -> TwoGroupHom:
    r = _Resolver(sec, {"a": set(dom.objects), "f": set(dom.morphisms), "b": set(cod.objects),
                        "g": set(cod.morphisms), "R": set(ring.objects) if ring else set()})
    vals = {attr: r.table(t, s, v) for t, (s, v, attr) in HOM_TABLES[level].items()}
    cls = {"twogroup": TwoGroupHom, "tworing": TwoRingHom, "module": RModHom}[level]
    return cls(dom=dom, cod=cod, **vals)


def from_document(doc: Document):
    """Build the structure a document describes; raises REFERENCE_ERROR."""
    s = doc.sections
    if doc.kind == "report":
        return report_from_document(doc)
    if doc.kind in ("twogroup", "tworing"):
        return _structure(s[doc.kind], doc.kind)
    ring = _structure(s["ring"], "tworing") if "ring" in s else None
    if doc.kind == "module":
        return _structure(s["module"], "module", ring)
    dom = _structure(s["dom"], doc.level, ring)
    cod = _structure(s["cod"], doc.level, ring)
    if doc.kind == "hom":
        return _hom(s["hom"], doc.level, dom, cod, ring)
    source = _hom(s["source"], doc.level, dom, cod, ring)
    target = _hom(s["target"], doc.level, dom, cod, ring)
    r = _Resolver(s["mor"], {"a": set(dom.objects), "g": set(cod.morphisms)})
    cls = {"twogroup": TwoGroupMor, "tworing": TwoRingMor, "module": RModMor}[doc.level]
    return cls(source, target, r.table("component", "a", "g"))


def loads(text: str):
    return from_document(parse(text))


# ---------------------------------------------------------------------------
# reports

_SAFE = re.compile(r"[\s(),=:#>]+")


def as_token(x) -> Any:
    """Witness element as an identifier: strings lose reserved characters."""
    if isinstance(x, tuple):
        return tuple(as_token(e) for e in x) if x else "-"
    if isinstance(x, (list, set, frozenset)):
        return as_token(tuple(ordered(x) if not isinstance(x, list) else x))
    s = x if isinstance(x, str) else str(x)
    s = _SAFE.sub("_", s)
    return s or "-"


def report_document(report: CheckReport, info: dict | None = None) -> Document:
    sec = Section("report", "report")
    sec.tables["check"] = {(e.axiom,): "PASS" if e.passed else "FAIL" for e in report.entries}
    sec.tables["witness"] = {(e.axiom,): as_token(e.witness) for e in report.entries if e.witness is not None}
    sec.tables["info"] = {(k,): as_token(v) for k, v in (info or {}).items()}
    sec.tables["info"][("result",)] = "PASS" if report.ok else "FAIL"
    return Document(VERSION, "report", None, {"report": sec})


def report_from_document(doc: Document) -> CheckReport:
    t = doc.sections["report"].tables
    wit = t.get("witness", {})
    entries = []
    for (axiom,), status in t.get("check", {}).items():
        w = wit.get((axiom,))
        entries.append(CheckEntry(axiom, status == "PASS", w if w is None or isinstance(w, tuple) else (w,)))
    return CheckReport(sorted(entries, key=lambda e: e.axiom))


__all__ = ["Document", "Section", "parse", "serialize", "to_document", "from_document", "dumps", "loads",
           "decode", "as_token", "report_document", "report_from_document", "layout", "VERSION", "KINDS", "LEVELS"]

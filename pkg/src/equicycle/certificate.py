"""Text and structured (JSON) serialisation of :class:`CycleSystem` certificates.

Text layout, one record per line::

    ell=9
    v=19
    graph=complete rot:9 inf
    route=k2l1-rotational
    seed=0
    colour 0_0 red
    base C_inf (inf 2_0 1_0 3_0 0_0 1_1 2_1 0_1 3_1)
    cycle (0_0 4_0 8_0 3_0 7_0 2_0 6_0 1_0 5_0)

Vertex tokens are ``a_0`` / ``a_1`` (rotational), ``inf``, ``(g,h)``
(blown-up) or a bare integer.  Cycles are written in canonical form, so
writing a parsed certificate reproduces it byte for byte.
"""

from __future__ import annotations

import json
import re

from .core import (
    BLUE,
    INF,
    RED,
    Blowup,
    Blown,
    Cayley,
    Colouring,
    Complete,
    CompleteMinusFactor,
    Cycle,
    CycleSystem,
    MalformedCycleError,
    ParameterError,
    Plain,
    Rot,
    vertex_key,
)

HEADER_KEYS = ("ell", "v", "graph", "route", "seed", "n", "k", "expect_classes", "expect_part_red")
_INT_KEYS = {"ell", "v", "seed", "n", "k", "expect_part_red"}


class CertificateParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


# --------------------------------------------------------------------------
# vertices

_ROT = re.compile(r"^(\d+)_([01])$")
_BLOWN = re.compile(r"^\((\d+),(\d+)\)$")
_PLAIN = re.compile(r"^\d+$")


def format_vertex(v) -> str:
    return str(v)


def parse_vertex(tok: str):
    if tok == "inf":
        return INF
    if m := _ROT.match(tok):
        return Rot(int(m[1]), int(m[2]))
    if m := _BLOWN.match(tok):
        return Blown(int(m[1]), int(m[2]))
    if _PLAIN.match(tok):
        return Plain(int(tok))
    raise ValueError(f"bad vertex token {tok!r}")


def format_cycle(c: Cycle, canonical: bool = True) -> str:
    vs = c.canonical if canonical else c.vertices
    return "(" + " ".join(format_vertex(v) for v in vs) + ")"


def parse_cycle(text: str) -> Cycle:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError("cycle must be enclosed in parentheses")
    toks = text[1:-1].split()
    return Cycle(parse_vertex(t) for t in toks)


# --------------------------------------------------------------------------
# host graphs


def format_graph(g) -> str:
    """Machine-readable host descriptor (the inverse of :func:`parse_graph`)."""
    if isinstance(g, Blowup):
        return f"blowup {g.s} {g.ell}"
    if isinstance(g, Cayley):
        mods = "x".join(str(m) for m in g.moduli)
        conn = " ".join(":".join(str(x) for x in w) for w in sorted(g.connection))
        return f"cayley {mods} {conn}"
    if isinstance(g, CompleteMinusFactor):
        verts = _domain(g.vertex_set)
        pairs = ",".join(
            "/".join(format_vertex(x) for x in sorted(e, key=vertex_key))
            for e in sorted(g.factor, key=lambda e: min(vertex_key(x) for x in e))
        )
        return f"minus-factor {verts} {pairs}"
    if isinstance(g, Complete):
        return f"complete {_domain(g.vertex_set)}"
    raise TypeError(f"unknown graph type {type(g).__name__}")


def _domain(vertex_set) -> str:
    """Compress a standard vertex set to ``rot:n``, ``blown:s,l`` or ``plain:v`` (+ ``inf``)."""
    vs = set(vertex_set)
    has_inf = INF in vs
    vs.discard(INF)
    tail = " inf" if has_inf else ""
    if all(isinstance(v, Rot) for v in vs):
        n = len(vs) // 2
        if vs == {Rot(a, i) for a in range(n) for i in (0, 1)}:
            return f"rot:{n}{tail}"
    if all(isinstance(v, Blown) for v in vs):
        s = 1 + max(v.g for v in vs)
        ell = 1 + max(v.h for v in vs)
        if vs == {Blown(g, h) for g in range(s) for h in range(ell)}:
            return f"blown:{s},{ell}{tail}"
    if all(isinstance(v, Plain) for v in vs) and vs == {Plain(x) for x in range(len(vs))}:
        return f"plain:{len(vs)}{tail}"
    raise ParameterError("vertex set is not one of the standard families")


def _parse_domain(toks: list[str]) -> tuple:
    head = toks[0]
    kind, _, arg = head.partition(":")
    if kind == "rot":
        n = int(arg)
        vs = [Rot(a, i) for i in (0, 1) for a in range(n)]
    elif kind == "blown":
        s, ell = (int(x) for x in arg.split(","))
        vs = [Blown(g, h) for g in range(s) for h in range(ell)]
    elif kind == "plain":
        vs = [Plain(x) for x in range(int(arg))]
    else:
        raise ValueError(f"unknown vertex family {kind!r}")
    rest = toks[1:]
    if rest[:1] == ["inf"]:
        vs.append(INF)
        rest = rest[1:]
    return tuple(sorted(vs, key=vertex_key)), rest


def parse_graph(text: str):
    toks = text.split()
    if not toks:
        raise ValueError("empty graph descriptor")
    kind, args = toks[0], toks[1:]
    if kind == "blowup":
        s, ell = (int(x) for x in args)
        return Blowup(s, ell)
    if kind == "cayley":
        mods = tuple(int(x) for x in args[0].split("x"))
        conn = frozenset(tuple(int(x) for x in w.split(":")) for w in args[1:])
        return Cayley(mods, conn)
    if kind == "complete":
        vs, rest = _parse_domain(args)
        if rest:
            raise ValueError(f"unexpected tokens {rest}")
        return Complete(vs)
    if kind == "minus-factor":
        vs, rest = _parse_domain(args)
        if len(rest) != 1:
            raise ValueError("minus-factor needs one pair list")
        pairs = tuple(tuple(parse_vertex(t) for t in p.split("/")) for p in rest[0].split(","))
        return CompleteMinusFactor(vs, pairs)
    raise ValueError(f"unknown graph kind {kind!r}")


# --------------------------------------------------------------------------
# whole certificates


def _expectation_headers(system: CycleSystem) -> dict:
    out = {}
    exp = system.provenance.get("expect_classes")
    if exp is not None:
        out["expect_classes"] = f"{exp[0]},{exp[1]}"
    if system.provenance.get("expect_part_red") is not None:
        out["expect_part_red"] = str(system.provenance["expect_part_red"])
    return out


def dumps(system: CycleSystem) -> str:
    p = system.provenance
    lines = [
        f"ell={p['ell']}",
        f"v={p.get('v', len(system.graph.vertices()))}",
        f"graph={format_graph(system.graph)}",
        f"route={p['route']}",
        f"seed={p.get('seed', 0)}",
    ]
    for key in ("n", "k"):
        if p.get(key) is not None:
            lines.append(f"{key}={p[key]}")
    lines += [f"{k}={v}" for k, v in _expectation_headers(system).items()]
    for v in sorted(system.colouring, key=vertex_key):
        lines.append(f"colour {format_vertex(v)} {system.colouring[v]}")
    for name, c in p.get("bases", ()):
        # base cycles keep their construction order: their orientation is meaningful
        lines.append(f"base {name} {format_cycle(c, canonical=False)}")
    for c in system.cycles:
        lines.append(f"cycle {format_cycle(c)}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> CycleSystem:
    header: dict = {}
    colours: dict = {}
    bases: list = []
    cycles: list = []
    lines = text.split("\n")
    if not text.endswith("\n"):
        raise CertificateParseError("truncated certificate (no final newline)", len(lines), 1)
    for lineno, raw in enumerate(lines[:-1], start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            if line.startswith("colour "):
                parts = line.split()
                if len(parts) != 3 or parts[2] not in ("red", "blue"):
                    raise ValueError("expected 'colour <vertex> <red|blue>'")
                v = parse_vertex(parts[1])
                if v in colours:
                    raise ValueError(f"vertex {parts[1]} coloured twice")
                colours[v] = RED if parts[2] == "red" else BLUE
            elif line.startswith("cycle "):
                cycles.append(parse_cycle(line[len("cycle "):]))
            elif line.startswith("base "):
                _, name, rest = line.split(" ", 2)
                bases.append((name, parse_cycle(rest)))
            elif "=" in line:
                key, _, value = line.partition("=")
                if key in header:
                    raise ValueError(f"duplicate header {key!r}")
                header[key] = value
            else:
                raise ValueError("unrecognised record")
        except (ValueError, MalformedCycleError) as exc:
            raise CertificateParseError(str(exc), lineno, 1) from None
    for key in ("ell", "graph", "route"):
        if key not in header:
            raise CertificateParseError(f"missing header {key!r}", len(lines), 1)
    return _assemble(header, colours, bases, cycles)


def _assemble(header: dict, colours: dict, bases: list, cycles: list) -> CycleSystem:
    prov: dict = {}
    try:
        for key, value in header.items():
            if key == "graph":
                continue
            if key in _INT_KEYS:
                prov[key] = int(value)
            elif key == "expect_classes":
                red, blue = (int(x) for x in value.split(","))
                prov[key] = (red, blue)
            else:
                prov[key] = value
        graph = parse_graph(header["graph"])
    except (ValueError, ParameterError) as exc:
        raise CertificateParseError(f"bad header: {exc}") from None
    if bases:
        prov["bases"] = tuple(bases)
    return CycleSystem(graph, cycles, Colouring(colours), prov)


def read(path) -> CycleSystem:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return loads_structured(text)
    return loads(text)


def write(system: CycleSystem, path, fmt: str = "text") -> None:
    text = dumps_structured(system) if fmt == "structured" else dumps(system)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


# --------------------------------------------------------------------------
# structured (JSON) form


def dumps_structured(system: CycleSystem) -> str:
    p = system.provenance
    doc = {
        "header": {
            "ell": p["ell"],
            "v": p.get("v", len(system.graph.vertices())),
            "graph": format_graph(system.graph),
            "route": p["route"],
            "seed": p.get("seed", 0),
            **{k: p[k] for k in ("n", "k") if p.get(k) is not None},
            **_expectation_headers(system),
        },
        "colouring": [
            {"vertex": format_vertex(v), "colour": str(system.colouring[v])}
            for v in sorted(system.colouring, key=vertex_key)
        ],
        "bases": [{"name": n, "cycle": [format_vertex(v) for v in c.vertices]} for n, c in p.get("bases", ())],
        "cycles": [[format_vertex(v) for v in c.canonical] for c in system.cycles],
    }
    return json.dumps(doc, indent=1) + "\n"


def loads_structured(text: str) -> CycleSystem:
    try:
        doc = json.loads(text)
        header = {k: str(v) for k, v in doc["header"].items()}
        colours = {}
        for rec in doc["colouring"]:
            colours[parse_vertex(rec["vertex"])] = RED if rec["colour"] == "red" else BLUE
        bases = [(b["name"], Cycle(parse_vertex(t) for t in b["cycle"])) for b in doc.get("bases", [])]
        cycles = [Cycle(parse_vertex(t) for t in c) for c in doc["cycles"]]
    except json.JSONDecodeError as exc:
        raise CertificateParseError(exc.msg, exc.lineno, exc.colno) from None
    except (KeyError, TypeError, ValueError, MalformedCycleError) as exc:
        raise CertificateParseError(f"bad structured certificate: {exc}") from None
    return _assemble(header, colours, bases, cycles)

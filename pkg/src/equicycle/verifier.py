"""Construction-agnostic checking of :class:`CycleSystem` certificates.

The host graph's own edge enumeration is the only notion of "which edges
exist"; nothing here knows how a system was built.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .core import INF, RED, Blown, Blowup, Cycle, CycleSystem, ParameterError

CHECKS = ("colouring_domain", "edge_partition", "cycle_length", "equitable", "class_sizes", "part_quota")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: object = None
    detail: str = ""

    def record(self) -> dict:
        return {
            "check": self.name,
            "status": "pass" if self.passed else "fail",
            "witness": _render(self.witness),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class Verdict:
    checks: tuple

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.overall

    def failing(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def records(self) -> list[dict]:
        return [c.record() for c in self.checks]

    def summary(self) -> str:
        lines = [f"{'PASS' if self.overall else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            extra = f"  witness={_render(c.witness)}" if not c.passed else ""
            lines.append(f"  {mark} {c.name}: {c.detail}{extra}")
        return "\n".join(lines)


@dataclass(frozen=True)
class Expectations:
    """Claims to hold a system to beyond the decomposition itself.

    ``class_sizes`` is ``(red, blue)``.  ``part_red`` is the number of red
    vertices every part ``{g} x Z_l`` must carry; it defaults to ``(l+1)/2``
    for blow-up hosts and is otherwise unchecked.
    """

    class_sizes: tuple | None = None
    part_red: int | None = None
    extra: Mapping = field(default_factory=dict)


def _render(w) -> object:
    if w is None:
        return None
    if isinstance(w, Cycle):
        return "(" + " ".join(str(v) for v in w.vertices) + ")"
    if isinstance(w, frozenset):
        return "{" + ", ".join(sorted(str(v) for v in w)) + "}"
    if isinstance(w, (tuple, list)):
        return [_render(x) for x in w]
    return str(w)


def balanced(red: int, blue: int, c: int = 2) -> bool:
    """Per-cycle equitability: every colour count is floor or ceil of ``len / c``."""
    n = red + blue
    lo, hi = n // c, -(-n // c)
    return all(lo <= k <= hi for k in (red, blue))


def verify_equitable_cycle(c: Cycle, colouring: Mapping, ell: int) -> bool:
    """True iff the red/blue counts on ``c`` are ``(l-1)/2`` and ``(l+1)/2`` in some order."""
    red = 0
    for v in c:
        if v not in colouring:
            raise ParameterError(f"vertex {v} is not coloured")
        red += colouring[v] is RED
    blue = len(c) - red
    if len(c) != ell:
        return False
    return balanced(red, blue)


def _check_domain(system: CycleSystem) -> Check:
    host = set(system.graph.vertices())
    dom = set(system.colouring)
    missing = host - dom
    extra = dom - host
    if missing or extra:
        w = next(iter(missing or extra))
        what = "uncoloured" if missing else "coloured but not in host"
        return Check("colouring_domain", False, w, f"{len(missing)} uncoloured, {len(extra)} foreign ({what})")
    return Check("colouring_domain", True, None, f"{len(host)} vertices coloured")


def _check_partition(system: CycleSystem) -> Check:
    tally: Counter = Counter()
    for c in system.cycles:
        tally.update(c.edges())
    host_edges = 0
    missing = None
    for e in system.graph.edges():
        host_edges += 1
        k = tally.pop(e, 0)
        if k > 1:
            return Check("edge_partition", False, e, f"edge covered {k} times")
        if k == 0 and missing is None:
            missing = e
    if tally:
        e = next(iter(tally))
        return Check("edge_partition", False, e, "edge not in host graph")
    if missing is not None:
        return Check("edge_partition", False, missing, "host edge not covered")
    return Check("edge_partition", True, None, f"{host_edges} edges, each exactly once")


def _check_lengths(system: CycleSystem, ell: int) -> Check:
    for c in system.cycles:
        if len(c) != ell:
            return Check("cycle_length", False, c, f"cycle of length {len(c)}, expected {ell}")
    return Check("cycle_length", True, None, f"{len(system.cycles)} cycles of length {ell}")


def _check_equitable(system: CycleSystem) -> Check:
    col = system.colouring
    for c in system.cycles:
        try:
            red, blue = col.profile(c)
        except KeyError as exc:
            return Check("equitable", False, c, f"uncoloured vertex {exc.args[0]}")
        if not balanced(red, blue):
            return Check("equitable", False, c, f"profile red={red} blue={blue}")
    return Check("equitable", True, None, "every cycle balanced")


def _check_classes(system: CycleSystem, exp: Expectations) -> Check:
    got = system.colouring.class_sizes
    if exp.class_sizes is None:
        return Check("class_sizes", True, None, f"red={got[0]} blue={got[1]} (no expectation)")
    want = tuple(exp.class_sizes)
    if got != want:
        return Check("class_sizes", False, (f"red={got[0]}", f"blue={got[1]}"), f"expected red={want[0]} blue={want[1]}")
    return Check("class_sizes", True, None, f"red={got[0]} blue={got[1]}")


def _check_parts(system: CycleSystem, exp: Expectations, ell: int) -> Check:
    quota = exp.part_red
    if quota is None and isinstance(system.graph, Blowup):
        quota = (ell + 1) // 2
    if quota is None:
        return Check("part_quota", True, None, "not applicable")
    counts: Counter = Counter()
    parts = set()
    for v, c in system.colouring.items():
        if v is INF:
            continue
        if not isinstance(v, Blown):
            return Check("part_quota", False, v, "vertex outside any part")
        parts.add(v.g)
        counts[v.g] += c is RED
    for g in sorted(parts):
        if counts[g] != quota:
            return Check("part_quota", False, f"part {g}", f"{counts[g]} red, expected {quota}")
    return Check("part_quota", True, None, f"{len(parts)} parts with {quota} red each")


def verify(system: CycleSystem, expectations: Expectations | None = None) -> Verdict:
    """Run every check, even after a failure, and collect witnesses."""
    exp = expectations or Expectations()
    ell = system.ell
    checks = (
        _check_domain(system),
        _check_partition(system),
        _check_lengths(system, ell),
        _check_equitable(system),
        _check_classes(system, exp),
        _check_parts(system, exp, ell),
    )
    return Verdict(checks)


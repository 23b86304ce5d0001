"""Difference bookkeeping for 2-rotational systems over ``(Z_n x {0,1}) u {inf}``.

Sign conventions: an edge ``a_0 ~ b_1`` has *mixed* difference ``b - a``
(directed from part 0 to part 1, never folded with its negative); an edge
``a_i ~ b_i`` has *i-pure* difference ``+-(b - a)``, stored by its
representative in ``1..n//2``.  Edges at infinity are not differences; they
are tallied as incidences ``(a, i)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .core import INF, Cycle, ParameterError, Rot

MIXED, PURE0, PURE1 = "mixed", "pure0", "pure1"


@dataclass(frozen=True, order=True)
class DifferenceClass:
    kind: str
    value: int

    def __str__(self) -> str:
        if self.kind == MIXED:
            return f"mixed {self.value}"
        return f"{self.kind} +-{self.value}"


def mixed(value: int, n: int) -> DifferenceClass:
    return DifferenceClass(MIXED, value % n)


def pure(part: int, d: int, n: int) -> DifferenceClass:
    d %= n
    if d == 0:
        raise ParameterError("pure difference 0 does not exist")
    return DifferenceClass(PURE0 if part == 0 else PURE1, min(d, n - d))


@dataclass
class DifferenceMultiset:
    """Multiset of difference classes, plus the infinity incidences of the cycle."""

    counts: Counter = field(default_factory=Counter)
    infinity: Counter = field(default_factory=Counter)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DifferenceMultiset):
            return NotImplemented
        return +self.counts == +other.counts and +self.infinity == +other.infinity

    def classes(self, kind: str | None = None) -> set:
        return {c for c, k in self.counts.items() if k > 0 and (kind is None or c.kind == kind)}

    def values(self, kind: str) -> set[int]:
        return {c.value for c in self.classes(kind)}


def _check_rot(c: Cycle) -> None:
    for v in c:
        if v is not INF and not isinstance(v, Rot):
            raise ParameterError(f"vertex {v} is not in (Z_n x {{0,1}}) u {{inf}}")


def edge_difference(a: Rot, b: Rot, n: int) -> DifferenceClass:
    if a.part == b.part:
        return pure(a.part, b.a - a.a, n)
    if a.part == 1:
        a, b = b, a
    return mixed(b.a - a.a, n)


def differences(c: Cycle, n: int) -> DifferenceMultiset:
    """Difference multiset of ``c`` over ``Z_n``; infinity edges become incidences."""
    _check_rot(c)
    out = DifferenceMultiset()
    vs = c.vertices
    for i, a in enumerate(vs):
        b = vs[(i + 1) % len(vs)]
        if a is INF:
            out.infinity[(b.a, b.part)] += 1
        elif b is INF:
            out.infinity[(a.a, a.part)] += 1
        else:
            out.counts[edge_difference(a, b, n)] += 1
    return out


@dataclass(frozen=True)
class Orbit:
    base: Cycle
    modulus: int
    length: int
    cycles: tuple


def orbit_length(c: Cycle, n: int) -> int:
    canon = c.canonical
    for d in range(1, n + 1):
        if n % d == 0 and c.shifted(d, n).canonical == canon:
            return d
    raise AssertionError("unreachable: shift by n is the identity")


def develop(c: Cycle, n: int) -> Orbit:
    """Orbit of ``c`` under ``x -> x + 1`` on first coordinates (infinity fixed)."""
    _check_rot(c)
    d = orbit_length(c, n)
    return Orbit(c, n, d, tuple(c.shifted(i, n) for i in range(d)))


def class_size(cls: DifferenceClass, n: int) -> int:
    """Number of edges of the class in ``K_{2n+1}`` on ``(Z_n x {0,1}) u {inf}``."""
    if cls.kind != MIXED and n % 2 == 0 and cls.value == n // 2:
        return n // 2
    return n


def catalogue(n: int) -> list[DifferenceClass]:
    out = [DifferenceClass(MIXED, x) for x in range(n)]
    for kind in (PURE0, PURE1):
        out += [DifferenceClass(kind, d) for d in range(1, n // 2 + 1)]
    return out


@dataclass(frozen=True)
class CoverageEntry:
    cls: DifferenceClass | tuple
    suppliers: tuple
    status: str  # "ok" | "missing" | "duplicate"


@dataclass(frozen=True)
class CoverageReport:
    n: int
    entries: tuple
    infinity_entries: tuple
    expectation_failures: tuple = ()

    @property
    def passed(self) -> bool:
        return (
            all(e.status == "ok" for e in self.entries)
            and all(e.status == "ok" for e in self.infinity_entries)
            and not self.expectation_failures
        )

    def problems(self) -> list[CoverageEntry]:
        return [e for e in self.entries + self.infinity_entries if e.status != "ok"]

    def suppliers_of(self, cls: DifferenceClass) -> tuple:
        for e in self.entries:
            if e.cls == cls:
                return e.suppliers
        raise KeyError(cls)

    def ledger(self) -> dict[str, list[DifferenceClass]]:
        """Classes grouped by their (single) supplying base cycle."""
        out: dict[str, list[DifferenceClass]] = {}
        for e in self.entries:
            for name in set(e.suppliers):
                out.setdefault(name, []).append(e.cls)
        return out


def audit_coverage(
    bases: Mapping[str, Cycle] | Iterable[tuple[str, Cycle]],
    n: int,
    expected: Mapping[str, DifferenceMultiset] | None = None,
) -> CoverageReport:
    """Check that the developed base cycles cover ``K_{2n+1}`` exactly once.

    Each base edge of class ``c`` in an orbit of length ``d`` accounts for
    ``d`` edges of ``c``; a class is ``ok`` when these add up to its size.
    Every vertex must meet infinity exactly once after development.
    """
    items = list(bases.items()) if isinstance(bases, Mapping) else list(bases)
    weight: Counter = Counter()
    suppliers: dict = {}
    inf_hits: Counter = Counter()
    inf_sup: dict = {}
    failures = []
    for name, cyc in items:
        diffs = differences(cyc, n)
        if expected is not None and name in expected and diffs != expected[name]:
            failures.append(name)
        d = orbit_length(cyc, n)
        for cls, k in diffs.counts.items():
            weight[cls] += k * d
            suppliers.setdefault(cls, []).extend([name] * k)
        for (a, part), k in diffs.infinity.items():
            for i in range(d):
                key = ((a + i) % n, part)
                inf_hits[key] += k
                inf_sup.setdefault(key, []).append(name)

    entries = []
    for cls in catalogue(n):
        w, size = weight.pop(cls, 0), class_size(cls, n)
        status = "ok" if w == size else ("missing" if w < size else "duplicate")
        entries.append(CoverageEntry(cls, tuple(suppliers.get(cls, ())), status))
    # anything left over is outside the catalogue (cannot happen for valid input)
    for cls in sorted(weight):
        entries.append(CoverageEntry(cls, tuple(suppliers[cls]), "duplicate"))

    inf_entries = []
    for part in (0, 1):
        for a in range(n):
            k = inf_hits.get((a, part), 0)
            status = "ok" if k == 1 else ("missing" if k < 1 else "duplicate")
            inf_entries.append(CoverageEntry(("inf", a, part), tuple(inf_sup.get((a, part), ())), status))
    return CoverageReport(n, tuple(entries), tuple(inf_entries), tuple(failures))


def develop_bases(bases: Mapping[str, Cycle], n: int) -> list[Cycle]:
    """Flatten every orbit, in base order."""
    out = []
    for cyc in bases.values():
        out.extend(develop(cyc, n).cycles)
    return out

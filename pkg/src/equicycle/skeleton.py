"""Decompositions of ``K_{2k+1}`` and ``K_{2k} - I`` into triangles and pentagons.

Triangle-only instances use classical Steiner triple systems (Bose for
orders 3 mod 6, Skolem for 1 mod 6; deleting a point of an STS(2k+1) gives
``K_{2k} - I``).  Everything else goes to a seeded exact-cover search that
places the pentagons first and then branches on the most constrained edge.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass

from .budget import Budget
from .core import (
    Complete,
    CompleteMinusFactor,
    ConstructionError,
    Cycle,
    ParameterError,
    Plain,
    SearchBudgetExceeded,
)


def solve_3m_5n(E: int) -> tuple[int, int]:
    """Non-negative ``(m, n)`` with ``3m + 5n = E`` and ``n`` minimal."""
    if E < 0:
        raise ParameterError("edge count must be non-negative")
    for n in range(E // 5 + 1):
        if (E - 5 * n) % 3 == 0:
            return (E - 5 * n) // 3, n
    raise ParameterError(f"{E} is not of the form 3m + 5n")


@dataclass(frozen=True)
class SkeletonDecomposition:
    host: object
    triangles: tuple
    pentagons: tuple

    @property
    def counts(self) -> tuple[int, int]:
        return len(self.triangles), len(self.pentagons)

    @property
    def cycles(self) -> tuple:
        return self.triangles + self.pentagons

    def check(self) -> None:
        tally = Counter(e for c in self.cycles for e in c.edges())
        host = set(self.host.edges())
        if set(tally) != host or any(k != 1 for k in tally.values()):
            raise ConstructionError("skeleton cycles do not partition the host edges")


def skeleton_host(order: int) -> Complete | CompleteMinusFactor:
    """``K_order`` for odd order, ``K_order - {{0,1},{2,3},...}`` for even order."""
    vs = tuple(Plain(x) for x in range(order))
    if order % 2:
        return Complete(vs)
    return CompleteMinusFactor(vs, tuple((Plain(2 * i), Plain(2 * i + 1)) for i in range(order // 2)))


# --------------------------------------------------------------------------
# Steiner triple systems


def bose_sts(v: int) -> list[tuple]:
    """STS(v) for ``v = 3 (mod 6)`` on points ``0..v-1``."""
    if v % 6 != 3:
        raise ParameterError("Bose construction needs v = 3 (mod 6)")
    n = v // 3
    half = (n + 1) // 2

    def pt(x, i):
        return x + n * (i % 3)

    triples = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(n)]
    for x, y in itertools.combinations(range(n), 2):
        z = (x + y) * half % n
        for i in range(3):
            triples.append((pt(x, i), pt(y, i), pt(z, i + 1)))
    return triples


def skolem_sts(v: int) -> list[tuple]:
    """STS(v) for ``v = 1 (mod 6)`` on points ``0..v-1`` (the last point is the fixed one)."""
    if v % 6 != 1:
        raise ParameterError("Skolem construction needs v = 1 (mod 6)")
    n = (v - 1) // 3
    t = n // 2
    inf = v - 1

    def op(x, y):
        s = (x + y) % n
        return s // 2 if s % 2 == 0 else t + s // 2

    def pt(x, i):
        return x + n * (i % 3)

    triples = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(t)]
    for x in range(t):
        for i in range(3):
            triples.append((inf, pt(x + t, i), pt(x, i + 1)))
    for x, y in itertools.combinations(range(n), 2):
        for i in range(3):
            triples.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return triples


def steiner_triple_system(v: int) -> list[tuple]:
    if v % 6 == 3:
        return bose_sts(v)
    if v % 6 == 1:
        return skolem_sts(v)
    raise ParameterError(f"no Steiner triple system of order {v}")


def _sts_fast_path(host) -> list[Cycle] | None:
    order = host.v
    if isinstance(host, Complete) and order % 6 in (1, 3):
        triples = steiner_triple_system(order)
        return [Cycle(Plain(x) for x in t) for t in triples]
    if isinstance(host, CompleteMinusFactor) and (order + 1) % 6 in (1, 3):
        triples = steiner_triple_system(order + 1)
        p = order  # delete this point; its triples form the removed matching
        matching = [tuple(x for x in t if x != p) for t in triples if p in t]
        relabel = {}
        for (a, b), (u, w) in zip(matching, host.factor):
            relabel[a], relabel[b] = u, w
        return [Cycle(relabel[x] for x in t) for t in triples if p not in t]
    return None


# --------------------------------------------------------------------------
# exact-cover search


class _Search:
    def __init__(self, host, m: int, n: int, rng: random.Random, budget: Budget):
        self.verts = list(host.vertices())
        self.index = {v: i for i, v in enumerate(self.verts)}
        N = len(self.verts)
        self.adj = [0] * N
        for e in host.edges():
            a, b = (self.index[x] for x in e)
            self.adj[a] |= 1 << b
            self.adj[b] |= 1 << a
        self.m, self.n = m, n
        self.rng = rng
        self.budget = budget
        self.chosen: list[tuple] = []

    def _remove(self, cyc: tuple) -> None:
        for i in range(len(cyc)):
            a, b = cyc[i], cyc[(i + 1) % len(cyc)]
            self.adj[a] &= ~(1 << b)
            self.adj[b] &= ~(1 << a)

    def _restore(self, cyc: tuple) -> None:
        for i in range(len(cyc)):
            a, b = cyc[i], cyc[(i + 1) % len(cyc)]
            self.adj[a] |= 1 << b
            self.adj[b] |= 1 << a

    def _bits(self, mask: int) -> list[int]:
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def _pentagons_through(self, a: int, b: int) -> list[tuple]:
        out = []
        for c in self._bits(self.adj[b] & ~(1 << a)):
            for d in self._bits(self.adj[c] & ~((1 << a) | (1 << b))):
                for e in self._bits(self.adj[d] & self.adj[a] & ~((1 << b) | (1 << c))):
                    out.append((a, b, c, d, e))
        return out

    def _first_edge(self) -> tuple[int, int] | None:
        for a, mask in enumerate(self.adj):
            if mask:
                low = mask & -mask
                return a, low.bit_length() - 1
        return None

    def _tightest_edge(self) -> tuple[int, int, int] | None:
        best = None
        for a, mask in enumerate(self.adj):
            for b in self._bits(mask >> (a + 1) << (a + 1)):
                k = (self.adj[a] & self.adj[b]).bit_count()
                if best is None or k < best[2]:
                    best = (a, b, k)
                    if k <= 1:
                        return best
        return best

    def run(self) -> bool:
        self.budget.tick()
        if self.n:
            # pentagons first: all of them go through the first uncovered edges
            edge = self._first_edge()
            if edge is None:
                return False
            opts = self._pentagons_through(*edge)
            self.rng.shuffle(opts)
            self.n -= 1
            for cyc in opts:
                self._remove(cyc)
                self.chosen.append(cyc)
                if self.run():
                    return True
                self.chosen.pop()
                self._restore(cyc)
            self.n += 1
            return False
        pick = self._tightest_edge()
        if pick is None:
            return self.m == 0
        a, b, k = pick
        if k == 0 or self.m == 0:
            return False
        opts = self._bits(self.adj[a] & self.adj[b])
        self.rng.shuffle(opts)
        self.m -= 1
        for c in opts:
            cyc = (a, b, c)
            self._remove(cyc)
            self.chosen.append(cyc)
            if self.run():
                return True
            self.chosen.pop()
            self._restore(cyc)
        self.m += 1
        return False


def _search(host, m: int, n: int, seed: int, budget: Budget) -> list[Cycle]:
    E = host.edge_count()
    for attempt in range(100_000):
        rng = random.Random(f"skeleton:{host.describe()}:{m}:{n}:{seed}:{attempt}")
        s = _Search(host, m, n, rng, budget)
        budget.push_local(50 * E * E)
        try:
            ok = s.run()
        except Budget.LocalExhausted:
            ok = False
        finally:
            budget.pop_local()
        if ok:
            return [Cycle(s.verts[i] for i in cyc) for cyc in s.chosen]
    raise SearchBudgetExceeded(f"no ({m},{n}) decomposition of {host.describe()} found")


def decompose_into_3_5_cycles(host, m: int, n: int, seed: int = 0, budget: Budget | None = None) -> SkeletonDecomposition:
    """Partition the host into ``m`` triangles and ``n`` pentagons."""
    if not isinstance(host, (Complete, CompleteMinusFactor)):
        raise ParameterError("host must be K_v (v odd) or K_v - I (v even)")
    if isinstance(host, Complete) and host.v % 2 == 0:
        raise ParameterError("K_v with v even has odd degrees; use K_v - I")
    if m < 0 or n < 0 or 3 * m + 5 * n != host.edge_count():
        raise ParameterError(f"3*{m} + 5*{n} does not match {host.edge_count()} edges")
    budget = budget or Budget.from_env()
    cycles = _sts_fast_path(host) if n == 0 else None
    if cycles is None:
        cycles = _search(host, m, n, seed, budget)
    out = SkeletonDecomposition(
        host,
        tuple(c for c in cycles if len(c) == 3),
        tuple(c for c in cycles if len(c) == 5),
    )
    out.check()
    return out

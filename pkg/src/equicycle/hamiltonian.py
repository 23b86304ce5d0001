"""Hamiltonian decompositions of ``K_l`` and of the circulants ``Cay[Z_l, +-{3..(l-1)/2}]``."""

from __future__ import annotations

import math
import random
import threading
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    Complete,
    Cycle,
    GraphSpec,
    ParameterError,
    Plain,
    cayley_circulant,
)
from .budget import Budget


@dataclass(frozen=True)
class HamiltonianDecomposition:
    host: GraphSpec
    cycles: tuple  # tuples of residues, each a directed Hamiltonian cycle

    def as_cycles(self) -> list[Cycle]:
        return [Cycle(Plain(x) for x in c) for c in self.cycles]


def walecki(ell: int) -> HamiltonianDecomposition:
    """Walecki's partition of ``E(K_l)``, ``l`` odd, into ``(l-1)/2`` Hamiltonian cycles.

    Vertex ``l - 1`` plays the hub; the rest is ``Z_{l-1}`` and cycle ``i``
    is ``hub, i, i+1, i-1, i+2, i-2, ..., i+m``.
    """
    if ell < 3 or ell % 2 == 0:
        raise ParameterError("walecki needs odd l >= 3")
    m = (ell - 1) // 2
    n = ell - 1
    hub = ell - 1
    cycles = []
    for i in range(m):
        seq = [hub, i]
        for j in range(1, m + 1):
            seq.append((i + j) % n)
            if j < m:
                seq.append((i - j) % n)
        cycles.append(tuple(seq))
    return HamiltonianDecomposition(Complete(tuple(Plain(x) for x in range(ell))), tuple(cycles))


def _generator_cycle(ell: int, d: int) -> tuple:
    return tuple((j * d) % ell for j in range(ell))


def _walk(adj: dict) -> tuple:
    seq, prev, cur = [0], None, 0
    while True:
        a, b = adj[cur]
        nxt = a if a != prev else b
        if nxt == 0:
            return tuple(seq)
        seq.append(nxt)
        prev, cur = cur, nxt


_memo: dict = {}
_memo_lock = threading.Lock()


def hamiltonian_pair(ell: int, a: int, b: int, seed: int = 0, budget: Budget | None = None) -> tuple:
    """Split ``Cay[Z_l, +-{a, b}]`` into two Hamiltonian cycles.

    If both generators are units the two generator cycles already work.
    Otherwise a seeded local search swaps alternating 4-cycles between the
    two generator 2-factors until each is a single cycle.
    """
    key = (ell, a, b, seed)
    with _memo_lock:
        if key in _memo:
            return _memo[key]
    if math.gcd(a, ell) == 1 and math.gcd(b, ell) == 1:
        result = (_generator_cycle(ell, a), _generator_cycle(ell, b))
    else:
        result = _search_pair(ell, a, b, seed, budget or Budget.from_env())
    with _memo_lock:
        _memo.setdefault(key, result)
    return _memo[key]


def _components(ell: int, factor: set) -> int:
    adj: dict = {x: [] for x in range(ell)}
    for u, w in factor:
        adj[u].append(w)
        adj[w].append(u)
    seen = [False] * ell
    count = 0
    for s in range(ell):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def _factor_adj(factor: set) -> dict:
    adj: dict = {}
    for u, w in factor:
        adj.setdefault(u, []).append(w)
        adj.setdefault(w, []).append(u)
    return adj


def _search_pair(ell: int, a: int, b: int, seed: int, budget: Budget) -> tuple:
    # Start from the a-edge and b-edge 2-factors and exchange alternating
    # squares x, x+a, x+a+b, x+b between them until both are connected.
    rng = random.Random(f"ham-pair:{ell}:{a}:{b}:{seed}")

    def edge(u: int, w: int) -> tuple:
        u, w = u % ell, w % ell
        return (u, w) if u < w else (w, u)

    f1 = {edge(x, x + a) for x in range(ell)}
    f2 = {edge(x, x + b) for x in range(ell)}
    score = _components(ell, f1) + _components(ell, f2)
    while score > 2:
        budget.tick()
        x = rng.randrange(ell)
        e1, e2 = edge(x, x + a), edge(x + a, x + a + b)
        e3, e4 = edge(x + a + b, x + b), edge(x + b, x)
        if {e1, e3} <= f1 and {e2, e4} <= f2:
            g1, g2 = (f1 - {e1, e3}) | {e2, e4}, (f2 - {e2, e4}) | {e1, e3}
        elif {e2, e4} <= f1 and {e1, e3} <= f2:
            g1, g2 = (f1 - {e2, e4}) | {e1, e3}, (f2 - {e1, e3}) | {e2, e4}
        else:
            continue
        new = _components(ell, g1) + _components(ell, g2)
        # mostly downhill, with the odd sideways or uphill step to escape plateaus
        if new <= score or rng.random() < 0.05:
            f1, f2, score = g1, g2, new
    return _walk(_factor_adj(f1)), _walk(_factor_adj(f2))


@lru_cache(maxsize=None)
def _pairs(ell: int) -> tuple:
    top = (ell - 1) // 2
    gens = list(range(3, top + 1))
    pairs = [(gens[i], gens[i + 1]) for i in range(0, len(gens) - 1, 2)]
    single = gens[-1] if len(gens) % 2 else None
    return tuple(pairs), single


def circulant_ham_decomposition(ell: int, seed: int = 0, budget: Budget | None = None) -> HamiltonianDecomposition:
    """Hamiltonian decomposition of ``Cay[Z_l, +-{3, ..., (l-1)/2}]`` for odd ``l >= 7``.

    Generators are taken in consecutive pairs ``{3,4}, {5,6}, ...``; when
    ``l = 3 (mod 4)`` the leftover ``(l-1)/2`` is a unit and gives its own cycle.
    """
    if ell < 7 or ell % 2 == 0:
        raise ParameterError("circulant_ham_decomposition needs odd l >= 7")
    pairs, single = _pairs(ell)
    cycles = []
    for a, b in pairs:
        cycles.extend(hamiltonian_pair(ell, a, b, seed=seed, budget=budget))
    if single is not None:
        assert math.gcd(single, ell) == 1
        cycles.append(_generator_cycle(ell, single))
    host = cayley_circulant(ell, range(3, (ell - 1) // 2 + 1))
    return HamiltonianDecomposition(host, tuple(cycles))

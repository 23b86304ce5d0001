"""Brute-force ground truth for small instances.

Deliberately naive and independent of the construction and verifier
modules: the only shared code is the host graph's edge enumeration and the
vertex/colour value types.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import Cycle, ParameterError, SearchBudgetExceeded

MAX_GRACEFUL_H = 12
MAX_HOST_VERTICES = 12
MAX_HOST_EDGES = 40


def enumerate_graceful(h: int, leaf: int | None = None) -> list[tuple]:
    """Every graceful labelling ``0..h-1`` of the ``h``-vertex path, as label sequences.

    Each path shows up in both directions.  With ``leaf`` given, only the
    sequences that start at that label are kept, so a path with an end
    labelled ``leaf`` appears exactly once per such end.
    """
    if not 2 <= h <= MAX_GRACEFUL_H:
        raise ParameterError(f"h must lie in 2..{MAX_GRACEFUL_H}")
    out = []
    starts = range(h) if leaf is None else [leaf]

    def extend(seq, used, diffs):
        if len(seq) == h:
            out.append(tuple(seq))
            return
        last = seq[-1]
        for x in range(h):
            d = abs(x - last)
            if x in used or d in diffs:
                continue
            seq.append(x)
            used.add(x)
            diffs.add(d)
            extend(seq, used, diffs)
            diffs.discard(d)
            used.discard(x)
            seq.pop()

    for s in starts:
        extend([s], {s}, set())
    return out


def _edge(a, b) -> frozenset:
    return frozenset((a, b))


def exact_cover_decompose(host, lengths, max_nodes: int = 2_000_000) -> list[Cycle] | None:
    """Decompose ``host`` into cycles with the given multiset of lengths, or return ``None``.

    Complete backtracking: the smallest uncovered edge (in host enumeration
    order) must lie on some remaining cycle, so every cycle through it is
    tried.  ``None`` therefore means no decomposition exists.
    """
    verts = list(host.vertices())
    if len(verts) > MAX_HOST_VERTICES:
        raise ParameterError(f"oracle hosts have at most {MAX_HOST_VERTICES} vertices")
    edges = list(host.edges())
    if len(edges) > MAX_HOST_EDGES:
        raise ParameterError(f"oracle hosts have at most {MAX_HOST_EDGES} edges")
    need = Counter(lengths)
    if any(k < 3 for k in need) or sum(k * c for k, c in need.items()) != len(edges):
        return None

    free = set(edges)
    nbrs = {v: [] for v in verts}
    for e in edges:
        a, b = tuple(e)
        nbrs[a].append(b)
        nbrs[b].append(a)
    chosen: list[list] = []
    nodes = 0

    def paths(a, b, k):
        # simple paths b -> ... -> a on k vertices using free edges; ab itself closes the cycle
        def walk(path):
            if len(path) == k:
                if path[-1] == a:
                    yield list(path)
                return
            for w in nbrs[path[-1]]:
                if _edge(path[-1], w) not in free:
                    continue
                if w == a and len(path) != k - 1:
                    continue
                if w in path:
                    continue
                path.append(w)
                yield from walk(path)
                path.pop()

        yield from walk([b])

    def solve():
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise SearchBudgetExceeded("oracle exact cover exceeded its node budget")
        first = next((e for e in edges if e in free), None)
        if first is None:
            return True
        a, b = tuple(first)
        free.discard(first)
        for k in [k for k, c in need.items() if c > 0]:
            for p in paths(a, b, k):
                used = [_edge(p[i], p[i + 1]) for i in range(len(p) - 1)]
                if len(set(used)) != len(used):
                    continue
                for e in used:
                    free.discard(e)
                need[k] -= 1
                chosen.append(p)
                if solve():
                    return True
                chosen.pop()
                need[k] += 1
                free.update(used)
        free.add(first)
        return False

    if not solve():
        return None
    return [Cycle(p) for p in chosen]


@dataclass(frozen=True)
class Recount:
    """Independent tallies of a cycle system."""

    edge_counts: dict  # host edge -> times covered
    foreign_edges: int  # cycle edges that are not host edges
    lengths: tuple
    profiles: tuple  # (red, blue) per cycle, ``None`` when a vertex is uncoloured
    class_sizes: tuple
    uncoloured: int
    part_red: dict  # first coordinate -> red count, for blown-up vertices

    @property
    def covered_once(self) -> bool:
        return self.foreign_edges == 0 and all(c == 1 for c in self.edge_counts.values())

    @property
    def uncovered(self) -> int:
        return sum(1 for c in self.edge_counts.values() if c == 0)


def recount(system) -> Recount:
    host_edges = {e: 0 for e in system.graph.edges()}
    foreign = 0
    lengths = []
    profiles = []
    col = {v: str(system.colouring[v]) for v in system.colouring}
    for c in system.cycles:
        vs = list(c.vertices)
        lengths.append(len(vs))
        for i in range(len(vs)):
            e = _edge(vs[i], vs[(i + 1) % len(vs)])
            if e in host_edges:
                host_edges[e] += 1
            else:
                foreign += 1
        if all(v in col for v in vs):
            red = sum(col[v] == "red" for v in vs)
            profiles.append((red, len(vs) - red))
        else:
            profiles.append(None)
    host_vertices = set(system.graph.vertices())
    red_total = sum(1 for v in host_vertices if col.get(v) == "red")
    blue_total = sum(1 for v in host_vertices if col.get(v) == "blue")
    part_red: dict = {}
    for v in host_vertices:
        g = getattr(v, "g", None)
        if g is not None:
            part_red[g] = part_red.get(g, 0) + (col.get(v) == "red")
    return Recount(
        edge_counts=host_edges,
        foreign_edges=foreign,
        lengths=tuple(lengths),
        profiles=tuple(profiles),
        class_sizes=(red_total, blue_total),
        uncoloured=sum(1 for v in host_vertices if v not in col) + len(set(col) - host_vertices),
        part_red=part_red,
    )


def oracle_accepts(system, ell: int, class_sizes=None, part_red=None) -> bool:
    """Pass/fail from a :class:`Recount`, for comparison with the verifier."""
    r = recount(system)
    if r.uncoloured or not r.covered_once:
        return False
    if any(k != ell for k in r.lengths):
        return False
    lo, hi = ell // 2, ell - ell // 2
    if any(p is None or sorted(p) != [lo, hi] for p in r.profiles):
        return False
    if class_sizes is not None and r.class_sizes != tuple(class_sizes):
        return False
    if part_red is not None and any(k != part_red for k in r.part_red.values()):
        return False
    return True

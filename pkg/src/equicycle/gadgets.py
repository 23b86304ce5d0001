"""Path gadgets used to assemble the rotational base cycles."""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .core import INF, Cycle, ParameterError, Rot


@dataclass(frozen=True)
class Path:
    vertices: tuple

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ParameterError(f"path repeats a vertex: {self.vertices}")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def initial(self):
        return self.vertices[0] if self.vertices else None

    @property
    def terminal(self):
        return self.vertices[-1] if self.vertices else None

    def reversed(self) -> "Path":
        return Path(self.vertices[::-1])


def is_graceful(labels) -> bool:
    h = len(labels)
    if sorted(labels) != list(range(h)):
        return False
    return sorted(abs(labels[i + 1] - labels[i]) for i in range(h - 1)) == list(range(1, h))


def _zigzag(h: int) -> list[int]:
    lo, hi, out = 0, h - 1, []
    while lo <= hi:
        out.append(lo)
        if lo != hi:
            out.append(hi)
        lo, hi = lo + 1, hi - 1
    return out


def _greedy_graceful(h: int, start: int) -> list[int] | None:
    # depth-first, always trying the largest unused difference first; on paths
    # this almost never backtracks
    used = [False] * h
    dused = [False] * h
    path = [start]
    used[start] = True

    def rec(x: int) -> bool:
        if len(path) == h:
            return True
        for d in range(h - 1, 0, -1):
            if dused[d]:
                continue
            for y in (x + d, x - d):
                if 0 <= y < h and not used[y]:
                    used[y] = dused[d] = True
                    path.append(y)
                    if rec(y):
                        return True
                    used[y] = dused[d] = False
                    path.pop()
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * h + 100))
    try:
        return path if rec(start) else None
    finally:
        sys.setrecursionlimit(limit)


def graceful_path(h: int, leaf: int) -> Path:
    """Graceful labelling of the ``h``-vertex path whose initial vertex is ``leaf``.

    Labels are the integers ``0..h-1``; consecutive labels differ by each of
    ``1..h-1`` exactly once.  ``leaf=0`` is the zigzag ``0, h-1, 1, h-2, ...``.
    """
    if h < 2:
        raise ParameterError("graceful_path needs h >= 2")
    if leaf not in (0, 1):
        raise ParameterError("leaf must be 0 or 1")
    if leaf == 0:
        labels = _zigzag(h)
    else:
        # the complemented zigzag ends in 1 only for h = 4
        labels = _greedy_graceful(h, 1)
        if labels is None:
            raise ParameterError(f"no graceful path on {h} vertices starting at 1")
    assert is_graceful(labels) and labels[0] == leaf
    return Path(tuple(labels))


def p_gadget(x: int, a: int, i: int, n: int) -> Path:
    """The 2-path ``x_i, (x+a)_{i+1}, (x-2)_i``."""
    return Path((Rot(x % n, i), Rot((x + a) % n, 1 - i), Rot((x - 2) % n, i)))


def z_gadget(x: int, a: int, b: int, i: int, n: int) -> Path:
    """Concatenation of ``p_i(x - 2j; a + 4j)`` for ``j < b``; empty when ``b == 0``.

    Starts at ``x_i`` and ends at ``(x - 2b)_i``.
    """
    if b < 0:
        raise ParameterError("z_gadget needs b >= 0")
    if b == 0:
        return Path(())
    out = [Rot(x % n, i)]
    for j in range(b):
        piece = p_gadget(x - 2 * j, a + 4 * j, i, n)
        out.extend(piece.vertices[1:])
    return Path(tuple(out))


def y_terminal(x: int, a: int, b: int) -> int:
    # even b ends at x + a + b/2, odd b at x + (b+1)/2
    return x + a + b // 2 if b % 2 == 0 else x + (b + 1) // 2


def y_gadget(x: int, a: int, b: int, i: int, n: int, reversed: bool = False) -> Path:
    """Path ``x_i, (x+a+b)_i, (x+1)_i, (x+a+b-1)_i, ..., t_i``.

    Its edges carry the i-pure differences ``a + b, a + b - 1, ..., a`` once
    each.  ``reversed`` gives the same path read from ``t_i`` back to ``x_i``.
    """
    if b < 0:
        raise ParameterError("y_gadget needs b >= 0")
    labels = []
    for k in range(b + 2):
        labels.append(x + k // 2 if k % 2 == 0 else x + a + b - (k - 1) // 2)
    assert labels[-1] == y_terminal(x, a, b)
    path = Path(tuple(Rot(v % n, i) for v in labels))
    return path.reversed() if reversed else path


def concatenate(*pieces) -> list:
    """Join paths and vertex lists, merging a repeated joint vertex."""
    out: list = []
    for piece in pieces:
        for v in piece:
            if out and out[-1] == v:
                continue
            out.append(v)
    return out


def close_cycle(seq: list) -> Cycle:
    """Turn a closed walk ``v0 ... v0`` (or an open listing) into a cycle."""
    if len(seq) > 1 and seq[0] == seq[-1]:
        seq = seq[:-1]
    return Cycle(seq)


def partial_sums(ds) -> list[int]:
    out, s = [], 0
    for k, d in enumerate(ds):
        s += d if k % 2 == 0 else -d
        out.append(s)
    return out


def infinity_cycle(ell: int, D, part: int = 0) -> Cycle:
    """Cycle through infinity on part ``part`` of ``Z_{2l}`` with differences ``+-D`` and ``l``.

    ``D`` must be strictly decreasing with ``(l-3)/2`` entries in ``1..l-1``.
    The alternating partial sums ``s_k`` give
    ``(inf, 0, s_1, ..., s_K, s_K + l, ..., s_1 + l, l)``.
    """
    D = list(D)
    if ell % 2 == 0 or ell < 3:
        raise ParameterError("infinity_cycle needs odd l >= 3")
    if len(D) != (ell - 3) // 2:
        raise ParameterError(f"D must have {(ell - 3) // 2} entries, got {len(D)}")
    if any(not 1 <= d <= ell - 1 for d in D):
        raise ParameterError("entries of D must lie in 1..l-1")
    if any(D[k] <= D[k + 1] for k in range(len(D) - 1)):
        raise ParameterError("D must be strictly decreasing")
    s = partial_sums(D)
    assert all(0 < x < ell for x in s)
    n = 2 * ell
    seq = [INF, Rot(0, part)]
    seq += [Rot(x, part) for x in s]
    seq += [Rot((x + ell) % n, part) for x in reversed(s)]
    seq.append(Rot(ell, part))
    return Cycle(seq)

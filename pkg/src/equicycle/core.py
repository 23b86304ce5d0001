"""Domain types shared by every construction: vertices, cycles, colourings,
host graphs and the :class:`CycleSystem` certificate object."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence


class MalformedCycleError(ValueError):
    """A cycle is too short or repeats a vertex."""


class ParameterError(ValueError):
    """A construction was called outside its admissible parameter range."""


class ConstructionError(RuntimeError):
    """A construction failed its own audit; the message names the invariant."""


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of budget before finding a solution."""


# --------------------------------------------------------------------------
# vertices


@dataclass(frozen=True, slots=True)
class Rot:
    """Vertex ``a_part`` of ``Z_n x {0, 1}``."""

    a: int
    part: int

    @property
    def key(self) -> tuple:
        return (0, self.part, self.a)

    def __str__(self) -> str:
        return f"{self.a}_{self.part}"


@dataclass(frozen=True, slots=True)
class Blown:
    """Vertex ``(g, h)`` of ``Z_s x Z_l`` (part ``g``, position ``h``)."""

    g: int
    h: int

    @property
    def key(self) -> tuple:
        return (0, self.g, self.h)

    def __str__(self) -> str:
        return f"({self.g},{self.h})"


@dataclass(frozen=True, slots=True)
class Plain:
    """Vertex ``x`` of ``Z_v``."""

    x: int

    @property
    def key(self) -> tuple:
        return (0, self.x)

    def __str__(self) -> str:
        return str(self.x)


class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    key = (1,)

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Vertex = Rot | Blown | Plain | _Infinity


def vertex_key(v: Vertex) -> tuple:
    # Infinity sorts last; within a family order by the natural coordinates.
    return v.key


def family(v: Vertex) -> str:
    if v is INF:
        return "inf"
    return type(v).__name__.lower()


def shift(v: Vertex, i: int, n: int) -> Vertex:
    """Translate the first coordinate of ``v`` by ``i`` modulo ``n``; infinity is fixed."""
    if v is INF:
        return v
    if isinstance(v, Rot):
        return Rot((v.a + i) % n, v.part)
    if isinstance(v, Blown):
        return Blown((v.g + i) % n, v.h)
    return Plain((v.x + i) % n)


# --------------------------------------------------------------------------
# cycles


def _canonical_tuple(vs: tuple) -> tuple:
    keys = [vertex_key(v) for v in vs]
    n = len(vs)
    start = min(range(n), key=keys.__getitem__)
    # the least vertex is unique, so only two candidate sequences remain
    fwd = tuple(vs[(start + j) % n] for j in range(n))
    bwd = tuple(vs[(start - j) % n] for j in range(n))
    if [vertex_key(v) for v in bwd] < [vertex_key(v) for v in fwd]:
        return bwd
    return fwd


class Cycle:
    """A cycle given by its cyclic vertex sequence.

    Equality and hashing are up to rotation and reflection; :attr:`vertices`
    keeps the order the cycle was built in.
    """

    __slots__ = ("vertices", "_canon")

    def __init__(self, vertices: Iterable[Vertex]):
        vs = tuple(vertices)
        if len(vs) < 3:
            raise MalformedCycleError(f"cycle needs at least 3 vertices, got {len(vs)}")
        if len(set(vs)) != len(vs):
            seen = set()
            dup = next(v for v in vs if v in seen or seen.add(v))
            raise MalformedCycleError(f"repeated vertex {dup} in cycle")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("Cycle is immutable")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.vertices

    @property
    def canonical(self) -> tuple:
        if self._canon is None:
            object.__setattr__(self, "_canon", _canonical_tuple(self.vertices))
        return self._canon

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __repr__(self) -> str:
        return "Cycle(" + ", ".join(str(v) for v in self.vertices) + ")"

    def edges(self) -> list[frozenset]:
        vs = self.vertices
        return [frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))]

    def shifted(self, i: int, n: int) -> "Cycle":
        return Cycle(shift(v, i, n) for v in self.vertices)

    def relabelled(self, mapping: Mapping) -> "Cycle":
        return Cycle(mapping[v] for v in self.vertices)


def canonical_form(c: Cycle) -> Cycle:
    """Representative of ``c`` under rotation and reflection (idempotent)."""
    return Cycle(c.canonical)


# --------------------------------------------------------------------------
# colourings


class Colour(enum.Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def other(self) -> "Colour":
        return Colour.BLUE if self is Colour.RED else Colour.RED

    def __str__(self) -> str:
        return self.value


RED, BLUE = Colour.RED, Colour.BLUE


class Colouring(Mapping):
    """Total red/blue map on a vertex set."""

    __slots__ = ("_map", "class_sizes")

    def __init__(self, assignment: Mapping | Iterable[tuple]):
        m = dict(assignment)
        for v, c in m.items():
            if not isinstance(c, Colour):
                raise TypeError(f"colour of {v} is {c!r}, expected Colour")
        self._map = m
        red = sum(1 for c in m.values() if c is RED)
        self.class_sizes = (red, len(m) - red)

    def __getitem__(self, v) -> Colour:
        return self._map[v]

    def __iter__(self):
        return iter(self._map)

    def __len__(self) -> int:
        return len(self._map)

    def __eq__(self, other) -> bool:
        if isinstance(other, Colouring):
            return self._map == other._map
        return NotImplemented

    __hash__ = None

    @property
    def red(self) -> int:
        return self.class_sizes[0]

    @property
    def blue(self) -> int:
        return self.class_sizes[1]

    def swapped(self) -> "Colouring":
        return Colouring({v: c.other for v, c in self._map.items()})

    def with_colour(self, v, c: Colour) -> "Colouring":
        m = dict(self._map)
        m[v] = c
        return Colouring(m)

    def relabelled(self, mapping: Mapping) -> "Colouring":
        return Colouring({mapping[v]: c for v, c in self._map.items()})

    def profile(self, vertices: Iterable) -> tuple[int, int]:
        """``(red, blue)`` counts over ``vertices``."""
        vs = list(vertices)
        red = sum(1 for v in vs if self._map[v] is RED)
        return red, len(vs) - red


# --------------------------------------------------------------------------
# host graphs


def _edge(a, b) -> frozenset:
    return frozenset((a, b))


@dataclass(frozen=True)
class Complete:
    """Complete graph on an explicit vertex tuple."""

    vertex_set: tuple

    @property
    def v(self) -> int:
        return len(self.vertex_set)

    def vertices(self) -> tuple:
        return self.vertex_set

    def edges(self) -> Iterator[frozenset]:
        for a, b in itertools.combinations(self.vertex_set, 2):
            yield _edge(a, b)

    def edge_count(self) -> int:
        v = self.v
        return v * (v - 1) // 2

    def describe(self) -> str:
        return f"K_{self.v}"


@dataclass(frozen=True)
class CompleteMinusFactor:
    """``K_v - I`` for a perfect matching ``I`` given as pairs."""

    vertex_set: tuple
    factor: tuple

    def __post_init__(self):
        if len(self.vertex_set) % 2:
            raise ParameterError("K_v - I needs an even number of vertices")
        covered = [x for e in self.factor for x in e]
        if sorted(covered, key=vertex_key) != sorted(self.vertex_set, key=vertex_key) or len(
            covered
        ) != len(set(covered)):
            raise ParameterError("factor is not a perfect matching of the vertex set")

    @property
    def v(self) -> int:
        return len(self.vertex_set)

    def vertices(self) -> tuple:
        return self.vertex_set

    def edges(self) -> Iterator[frozenset]:
        removed = {_edge(a, b) for a, b in self.factor}
        for a, b in itertools.combinations(self.vertex_set, 2):
            e = _edge(a, b)
            if e not in removed:
                yield e

    def edge_count(self) -> int:
        v = self.v
        return v * (v - 2) // 2

    def describe(self) -> str:
        return f"K_{self.v}-I"


@dataclass(frozen=True)
class Blowup:
    """The lexicographic blow-up ``C_s[l]`` on ``Blown(g, h)`` vertices."""

    s: int
    ell: int

    @property
    def v(self) -> int:
        return self.s * self.ell

    def vertices(self) -> tuple:
        return tuple(Blown(g, h) for g in range(self.s) for h in range(self.ell))

    def edges(self) -> Iterator[frozenset]:
        s, ell = self.s, self.ell
        for g in range(s):
            g2 = (g + 1) % s
            for h in range(ell):
                for h2 in range(ell):
                    yield _edge(Blown(g, h), Blown(g2, h2))

    def edge_count(self) -> int:
        return self.s * self.ell * self.ell

    def describe(self) -> str:
        return f"C_{self.s}[{self.ell}]"


@dataclass(frozen=True)
class Cayley:
    """``Cay[G, Omega]`` for ``G = Z_n`` (``moduli=(n,)``) or ``Z_s x Z_l``.

    ``connection`` holds group elements as tuples (length 1 or 2) and must be
    closed under negation and exclude the identity.
    """

    moduli: tuple
    connection: frozenset

    def __post_init__(self):
        zero = tuple(0 for _ in self.moduli)
        conn = frozenset(tuple(x % m for x, m in zip(w, self.moduli)) for w in self.connection)
        object.__setattr__(self, "connection", conn)
        if zero in conn:
            raise ParameterError("connection set contains the identity")
        for w in conn:
            if tuple(-x % m for x, m in zip(w, self.moduli)) not in conn:
                raise ParameterError(f"connection set not closed under negation at {w}")

    @property
    def v(self) -> int:
        out = 1
        for m in self.moduli:
            out *= m
        return out

    def _vertex(self, t: tuple):
        return Plain(t[0]) if len(self.moduli) == 1 else Blown(*t)

    def vertices(self) -> tuple:
        return tuple(self._vertex(t) for t in itertools.product(*(range(m) for m in self.moduli)))

    def edges(self) -> Iterator[frozenset]:
        seen = set()
        for t in itertools.product(*(range(m) for m in self.moduli)):
            for w in self.connection:
                u = tuple((a + b) % m for a, b, m in zip(t, w, self.moduli))
                e = _edge(self._vertex(t), self._vertex(u))
                if e not in seen:
                    seen.add(e)
                    yield e

    def edge_count(self) -> int:
        return sum(1 for _ in self.edges())

    def describe(self) -> str:
        group = "x".join(f"Z_{m}" for m in self.moduli)
        gens = sorted(self.connection)
        return f"Cay[{group};" + ";".join(",".join(str(x) for x in w) for w in gens) + "]"


GraphSpec = Complete | CompleteMinusFactor | Blowup | Cayley


def cayley_circulant(n: int, gens: Iterable[int]) -> Cayley:
    conn = set()
    for d in gens:
        conn.add((d % n,))
        conn.add((-d % n,))
    return Cayley((n,), frozenset(conn))


# --------------------------------------------------------------------------
# the certificate object


@dataclass(frozen=True)
class CycleSystem:
    """A cycle decomposition with its colouring and construction provenance.

    ``provenance`` always carries ``route`` (one construction name) and
    ``ell``; constructions add ``v``, ``k``, ``seed`` and, for rotational
    systems, the named base cycles under ``bases`` with their modulus ``n``.
    """

    graph: GraphSpec
    cycles: tuple
    colouring: Colouring
    provenance: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))
        if "route" not in self.provenance:
            raise ParameterError("provenance must name the construction route")

    @property
    def ell(self) -> int:
        return self.provenance["ell"]

    @property
    def route(self) -> str:
        return self.provenance["route"]

    def __len__(self) -> int:
        return len(self.cycles)


def develop_all(base: Cycle, n: int, length: int | None = None) -> list[Cycle]:
    """Translates ``base + i`` for ``i`` in ``range(length or n)``."""
    return [base.shifted(i, n) for i in range(n if length is None else length)]


def rot_cycle(pairs: Sequence[tuple[int, int]], n: int) -> Cycle:
    """Build a cycle from ``(a, part)`` pairs, reducing ``a`` mod ``n``; ``None`` is infinity."""
    return Cycle(INF if p is None else Rot(p[0] % n, p[1]) for p in pairs)

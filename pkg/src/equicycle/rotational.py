"""2-rotational systems: ``K_{2l+1}`` developed mod ``l`` and ``K_{4l+1}`` mod ``2l``.

Vertices are ``Rot(a, i)`` for ``a`` in ``Z_n`` and ``i`` in ``{0, 1}``, plus
``INF``.  Each ``decompose_*`` builds its base cycles, audits the difference
coverage, develops the orbits and runs the verifier before returning; a
failure at any stage raises :class:`ConstructionError` naming the invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BLUE,
    INF,
    RED,
    Colouring,
    Complete,
    ConstructionError,
    Cycle,
    CycleSystem,
    ParameterError,
    Rot,
    vertex_key,
)
from .differences import PURE0, PURE1, audit_coverage, develop_bases, differences
from .gadgets import (
    close_cycle,
    concatenate,
    graceful_path,
    infinity_cycle,
    y_gadget,
    y_terminal,
    z_gadget,
)
from .verifier import Expectations, verify


def _check_ell(ell: int) -> None:
    if ell < 7 or ell % 2 == 0:
        raise ParameterError(f"l must be odd and at least 7, got {ell}")


def rot_vertices(n: int) -> tuple:
    vs = [Rot(a, i) for i in (0, 1) for a in range(n)] + [INF]
    return tuple(sorted(vs, key=vertex_key))


@dataclass(frozen=True)
class RotationalPlan:
    """Named base cycles of a 2-rotational system over ``Z_n``.

    ``m`` is the single pure class carried by ``C_0`` and ``C_1``; ``S0`` and
    ``S1`` are the pure classes read off ``C_p``.  All three are ``None`` for
    the ``K_{2l+1}`` plan.
    """

    ell: int
    n: int
    bases: dict
    m: int | None = None
    S0: frozenset | None = None
    S1: frozenset | None = None

    def audit(self):
        return audit_coverage(self.bases, self.n)


def _finish(plan: RotationalPlan, colouring: Colouring, route: str, classes: tuple) -> CycleSystem:
    report = plan.audit()
    if not report.passed:
        bad = ", ".join(f"{e.cls}: {e.status}" for e in report.problems()[:5])
        raise ConstructionError(f"difference coverage failed ({bad})")
    cycles = develop_bases(plan.bases, plan.n)
    v = 2 * plan.n + 1
    system = CycleSystem(
        Complete(rot_vertices(plan.n)),
        cycles,
        colouring,
        {
            "route": route,
            "ell": plan.ell,
            "v": v,
            "n": plan.n,
            "bases": tuple(plan.bases.items()),
            "expect_classes": tuple(classes),
        },
    )
    verdict = verify(system, Expectations(class_sizes=classes))
    if not verdict.overall:
        raise ConstructionError(f"verifier rejected the system: {verdict.failing()}")
    return system


# --------------------------------------------------------------------------
# K_{2l+1}


def colouring_k2l1(ell: int) -> Colouring:
    """Even labels red in part 0, odd labels red in part 1, infinity blue."""
    _check_ell(ell)
    col = {INF: BLUE}
    for a in range(ell):
        even = a % 2 == 0
        col[Rot(a, 0)] = RED if even else BLUE
        col[Rot(a, 1)] = BLUE if even else RED
    return Colouring(col)


def plan_k2l1(ell: int) -> RotationalPlan:
    _check_ell(ell)
    h = (ell - 1) // 2
    p0 = graceful_path(h, 0).reversed()  # ends in 0_0
    p1 = graceful_path(h, 1)  # starts at 1_1
    c_inf = Cycle([INF] + [Rot(x, 0) for x in p0] + [Rot(x, 1) for x in p1])

    seq = []
    for j in range((ell - 1) // 2):
        seq += [Rot(j, 1), Rot(ell - 2 - j, 0)]
    seq.append(Rot(h, 1))
    c = Cycle(seq)

    c_half = Cycle(Rot(j * h % ell, 0) for j in range(ell))
    return RotationalPlan(ell, ell, {"C_inf": c_inf, "C": c, f"C_{h}": c_half})


def decompose_k2l1(ell: int) -> CycleSystem:
    """Equitable ``l``-cycle system of ``K_{2l+1}`` with classes ``l`` red, ``l+1`` blue."""
    plan = plan_k2l1(ell)
    return _finish(plan, colouring_k2l1(ell), "k2l1-rotational", (ell, ell + 1))


# --------------------------------------------------------------------------
# K_{4l+1}: C_0 and C_1


def pure_class_m(ell: int) -> int:
    """The pure class carried by ``C_0`` (0-pure) and ``C_1`` (1-pure)."""
    r = ell % 8
    return {7: (ell - 1) // 2, 1: (ell - 3) // 2, 5: (ell - 1) // 2, 3: (ell - 5) // 2}[r]


def build_C0_C1(ell: int) -> tuple[Cycle, Cycle, int]:
    """The two base cycles carrying every mixed difference except ``0`` and ``l``."""
    _check_ell(ell)
    n = 2 * ell
    r = ell % 8

    def V(a: int, i: int) -> Rot:
        return Rot(a % n, i)

    def z(x, a, b, i):
        return z_gadget(x, a, b, i, n)

    if r == 7:
        x, b = (ell - 3) // 2, (ell - 3) // 4
        h = (ell - 1) // 2
        c0 = concatenate(z(x, 3, b, 1), [V(0, 1), V(x, 0)], z(x, 3, b, 0), [V(0, 0), V(h, 0), V(x, 1)])
        b1, x2, a2, b2 = (ell - 7) // 8, (ell + 1) // 4, (ell + 1) // 2, (ell + 1) // 8

        def half(i):
            return concatenate(z(x, 2, b1, i), z(x2, a2, b2, i))

        c1 = concatenate(half(0), [V(0, 0), V(x, 1)], half(1), [V(0, 1), V(h, 1), V(x, 0)])
    elif r in (1, 5):
        x, b = (ell - 5) // 2, (ell - 5) // 4
        if r == 1:
            a0, s0, h0 = 3, ell - 1, (ell - 3) // 2
            a1, b1, x2, a2, b2, s1 = 2, (ell - 9) // 8, (ell - 1) // 4, (ell - 1) // 2, (ell - 1) // 8, ell - 2
            h1 = (ell - 3) // 2
        else:
            a0, s0, h0 = 1, ell - 2, (ell - 1) // 2
            a1, b1, x2, a2, b2, s1 = 4, (ell - 13) // 8, (ell + 3) // 4, (ell - 1) // 2, (ell + 3) // 8, ell - 4
            h1 = (ell - 1) // 2
        c0 = concatenate(
            z(x, a0, b, 0),
            [V(0, 0), V(x, 1)],
            z(x, a0, b, 1),
            [V(0, 1), V(s0, 0), V(s0 + h0, 0), V(s0 + x, 1), V(x, 0)],
        )

        def half(i):
            return concatenate(z(x, a1, b1, i), z(x2, a2, b2, i))

        c1 = concatenate(
            half(1),
            [V(0, 1), V(x, 0)],
            half(0),
            [V(0, 0), V(s1, 1), V(s1 + h1, 1), V(s1 + x, 0), V(x, 1)],
        )
    else:  # r == 3
        x, b = (ell - 7) // 2, (ell - 11) // 8
        q = (ell - 11) // 4

        def half(i, a, mids, a2):
            j = 1 - i
            explicit = [
                V((ell - 3) // 4, i),
                V(mids[0], j),
                V((ell - 7) // 4, i),
                V(mids[1], j),
                V(q, i),
            ]
            return concatenate(z(x, a, b, i), explicit, z(q, a2, b, i))

        mids0 = ((3 * ell - 13) // 4, (3 * ell - 9) // 4)
        mids1 = ((3 * ell + 3) // 4, (3 * ell + 7) // 4)
        a2_0, a2_1 = (ell + 13) // 2, (ell + 11) // 2
        c0 = concatenate(
            half(0, 2, mids0, a2_0),
            [V(0, 0), V(x, 1)],
            half(1, 2, mids0, a2_0),
            [V(0, 1), V(2 * ell - 1, 0), V(x, 0)],
        )
        c1 = concatenate(
            half(1, 3, mids1, a2_1),
            [V(0, 1), V(x, 0)],
            half(0, 3, mids1, a2_1),
            [V(0, 0), V(2 * ell - 1, 1), V(x, 1)],
        )
    C0, C1 = close_cycle(c0), close_cycle(c1)
    for name, c in (("C_0", C0), ("C_1", C1)):
        if len(c) != ell:
            raise ConstructionError(f"{name} has length {len(c)}, expected {ell}")
    return C0, C1, pure_class_m(ell)


# --------------------------------------------------------------------------
# K_{4l+1}: C_p


def choose_u(ell: int, m: int) -> int:
    for u in range((ell + 1) // 2, ell - 1):
        if m not in (u - 2, u):
            return u
    raise AssertionError(f"no admissible u for l={ell}, m={m}")


def build_Cp(ell: int, m: int) -> Cycle:
    """Base cycle with mixed differences ``{0, l}`` and only pure differences otherwise.

    For ``l = 3 (mod 8)`` and ``m = (l-5)/2`` the second template (which
    skips that class) is used; otherwise ``m`` must lie in
    ``(l-3)/2 .. l-3`` (or be 3 when ``l = 7``).
    """
    _check_ell(ell)
    n = 2 * ell

    def V(a: int, i: int) -> Rot:
        return Rot(a % n, i)

    if ell % 8 == 3 and m == (ell - 5) // 2 and ell >= 11:
        if ell == 11:
            seq = [V(0, 0), V(1, 0), V(11, 0), V(2, 0), V(6, 0), V(6, 1), V(2, 1), V(7, 1), V(0, 1), V(1, 1), V(11, 1)]
            return Cycle(seq)
        b = (ell - 15) // 2
        t = y_terminal(4, 3, b)
        seq = concatenate(
            [V(0, 0), V(1, 0), V(ell, 0), V(2, 0), V((ell + 1) // 2, 0), V(4, 0)],
            y_gadget(4, 3, b, 0, n),
            [V(t, 0), V(t, 1)],
            y_gadget(4, 3, b, 1, n, reversed=True),
            [V(4, 1), V((ell + 1) // 2, 1), V(2, 1), V((ell + 3) // 2, 1), V(0, 1), V(1, 1), V(ell, 1)],
        )
        return close_cycle(seq)

    if ell == 7:
        if m != 3:
            raise ParameterError("for l=7 the cycle exists only with m=3")
        return Cycle([V(0, 0), V(1, 0), V(5, 0), V(5, 1), V(0, 1), V(1, 1), V(7, 1)])
    if not (ell - 3) // 2 <= m <= ell - 3:
        raise ParameterError(f"m must lie in {(ell - 3) // 2}..{ell - 3}, got {m}")

    u = choose_u(ell, m)
    if ell == 9:
        y0, y1, t = [], [], 2
    else:
        b = (ell - 11) // 2
        y0 = y_gadget(2, 3, b, 0, n)
        y1 = y_gadget(2, 3, b, 1, n, reversed=True)
        t = y_terminal(2, 3, b)
    seq = concatenate(
        [V(0, 0), V(1, 0), V(ell, 0), V(2, 0)],
        y0,
        [V(t, 0), V(t, 1)],
        y1,
        [V(2, 1), V(u, 1), V(0, 1), V(1, 1), V(ell, 1)],
    )
    return close_cycle(seq)


# --------------------------------------------------------------------------
# K_{4l+1}: assembly of the six base cycles


def colouring_k4l1(ell: int) -> Colouring:
    """Part 0: labels ``0..l-1`` red, ``l..2l-1`` blue; part 1 reversed; infinity blue."""
    _check_ell(ell)
    col = {INF: BLUE}
    for a in range(2 * ell):
        low = a < ell
        col[Rot(a, 0)] = RED if low else BLUE
        col[Rot(a, 1)] = BLUE if low else RED
    return Colouring(col)


def _pure_values(c: Cycle, n: int, kind: str) -> set[int]:
    return differences(c, n).values(kind)


def plan_k4l1(ell: int) -> RotationalPlan:
    _check_ell(ell)
    n = 2 * ell
    c0, c1, m = build_C0_C1(ell)
    cp = build_Cp(ell, m)
    c2 = Cycle(Rot(2 * j, 0) for j in range(ell))
    S0 = frozenset(_pure_values(cp, n, PURE0))
    S1 = frozenset(_pure_values(cp, n, PURE1))

    # whatever pure classes the other four cycles leave over go through infinity
    fixed = (cp, c0, c1, c2)
    inf_cycles = {}
    for part, kind in ((0, PURE0), (1, PURE1)):
        used = set()
        for c in fixed:
            used |= _pure_values(c, n, kind)
        D = sorted(set(range(1, ell)) - used, reverse=True)
        if len(D) != (ell - 3) // 2:
            raise ConstructionError(
                f"{len(D)} {kind} classes left for the infinity cycle, expected {(ell - 3) // 2}"
            )
        inf_cycles[part] = infinity_cycle(ell, D, part)

    bases = {
        "C_p": cp,
        "C_0": c0,
        "C_1": c1,
        "C_inf^0": inf_cycles[0],
        "C_inf^1": inf_cycles[1],
        "C_2^0": c2,
    }
    return RotationalPlan(ell, n, bases, m, S0, S1)


def decompose_k4l1(ell: int) -> CycleSystem:
    """Equitable ``l``-cycle system of ``K_{4l+1}`` with classes ``2l`` red, ``2l+1`` blue."""
    plan = plan_k4l1(ell)
    return _finish(plan, colouring_k4l1(ell), "k4l1-rotational", (2 * ell, 2 * ell + 1))

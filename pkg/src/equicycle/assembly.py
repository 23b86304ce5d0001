"""Equitable ``l``-cycle systems of ``K_v`` for ``v = 1`` or ``v = l (mod 2l)``.

The vertex set is ``Z_{2k} x Z_l`` plus ``inf`` (``v = 2kl + 1``) or
``Z_{2k+1} x Z_l`` (``v = (2k+1)l``).  Every part carries the same red
positions, so a blow-up system on parts ``x_0 .. x_{s-1}`` can be laid over
any triangle or pentagon of the skeleton graph on the part labels.
"""

from __future__ import annotations

from .blowup import C5_7_RED, decompose_c3_blowup, decompose_c5_blowup, red_positions
from .budget import Budget
from .core import (
    BLUE,
    INF,
    RED,
    Blown,
    Colouring,
    Complete,
    ConstructionError,
    Cycle,
    CycleSystem,
    ParameterError,
    vertex_key,
)
from .hamiltonian import walecki
from .rotational import decompose_k2l1, decompose_k4l1
from .skeleton import decompose_into_3_5_cycles, skeleton_host, solve_3m_5n
from .verifier import Expectations, verify


class UnsupportedParameters(ParameterError):
    """``(l, v)`` lies outside the implemented family."""


def classify(ell: int, v: int) -> tuple[str, int]:
    """``("v1", k)`` for ``v = 2kl + 1`` or ``("vl", k)`` for ``v = (2k+1)l``."""
    if not isinstance(ell, int) or not isinstance(v, int):
        raise UnsupportedParameters("l and v must be integers")
    if ell in (3, 5):
        raise UnsupportedParameters(f"l = {ell} is out of scope: only odd l >= 7 is implemented")
    if ell < 7 or ell % 2 == 0:
        raise UnsupportedParameters(f"l = {ell} is not supported: l must be odd and at least 7")
    if v < ell:
        raise UnsupportedParameters(f"v = {v} is smaller than l = {ell}")
    r = v % (2 * ell)
    if r == 1:
        return "v1", (v - 1) // (2 * ell)
    if r == ell:
        return "vl", (v - ell) // (2 * ell)
    raise UnsupportedParameters(
        f"v = {v} is not supported: need v = 1 or v = l (mod 2l), here v = {r} (mod {2 * ell})"
    )


def _blown_colouring(parts: int, ell: int, with_inf: bool) -> Colouring:
    red = red_positions(ell)
    col = {Blown(g, h): RED if h in red else BLUE for g in range(parts) for h in range(ell)}
    if with_inf:
        col[INF] = BLUE
    return Colouring(col)


def _colour_matching(src: Colouring, dst: Colouring, dst_vertices) -> dict:
    """Bijection ``src -> dst_vertices`` that preserves colour, pairing by sorted key."""
    mapping = {}
    for colour in (RED, BLUE):
        a = sorted((v for v in src if src[v] is colour), key=vertex_key)
        b = sorted((v for v in dst_vertices if dst[v] is colour), key=vertex_key)
        if len(a) != len(b):
            raise ConstructionError(f"{colour} classes differ in size ({len(a)} vs {len(b)})")
        mapping.update(zip(a, b))
    return mapping


def _overlay(sub: CycleSystem, parts: tuple, sigma: dict) -> list[Cycle]:
    """Cycles of a ``C_s[l]`` system placed on skeleton parts ``parts`` with ``h -> sigma[h]``."""
    return [Cycle(Blown(parts[w.g], sigma[w.h]) for w in c) for c in sub.cycles]


def _sigma(sub_red: frozenset, ell: int) -> dict:
    red = sorted(red_positions(ell))
    blue = sorted(set(range(ell)) - set(red))
    mine_red = sorted(sub_red)
    mine_blue = sorted(set(range(ell)) - set(sub_red))
    return dict(zip(mine_red + mine_blue, red + blue))


def _skeleton_cycles(ell: int, order: int, seed: int, budget: Budget) -> tuple[list[Cycle], tuple[int, int]]:
    host = skeleton_host(order)
    m, n = solve_3m_5n(host.edge_count())
    skel = decompose_into_3_5_cycles(host, m, n, seed, budget)
    out: list[Cycle] = []
    if m:
        c3 = decompose_c3_blowup(ell, seed, budget)
        sig = _sigma(red_positions(ell), ell)
        for tri in skel.triangles:
            out += _overlay(c3, tuple(x.x for x in tri.vertices), sig)
    if n:
        c5 = decompose_c5_blowup(ell, seed, budget)
        sig = _sigma(C5_7_RED if ell == 7 else red_positions(ell), ell)
        for pent in skel.pentagons:
            out += _overlay(c5, tuple(x.x for x in pent.vertices), sig)
    return out, (m, n)


def _gate(system: CycleSystem) -> CycleSystem:
    p = system.provenance
    exp = Expectations(class_sizes=p.get("expect_classes"), part_red=p.get("expect_part_red"))
    verdict = verify(system, exp)
    if not verdict.overall:
        raise ConstructionError(f"verifier rejected the assembled system: {verdict.failing()}")
    return system


def decompose_v1(ell: int, k: int, seed: int = 0, budget: Budget | None = None) -> CycleSystem:
    """Equitable ``l``-cycle system of ``K_{2kl+1}``."""
    if k < 1:
        raise ParameterError("k must be at least 1")
    classify(ell, 2 * k * ell + 1)
    if k == 1:
        return decompose_k2l1(ell)
    if k == 2:
        return decompose_k4l1(ell)
    budget = budget or Budget.from_env()
    v = 2 * k * ell + 1
    col = _blown_colouring(2 * k, ell, with_inf=True)
    cycles: list[Cycle] = []

    # K_{2l+1} on parts {2i, 2i+1} and inf, with the colours of the block swapped
    block = decompose_k2l1(ell)
    swapped = block.colouring.swapped()
    for i in range(k):
        verts = [Blown(g, h) for g in (2 * i, 2 * i + 1) for h in range(ell)] + [INF]
        mapping = _colour_matching(swapped, col, verts)
        cycles += [c.relabelled(mapping) for c in block.cycles]

    more, counts = _skeleton_cycles(ell, 2 * k, seed, budget)
    cycles += more
    prov = {
        "route": "v1-blowup",
        "ell": ell,
        "v": v,
        "k": k,
        "seed": seed,
        "skeleton": counts,
        "expect_classes": (k * (ell + 1), k * (ell - 1) + 1),
        "expect_part_red": (ell + 1) // 2,
    }
    return _gate(CycleSystem(Complete(tuple(col)), cycles, col, prov))


def decompose_vl(ell: int, k: int, seed: int = 0, budget: Budget | None = None) -> CycleSystem:
    """Equitable ``l``-cycle system of ``K_{(2k+1)l}``."""
    if k < 0:
        raise ParameterError("k must be non-negative")
    classify(ell, (2 * k + 1) * ell)
    budget = budget or Budget.from_env()
    parts = 2 * k + 1
    col = _blown_colouring(parts, ell, with_inf=False)
    ham = walecki(ell)
    cycles = [Cycle(Blown(g, x) for x in c) for g in range(parts) for c in ham.cycles]
    counts = (0, 0)
    if k:
        more, counts = _skeleton_cycles(ell, parts, seed, budget)
        cycles += more
    red = parts * (ell + 1) // 2
    prov = {
        "route": "vl-blowup" if k else "vl-walecki",
        "ell": ell,
        "v": parts * ell,
        "k": k,
        "seed": seed,
        "skeleton": counts,
        "expect_classes": (red, parts * ell - red),
        "expect_part_red": (ell + 1) // 2,
    }
    return _gate(CycleSystem(Complete(tuple(col)), cycles, col, prov))


def construct(ell: int, v: int, seed: int = 0, budget: Budget | None = None) -> CycleSystem:
    """Equitable ``l``-cycle system of ``K_v``, checked by the verifier before it is returned."""
    route, k = classify(ell, v)
    if route == "v1":
        system = decompose_v1(ell, k, seed, budget)
    else:
        system = decompose_vl(ell, k, seed, budget)
    if system.provenance.get("seed") is None:
        system = CycleSystem(system.graph, system.cycles, system.colouring, {**system.provenance, "seed": seed, "k": k})
    return system

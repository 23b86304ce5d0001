"""Equitable ``l``-cycle systems of the blow-ups ``C_3[l]`` and ``C_5[l]``.

``C_s[l]`` is viewed as ``Cay[Z_s x Z_l, {+-1} x Z_l]``.  The connection set
is split in two: the long differences ``Omega_2`` come from projecting a
Hamiltonian decomposition of a circulant, the short ones ``Omega_1`` from a
handful of base cycles developed mod ``s``.
"""

from __future__ import annotations

import os
import random
import threading
from dataclasses import dataclass
from pathlib import Path as FsPath

from .budget import Budget
from .certificate import format_cycle, parse_cycle
from .core import (
    BLUE,
    RED,
    Blown,
    Blowup,
    Cayley,
    Colouring,
    ConstructionError,
    Cycle,
    CycleSystem,
    ParameterError,
    SearchBudgetExceeded,
)
from .hamiltonian import circulant_ham_decomposition
from .verifier import verify


def _check(s: int, ell: int) -> None:
    if s not in (3, 5):
        raise ParameterError(f"only C_3[l] and C_5[l] are supported, got s={s}")
    if ell < 7 or ell % 2 == 0:
        raise ParameterError(f"l must be odd and at least 7, got {ell}")


# --------------------------------------------------------------------------
# connection sets


def omega(s: int, ell: int) -> frozenset:
    """``{(+-1, +-i) : i = 0..(l-1)/2}``, i.e. ``{+-1} x Z_l``."""
    return frozenset((g, h) for g in (1, s - 1) for h in range(ell))


def _pm(s: int, ell: int, values) -> frozenset:
    return frozenset((g % s, (sgn * d) % ell) for g in (1, -1) for d in values for sgn in (1, -1))


@dataclass(frozen=True)
class OmegaSplit:
    s: int
    ell: int
    omega1: frozenset
    omega2: frozenset

    def __post_init__(self):
        if self.omega1 & self.omega2:
            raise ParameterError("Omega_1 and Omega_2 overlap")
        if self.omega1 | self.omega2 != omega(self.s, self.ell):
            raise ParameterError("Omega_1 and Omega_2 do not cover Omega")
        for part in (self.omega1, self.omega2):
            for g, h in part:
                if ((-g) % self.s, (-h) % self.ell) not in part:
                    raise ParameterError(f"({g},{h}) present without its negative")

    @property
    def A(self) -> frozenset:
        """Second coordinates of ``Omega_2`` (``Omega_2 = {+-1} x A``)."""
        return frozenset(h for _, h in self.omega2)

    def cayley(self, which: int) -> Cayley:
        return Cayley((self.s, self.ell), self.omega1 if which == 1 else self.omega2)


def standard_split(s: int, ell: int) -> OmegaSplit:
    """``Omega_1 = {(+-1, +-i) : i = 0, 1, 2}`` and the rest in ``Omega_2``."""
    o1 = _pm(s, ell, (0, 1, 2))
    return OmegaSplit(s, ell, o1, omega(s, ell) - o1)


def c5_7_split() -> OmegaSplit:
    """The split used for ``C_5[7]``: only ``(+-1, +-2)`` goes through projection."""
    o2 = _pm(5, 7, (2,))
    return OmegaSplit(5, 7, omega(5, 7) - o2, o2)


# --------------------------------------------------------------------------
# projections


def project(c, s: int, reversed: bool = False) -> Cycle:
    """Lift a directed Hamiltonian cycle ``(c_0, ..., c_{l-1})`` of ``K_l`` to ``C_s[l]``.

    The forward projection walks parts ``0, 1, ..., s-1`` and then zigzags
    between parts 0 and 1; the reverse one walks ``0, s-1, ..., 1`` and then
    zigzags between 0 and ``s-1``.
    """
    c = [int(x) for x in c]
    ell = len(c)
    if sorted(c) != list(range(ell)):
        raise ParameterError("input is not a Hamiltonian cycle of K_l")
    if ell <= s or (ell - s) % 2:
        raise ParameterError(f"projection onto C_{s}[{ell}] needs l > s with l - s even")
    out = []
    for j, h in enumerate(c):
        if j < s:
            g = (-j) % s if reversed else j
        else:
            odd = (j - s) % 2
            g = (s - 1 if reversed else 1) if odd else 0
        out.append(Blown(g, h))
    return Cycle(out)


def develop_mod(cycles, s: int) -> list[Cycle]:
    return [c.shifted(i, s) for c in cycles for i in range(s)]


def decompose_omega2(s: int, ell: int, seed: int = 0, budget: Budget | None = None) -> list[Cycle]:
    """``s(l-5)`` cycles partitioning ``Cay[Z_s x Z_l, {+-1} x +-{3..(l-1)/2}]``."""
    _check(s, ell)
    ham = circulant_ham_decomposition(ell, seed=seed, budget=budget)
    lifted = []
    for c in ham.cycles:
        lifted += [project(c, s), project(c, s, reversed=True)]
    return develop_mod(lifted, s)


# --------------------------------------------------------------------------
# colourings


def red_positions(ell: int) -> frozenset:
    """Second coordinates coloured red in every part.

    ``l = 1 (mod 4)``: ``0..(l-1)/2`` red.  ``l = 3 (mod 4)``: ``0..(l-3)/2``
    blue and the rest red.  Either way ``(l+1)/2`` positions are red.
    """
    if ell % 4 == 1:
        return frozenset(range((ell + 1) // 2))
    return frozenset(range((ell - 1) // 2, ell))


def part_colouring(s: int, ell: int, red: frozenset | None = None) -> Colouring:
    red = red_positions(ell) if red is None else red
    return Colouring({Blown(g, h): RED if h in red else BLUE for g in range(s) for h in range(ell)})


# --------------------------------------------------------------------------
# C_3[l]


def c3_base_cycles(ell: int) -> dict:
    """Five base cycles covering ``Omega_1 = {(+-1, +-i) : i <= 2}`` when developed mod 3."""
    _check(3, ell)
    B = Blown
    c1 = [B(j % 2, 0 if j == 0 else ell - j) for j in range(ell - 1)] + [B(2, 2)]
    c2 = [B(0, 1), B(1, 0), B(2, 0)]
    for v in range(ell - 2, 2, -2):
        c2 += [B(1, v), B(2, v)]
    c3 = [B(0, 2), B(1, 1), B(2, 1)]
    for v in range(ell - 1, 3, -2):
        c3 += [B(0, v), B(2, v)]
    c4 = [B(j if j < 3 else (0 if j % 2 else 2), j) for j in range(ell)]
    half = (ell - 1) // 2
    a = half % 3
    c5 = [B(j % 3, 2 * j) for j in range(half + 1)]
    for r in range(half):
        g = a + 1 if r == 0 else a + 3 - r
        c5.append(B(g % 3, 2 * r + 1))
    return {f"C_{i}": Cycle(c) for i, c in enumerate((c1, c2, c3, c4, c5), start=1)}


def _gate(system: CycleSystem, what: str) -> CycleSystem:
    verdict = verify(system)
    if not verdict.overall:
        raise ConstructionError(f"{what}: verifier rejected the system ({verdict.failing()})")
    return system


def decompose_c3_blowup(ell: int, seed: int = 0, budget: Budget | None = None) -> CycleSystem:
    """``3l`` equitably coloured ``l``-cycles partitioning ``C_3[l]``."""
    bases = c3_base_cycles(ell)
    cycles = develop_mod(bases.values(), 3) + decompose_omega2(3, ell, seed, budget)
    prov = {"route": "c3-blowup", "ell": ell, "v": 3 * ell, "seed": seed, "bases": tuple(bases.items())}
    return _gate(CycleSystem(Blowup(3, ell), cycles, part_colouring(3, ell), prov), f"C_3[{ell}]")


# --------------------------------------------------------------------------
# C_5[7]

C5_7_RED = frozenset({0, 2, 4, 6})
C5_7_HAMILTONIAN = (0, 2, 4, 6, 1, 3, 5)


def c5_7_starters() -> dict:
    rows = (
        ((0, 1), (1, 2), (2, 2), (3, 3), (4, 0), (0, 0), (1, 1)),
        ((0, 3), (1, 2), (2, 5), (3, 2), (4, 6), (0, 6), (1, 3)),
        ((0, 5), (1, 6), (2, 0), (3, 3), (4, 4), (0, 4), (1, 5)),
        ((0, 1), (1, 0), (2, 4), (3, 3), (4, 6), (0, 5), (1, 4)),
        ((0, 4), (1, 0), (2, 6), (3, 2), (4, 1), (0, 5), (1, 1)),
    )
    return {f"C_{i}": Cycle(Blown(g, h) for g, h in row) for i, row in enumerate(rows, start=1)}


def _decompose_c5_7() -> CycleSystem:
    bases = c5_7_starters()
    proj = [project(C5_7_HAMILTONIAN, 5), project(C5_7_HAMILTONIAN, 5, reversed=True)]
    cycles = develop_mod(bases.values(), 5) + develop_mod(proj, 5)
    prov = {"route": "c5-blowup", "ell": 7, "v": 35, "seed": 0, "split": "c5-7", "bases": tuple(bases.items())}
    return _gate(CycleSystem(Blowup(5, 7), cycles, part_colouring(5, 7, C5_7_RED), prov), "C_5[7]")


# --------------------------------------------------------------------------
# C_5[l], l > 7: searched Omega_1 base cycles
#
# Every base cycle is a closed walk in the second coordinate whose steps
# are 0, +1 or +2; each step also moves the first coordinate by +-1.  A step
# h -> h+d taken with sign e uses the edge orbit (h, d) when e = +1 and
# (h+d, -d) when e = -1, so the two walks sharing a link must use opposite
# signs.  Five walks cover all 5l orbits:
#   W  : 0, 1, 2, ...            (+1 links)
#   P  : 0, 2, 4, ...            (+2 links)
#   X  : x, x, x+2, x+2, ..., x-1  (verticals at x+2j, then +2; closes by +1)
#   Y  : the same from x+1         (closes by +1 from x)
#   Z  : x+1, x+2, ..., x-1, x-1   (+1 links, one vertical, closes by +2)
# A walk closes in Z_5 iff its signs sum to 0 mod 5.  Colour balance depends
# on x alone; the signs are drawn at random and the verifier is the judge.


def _walk(hs, eps, ell) -> Cycle:
    g = 0
    out = []
    for h, e in zip(hs, eps):
        out.append(Blown(g % 5, h % ell))
        g += e
    if g % 5:
        raise ConstructionError("walk does not close in Z_5")
    return Cycle(out)


def _signs_with_sum(k: int, target_mod5: int, rng: random.Random) -> list[int]:
    # k signs whose sum is congruent to target_mod5
    options = [t for t in range(-k, k + 1, 2) if t % 5 == target_mod5 % 5]
    total = rng.choice(options)
    neg = (k - total) // 2
    signs = [-1] * neg + [1] * (k - neg)
    rng.shuffle(signs)
    return signs


def lane_bases(ell: int, x: int, rng: random.Random) -> dict:
    """One draw of the five walks for offset ``x``."""
    n_neg = (ell - 5) // 2
    # W: sum 5, with +1 on link x-1 and -1 on link x
    rest = [h for h in range(ell) if h not in ((x - 1) % ell, x % ell)]
    neg_w = set(rng.sample(rest, n_neg - 1)) | {x % ell}
    eps_w = [-1 if h in neg_w else 1 for h in range(ell)]
    neg_p = set(rng.sample(range(ell), n_neg))
    eps_p = [-1 if h in neg_p else 1 for h in range(ell)]

    def ew(h):
        return eps_w[h % ell]

    def ep(h):
        return eps_p[h % ell]

    walks = {}
    walks["W"] = _walk(range(ell), [ew(h) for h in range(ell)], ell)
    hp = [(2 * k) % ell for k in range(ell)]
    walks["P"] = _walk(hp, [ep(h) for h in hp], ell)

    half = (ell - 1) // 2
    for name, start, close in (("X", x, x - 1), ("Y", x + 1, x)):
        fixed = -sum(ep(start + 2 * j) for j in range(half)) - ew(close)
        vert = _signs_with_sum(half, -fixed, rng)
        hs, eps = [], []
        for j in range(half):
            hs += [start + 2 * j, start + 2 * j]
            eps += [vert[j], -ep(start + 2 * j)]
        hs.append(start + 2 * half)
        eps.append(-ew(close))
        walks[name] = _walk(hs, eps, ell)

    hs = [x + k for k in range(1, ell)] + [x - 1]
    eps = [-ew(x + k) for k in range(1, ell - 1)] + [ep(x - 1), -ep(x - 1)]
    walks["Z"] = _walk(hs, eps, ell)
    return walks


_memo: dict = {}
_memo_lock = threading.Lock()


def cache_dir() -> FsPath:
    return FsPath(os.environ.get("EQUICYCLE_CACHE_DIR") or FsPath.home() / ".cache" / "equicycle")


def cache_file() -> FsPath:
    return cache_dir() / "c5_bases.txt"


def _cache_key(ell: int, seed: int) -> str:
    return f"5,{ell},standard,{seed}"


def load_cache(path: FsPath | None = None) -> dict:
    """``{key: {name: Cycle}}`` from the cache file; unreadable entries are skipped."""
    path = path or cache_file()
    out: dict = {}
    try:
        text = path.read_text(encoding="utf-8")
    except OSError:
        return out
    key = None
    for line in text.splitlines():
        if line.startswith("key="):
            key = line[4:]
            out[key] = {}
        elif line.startswith("base ") and key is not None:
            try:
                _, name, rest = line.split(" ", 2)
                out[key][name] = parse_cycle(rest)
            except ValueError:
                out.pop(key, None)
                key = None
    return out


def _store_cache(key: str, bases: dict) -> None:
    path = cache_file()
    entries = load_cache(path)
    entries[key] = bases
    lines = []
    for k in sorted(entries):
        lines.append(f"key={k}")
        lines += [f"base {n} {format_cycle(c, canonical=False)}" for n, c in entries[k].items()]
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text("\n".join(lines) + "\n", encoding="utf-8")
        tmp.replace(path)
    except OSError:
        pass  # the cache is an optimisation only


def clear_cache() -> None:
    with _memo_lock:
        _memo.clear()
    try:
        cache_file().unlink()
    except OSError:
        pass


def _omega1_system(ell: int, bases: dict, seed: int) -> CycleSystem:
    split = standard_split(5, ell)
    prov = {"route": "c5-omega1", "ell": ell, "seed": seed}
    return CycleSystem(split.cayley(1), develop_mod(bases.values(), 5), part_colouring(5, ell), prov)


def _bases_ok(ell: int, bases: dict, seed: int) -> bool:
    return verify(_omega1_system(ell, bases, seed)).overall


def search_c5_bases(ell: int, seed: int = 0, budget: Budget | None = None, use_cache: bool = True) -> dict:
    """Five verified ``Omega_1`` base cycles for ``C_5[l]``, ``l > 7`` odd."""
    _check(5, ell)
    if ell == 7:
        raise ParameterError("C_5[7] uses the explicit starters")
    key = _cache_key(ell, seed)
    with _memo_lock:
        if key in _memo:
            return _memo[key]
    if use_cache:
        cached = load_cache().get(key)
        if cached and _bases_ok(ell, cached, seed):
            with _memo_lock:
                _memo[key] = cached
            return cached

    budget = budget or Budget.from_env()
    rng = random.Random(f"c5-lanes:{ell}:{seed}")
    offsets = list(range(ell))
    rng.shuffle(offsets)
    for x in offsets:
        for _ in range(4):
            budget.tick()
            bases = lane_bases(ell, x, rng)
            if _bases_ok(ell, bases, seed):
                with _memo_lock:
                    _memo[key] = bases
                if use_cache:
                    _store_cache(key, bases)
                return bases
    raise SearchBudgetExceeded(f"no Omega_1 base cycles found for C_5[{ell}] with seed {seed}")


def warm_cache(ell: int, seed: int = 0, budget: Budget | None = None) -> dict:
    """Search (or recall) the ``C_5[l]`` base cycles and make sure they are on disk."""
    bases = search_c5_bases(ell, seed, budget)
    key = _cache_key(ell, seed)
    if key not in load_cache():
        _store_cache(key, bases)
    return bases


def decompose_c5_blowup(ell: int, seed: int = 0, budget: Budget | None = None) -> CycleSystem:
    """``5l`` equitably coloured ``l``-cycles partitioning ``C_5[l]``."""
    _check(5, ell)
    if ell == 7:
        return _decompose_c5_7()
    bases = search_c5_bases(ell, seed, budget)
    cycles = develop_mod(bases.values(), 5) + decompose_omega2(5, ell, seed, budget)
    prov = {
        "route": "c5-blowup",
        "ell": ell,
        "v": 5 * ell,
        "seed": seed,
        "split": "standard",
        "bases": tuple(bases.items()),
    }
    return _gate(CycleSystem(Blowup(5, ell), cycles, part_colouring(5, ell), prov), f"C_5[{ell}]")


def decompose_blowup(s: int, ell: int, seed: int = 0, budget: Budget | None = None) -> CycleSystem:
    _check(s, ell)
    return decompose_c3_blowup(ell, seed, budget) if s == 3 else decompose_c5_blowup(ell, seed, budget)

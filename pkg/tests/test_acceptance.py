"""The eleven acceptance criteria, each timed against its stated limit.

A one-line PASS/FAIL per criterion is printed in the terminal summary (and
by running this file directly).
"""

import contextlib
import random
import sys
import tempfile
import time
from collections import Counter

import pytest

import conftest
from equicycle import blowup, hamiltonian
from equicycle.assembly import construct
from equicycle.blowup import c3_base_cycles, c5_7_starters, decompose_c3_blowup, decompose_c5_blowup
from equicycle.core import (
    BLUE,
    INF,
    RED,
    Blown,
    Blowup,
    Colouring,
    Cycle,
    CycleSystem,
)
from equicycle.differences import MIXED, PURE0, PURE1, DifferenceClass, audit_coverage, differences
from equicycle.gadgets import graceful_path, infinity_cycle, is_graceful, partial_sums
from equicycle.hamiltonian import circulant_ham_decomposition
from equicycle.oracle import enumerate_graceful, exact_cover_decompose, oracle_accepts
from equicycle.rotational import build_C0_C1, build_Cp, plan_k4l1
from equicycle.skeleton import decompose_into_3_5_cycles, skeleton_host, solve_3m_5n
from equicycle.verifier import Expectations, verify
from mutations import DETECTED_BY, MUTATIONS, expectations_of, mutate
from reference_cycles import C01, C3_11, C3_7_C4, C5_7, CP, K19, K69


@contextlib.contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    passed = False
    try:
        yield
        passed = True
    finally:
        seconds = time.perf_counter() - start
        ok = passed and seconds <= limit
        conftest.ACCEPTANCE_RESULTS.append((number, title, ok, seconds, limit))
        if passed and seconds > limit:
            pytest.fail(f"criterion {number} took {seconds:.2f} s (limit {limit} s)")


# --------------------------------------------------------------------------


def test_criterion_01_k19_fixture():
    with criterion(1, "l=9, v=19 base cycles", 1):
        system = construct(9, 19)
        bases = dict(system.provenance["bases"])
        assert bases == K19
        assert {c.canonical for c in bases.values()} == {c.canonical for c in K19.values()}
        assert len(system.cycles) == 19


def _table_rows(plan):
    """Supplier of every difference class, grouped the way the summary table groups them."""
    ell, n, m = plan.ell, plan.n, plan.m
    report = audit_coverage(plan.bases, n)
    assert report.passed
    sup = {e.cls: set(e.suppliers) for e in report.entries}
    rows = {
        ("mixed", "0,l"): {DifferenceClass(MIXED, 0), DifferenceClass(MIXED, ell)},
        ("mixed", "rest"): {DifferenceClass(MIXED, x) for x in range(n) if x not in (0, ell)},
        ("pure0", "m"): {DifferenceClass(PURE0, m)},
        ("pure0", "2"): {DifferenceClass(PURE0, 2)},
        ("pure0", "S0"): {DifferenceClass(PURE0, d) for d in plan.S0},
        ("pure1", "m"): {DifferenceClass(PURE1, m)},
        ("pure1", "S1"): {DifferenceClass(PURE1, d) for d in plan.S1},
    }
    rows[("pure0", "rest")] = {
        DifferenceClass(PURE0, d) for d in range(1, ell + 1)
    } - rows[("pure0", "m")] - rows[("pure0", "2")] - rows[("pure0", "S0")]
    rows[("pure1", "rest")] = {DifferenceClass(PURE1, d) for d in range(1, ell + 1)} - rows[("pure1", "m")] - rows[("pure1", "S1")]
    return {key: set().union(*(sup[c] for c in classes)) for key, classes in rows.items()}


def test_criterion_02_k69_fixture():
    with criterion(2, "l=17, v=69 base cycles and difference table", 1):
        system = construct(17, 69)
        assert dict(system.provenance["bases"]) == K69
        assert _table_rows(plan_k4l1(17)) == {
            ("mixed", "0,l"): {"C_p"},
            ("mixed", "rest"): {"C_0", "C_1"},
            ("pure0", "m"): {"C_0"},
            ("pure0", "2"): {"C_2^0"},
            ("pure0", "S0"): {"C_p"},
            ("pure0", "rest"): {"C_inf^0"},
            ("pure1", "m"): {"C_1"},
            ("pure1", "S1"): {"C_p"},
            ("pure1", "rest"): {"C_inf^1"},
        }
        inf_suppliers = {name for name, c in K69.items() if INF in c}
        assert inf_suppliers == {"C_inf^0", "C_inf^1"}


def test_criterion_03_lemma_fixtures():
    with criterion(3, "C_0/C_1, C_p, C_3[l] and C_5[7] listings", 1):
        for ell, pair in C01.items():
            assert build_C0_C1(ell)[:2] == pair
        for (ell, m), c in CP.items():
            assert build_Cp(ell, m) == c
        assert c3_base_cycles(11) == C3_11
        assert c3_base_cycles(7)["C_4"] == C3_7_C4
        assert c5_7_starters() == C5_7


SWEEP_V = lambda ell: [2 * ell + 1, 4 * ell + 1, 6 * ell + 1, 8 * ell + 1, ell, 3 * ell, 5 * ell, 7 * ell]


def _check_instance(ell, v):
    start = time.perf_counter()
    system = construct(ell, v)
    verdict = verify(system, expectations_of(system))
    assert verdict.overall, (ell, v, verdict.failing())
    assert len(system.cycles) * 2 * ell == v * (v - 1)
    lo, hi = (ell - 1) // 2, (ell + 1) // 2
    for c in system.cycles:
        assert sorted(system.colouring.profile(c)) == [lo, hi]
    if v == 2 * ell + 1:
        assert system.colouring.class_sizes == (ell, ell + 1)
    if v == 4 * ell + 1:
        assert system.colouring.class_sizes == (2 * ell, 2 * ell + 1)
    seconds = time.perf_counter() - start
    assert seconds <= 60, (ell, v, seconds)


def test_criterion_04_05_sweep():
    with contextlib.ExitStack() as stack:
        stack.enter_context(criterion(4, "end-to-end sweep l=7..25 x 8 values of v", 1800))
        stack.enter_context(criterion(5, "colour-class sizes of K_{2l+1} and K_{4l+1}", 1800))
        for ell in range(7, 26, 2):
            for v in SWEEP_V(ell):
                _check_instance(ell, v)


def test_criterion_06_infinity_cycles():
    with criterion(6, "infinity cycle property suite", 5):
        rng = random.Random(2024)
        for ell in range(7, 32, 2):
            n = 2 * ell
            for _ in range(200):
                D = sorted(rng.sample(range(1, ell), (ell - 3) // 2), reverse=True)
                c = infinity_cycle(ell, D)
                want = Counter({DifferenceClass(PURE0, d): 2 for d in D})
                want[DifferenceClass(PURE0, ell)] = 1
                assert +differences(c, n).counts == want
                assert all(0 < s < ell for s in partial_sums(D))


def test_criterion_07_graceful_oracle():
    with criterion(7, "graceful paths against exhaustive enumeration", 60):
        for h in range(2, 13):
            for leaf in (0, 1):
                labels = graceful_path(h, leaf).vertices
                assert is_graceful(list(labels)) and labels[0] == leaf
                assert labels in enumerate_graceful(h, leaf)


def test_criterion_08_circulant_decompositions():
    with criterion(8, "circulant Hamiltonian decompositions l=7..31", 30):
        hamiltonian._memo.clear()
        for ell in range(7, 32, 2):
            hd = circulant_ham_decomposition(ell)
            tally = Counter()
            for c in hd.cycles:
                assert sorted(c) == list(range(ell))
                tally.update(frozenset((c[i], c[(i + 1) % ell])) for i in range(ell))
            assert tally == Counter(frozenset(v.x for v in e) for e in hd.host.edges())


def test_criterion_09_blowups(monkeypatch):
    monkeypatch.setenv("EQUICYCLE_CACHE_DIR", tempfile.mkdtemp(prefix="equicycle-acc-"))
    monkeypatch.setattr(blowup, "_memo", {})
    hamiltonian._memo.clear()
    with criterion(9, "C_3[l] and C_5[l] standalone, l=7..31, cold cache", 120):
        for ell in range(7, 32, 2):
            for build in (decompose_c3_blowup, decompose_c5_blowup):
                system = build(ell)
                v = verify(system, Expectations(part_red=(ell + 1) // 2))
                assert v.overall, (ell, v.failing())
                assert isinstance(system.graph, Blowup)


def test_criterion_10_mutations():
    fixtures = {
        "k19": construct(9, 19),
        "k69": construct(17, 69),
        "c3[7]": decompose_c3_blowup(7),
        "c5[7]": decompose_c5_blowup(7),
        "k43": construct(7, 43),
        "k35": construct(7, 35),
    }
    with criterion(10, "mutation detection", 10):
        for name, system in fixtures.items():
            exp = expectations_of(system)
            assert verify(system, exp).overall
            for kind in MUTATIONS:
                for seed in range(3):
                    verdict = verify(mutate(system, kind, seed), exp)
                    assert DETECTED_BY[kind] in verdict.failing(), (name, kind, seed)


# --------------------------------------------------------------------------
# random small certificates


def _small_bases():
    out = []
    for order in (6, 7, 9):
        host = skeleton_host(order)
        m, _ = solve_3m_5n(host.edge_count())
        out.append((host, list(decompose_into_3_5_cycles(host, m, 0).cycles), 3, None))
    for order in (5, 11):
        host = skeleton_host(order)
        out.append((host, list(decompose_into_3_5_cycles(host, 0, host.edge_count() // 5).cycles), 5, None))
    for ell in (7, 9, 11):
        hd = hamiltonian.walecki(ell)
        out.append((hd.host, hd.as_cycles(), ell, None))
    k7 = skeleton_host(7)
    out.append((k7, exact_cover_decompose(k7, [3] * 7), 3, None))
    latin = [Cycle([Blown(0, a), Blown(1, b), Blown(2, (a + b) % 3)]) for a in range(3) for b in range(3)]
    out.append((Blowup(3, 3), latin, 3, 2))
    return out


def _random_colouring(vertices, ell, rng, hamiltonian_host):
    vs = list(vertices)
    if hamiltonian_host and rng.random() < 0.7:
        red = set(rng.sample(vs, (ell + 1) // 2))
        return Colouring({v: RED if v in red else BLUE for v in vs})
    return Colouring({v: rng.choice((RED, BLUE)) for v in vs})


def _relabel_one(system, rng):
    cycles = list(system.cycles)
    i = rng.randrange(len(cycles))
    vs = list(cycles[i].vertices)
    outside = [v for v in system.graph.vertices() if v not in vs]
    if not outside:
        return system
    vs[rng.randrange(len(vs))] = rng.choice(outside)
    cycles[i] = Cycle(vs)
    return CycleSystem(system.graph, cycles, system.colouring, system.provenance)


def test_criterion_11_oracle_agreement():
    rng = random.Random(11)
    bases = _small_bases()
    with criterion(11, "verifier and oracle agree on 1000 small certificates", 60):
        seen = Counter()
        for trial in range(1000):
            host, cycles, ell, quota = bases[trial % len(bases)]
            verts = list(host.vertices())
            if quota is not None:
                red = {Blown(g, h) for g in range(3) for h in rng.sample(range(3), 2)}
                col = Colouring({v: RED if v in red else BLUE for v in verts})
                if rng.random() < 0.3:
                    col = _random_colouring(verts, ell, rng, False)
            else:
                col = _random_colouring(verts, ell, rng, ell == len(verts))
            system = CycleSystem(host, cycles, col, {"route": "random", "ell": ell})
            roll = rng.random()
            if roll < 0.4:
                system = mutate(system, rng.choice(sorted(MUTATIONS)), rng.randrange(10**6))
            elif roll < 0.5:
                system = _relabel_one(system, rng)
            sizes = rng.choice([None, system.colouring.class_sizes, (len(verts), 0)])
            want = verify(system, Expectations(class_sizes=sizes, part_red=quota)).overall
            got = oracle_accepts(system, ell, class_sizes=sizes, part_red=quota)
            assert want == got, (trial, host.describe())
            seen[want] += 1
        assert seen[True] > 50 and seen[False] > 50, seen


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))

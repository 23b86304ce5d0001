import pytest

from equicycle import blowup
from equicycle.blowup import (
    C5_7_HAMILTONIAN,
    OmegaSplit,
    c3_base_cycles,
    c5_7_split,
    c5_7_starters,
    decompose_blowup,
    decompose_omega2,
    lane_bases,
    omega,
    part_colouring,
    project,
    red_positions,
    search_c5_bases,
    standard_split,
)
from equicycle.core import Blown, ParameterError
from equicycle.verifier import verify
from reference_cycles import C3_7_C4, C3_11, C5_7


def pairs(c):
    return tuple((v.g, v.h) for v in c.vertices)


def test_projection_listings():
    assert pairs(project(C5_7_HAMILTONIAN, 5)) == ((0, 0), (1, 2), (2, 4), (3, 6), (4, 1), (0, 3), (1, 5))
    assert pairs(project(C5_7_HAMILTONIAN, 5, reversed=True)) == (
        (0, 0), (4, 2), (3, 4), (2, 6), (1, 1), (0, 3), (4, 5),
    )


def test_projection_guards():
    with pytest.raises(ParameterError):
        project((0, 1, 1, 2, 3, 4, 5), 5)
    with pytest.raises(ParameterError):
        project((0, 1, 2, 3, 4, 5), 5)


def test_splits():
    s = standard_split(5, 11)
    assert len(s.omega1) == 10 and len(s.omega2) == 12
    assert s.A == frozenset({3, 4, 5, 6, 7, 8})
    assert c5_7_split().A == frozenset({2, 5})
    with pytest.raises(ParameterError):
        OmegaSplit(3, 7, omega(3, 7), frozenset({(1, 0)}))


def test_red_positions():
    assert red_positions(9) == frozenset(range(5))
    assert red_positions(7) == frozenset({3, 4, 5, 6})
    assert all(len(red_positions(ell)) == (ell + 1) // 2 for ell in range(7, 41, 2))


def test_c3_listings():
    assert c3_base_cycles(11) == C3_11
    assert c3_base_cycles(7)["C_4"] == C3_7_C4


def test_c5_7_listing():
    assert c5_7_starters() == C5_7


def test_omega2_covers_its_cayley_graph():
    ell = 13
    cycles = decompose_omega2(3, ell)
    assert len(cycles) == 3 * (ell - 5)
    from collections import Counter

    tally = Counter(e for c in cycles for e in c.edges())
    assert set(tally) == set(standard_split(3, ell).cayley(2).edges())
    assert set(tally.values()) == {1}


@pytest.mark.parametrize("s", [3, 5])
@pytest.mark.parametrize("ell", [7, 9, 11, 15])
def test_blowup_systems(s, ell):
    system = decompose_blowup(s, ell)
    assert len(system.cycles) == s * ell
    assert verify(system).overall


def test_lane_bases_have_the_right_shape():
    import random

    bases = lane_bases(13, 4, random.Random(1))
    assert len(bases) == 5
    assert all(len(c) == 13 for c in bases.values())
    assert all(isinstance(v, Blown) for c in bases.values() for v in c)


def test_c5_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("EQUICYCLE_CACHE_DIR", str(tmp_path))
    monkeypatch.setattr(blowup, "_memo", {})
    first = search_c5_bases(17, seed=3)
    assert blowup.cache_file().exists()
    assert blowup.load_cache()["5,17,standard,3"] == first
    monkeypatch.setattr(blowup, "_memo", {})
    assert search_c5_bases(17, seed=3) == first
    blowup.clear_cache()
    assert not blowup.cache_file().exists()


def test_corrupt_cache_is_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv("EQUICYCLE_CACHE_DIR", str(tmp_path))
    monkeypatch.setattr(blowup, "_memo", {})
    (tmp_path / "c5_bases.txt").write_text("key=5,9,standard,0\nbase C_1 (garbage\n")
    bases = search_c5_bases(9)
    assert len(bases) == 5


def test_part_colouring_quota():
    col = part_colouring(3, 9)
    assert col.class_sizes == (15, 12)


def test_unsupported_s():
    with pytest.raises(ParameterError):
        decompose_blowup(4, 9)

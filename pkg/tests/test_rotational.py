import pytest

from equicycle.core import INF, ParameterError
from equicycle.differences import MIXED, PURE1, audit_coverage, differences
from equicycle.rotational import (
    build_C0_C1,
    build_Cp,
    colouring_k2l1,
    decompose_k2l1,
    decompose_k4l1,
    plan_k2l1,
    plan_k4l1,
    pure_class_m,
)
from equicycle.verifier import verify_equitable_cycle
from reference_cycles import C01, CP, K19, K69


def test_k19_bases():
    assert plan_k2l1(9).bases == K19


def test_C_is_equitable_under_k19_colouring():
    assert verify_equitable_cycle(K19["C"], colouring_k2l1(9), 9)


def test_k69_bases():
    plan = plan_k4l1(17)
    assert plan.bases == K69
    assert sorted(plan.S0) == [1, 3, 4, 5, 6, 15, 16]
    assert sorted(plan.S1) == [1, 3, 4, 5, 6, 8, 10, 16]


@pytest.mark.parametrize("ell", sorted(C01))
def test_C0_C1_listings(ell):
    c0, c1, _ = build_C0_C1(ell)
    assert (c0, c1) == C01[ell]


@pytest.mark.parametrize("ell,m", sorted(CP))
def test_Cp_listings(ell, m):
    assert build_Cp(ell, m) == CP[(ell, m)]


@pytest.mark.parametrize("ell", range(7, 42, 2))
def test_C0_C1_differences(ell):
    c0, c1, m = build_C0_C1(ell)
    n = 2 * ell
    assert m == pure_class_m(ell)
    mixed0 = differences(c0, n).values(MIXED)
    mixed1 = differences(c1, n).values(MIXED)
    assert not mixed0 & mixed1
    assert mixed0 | mixed1 == set(range(n)) - {0, ell}
    assert differences(c1, n).values(PURE1) == {m}


@pytest.mark.parametrize("ell", range(7, 60, 2))
def test_systems(ell):
    a = decompose_k2l1(ell)
    b = decompose_k4l1(ell)
    assert len(a.cycles) == 2 * ell + 1 and a.colouring.class_sizes == (ell, ell + 1)
    assert len(b.cycles) == 8 * ell + 2 and b.colouring.class_sizes == (2 * ell, 2 * ell + 1)
    assert a.colouring[INF] == b.colouring[INF]


@pytest.mark.parametrize("ell", [7, 13, 25])
def test_plan_coverage(ell):
    assert audit_coverage(plan_k4l1(ell).bases, 2 * ell).passed


@pytest.mark.parametrize("ell", [3, 5, 8])
def test_rejects_small_or_even(ell):
    with pytest.raises(ParameterError):
        decompose_k2l1(ell)

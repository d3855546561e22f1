import random
from fractions import Fraction

import pytest
from helpers import EX35, rand_cortege_rows, rand_mixed, rand_point

from stepcone import (GE, GT, EmptyCone, LexHalfspace, MixedCone, StepLinearFunction,
                      StepSystemCone, Subspace, conv_union_ray, find_point,
                      halfspace_components, intersect, is_asymmetric, is_empty,
                      linear_hull, lineality_space, member)
from stepcone.errors import DimensionMismatch
from stepcone.exact_arith import add, scale

H = LexHalfspace(StepLinearFunction([(1, 0, 0), (0, 1, 0)]), GT)


def test_membership():
    assert member(EX35, (1, 0))
    assert not member(EX35, (0, 0))
    assert member(H, (0, 3, 7))
    assert not member(H, (0, 0, 7))
    assert member(LexHalfspace(H.u, GE), (0, 0, 7))
    with pytest.raises(DimensionMismatch):
        member(EX35, (1, 0, 0))


def test_emptiness():
    assert is_empty(MixedCone.make(1, [(1,)], [(-1,)]))
    w = find_point(EX35)
    assert w is not None and member(EX35, w)
    S = StepSystemCone(((StepLinearFunction([(1, 0), (0, 1)]), GT),
                        (StepLinearFunction([(-1, 0)]), GE)))
    w = find_point(S)
    assert w[0] == 0 and w[1] > 0


def test_asymmetry():
    assert is_asymmetric(EX35)
    assert not is_asymmetric(MixedCone.make(2, [(1, 0)]))
    assert is_asymmetric(H)
    with pytest.raises(EmptyCone):
        is_asymmetric(MixedCone.make(1, [], [(1,), (-1,)]))


def test_lineality_examples():
    L, exact = lineality_space(MixedCone.make(2, [], [(0, 1)]))
    assert exact and L == Subspace(2, [(1, 0)])
    assert lineality_space(EX35)[0].dimension == 0
    assert lineality_space(H) == (Subspace(3, [(0, 0, 1)]), True)
    S = intersect(H, LexHalfspace(StepLinearFunction([(0, 0, 1)])))
    assert lineality_space(S)[1] is False


def test_lineality_translates_members():
    rng = random.Random(2)
    for _ in range(40):
        K = rand_mixed(rng, strict=False)
        L, _ = lineality_space(K)
        x = find_point(K)
        for h in L.basis:
            for t in (1, -1, 10, -10):
                assert member(K, add(x, scale(t, h)))


def test_linear_hull():
    assert linear_hull(EX35) == Subspace.full(2)
    K = MixedCone.make(3, [(1, 0, 0), (-1, 0, 0), (0, 1, 0)])
    assert linear_hull(K) == Subspace.from_equations([(1, 0, 0)], 3)
    assert linear_hull(H) == Subspace.full(3)
    # {x1 = 0, x2 > 0} as a step system spans the plane x1 = 0
    S = intersect(MixedCone.make(3, [(1, 0, 0), (-1, 0, 0)]), H)
    assert linear_hull(S) == Subspace.from_equations([(1, 0, 0)], 3)


def test_halfspace_components_example():
    st = halfspace_components(H)
    assert [c.hull.dimension for c in st.components] == [3, 2]
    assert [c.lineality.dimension for c in st.components] == [2, 1]
    assert st.lineality == Subspace(3, [(0, 0, 1)])
    st3 = halfspace_components(LexHalfspace(StepLinearFunction([(1, 0, 0), (0, 1, 0), (0, 0, 1)])))
    assert [c.hull.dimension for c in st3.components] == [3, 2, 1]
    assert st3.lineality.dimension == 0


def test_halfspace_chain_and_partition():
    rng = random.Random(4)
    for _ in range(30):
        n = rng.randint(1, 4)
        Hr = LexHalfspace(StepLinearFunction(rand_cortege_rows(rng, n, rng.randint(1, n))))
        st = halfspace_components(Hr)
        hulls = [c.hull for c in st.components]
        for a, b in zip(hulls, hulls[1:]):
            assert b <= a and b != a
        for c in st.components:
            assert st.lineality <= c.lineality <= c.hull
        for _ in range(30):
            x = rand_point(rng, n)
            hits = sum(member(c.cone, x) for c in st.components)
            neg_hits = sum(member(c.cone, scale(-1, x)) for c in st.components)
            # exactly one of: some E_j, some -E_j, L_H
            assert hits + neg_hits + st.lineality.contains(x) == 1
            assert hits == member(Hr, x)


def test_trichotomy_and_kernel_closure():
    rng = random.Random(6)
    u = StepLinearFunction(rand_cortege_rows(rng, 4, 3))
    zeros_seen = []
    for _ in range(1000):
        x = rand_point(rng, 4, -2, 2)
        v = u(x)
        assert (v > 0) + (v == 0) + (v < 0) == 1
        if v == 0:
            zeros_seen.append(x)
    for a, b in zip(zeros_seen, zeros_seen[1:]):
        assert u(add(a, b)) == 0 and u(scale(Fraction(-3, 2), a)) == 0


def test_intersect():
    A = MixedCone.make(2, [(1, 0)])
    B = MixedCone.make(2, [(0, 1)], [(1, 1)])
    assert intersect(A, B) == EX35
    assert intersect(EX35, MixedCone.make(2)) == EX35
    u = LexHalfspace(StepLinearFunction([(1, 0)]))
    v = LexHalfspace(StepLinearFunction([(0, 1)]))
    assert len(intersect(u, v).constraints) == 2
    with pytest.raises(DimensionMismatch):
        intersect(EX35, H)


def test_conv_union_ray():
    K = MixedCone.make(2, [], [(0, 1)])
    C = conv_union_ray(K, (1, 0))
    for z in [(5, 1), (-7, 1), (1, 0), (3, 0)]:
        assert member(C, z)
    assert conv_union_ray(EX35, (1, 2)) == EX35
    C = conv_union_ray(EX35, (1, -5))
    for z in [(1, -5), (2, -9), (1, 0), (0, 1), (3, 1)]:
        assert member(C, z)
    assert not member(C, (0, -1))


def test_conv_union_ray_contains_hull_samples():
    rng = random.Random(8)
    for _ in range(30):
        K = rand_mixed(rng, 3)
        r = rand_point(rng, K.dim)
        if not any(r):
            continue
        C = conv_union_ray(K, r)
        assert member(C, r)
        x = find_point(K)
        for t in (0, 1, 3):
            assert member(C, add(x, scale(t, r)))

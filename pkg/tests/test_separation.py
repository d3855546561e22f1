import itertools
import random

import pytest
from helpers import EX35, disjoint_pair, rand_mixed, rand_point, sample_members

from stepcone import (GE, GT, IsMember, LexHalfspace, MixedCone, NotAsymmetric,
                      NotDisjoint, StepLinearFunction, dominates, included_in_halfspace,
                      is_empty, lineality_space, linear_representation,
                      member, nonmember_certificate, regular_extension, separate,
                      verify_certificate)
from stepcone.errors import DimensionMismatch
from stepcone.exact_arith import primitive


def test_inclusion_examples():
    assert included_in_halfspace(EX35, StepLinearFunction([(1, 1)]), GT)
    assert not included_in_halfspace(MixedCone.make(1, [(1,)]), StepLinearFunction([(1,)]), GT)
    assert included_in_halfspace(MixedCone.make(1, [(1,)]), StepLinearFunction([(1,)]), GE)
    slice_ = MixedCone.make(3, [(1, 0, 0), (-1, 0, 0)], [(0, 1, 0)])
    assert included_in_halfspace(slice_, StepLinearFunction([(1, 0, 0), (0, 1, 0)]), GT)
    assert not included_in_halfspace(slice_, StepLinearFunction([(1, 0, 0)]), GT)
    with pytest.raises(DimensionMismatch):
        included_in_halfspace(EX35, StepLinearFunction([(1, 0, 0)]))


def test_inclusion_is_exact_on_lex_pairs():
    # {u > 0} is inside {v > 0} iff u and v are the same cortege here
    u = StepLinearFunction([(1, 0), (0, 1)])
    H = LexHalfspace(u)
    assert included_in_halfspace(H, u, GT)
    assert not included_in_halfspace(H, StepLinearFunction([(1, 0), (0, -1)]), GT)
    assert not included_in_halfspace(H, StepLinearFunction([(1, 0)]), GT)
    assert included_in_halfspace(H, StepLinearFunction([(1, 0)]), GE)


def test_separate_examples():
    cert = separate(EX35, MixedCone.make(2, [(-1, 0), (0, -1)], [(-1, -1)]))
    assert cert.verified and len(cert.cortege) == 1
    assert primitive(cert.cortege[0].coeffs) == (1, 1)
    K1 = MixedCone.make(2, [(1, 0), (-1, 0)], [(0, 1)])
    cert = separate(K1, MixedCone.make(2, [(0, -1)]))
    assert cert.verified
    with pytest.raises(NotDisjoint):
        separate(EX35, MixedCone.make(2, [(1, 0)]))
    with pytest.raises(NotAsymmetric):
        separate(MixedCone.make(2, [(1, 0)]), MixedCone.make(2, [(-1, 0)], [(-1, 1)]))


def test_two_level_separation():
    # {u > 0} against its complement {u <= 0}: the first level x1 only separates
    # weakly, the slice x1 = 0 needs the second functional
    H = LexHalfspace(StepLinearFunction([(1, 0), (0, 1)]))
    K2 = LexHalfspace(StepLinearFunction([(-1, 0), (0, -1)]), GE)
    cert = separate(H, K2)
    assert cert.verified and len(cert.cortege) == 2


def test_separate_random_pairs():
    rng = random.Random(21)
    done = 0
    while done < 30:
        K1, K2, _ = disjoint_pair(rng)
        if is_empty(K1):
            continue
        cert = separate(K1, K2)
        assert cert.verified
        for x in sample_members(K1, rng, 5):
            assert cert.u(x) > 0
        if not is_empty(K2):
            for y in sample_members(K2, rng, 5):
                assert cert.u(y) <= 0
        done += 1


def test_verify_reports_false_for_bad_cortege():
    K2 = MixedCone.make(2, [(-1, 0), (0, -1)])
    assert verify_certificate(EX35, K2, [(1, 1)]).verified
    assert not verify_certificate(EX35, K2, [(1, 0)]).verified


def test_regular_extension_examples():
    H = regular_extension(EX35)
    assert included_in_halfspace(EX35, H.u, GT) and len(H.u.cortege) == 1
    E2 = MixedCone.make(3, [(1, 0, 0), (-1, 0, 0)], [(0, 1, 0)])
    H = regular_extension(E2)
    assert included_in_halfspace(E2, H.u, GT) and H.u((0, 0, 1)) == 0
    H = regular_extension(MixedCone.make(2, [], [(1, 0)]))
    assert H.u.cortege.rows() == [(1, 0)]
    with pytest.raises(NotAsymmetric):
        regular_extension(MixedCone.make(2, [(1, 0)]))


def test_extension_dominance_consistent():
    # dominance inside K never contradicts dominance inside the extension H
    rng = random.Random(22)
    for _ in range(15):
        K = rand_mixed(rng, 3)
        H = regular_extension(K)
        pts = sample_members(K, rng, 5)
        for x, y in itertools.product(pts, repeat=2):
            if dominates(K, y, x):
                assert dominates(H, y, x)


def test_certificate_examples():
    u = StepLinearFunction(nonmember_certificate(EX35, (-1, 5)))
    assert u((-1, 5)) <= 0 and included_in_halfspace(EX35, u, GT)
    u = StepLinearFunction(nonmember_certificate(EX35, (-1, -1)))
    assert u((-1, -1)) < 0
    Kh = MixedCone.make(2, [], [(0, 1)])
    c = nonmember_certificate(Kh, (3, 0))
    assert c.rows() == [(0, 1)] and StepLinearFunction(c)((3, 0)) == 0
    with pytest.raises(IsMember):
        nonmember_certificate(EX35, (1, 1))


def test_certificates_random():
    rng = random.Random(23)
    for _ in range(25):
        K = rand_mixed(rng, 3)
        L, _ = lineality_space(K)
        members = sample_members(K, rng, 4)
        for _ in range(4):
            y = rand_point(rng, K.dim)
            if member(K, y):
                continue
            u = StepLinearFunction(nonmember_certificate(K, y))
            assert u(y) <= 0
            assert all(u(b) == 0 for b in L.basis)
            assert all(u(x) > 0 for x in members)


def test_linear_representation():
    assert linear_representation(LexHalfspace(StepLinearFunction([(1, 2)]))) is not None
    H = LexHalfspace(StepLinearFunction([(1, 0, 0), (0, 1, 0)]))
    assert linear_representation(H) is None

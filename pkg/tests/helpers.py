"""Random instance generators and independent oracles shared by the tests."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from stepcone import MixedCone, StepLinearFunction
from stepcone.exact_arith import add, dot, rank, scale
from stepcone.lp_exact import HomSystem, feasible_mixed, fm_feasible
from stepcone.structure import enumerate_components

EX35 = MixedCone.make(2, [(1, 0), (0, 1)], [(1, 1)])


def rand_row(rng: random.Random, n: int, lo: int = -3, hi: int = 3):
    while True:
        r = tuple(Fraction(rng.randint(lo, hi)) for _ in range(n))
        if any(r):
            return r


def rand_system(rng, max_dim=4, max_rows=6):
    n = rng.randint(1, max_dim)
    m = rng.randint(0, max_rows)
    k = rng.randint(0, m)
    rows = [rand_row(rng, n) for _ in range(m)]
    return HomSystem.make(n, rows[k:], rows[:k])


def rand_mixed(rng, max_dim=4, max_rows=6, strict=True, closed=False):
    """A nonempty random mixed cone; asymmetric when ``strict``."""
    while True:
        n = rng.randint(2, max_dim)
        m = rng.randint(1, max_rows)
        ns = 0 if closed else (rng.randint(1, min(2, m)) if strict else rng.randint(0, 1))
        rows = [rand_row(rng, n) for _ in range(m)]
        K = MixedCone.make(n, rows[ns:], rows[:ns])
        if feasible_mixed(K.system) is not None:
            return K


def rand_cortege_rows(rng, n, length, lo=-9, hi=9):
    rows = []
    while len(rows) < length:
        r = rand_row(rng, n, lo, hi)
        if rank(rows + [r], n) == len(rows) + 1:
            rows.append(r)
    return rows


def sample_members(K, rng, count):
    """Members spread over the components: positive combinations of witnesses."""
    g = enumerate_components(K)
    ws = [nd.witness for nd in g.nodes]
    out = []
    while len(out) < count:
        x = None
        for w in rng.sample(ws, rng.randint(1, min(3, len(ws)))):
            t = Fraction(rng.randint(1, 5), rng.randint(1, 3))
            x = scale(t, w) if x is None else add(x, scale(t, w))
        out.append(x)
    return out


def rand_point(rng, n, lo=-4, hi=4):
    return tuple(Fraction(rng.randint(lo, hi)) for _ in range(n))


# -- oracles ---------------------------------------------------------------

def lambda_oracle(K: MixedCone, y, x) -> bool:
    """Is there lam > 0 with x - lam*y in K?  Solved as an interval in lam."""
    lo, lo_open = Fraction(0), True
    hi, hi_open = None, False
    rows = [(a, False) for a in K.nonstrict] + [(b, True) for b in K.strict]
    for a, strict in rows:
        c, d = dot(a, x), dot(a, y)
        # need c - lam*d >= 0 (or > 0)
        if d == 0:
            if c < 0 or (strict and c == 0):
                return False
        elif d > 0:
            b = c / d
            if hi is None or b < hi or (b == hi and strict):
                hi, hi_open = b, strict
        else:
            b = c / d
            if b > lo or (b == lo and strict):
                lo, lo_open = b, strict or (b == lo and lo_open)
    if hi is None:
        return True
    return lo < hi or (lo == hi and not lo_open and not hi_open)


def _contains(F_rows, G_rows, n):
    """{F_rows >= 0} inside {G_rows >= 0}, decided by Fourier-Motzkin."""
    return all(not fm_feasible(HomSystem.make(n, F_rows, [tuple(-v for v in g)]))
               for g in G_rows)


def brute_min_face(K: MixedCone, x):
    """Rows of the inclusion-minimal face of a closed cone containing ``x``."""
    n = K.dim
    A = list(K.nonstrict)
    faces = []
    for size in range(len(A) + 1):
        for T in itertools.combinations(range(len(A)), size):
            if all(dot(A[i], x) == 0 for i in T):
                faces.append(A + [tuple(-v for v in A[i]) for i in T])
    best = faces[0]
    for F in faces[1:]:
        if _contains(F, best, n):
            best = F
    assert all(_contains(best, F, n) for F in faces)
    return best


def same_set(F_rows, G_rows, n):
    return _contains(F_rows, G_rows, n) and _contains(G_rows, F_rows, n)


def disjoint_pair(rng, max_dim=4):
    """``K1`` carved from ``{u > 0}`` and ``K2`` from ``{u <= 0}`` for a random cortege ``u``."""
    n = rng.randint(2, max_dim)
    k = rng.randint(1, n)
    ls = rand_cortege_rows(rng, n, k, -3, 3)
    j = rng.randrange(k)
    eq = ls[:j]
    K1_ns = eq + [tuple(-v for v in l) for l in eq]
    K1_ns += [rand_row(rng, n) for _ in range(rng.randint(0, 2))]
    K1 = MixedCone.make(n, K1_ns, [ls[j]])
    # {l_1 = .. = l_(jj-1) = 0, l_jj <= 0, .., l_k <= 0} lies in {u <= 0}
    jj = rng.randrange(k)
    eq2 = ls[:jj]
    K2_ns = eq2 + [tuple(-v for v in l) for l in eq2] + [tuple(-v for v in l) for l in ls[jj:]]
    K2_ns += [rand_row(rng, n) for _ in range(rng.randint(0, 2))]
    K2 = MixedCone.make(n, K2_ns, [])
    return K1, K2, StepLinearFunction(ls)

"""Exact LP over homogeneous mixed systems ``Ax >= 0, Bx > 0``.

Everything is decided by one small primal simplex (Bland's rule) whose
initial basis is the slack basis, so no phase one is ever needed: every lift
used here is feasible at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch
from .exact_arith import Vector, dot, primitive, vector, zeros

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class HomSystem:
    """Rows ``a`` of ``nonstrict`` mean ``a.x >= 0``; rows of ``strict`` mean ``b.x > 0``.

    Build through :meth:`make`, which scales every row to coprime integers and
    drops zero non-strict rows.  A zero strict row (``0 > 0``) is kept as an
    explicit infeasibility marker.
    """

    dim: int
    nonstrict: tuple = ()
    strict: tuple = ()

    @classmethod
    def make(cls, dim: int, nonstrict: Sequence = (), strict: Sequence = ()) -> "HomSystem":
        ns, st = [], []
        for rows, out in ((nonstrict, ns), (strict, st)):
            for r in rows:
                r = vector(r)
                if len(r) != dim:
                    raise DimensionMismatch(f"row of length {len(r)} in a system of dim {dim}")
                if out is ns and not any(r):
                    continue
                out.append(primitive(r))
        return cls(dim, tuple(ns), tuple(st))

    @property
    def has_marker(self) -> bool:
        return any(not any(r) for r in self.strict)

    def satisfied_by(self, x: Sequence) -> bool:
        return all(dot(a, x) >= 0 for a in self.nonstrict) and all(dot(b, x) > 0 for b in self.strict)

    def closure(self) -> "HomSystem":
        """Row relaxation ``Ax >= 0, Bx >= 0`` (the topological closure when nonempty)."""
        return HomSystem.make(self.dim, self.nonstrict + self.strict)


# --- simplex ---------------------------------------------------------------

def simplex_max(M: Sequence[Sequence], b: Sequence, c: Sequence):
    """Maximise ``c.v`` subject to ``M v <= b``, ``v >= 0`` with ``b >= 0``.

    Returns ``(value, v)``.  Rows are kept sparse (dicts) because every lift
    built in this module is mostly zeros.  Raises ``ArithmeticError`` if the
    problem is unbounded, which none of the internal lifts can be.
    """
    m, n = len(M), len(c)
    rows = []
    rhs = []
    for i, r in enumerate(M):
        if b[i] < 0:
            raise ValueError("simplex_max needs b >= 0")
        row = {j: Fraction(a) for j, a in enumerate(r) if a}
        row[n + i] = ONE
        rows.append(row)
        rhs.append(Fraction(b[i]))
    basis = [n + i for i in range(m)]
    # objective row stores -c_j (reduced costs); value in obj_val
    obj = {j: -Fraction(a) for j, a in enumerate(c) if a}
    obj_val = ZERO

    while True:
        enter = min((j for j, d in obj.items() if d < 0), default=None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(rows):
            a = row.get(enter)
            if a is not None and a > 0:
                ratio = rhs[i] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise ArithmeticError("unbounded LP")
        r = best[1]
        prow = rows[r]
        p = prow[enter]
        if p != 1:
            for j in prow:
                prow[j] /= p
            rhs[r] /= p
        pr = rhs[r]
        for i, row in enumerate(rows):
            if i == r:
                continue
            f = row.get(enter)
            if f is None:
                continue
            for j, a in prow.items():
                v = row.get(j, ZERO) - f * a
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
            rhs[i] -= f * pr
        f = obj.get(enter)
        for j, a in prow.items():
            v = obj.get(j, ZERO) - f * a
            if v:
                obj[j] = v
            else:
                obj.pop(j, None)
        obj_val -= f * pr
        basis[r] = enter

    v = [ZERO] * n
    for i, j in enumerate(basis):
        if j < n:
            v[j] = rhs[i]
    return obj_val, v


def _split(rows: Sequence[Sequence], n: int, extra: int = 0):
    """Rows ``-a`` over the split variables ``(p, q)`` with ``x = p - q``, padded by ``extra`` zeros."""
    return [[-a for a in r] + [a for a in r] + [ZERO] * extra for r in rows]


# --- public operations -----------------------------------------------------

def feasible_mixed(S: HomSystem) -> Vector | None:
    """A point satisfying every row of ``S`` exactly, or ``None`` if there is none.

    Solves ``max t`` s.t. ``Ax >= 0``, ``Bx >= t``, ``-1 <= x_i <= 1``,
    ``t <= 1``; the system is feasible iff the optimum is positive.
    """
    n = S.dim
    if S.has_marker:
        return None
    if not S.strict:
        return zeros(n)
    nv = 2 * n + 1
    M, b = [], []
    for r in _split(S.nonstrict, n, 1):
        M.append(r)
        b.append(ZERO)
    for r in _split(S.strict, n, 1):
        r[-1] = ONE
        M.append(r)
        b.append(ZERO)
    for j in range(nv):
        M.append([ONE if k == j else ZERO for k in range(nv)])
        b.append(ONE)
    c = [ZERO] * (nv - 1) + [ONE]
    t, v = simplex_max(M, b, c)
    if t <= 0:
        return None
    x = tuple(v[i] - v[n + i] for i in range(n))
    assert S.satisfied_by(x)
    return x


def relint_point(A: Sequence[Sequence], dim: int | None = None, equalities: Sequence[Sequence] = ()):
    """Relative-interior point of ``{x : Ax >= 0, Ex = 0}`` and its implicit rows.

    Returns ``(x, implicit)`` where ``implicit`` is the set of indices ``i``
    with ``a_i.x = 0`` on the whole cone; every other row is strict at ``x``.
    One LP maximises the total slack ``sum t_i`` with ``a_i.x >= t_i`` and
    ``0 <= t_i <= 1``: at the optimum ``t_i = 1`` exactly for the rows that
    are not implicit.
    """
    A = [vector(r) for r in A]
    E = [vector(r) for r in equalities]
    if dim is None:
        if not A and not E:
            raise ValueError("dim is required for an empty system")
        dim = len((A or E)[0])
    for r in A + E:
        if len(r) != dim:
            raise DimensionMismatch("row length differs from dim")
    live = [i for i, r in enumerate(A) if any(r)]
    if not live:
        return zeros(dim), {i for i in range(len(A))}
    m = len(live)
    nv = 2 * dim + m
    M, b = [], []
    for k, i in enumerate(live):
        row = _split([A[i]], dim, m)[0]
        row[2 * dim + k] = ONE
        M.append(row)
        b.append(ZERO)
    for e in E:
        r = _split([e], dim, m)[0]
        M.append(r)
        M.append([-a for a in r])
        b += [ZERO, ZERO]
    for k in range(m):
        row = [ZERO] * nv
        row[2 * dim + k] = ONE
        M.append(row)
        b.append(ONE)
    c = [ZERO] * (2 * dim) + [ONE] * m
    _, v = simplex_max(M, b, c)
    x = tuple(v[i] - v[dim + i] for i in range(dim))
    implicit = {i for i, r in enumerate(A) if dot(r, x) == 0}
    assert all(dot(r, x) >= 0 for r in A) and all(dot(e, x) == 0 for e in E)
    return x, implicit


def project_eliminate(S: HomSystem, k: int) -> HomSystem:
    """Fourier-Motzkin projection of ``S`` along coordinate ``k``.

    A combined row is strict iff at least one parent is strict.  Duplicate
    rows are merged and a non-strict row shadowed by an identical strict row
    is dropped.
    """
    if not 0 <= k < S.dim:
        raise IndexError(f"coordinate {k} out of range for dim {S.dim}")
    rows = [(r, False) for r in S.nonstrict] + [(r, True) for r in S.strict]
    keep, pos, negs = [], [], []
    for r, s in rows:
        c = r[k]
        if c > 0:
            pos.append((r, s))
        elif c < 0:
            negs.append((r, s))
        else:
            keep.append((r, s))
    for p, sp in pos:
        for q, sq in negs:
            cp, cq = p[k], -q[k]
            keep.append((tuple(cq * a + cp * b for a, b in zip(p, q)), sp or sq))
    out_ns, out_st = {}, {}
    for r, s in keep:
        r = r[:k] + r[k + 1:]
        if not any(r) and not s:
            continue
        r = primitive(r)
        (out_st if s else out_ns)[r] = None
    ns = [r for r in out_ns if r not in out_st]
    return HomSystem(S.dim - 1, tuple(ns), tuple(out_st))


def fm_feasible(S: HomSystem) -> bool:
    """Feasibility by eliminating every coordinate (an oracle independent of the simplex)."""
    T = S
    while T.dim > 0:
        T = project_eliminate(T, T.dim - 1)
    return not T.strict

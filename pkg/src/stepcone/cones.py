"""Cone representations and their basic attributes.

Three representations share one set of free functions:

* :class:`MixedCone` -- ``{x : Ax >= 0, Bx > 0}``;
* :class:`LexHalfspace` -- ``{u > 0}`` or ``{u >= 0}`` for a step-linear ``u``;
* :class:`StepSystemCone` -- a finite intersection of such halfspaces.

The last two are finite unions of mixed cones (one per choice of level for
every constraint); :func:`mixed_pieces` exposes that decomposition and most
decisions below reduce to LPs on the pieces.

A union such as ``{x2 > 0} U {0}`` is not representable; only its asymmetric
part ``{x2 > 0}`` and lineality data are.  Mixed-cone rows are normalised on
construction (scaled to coprime integers, zero non-strict rows dropped), and
row indices everywhere refer to the normalised rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import CandidateBlowup, DimensionMismatch, EmptyCone
from .exact_arith import Subspace, Vector, dot, neg, unit, vector, zeros
from .lp_exact import HomSystem, feasible_mixed, project_eliminate, relint_point
from .step_linear import StepLinearFunction, eval_step

GT = "gt"  # strict:  u(x) > 0
GE = "ge"  # non-strict: u(x) >= 0
STRICT, NONSTRICT = GT, GE

PIECE_CAP = 2 ** 20


@dataclass(frozen=True)
class MixedCone:
    system: HomSystem

    @classmethod
    def make(cls, dim: int, nonstrict: Sequence = (), strict: Sequence = ()) -> "MixedCone":
        return cls(HomSystem.make(dim, nonstrict, strict))

    @classmethod
    def from_subspace(cls, S: Subspace) -> "MixedCone":
        """The subspace itself, as the closed cone cut out by its equations."""
        eqs = S.equations()
        return cls.make(S.dim, list(eqs) + [neg(e) for e in eqs])

    @property
    def dim(self) -> int:
        return self.system.dim

    @property
    def nonstrict(self) -> tuple:
        return self.system.nonstrict

    @property
    def strict(self) -> tuple:
        return self.system.strict

    def closure(self) -> "MixedCone":
        return MixedCone(self.system.closure())

    def with_equalities(self, rows: Sequence) -> "MixedCone":
        rows = [vector(r) for r in rows]
        return MixedCone.make(self.dim, list(self.nonstrict) + rows + [neg(r) for r in rows], self.strict)


@dataclass(frozen=True)
class LexHalfspace:
    u: StepLinearFunction
    relation: str = GT

    def __post_init__(self):
        if not isinstance(self.u, StepLinearFunction):
            object.__setattr__(self, "u", StepLinearFunction(self.u))
        if self.relation not in (GT, GE):
            raise ValueError(f"relation must be 'gt' or 'ge', not {self.relation!r}")

    @property
    def dim(self) -> int:
        return self.u.dim

    @property
    def constraints(self) -> tuple:
        return ((self.u, self.relation),)


@dataclass(frozen=True)
class StepSystemCone:
    constraints: tuple

    def __post_init__(self):
        cons = []
        for u, rel in self.constraints:
            if not isinstance(u, StepLinearFunction):
                u = StepLinearFunction(u)
            if rel not in (GT, GE):
                raise ValueError(f"relation must be 'gt' or 'ge', not {rel!r}")
            cons.append((u, rel))
        if not cons:
            raise ValueError("a step system needs at least one constraint")
        dims = {u.dim for u, _ in cons}
        if len(dims) != 1:
            raise DimensionMismatch(f"constraints of mixed dimensions {sorted(dims)}")
        object.__setattr__(self, "constraints", tuple(cons))

    @property
    def dim(self) -> int:
        return self.constraints[0][0].dim


Cone = Union[MixedCone, LexHalfspace, StepSystemCone]


def _check_point(K, x):
    if len(x) != K.dim:
        raise DimensionMismatch(f"point of dim {len(x)} for a cone in dim {K.dim}")


def as_constraints(K: Cone) -> tuple:
    """Step-linear constraints describing ``K``; mixed rows become one-element corteges."""
    if not isinstance(K, MixedCone):
        return K.constraints
    cons = [(StepLinearFunction([a]), GE) for a in K.nonstrict]
    for b in K.strict:
        if any(b):
            cons.append((StepLinearFunction([b]), GT))
        else:
            # 0 > 0 marker: an empty pair of opposite open halfspaces
            e = unit(K.dim, 0)
            cons += [(StepLinearFunction([e]), GT), (StepLinearFunction([neg(e)]), GT)]
    if not cons:
        raise ValueError("the whole space has no step-linear constraint form")
    return tuple(cons)


def _level_options(u: StepLinearFunction, rel: str):
    k = len(u.cortege)
    opts = list(range(k))
    if rel == GE:
        opts.append(None)
    return opts


def _level_rows(u: StepLinearFunction, level):
    """(equalities, strict rows) for ``u`` sitting at ``level`` (``None`` = all vanish)."""
    rows = u.cortege.rows()
    if level is None:
        return rows, []
    return rows[:level], [rows[level]]


def piece_count(K: Cone) -> int:
    if isinstance(K, MixedCone):
        return 1
    n = 1
    for u, rel in K.constraints:
        n *= len(_level_options(u, rel))
    return n


def mixed_pieces(K: Cone, cap: int = PIECE_CAP):
    """Yield ``(levels, MixedCone)`` covering ``K`` by pairwise disjoint pieces.

    ``levels`` is ``None`` for a mixed cone; otherwise a tuple holding, per
    constraint, the index of the first nonvanishing functional (``None`` when
    all vanish).  Pieces may be empty.
    """
    if isinstance(K, MixedCone):
        yield None, K
        return
    if piece_count(K) > cap:
        raise CandidateBlowup(f"{piece_count(K)} level assignments exceed the cap {cap}")
    opts = [_level_options(u, rel) for u, rel in K.constraints]
    for levels in itertools.product(*opts):
        eqs, strict = [], []
        for (u, _), lev in zip(K.constraints, levels):
            e, s = _level_rows(u, lev)
            eqs += e
            strict += s
        yield levels, MixedCone.make(K.dim, eqs + [neg(e) for e in eqs], strict)


def nonempty_pieces(K: Cone, cap: int = PIECE_CAP):
    """Like :func:`mixed_pieces` but only nonempty pieces, each with a witness."""
    for levels, P in mixed_pieces(K, cap):
        w = feasible_mixed(P.system)
        if w is not None:
            yield levels, P, w


# --- basic attributes --------------------------------------------------------

def member(K: Cone, x: Sequence) -> bool:
    x = vector(x)
    _check_point(K, x)
    if isinstance(K, MixedCone):
        return K.system.satisfied_by(x)
    for u, rel in K.constraints:
        v = eval_step(u, x)[0]
        if v < 0 or (rel == GT and v == 0):
            return False
    return True


def find_point(K: Cone) -> Vector | None:
    """A point of ``K`` or ``None`` when ``K`` is empty."""
    for _, _, w in nonempty_pieces(K):
        return w
    return None


def is_empty(K: Cone) -> bool:
    return find_point(K) is None


def is_asymmetric(K: Cone) -> bool:
    if is_empty(K):
        raise EmptyCone("asymmetry is only defined for nonempty cones")
    return not member(K, zeros(K.dim))


def lineality_space(K: Cone):
    """``(L_K, exact)``.  For step systems with several constraints the
    returned subspace is only guaranteed to lie inside ``L_K``."""
    if is_empty(K):
        raise EmptyCone("lineality space of an empty cone")
    if isinstance(K, MixedCone):
        return Subspace.from_equations(list(K.nonstrict) + list(K.strict), K.dim), True
    rows = [r for u, _ in K.constraints for r in u.cortege.rows()]
    return Subspace.from_equations(rows, K.dim), len(K.constraints) == 1


def _mixed_hull(K: MixedCone) -> Subspace:
    rows = list(K.nonstrict) + list(K.strict)
    _, implicit = relint_point(rows, K.dim)
    return Subspace.from_equations([rows[i] for i in sorted(implicit)], K.dim)


def linear_hull(K: Cone) -> Subspace:
    """``Lin K = K - K``."""
    if isinstance(K, LexHalfspace):
        # both {u > 0} and {u >= 0} span X
        return Subspace.full(K.dim)
    if isinstance(K, MixedCone):
        if is_empty(K):
            raise EmptyCone("linear hull of an empty cone")
        return _mixed_hull(K)
    out = None
    for _, P, _ in nonempty_pieces(K):
        h = _mixed_hull(P)
        out = h if out is None else out + h
    if out is None:
        raise EmptyCone("linear hull of an empty cone")
    return out


@dataclass(frozen=True)
class HalfspaceComponent:
    level: int
    cone: MixedCone       # E_j = {l_1 = ... = l_{j-1} = 0, l_j > 0}
    lineality: Subspace   # L_{E_j}
    hull: Subspace        # Lin(E_j)


@dataclass(frozen=True)
class HalfspaceStructure:
    components: tuple     # greatest first
    lineality: Subspace   # L_H


def halfspace_components(H: LexHalfspace) -> HalfspaceStructure:
    """Open components of an asymmetric lex halfspace, greatest first."""
    if H.relation != GT:
        raise ValueError("halfspace_components expects a strict halfspace {u > 0}")
    rows = H.u.cortege.rows()
    comps = []
    for j in range(len(rows)):
        E = MixedCone.make(H.dim, rows[:j] + [neg(r) for r in rows[:j]], [rows[j]])
        comps.append(HalfspaceComponent(
            level=j,
            cone=E,
            lineality=Subspace.from_equations(rows[:j + 1], H.dim),
            hull=Subspace.from_equations(rows[:j], H.dim),
        ))
    return HalfspaceStructure(tuple(comps), Subspace.from_equations(rows, H.dim))


def intersect(K1: Cone, K2: Cone) -> Cone:
    if K1.dim != K2.dim:
        raise DimensionMismatch(f"cannot intersect cones in dims {K1.dim} and {K2.dim}")
    for A, B in ((K1, K2), (K2, K1)):
        if isinstance(A, MixedCone) and not A.nonstrict and not A.strict:
            return B
    if isinstance(K1, MixedCone) and isinstance(K2, MixedCone):
        return MixedCone.make(K1.dim, K1.nonstrict + K2.nonstrict, K1.strict + K2.strict)
    return StepSystemCone(as_constraints(K1) + as_constraints(K2))


def conv_union_ray(K: MixedCone, r: Sequence) -> MixedCone:
    """Mixed cone containing ``conv(K U {a*r : a > 0})``.

    Projects ``{(z, mu) : A(z - mu r) >= 0, B(z - mu r) > 0, mu >= 0}`` along
    ``mu``; strict rows of the projection that vanish on ``r`` are then relaxed
    so the ray itself is included.  The result can exceed the true hull on
    the boundary through ``r`` (the hull need not be a mixed cone at all),
    so callers re-verify whatever they derive from it.
    """
    r = vector(r)
    _check_point(K, r)
    if not any(r):
        raise ValueError("the ray direction must be nonzero")
    if is_empty(K):
        raise EmptyCone("conv(K U ray) of an empty cone")
    if member(K, r):
        return K
    n = K.dim
    lifted = HomSystem.make(
        n + 1,
        [tuple(a) + (-dot(a, r),) for a in K.nonstrict] + [zeros(n) + (1,)],
        [tuple(b) + (-dot(b, r),) for b in K.strict],
    )
    P = project_eliminate(lifted, n)
    strict = [b for b in P.strict if dot(b, r) > 0]
    relaxed = [b for b in P.strict if dot(b, r) <= 0]
    return MixedCone.make(n, list(P.nonstrict) + relaxed, strict)

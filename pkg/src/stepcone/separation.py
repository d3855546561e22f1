"""Separation of cones by step-linear functions.

The separator is built one functional at a time.  At each level the weak
separators ``l`` (``l >= 0`` on the closure of what is left of ``K1`` and
``l <= 0`` on the closure of what is left of ``K2``) form a polyhedral cone
given by Farkas multipliers; a relative-interior point of that cone is taken,
so each level is as strict as possible.  Both residues are then cut down to
``ker l`` and the process repeats inside the smaller subspace until nothing
of ``K1`` is left.  Every construction is checked with
:func:`included_in_halfspace` before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cones import (GE, GT, Cone, LexHalfspace, MixedCone, conv_union_ray,
                    intersect, is_asymmetric, is_empty, lineality_space, member,
                    nonempty_pieces)
from .errors import (ConstructionStuck, DimensionMismatch, EmptyCone, IsMember,
                     NotAsymmetric, NotDisjoint)
from .exact_arith import (Subspace, Vector, add, dot, neg, primitive, scale,
                          solve, unit, vector, zeros)
from .lp_exact import HomSystem, feasible_mixed, project_eliminate, relint_point
from .step_linear import Cortege, LinearFunctional, StepLinearFunction


@dataclass(frozen=True)
class SeparationCertificate:
    """``u > 0`` on ``K1`` and ``u <= 0`` on ``K2``."""

    cortege: Cortege
    verified: bool
    k1_side: str = "gt0"
    k2_side: str = "le0"

    @property
    def u(self) -> StepLinearFunction:
        return StepLinearFunction(self.cortege)


def _inside(P: MixedCone, rows: Sequence[Vector], relation: str) -> bool:
    for l in rows:
        if feasible_mixed(HomSystem.make(P.dim, P.nonstrict + P.strict, [neg(l)])) is not None:
            return False
        P = P.with_equalities([l])
        if feasible_mixed(P.system) is None:
            return True
    return relation == GE


def included_in_halfspace(K: Cone, u: StepLinearFunction, relation: str = GT) -> bool:
    """Decide ``K <= {u > 0}`` (or ``{u >= 0}``).

    For each mixed piece: the leading functional must be ``>= 0`` on the
    piece's closure; the points where it is positive are settled and the
    check continues on the slice ``ker l`` with the remaining functionals.
    Anything left once the cortege is exhausted has ``u = 0``.
    """
    if not isinstance(u, StepLinearFunction):
        u = StepLinearFunction(u)
    if u.dim != K.dim:
        raise DimensionMismatch(f"cortege of dim {u.dim} for a cone in dim {K.dim}")
    rows = u.cortege.rows()
    return all(_inside(P, rows, relation) for _, P, _ in nonempty_pieces(K))


def _coords(rows, basis):
    """Rows restricted to the span of ``basis``, in basis coordinates; zero rows dropped."""
    out = []
    for r in rows:
        c = tuple(dot(r, b) for b in basis)
        if any(c):
            out.append(c)
    return out


def _weak_separator(pieces1, pieces2, V: Subspace) -> Vector:
    """Relative-interior weak separator on ``V``, returned as a vector of ``V``."""
    B = V.basis
    d = len(B)
    blocks = [(_coords(P.nonstrict + P.strict, B), +1) for P in pieces1]
    blocks += [(_coords(Q.nonstrict + Q.strict, B), -1) for Q in pieces2]
    nvar = sum(len(rows) for rows, _ in blocks)
    offsets = []
    o = 0
    for rows, _ in blocks:
        offsets.append(o)
        o += len(rows)

    def image(k):
        # the d x nvar map multipliers -> sign * A_k^T lambda_k
        rows, sgn = blocks[k]
        M = [[Fraction(0)] * nvar for _ in range(d)]
        for i, r in enumerate(rows):
            for j in range(d):
                M[j][offsets[k] + i] = sgn * r[j]
        return M

    ref = image(0)
    eqs = []
    for k in range(1, len(blocks)):
        other = image(k)
        # K1 blocks: A_0^T l0 = A_k^T lk ;  K2 blocks: A_0^T l0 = -A_k^T mk
        for j in range(d):
            eqs.append(tuple(a - b for a, b in zip(ref[j], other[j])))
    nonneg = [unit(nvar, i) for i in range(nvar)]
    if nvar == 0:
        return zeros(V.dim)
    z, _ = relint_point(nonneg, nvar, equalities=eqs)
    coef = [dot(ref[j], z) for j in range(d)]
    if not any(coef):
        return zeros(V.dim)
    gram = [tuple(dot(a, b) for b in B) for a in B]
    c = solve(gram, coef, d)
    l = zeros(V.dim)
    for cj, b in zip(c, B):
        l = add(l, scale(cj, b))
    return primitive(l)


def _construct(K1: Cone, K2: Cone) -> Cortege:
    n = K1.dim
    pieces1 = [P for _, P, _ in nonempty_pieces(K1)]
    pieces2 = [P for _, P, _ in nonempty_pieces(K2)]
    V = Subspace.full(n)
    functionals = []
    while pieces1:
        if not pieces2:
            # nothing left to stay away from: any level functional positive on K1's residue
            l = _weak_separator(pieces1, [], V)
        else:
            l = _weak_separator(pieces1, pieces2, V)
        if not any(l):
            raise ConstructionStuck(
                f"only the zero weak separator exists at level {len(functionals)}")
        functionals.append(l)
        V = V.intersect(Subspace.from_equations([l], n))
        pieces1 = [P.with_equalities([l]) for P in pieces1]
        pieces1 = [P for P in pieces1 if feasible_mixed(P.system) is not None]
        pieces2 = [Q.with_equalities([l]) for Q in pieces2]
        pieces2 = [Q for Q in pieces2 if feasible_mixed(Q.system) is not None]
    return Cortege(functionals)


def verify_certificate(K1: Cone, K2: Cone, cortege) -> SeparationCertificate:
    """Check a given cortege: ``u > 0`` on ``K1`` and ``u <= 0`` on ``K2``."""
    c = cortege if isinstance(cortege, Cortege) else Cortege(cortege)
    u = StepLinearFunction(c)
    ok = included_in_halfspace(K1, u, GT) and included_in_halfspace(K2, -u, GE)
    return SeparationCertificate(c, ok)


def separate(K1: Cone, K2: Cone) -> SeparationCertificate:
    """Step-linear ``u`` with ``u > 0`` on ``K1`` and ``u <= 0`` on ``K2``.

    ``K1`` must be asymmetric and disjoint from ``K2``.
    """
    if K1.dim != K2.dim:
        raise DimensionMismatch(f"cones in dims {K1.dim} and {K2.dim}")
    if is_empty(K1):
        raise EmptyCone("K1 is empty")
    if not is_asymmetric(K1):
        raise NotAsymmetric("K1 contains the origin")
    if not is_empty(intersect(K1, K2)):
        raise NotDisjoint("K1 and K2 intersect")
    cert = verify_certificate(K1, K2, _construct(K1, K2))
    if not cert.verified:
        raise ConstructionStuck("constructed cortege failed verification")
    return cert


def regular_extension(K: Cone) -> LexHalfspace:
    """Asymmetric lex halfspace ``H`` with ``K <= H`` and ``L_K <= L_H``."""
    if not is_asymmetric(K):
        raise NotAsymmetric("only asymmetric cones have regular extensions")
    L, _ = lineality_space(K)
    cert = separate(K, MixedCone.from_subspace(L))
    u = cert.u
    if not all(u(b) == 0 for b in L.basis):
        raise ConstructionStuck("extension does not vanish on the lineality space")
    return LexHalfspace(u, GT)


def subspace_plus_ray(L: Subspace, y: Sequence) -> MixedCone:
    """``{h + mu*y : h in L, mu >= 0}`` as a closed mixed cone."""
    y = vector(y)
    n = L.dim
    eqs = [tuple(e) + (-dot(e, y),) for e in L.equations()]
    lifted = HomSystem.make(n + 1, eqs + [neg(e) for e in eqs] + [zeros(n) + (1,)])
    return MixedCone(project_eliminate(lifted, n))


def nonmember_certificate(K: Cone, y: Sequence) -> Cortege:
    """Cortege ``u`` with ``u > 0`` on ``K``, ``u = 0`` on ``L_K`` and ``u(y) <= 0``.

    If ``-y`` is in ``K`` or ``y`` is in ``L_K`` a regular extension already
    works.  Otherwise ``conv(K U ray(-y))`` is separated from ``L_K``; when
    the mixed over-approximation of that hull touches ``L_K``, ``K`` is
    separated from ``L_K + ray(y)`` instead, which is disjoint from ``K``
    whenever ``y`` is not in ``K``.
    """
    y = vector(y)
    if member(K, y):
        raise IsMember("y lies in the cone")
    if not is_asymmetric(K):
        raise NotAsymmetric("certificates need an asymmetric cone")
    L, _ = lineality_space(K)
    if member(K, neg(y)) or L.contains(y):
        u = regular_extension(K).u
    else:
        LK = MixedCone.from_subspace(L)
        u = None
        if isinstance(K, MixedCone):
            C = conv_union_ray(K, neg(y))
            if is_empty(intersect(C, LK)):
                u = separate(C, LK).u
        if u is None or u(y) > 0:
            u = separate(K, subspace_plus_ray(L, y)).u
    if not (included_in_halfspace(K, u, GT) and u(y) <= 0
            and all(u(b) == 0 for b in L.basis)):
        raise ConstructionStuck("non-membership certificate failed verification")
    return u.cortege


def linear_representation(H: LexHalfspace) -> LinearFunctional | None:
    """A single functional ``l`` with ``H = {l > 0}``, or ``None`` if none exists.

    Only the leading functional can work; it is accepted when the inclusion
    holds both ways.
    """
    if H.relation != GT:
        raise ValueError("expects a strict halfspace")
    l = H.u.cortege[0]
    single = StepLinearFunction([l.coeffs])
    open_half = MixedCone.make(H.dim, strict=[l.coeffs])
    if included_in_halfspace(H, single, GT) and included_in_halfspace(open_half, H.u, GT):
        return l
    return None

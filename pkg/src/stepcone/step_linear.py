"""Corteges of linear functionals and the step-linear functions they generate.

A cortege is stored least-first: ``functionals[0]`` is consulted first when
evaluating.  Its components run the other way round, so the first functional
belongs to the *greatest* open component of the halfspace ``{u > 0}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DependentFunctional, DimensionMismatch, ZeroFunctional
from .exact_arith import (DualScalar, Subspace, Vector, dot, dual_sign, in_span,
                          neg, primitive, vector)


@dataclass(frozen=True, eq=False)
class LinearFunctional:
    coeffs: Vector

    def __post_init__(self):
        object.__setattr__(self, "coeffs", vector(self.coeffs))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def __call__(self, x: Sequence) -> Fraction:
        if len(x) != self.dim:
            raise DimensionMismatch(f"point of dim {len(x)} for functional of dim {self.dim}")
        return dot(self.coeffs, x)

    def __neg__(self) -> "LinearFunctional":
        return LinearFunctional(neg(self.coeffs))

    def direction(self) -> Vector:
        return primitive(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LinearFunctional):
            return NotImplemented
        return self.direction() == other.direction()

    def __hash__(self):
        return hash(self.direction())


class Cortege:
    """Finite, linearly independent, ordered family of nonzero functionals.

    Equality holds when the lists agree up to a positive factor per functional.
    """

    __slots__ = ("functionals", "dim")

    def __init__(self, functionals: Sequence):
        fs = [f if isinstance(f, LinearFunctional) else LinearFunctional(f) for f in functionals]
        if not fs:
            raise ValueError("a cortege needs at least one functional")
        dim = fs[0].dim
        for i, f in enumerate(fs):
            if f.dim != dim:
                raise DimensionMismatch(f"functional {i} has dim {f.dim}, expected {dim}")
            if not any(f.coeffs):
                raise ZeroFunctional(i)
            if i and in_span([g.coeffs for g in fs[:i]], f.coeffs):
                raise DependentFunctional(i)
        self.functionals = tuple(fs)
        self.dim = dim

    def __len__(self):
        return len(self.functionals)

    def __iter__(self):
        return iter(self.functionals)

    def __getitem__(self, i):
        return self.functionals[i]

    def __neg__(self) -> "Cortege":
        return Cortege([-f for f in self.functionals])

    def __eq__(self, other):
        if not isinstance(other, Cortege):
            return NotImplemented
        return self.functionals == other.functionals

    def __hash__(self):
        return hash(self.functionals)

    def rows(self) -> list[Vector]:
        return [f.coeffs for f in self.functionals]

    def __repr__(self):
        return f"Cortege({[[str(a) for a in f.coeffs] for f in self.functionals]})"


def validate_cortege(fs: Sequence) -> Cortege:
    """Check nonzero, common dimension and linear independence; keep the order.

    Raises :class:`ZeroFunctional` or :class:`DependentFunctional` naming the
    first offending index.
    """
    return Cortege(fs)


class StepLinearFunction:
    """``u(x)`` = value of the first functional not vanishing at ``x`` (0 if none)."""

    __slots__ = ("cortege",)

    def __init__(self, cortege):
        self.cortege = cortege if isinstance(cortege, Cortege) else Cortege(cortege)

    @property
    def dim(self) -> int:
        return self.cortege.dim

    def __call__(self, x: Sequence) -> Fraction:
        return eval_step(self, x)[0]

    def __neg__(self) -> "StepLinearFunction":
        return StepLinearFunction(-self.cortege)

    def __eq__(self, other):
        if not isinstance(other, StepLinearFunction):
            return NotImplemented
        return self.cortege == other.cortege

    def __hash__(self):
        return hash(self.cortege)

    def __repr__(self):
        return f"StepLinearFunction({self.cortege!r})"


def eval_step(u: StepLinearFunction, x: Sequence):
    """Return ``(value, level)``; ``level`` is ``None`` when every functional vanishes."""
    if len(x) != u.dim:
        raise DimensionMismatch(f"point of dim {len(x)} for step-linear function of dim {u.dim}")
    for j, f in enumerate(u.cortege):
        v = dot(f.coeffs, x)
        if v:
            return v, j
    return Fraction(0), None


def eval_step_perturbed(u: StepLinearFunction, x: Sequence, y: Sequence) -> int:
    """Sign of ``u(x - lam*y)`` for every sufficiently small ``lam > 0``."""
    if len(x) != u.dim or len(y) != u.dim:
        raise DimensionMismatch("point dimension differs from the cortege")
    for f in u.cortege:
        d = DualScalar(dot(f.coeffs, x), dot(f.coeffs, y))
        if d.std or d.inf:
            return dual_sign(d)
    return 0


def level_subspace(c: Cortege, j: int) -> Subspace:
    """``X_j``: common kernel of the functionals strictly before ``j``."""
    if not 0 <= j < len(c):
        raise IndexError(f"level {j} out of range for a cortege of length {len(c)}")
    return Subspace.from_equations(c.rows()[:j], c.dim)


def least_point(c: Cortege, j: int) -> Vector:
    """A point whose first nonvanishing functional is ``c[j]`` (and is positive there)."""
    X = level_subspace(c, j)
    f = c[j].coeffs
    for b in X.basis:
        v = dot(f, b)
        if v:
            return tuple(a / v for a in b)
    raise AssertionError("independent cortege has a functional vanishing on its level")

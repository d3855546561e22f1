"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions and
matrices are sequences of such tuples.  Nothing in here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DimensionMismatch

Vector = tuple  # tuple[Fraction, ...]


def Q(value) -> Fraction:
    """Coerce an int, Fraction or rational string such as ``"-3/4"``."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_q(value: Fraction) -> str:
    """Canonical string form: ``"p/q"`` or ``"p"`` when the denominator is 1."""
    return str(Fraction(value))


def vector(values: Iterable) -> Vector:
    return tuple(Q(v) for v in values)


def zeros(n: int) -> Vector:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def _check(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"dimension mismatch: {len(u)} vs {len(v)}")


def dot(u: Sequence, v: Sequence) -> Fraction:
    _check(u, v)
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def add(u: Sequence, v: Sequence) -> Vector:
    _check(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    _check(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(t, v: Sequence) -> Vector:
    t = Q(t)
    return tuple(t * a for a in v)


def neg(v: Sequence) -> Vector:
    return tuple(-a for a in v)


def is_zero(v: Sequence) -> bool:
    return not any(v)


def primitive(v: Sequence) -> Vector:
    """Positive multiple of ``v`` with coprime integer entries (zero stays zero)."""
    if not any(v):
        return tuple(Fraction(0) for _ in v)
    den = 1
    for a in v:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return tuple(Fraction(a // g) for a in ints)


def sign(value) -> int:
    return (value > 0) - (value < 0)


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds the nonzero reduced rows and
    ``pivots[i]`` is the pivot column of ``R[i]``.
    """
    m = [list(map(Fraction, r)) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    for r in m:
        if len(r) != ncols:
            raise DimensionMismatch("ragged matrix")
    pivots = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        p = m[top][col]
        if p != 1:
            m[top] = [a / p for a in m[top]]
        prow = m[top]
        for i in range(len(m)):
            if i != top and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], prow)]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    return [tuple(r) for r in m[:top]], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def kernel_basis(rows: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of ``{x : Mx = 0}``; empty iff ``M`` has full column rank.

    ``ncols`` is required when ``rows`` is empty.
    """
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    R, pivots = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in zip(R, pivots):
            x[p] = -r[f]
        basis.append(tuple(x))
    return basis


def in_span(S: Sequence[Sequence], v: Sequence) -> bool:
    for s in S:
        _check(s, v)
    if not any(v):
        return True
    return rank(list(S) + [v], len(v)) == rank(S, len(v))


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int | None = None):
    """One solution of ``Mx = rhs`` or ``None`` if inconsistent."""
    if ncols is None:
        ncols = len(rows[0])
    aug = [tuple(r) + (Q(b),) for r, b in zip(rows, rhs)]
    R, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, p in zip(R, pivots):
        x[p] = r[ncols]
    return tuple(x)


def transpose(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    return [tuple(r[j] for r in rows) for j in range(ncols)]


@dataclass(frozen=True)
class DualScalar:
    """Value of ``l(x - lam*y)`` to first order: ``std - lam*inf``."""

    std: Fraction
    inf: Fraction

    def __mul__(self, t) -> "DualScalar":
        t = Q(t)
        return DualScalar(self.std * t, self.inf * t)

    __rmul__ = __mul__

    def sign(self) -> int:
        return dual_sign(self)


def dual_sign(d: DualScalar) -> int:
    """Sign of ``std - lam*inf`` for all sufficiently small ``lam > 0``."""
    if d.std:
        return sign(d.std)
    return -sign(d.inf)


class Subspace:
    """Linear subspace of Q^n held by a canonical (RREF) basis."""

    __slots__ = ("dim", "basis")

    def __init__(self, dim: int, vectors: Iterable[Sequence] = ()):
        vectors = [vector(v) for v in vectors]
        for v in vectors:
            if len(v) != dim:
                raise DimensionMismatch(f"basis vector of length {len(v)} in Q^{dim}")
        self.dim = dim
        self.basis = tuple(rref(vectors, dim)[0]) if vectors else ()

    @classmethod
    def full(cls, dim: int) -> "Subspace":
        return cls(dim, [unit(dim, i) for i in range(dim)])

    @classmethod
    def zero(cls, dim: int) -> "Subspace":
        return cls(dim)

    @classmethod
    def from_equations(cls, rows: Sequence[Sequence], dim: int) -> "Subspace":
        """The common kernel of ``rows``."""
        return cls(dim, kernel_basis(list(rows), dim))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def equations(self) -> list[Vector]:
        """Rows whose common kernel is this subspace."""
        if not self.basis:
            return [unit(self.dim, i) for i in range(self.dim)]
        return kernel_basis(list(self.basis), self.dim)

    def contains(self, v: Sequence) -> bool:
        return in_span(self.basis, v) if self.basis else not any(v) and len(v) == self.dim

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim == other.dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        return Subspace.from_equations(self.equations() + other.equations(), self.dim)

    def project(self, v: Sequence) -> Vector:
        """Orthogonal projection onto the subspace (standard inner product)."""
        if not self.basis:
            return zeros(self.dim)
        B = self.basis
        gram = [tuple(dot(a, b) for b in B) for a in B]
        coef = solve(gram, [dot(b, v) for b in B], len(B))
        out = zeros(self.dim)
        for c, b in zip(coef, B):
            out = add(out, scale(c, b))
        return out

    def __repr__(self):
        inner = ", ".join("(" + ", ".join(format_q(a) for a in b) + ")" for b in self.basis)
        return f"Subspace(dim={self.dim}, basis=[{inner}])"

"""Finitely supported vectors over the basis ``{e_i : i in Z} U {e_+inf}``.

Two cones live here:

* the nonnegative orthant minus the origin, whose dominance is inclusion of
  positive supports and which therefore has no greatest component;
* the halfspace ``K = E_+inf U (union of E_m)`` cut out by
  ``l_+inf(x) = x_+inf + sum_i x_i`` and ``l_s(x) = sum_{i <= s} x_i``, whose
  components are ordered like ``Z U {+inf}``.  The face made of all ``E_m``
  with ``m`` finite has no greatest component, so its intrinsic core is empty.

All sums are finite because supports are.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import NotMember
from .exact_arith import Q


@functools.total_ordering
class _PlusInf:
    """Index ``+inf``: above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("+inf")

    def __repr__(self):
        return "PLUS_INF"

    def __reduce__(self):
        return (_PlusInf, ())


PLUS_INF = _PlusInf()


def _index(k):
    if k is PLUS_INF or k == "+inf":
        return PLUS_INF
    if isinstance(k, bool):
        raise TypeError("index must be an integer or '+inf'")
    return int(k)


def _index_key(k):
    return (1, 0) if k is PLUS_INF else (0, k)


class FinSuppVector:
    """Immutable vector with finitely many nonzero rational coordinates."""

    __slots__ = ("_items",)

    def __init__(self, coords: Mapping = ()):
        items = {}
        for k, v in dict(coords).items():
            v = Q(v)
            if v:
                items[_index(k)] = v
        self._items = tuple(sorted(items.items(), key=lambda kv: _index_key(kv[0])))

    @classmethod
    def e(cls, i) -> "FinSuppVector":
        return cls({i: 1})

    @property
    def coords(self) -> dict:
        return dict(self._items)

    def __getitem__(self, k) -> Fraction:
        return self.coords.get(_index(k), Fraction(0))

    def support(self) -> list:
        return [k for k, _ in self._items]

    def int_items(self):
        return [(k, v) for k, v in self._items if k is not PLUS_INF]

    def __add__(self, other: "FinSuppVector") -> "FinSuppVector":
        c = self.coords
        for k, v in other._items:
            c[k] = c.get(k, 0) + v
        return FinSuppVector(c)

    def __neg__(self) -> "FinSuppVector":
        return FinSuppVector({k: -v for k, v in self._items})

    def __sub__(self, other: "FinSuppVector") -> "FinSuppVector":
        return self + (-other)

    def __rmul__(self, t) -> "FinSuppVector":
        t = Q(t)
        return FinSuppVector({k: t * v for k, v in self._items})

    def __eq__(self, other):
        return isinstance(other, FinSuppVector) and self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        inner = ", ".join(f"{'+inf' if k is PLUS_INF else k}: {v}" for k, v in self._items)
        return f"FinSuppVector({{{inner}}})"


@functools.total_ordering
@dataclass(frozen=True)
class ExtSignature:
    """``LINEALITY`` < ``LEVEL(m)`` < ``LEVEL(n)`` (m < n) < ``LEVEL_INF``."""

    tag: str            # "LINEALITY" | "LEVEL" | "LEVEL_INF"
    m: int | None = None

    def _key(self):
        return {"LINEALITY": (0, 0), "LEVEL": (1, self.m), "LEVEL_INF": (2, 0)}[self.tag]

    def __lt__(self, other: "ExtSignature"):
        return self._key() < other._key()

    def __repr__(self):
        return f"LEVEL({self.m})" if self.tag == "LEVEL" else self.tag


LINEALITY = ExtSignature("LINEALITY")
LEVEL_INF = ExtSignature("LEVEL_INF")


def LEVEL(m: int) -> ExtSignature:
    return ExtSignature("LEVEL", int(m))


def l_plus_inf(x: FinSuppVector) -> Fraction:
    return sum((v for _, v in x._items), Fraction(0))


def l_s(x: FinSuppVector, s: int) -> Fraction:
    return sum((v for k, v in x.int_items() if k <= s), Fraction(0))


def ext_signature(x: FinSuppVector):
    """Component of ``x`` in the halfspace, or ``None`` when ``x`` is outside it
    (and outside its lineality space)."""
    top = l_plus_inf(x)
    if top > 0:
        return LEVEL_INF
    if top < 0:
        return None
    # l_s is constant on [k_i, k_{i+1} - 1] between support indices and equals
    # the whole integer sum beyond the support, so that sum must vanish; the
    # level is the largest s with l_s != 0, just below the next support index
    items = x.int_items()
    partial = []
    acc = Fraction(0)
    for k, v in items:
        acc += v
        partial.append(acc)
    if acc:
        return None
    for i in range(len(items) - 1, -1, -1):
        if partial[i]:
            return LEVEL(items[i + 1][0] - 1) if partial[i] > 0 else None
    return LINEALITY


def _require(sig, what):
    if sig is None:
        raise NotMember(f"{what} is not in the cone")
    return sig


def ext_dominates(y: FinSuppVector, x: FinSuppVector) -> bool:
    """``y`` is dominated by ``x`` in the halfspace."""
    sy = _require(ext_signature(y), "y")
    sx = _require(ext_signature(x), "x")
    return sy <= sx


def component_witness(m) -> FinSuppVector:
    """``e_+inf`` for ``PLUS_INF``, otherwise ``e_m - e_{m+1}``."""
    if m is PLUS_INF or m == "+inf":
        return FinSuppVector.e(PLUS_INF)
    m = int(m)
    return FinSuppVector({m: 1, m + 1: -1})


def orthant_signature(x: FinSuppVector):
    """Positive support ``I(x)`` as a frozenset, or ``None`` for non-members."""
    if not x._items or any(v < 0 for _, v in x._items):
        return None
    return frozenset(x.support())


def orthant_dominates(y: FinSuppVector, x: FinSuppVector) -> bool:
    Iy = _require(orthant_signature(y), "y")
    Ix = _require(orthant_signature(x), "x")
    return Iy <= Ix


ORTHANT = "ORTHANT"
HAT_FACE = "HAT_FACE"


def empty_icr_witness(which: str, x: FinSuppVector) -> FinSuppVector:
    """A member of the same cone that ``x`` fails to dominate.

    Existing for every ``x`` means no component is greatest, i.e. the
    intrinsic core is empty.
    """
    if which == ORTHANT:
        I = _require(orthant_signature(x), "x")
        j = 1
        while j in I:
            j += 1
        return FinSuppVector.e(j)
    if which == HAT_FACE:
        sig = ext_signature(x)
        if sig is None or sig.tag != "LEVEL":
            raise NotMember("x is not in the face made of the finite-level components")
        return component_witness(sig.m + 1)
    raise ValueError(f"unknown cone {which!r}")

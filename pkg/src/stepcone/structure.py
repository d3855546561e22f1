"""Dominance, open components and the component semilattice.

``y`` is dominated by ``x`` in ``K`` when ``x - lam*y`` stays in ``K`` for some
``lam > 0``.  Because ``x`` itself is in ``K`` and ``K`` is convex, the set of
admissible ``lam`` is an interval starting at 0, so it is enough to look at
arbitrarily small ``lam``.  That turns dominance into a sign test:

* mixed cone: every non-strict row tight at ``x`` must satisfy ``a.y <= 0``
  (hence ``a.y = 0``), i.e. ``tight(x)`` is a subset of ``tight(y)``;
* step system: every constraint must keep its sign along ``x - lam*y``,
  decided by :func:`~stepcone.step_linear.eval_step_perturbed`.

Components are labelled by canonical :class:`Signature` values rather than by
pairwise equivalence sweeps.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .cones import (GT, PIECE_CAP, Cone, LexHalfspace, MixedCone, member,
                    nonempty_pieces)
from .errors import CandidateBlowup, EmptyCone, NotMember
from .exact_arith import Vector, add, dot, format_q, neg, vector
from .lp_exact import feasible_mixed, relint_point
from .step_linear import eval_step, eval_step_perturbed

_TOP = float("inf")  # ordering key for an all-vanishing level; never used in arithmetic


@dataclass(frozen=True)
class Signature:
    """Canonical label of an open component.

    ``kind == "tight"``: sorted indices of the non-strict rows tight at the point.
    ``kind == "levels"``: per constraint, the first nonvanishing functional
    (``None`` when all vanish).  Smaller entries mean a greater component in
    both cases.
    """

    kind: str
    key: tuple

    def below(self, other: "Signature") -> bool:
        """``E_self`` is dominated by ``E_other``."""
        if self.kind != other.kind:
            raise ValueError("signatures of different cone kinds")
        if self.kind == "tight":
            return set(other.key) <= set(self.key)
        return all(_lv(a) >= _lv(b) for a, b in zip(self.key, other.key))

    def label(self) -> str:
        if self.kind == "tight":
            return "{" + ",".join(map(str, self.key)) + "}"
        return "(" + ",".join("*" if a is None else str(a) for a in self.key) + ")"

    def sort_key(self):
        if self.kind == "tight":
            return (len(self.key), self.key)
        lv = tuple(_lv(a) for a in self.key)
        return (sum(lv), lv)


def _lv(a):
    return _TOP if a is None else a


@dataclass(frozen=True)
class ComponentWitness:
    signature: Signature
    witness: Vector


def _require_members(K, *points):
    out = []
    for name, p in points:
        p = vector(p)
        if not member(K, p):
            raise NotMember(f"{name} is not in the cone")
        out.append(p)
    return out


def _tight(K: MixedCone, x) -> tuple:
    return tuple(i for i, a in enumerate(K.nonstrict) if dot(a, x) == 0)


def signature(K: Cone, x: Sequence) -> Signature:
    (x,) = _require_members(K, ("x", x))
    if isinstance(K, MixedCone):
        return Signature("tight", _tight(K, x))
    return Signature("levels", tuple(eval_step(u, x)[1] for u, _ in K.constraints))


def dominates(K: Cone, y: Sequence, x: Sequence) -> bool:
    """True iff ``x - lam*y`` lies in ``K`` for some ``lam > 0``."""
    x, y = _require_members(K, ("x", x), ("y", y))
    if isinstance(K, MixedCone):
        return all(dot(a, y) <= 0 for a in K.nonstrict if dot(a, x) == 0)
    for u, rel in K.constraints:
        s = eval_step_perturbed(u, x, y)
        if s < 0 or (rel == GT and s == 0):
            return False
    return True


def equivalent(K: Cone, x: Sequence, y: Sequence) -> bool:
    return dominates(K, x, y) and dominates(K, y, x)


def join_witness(K: Cone, x: Sequence, y: Sequence) -> ComponentWitness:
    """The least upper bound of ``E_x`` and ``E_y``: the component of ``x + y``."""
    x, y = _require_members(K, ("x", x), ("y", y))
    s = add(x, y)
    return ComponentWitness(signature(K, s), s)


def minimal_face(K: MixedCone, x: Sequence) -> MixedCone:
    """``F_K(x)``: ``K`` with the rows tight at ``x`` turned into equalities.

    The original rows keep their indices; the opposite rows are appended.
    """
    (x,) = _require_members(K, ("x", x))
    tight = [K.nonstrict[i] for i in _tight(K, x)]
    return MixedCone.make(K.dim, list(K.nonstrict) + [neg(a) for a in tight], K.strict)


def implicit_rows(K: MixedCone) -> set:
    """Non-strict rows vanishing on all of ``K`` (``K`` assumed nonempty)."""
    rows = list(K.nonstrict) + list(K.strict)
    _, imp = relint_point(rows, K.dim)
    return {i for i in imp if i < len(K.nonstrict)}


def icr_member(K: Cone, x: Sequence) -> bool:
    """``x`` lies in the intrinsic core of ``K``."""
    (x,) = _require_members(K, ("x", x))
    if isinstance(K, MixedCone):
        return set(_tight(K, x)) <= implicit_rows(K)
    g = enumerate_components(K)
    return g.greatest is not None and g.nodes[g.greatest].signature == signature(K, x)


@dataclass
class SemilatticeGraph:
    """Open components with the covering relation and the join table.

    ``edges`` holds ``(lower, upper)`` index pairs; ``join[(i, j)]`` is defined
    for every ordered pair.  ``greatest`` is the index of the greatest
    component (the intrinsic core) or ``None``.
    """

    nodes: list
    edges: list = field(default_factory=list)
    join: dict = field(default_factory=dict)
    greatest: int | None = None

    @property
    def icr_nonempty(self) -> bool:
        return self.greatest is not None

    def index(self, sig: Signature) -> int:
        for i, n in enumerate(self.nodes):
            if n.signature == sig:
                return i
        raise KeyError(sig)

    def below(self, i: int, j: int) -> bool:
        return self.nodes[i].signature.below(self.nodes[j].signature)

    def to_dict(self) -> dict:
        return {
            "nodes": [
                {"id": i, "signature": n.signature.label(),
                 "witness": [format_q(a) for a in n.witness]}
                for i, n in enumerate(self.nodes)
            ],
            "edges": [list(e) for e in self.edges],
            "join": [[i, j, k] for (i, j), k in sorted(self.join.items()) if i <= j],
            "greatest": self.greatest,
            "icr_nonempty": self.icr_nonempty,
        }

    def to_dot(self) -> str:
        lines = ["digraph components {", "  rankdir=BT;"]
        for i, n in enumerate(self.nodes):
            attrs = f'label="{n.signature.label()}"'
            if i == self.greatest:
                attrs += ", shape=doublecircle"
            lines.append(f"  n{i} [{attrs}];")
        for lo, hi in self.edges:
            lines.append(f"  n{lo} -> n{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _mixed_components(K: MixedCone, cap: int):
    m = len(K.nonstrict)
    base = implicit_rows(K)
    free = [i for i in range(m) if i not in base]
    if 2 ** len(free) > cap:
        raise CandidateBlowup(f"2^{len(free)} candidate tight sets exceed the cap {cap}")
    found = []
    for size in range(len(free) + 1):
        for extra in itertools.combinations(free, size):
            T = sorted(base.union(extra))
            Tset = set(T)
            eq = [K.nonstrict[i] for i in T]
            strict = [K.nonstrict[i] for i in range(m) if i not in Tset] + list(K.strict)
            P = MixedCone.make(K.dim, eq + [neg(a) for a in eq], strict)
            w = feasible_mixed(P.system)
            if w is not None:
                found.append(ComponentWitness(Signature("tight", tuple(T)), w))
    return found


def enumerate_components(K: Cone, cap: int = PIECE_CAP) -> SemilatticeGraph:
    """All open components, found by exhaustive candidate signatures.

    Nodes come greatest-first in a canonical order, so the graph does not
    depend on search order.  Raises :class:`CandidateBlowup` past ``cap``
    candidates.  Results are memoised; treat the returned graph as read-only.
    """
    return _enumerate(K, cap)


@functools.lru_cache(maxsize=256)
def _enumerate(K: Cone, cap: int) -> SemilatticeGraph:
    if isinstance(K, MixedCone):
        if feasible_mixed(K.system) is None:
            raise EmptyCone("no components in an empty cone")
        nodes = _mixed_components(K, cap)
    else:
        nodes = [ComponentWitness(Signature("levels", levels), w)
                 for levels, _, w in nonempty_pieces(K, cap)]
        if not nodes:
            raise EmptyCone("no components in an empty cone")
    nodes.sort(key=lambda n: n.signature.sort_key())
    g = SemilatticeGraph(nodes)
    n = len(nodes)
    le = [[nodes[i].signature.below(nodes[j].signature) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j or not le[i][j]:
                continue
            if not any(k not in (i, j) and le[i][k] and le[k][j] for k in range(n)):
                g.edges.append((i, j))
    for i in range(n):
        for j in range(i, n):
            s = add(nodes[i].witness, nodes[j].witness)
            k = g.index(signature(K, s))
            g.join[(i, j)] = g.join[(j, i)] = k
    for j in range(n):
        if all(le[i][j] for i in range(n)):
            g.greatest = j
    return g


def is_algebraic_open(H: LexHalfspace) -> bool:
    """A lex halfspace is algebraic open iff it has a single open component."""
    return len(enumerate_components(H).nodes) == 1

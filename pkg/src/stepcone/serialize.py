"""JSON forms of rationals, cones, corteges, certificates and sparse vectors.

Rationals travel as strings (``"3"``, ``"-2/5"``) so no binary float ever
enters; plain JSON integers are accepted on input, floats are rejected.
Serialising a parsed canonical document reproduces it exactly; mixed-cone
rows are canonical when they are coprime integer vectors.
"""

from __future__ import annotations

import json
import os
from typing import Any

from .cones import GT, LexHalfspace, MixedCone, StepSystemCone
from .errors import ConeError
from .exact_arith import Q, format_q
from .infdim import PLUS_INF, FinSuppVector
from .separation import SeparationCertificate
from .step_linear import Cortege, StepLinearFunction


class ParseError(ConeError, ValueError):
    code = "ParseError"


def parse_q(value):
    if isinstance(value, float):
        raise ParseError(f"floating-point number {value!r}; pass rationals as strings")
    try:
        return Q(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc)) from None


def parse_vector(values) -> tuple:
    if not isinstance(values, list):
        raise ParseError(f"expected a list of rationals, got {values!r}")
    return tuple(parse_q(v) for v in values)


def dump_vector(v) -> list:
    return [format_q(a) for a in v]


def _rows(doc, key, dim=None):
    rows = [parse_vector(r) for r in doc.get(key, [])]
    if dim is not None and any(len(r) != dim for r in rows):
        raise ParseError(f"rows of '{key}' must have length {dim}")
    return rows


def cortege_from_json(doc: dict) -> Cortege:
    rows = _rows(doc, "cortege", doc.get("dim"))
    if not rows:
        raise ParseError("empty cortege")
    return Cortege(rows)


def cortege_to_json(c: Cortege) -> dict:
    return {"dim": c.dim, "cortege": [dump_vector(r) for r in c.rows()]}


def cone_from_json(doc: dict):
    if not isinstance(doc, dict) or "type" not in doc:
        raise ParseError("a cone document needs a 'type'")
    kind = doc["type"]
    if kind == "mixed":
        if "dim" not in doc:
            raise ParseError("mixed cone needs 'dim'")
        dim = int(doc["dim"])
        return MixedCone.make(dim, _rows(doc, "nonstrict", dim), _rows(doc, "strict", dim))
    if kind == "lex":
        rel = doc.get("relation", GT)
        return LexHalfspace(StepLinearFunction(cortege_from_json(doc)), rel)
    if kind == "system":
        cons = []
        for c in doc.get("constraints", []):
            cons.append((StepLinearFunction(cortege_from_json(c)), c.get("relation", GT)))
        return StepSystemCone(tuple(cons))
    raise ParseError(f"unknown cone type {kind!r}")


def cone_to_json(K) -> dict:
    if isinstance(K, MixedCone):
        return {"type": "mixed", "dim": K.dim,
                "nonstrict": [dump_vector(r) for r in K.nonstrict],
                "strict": [dump_vector(r) for r in K.strict]}
    if isinstance(K, LexHalfspace):
        return {"type": "lex", "relation": K.relation,
                "cortege": [dump_vector(r) for r in K.u.cortege.rows()]}
    return {"type": "system", "constraints": [
        {"relation": rel, "cortege": [dump_vector(r) for r in u.cortege.rows()]}
        for u, rel in K.constraints]}


def certificate_to_json(cert: SeparationCertificate) -> dict:
    return {"cortege": [dump_vector(r) for r in cert.cortege.rows()],
            "verified": cert.verified, "k1": cert.k1_side, "k2": cert.k2_side}


def certificate_from_json(doc: dict) -> SeparationCertificate:
    return SeparationCertificate(Cortege(_rows(doc, "cortege")), bool(doc.get("verified", False)),
                                 doc.get("k1", "gt0"), doc.get("k2", "le0"))


def finsupp_from_json(doc: dict) -> FinSuppVector:
    coords = {}
    for k, v in doc.get("coords", {}).items():
        if k == "+inf":
            key = PLUS_INF
        else:
            try:
                key = int(k)
            except ValueError:
                raise ParseError(f"bad index {k!r}") from None
        coords[key] = parse_q(v)
    return FinSuppVector(coords)


def finsupp_to_json(x: FinSuppVector) -> dict:
    return {"coords": {("+inf" if k is PLUS_INF else str(k)): format_q(v)
                       for k, v in x.coords.items()}}


def load_json(arg: str) -> Any:
    """Parse ``arg`` as a path to a JSON file, or failing that as inline JSON."""
    try:
        if os.path.exists(arg):
            with open(arg) as fh:
                return json.load(fh)
        return json.loads(arg)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read JSON from {arg!r}: {exc}") from None

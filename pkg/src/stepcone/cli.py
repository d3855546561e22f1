"""Command-line front end.

Every command prints one JSON document (or DOT for ``components --dot``).
Exit status: 0 on success, 1 on a domain error (``NotMember``,
``NotDisjoint``, ...), 2 when the input cannot be parsed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import cones, infdim, separation, structure
from .errors import ConeError
from .serialize import (ParseError, certificate_to_json, cone_from_json,
                        cone_to_json, cortege_to_json, dump_vector,
                        finsupp_from_json, finsupp_to_json, load_json,
                        parse_vector)


def _cone(arg):
    return cone_from_json(load_json(arg))


def _point(arg):
    if arg is None:
        raise ParseError("a point is required")
    return parse_vector(load_json(arg))


def _subspace(S):
    return [dump_vector(b) for b in S.basis]


def cmd_member(a):
    return {"member": cones.member(_cone(a.cone), _point(a.point))}


def cmd_dominates(a):
    K = _cone(a.cone)
    return {"dominates": structure.dominates(K, _point(a.y), _point(a.x))}


def cmd_signature(a):
    K = _cone(a.cone)
    s = structure.signature(K, _point(a.point))
    return {"signature": s.label(), "kind": s.kind,
            "key": [None if k is None else k for k in s.key]}


def cmd_components(a):
    g = structure.enumerate_components(_cone(a.cone), a.cap)
    if a.format == "dot":
        return g.to_dot()
    return g.to_dict()


def cmd_icr(a):
    return {"icr": structure.icr_member(_cone(a.cone), _point(a.point))}


def cmd_face(a):
    K = _cone(a.cone)
    if not isinstance(K, cones.MixedCone):
        raise ParseError("face expects a mixed cone")
    return {"face": cone_to_json(structure.minimal_face(K, _point(a.point)))}


def cmd_halfspace_components(a):
    H = _cone(a.cone)
    if not isinstance(H, cones.LexHalfspace):
        raise ParseError("halfspace-components expects a lex cone")
    st = cones.halfspace_components(H)
    return {
        "components": [
            {"level": c.level, "cone": cone_to_json(c.cone),
             "lineality": _subspace(c.lineality), "hull": _subspace(c.hull)}
            for c in st.components],
        "lineality": _subspace(st.lineality),
        "algebraic_open": structure.is_algebraic_open(H),
        "linear_representation": (None if (l := separation.linear_representation(H)) is None
                                  else dump_vector(l.coeffs)),
    }


def cmd_separate(a):
    return certificate_to_json(separation.separate(_cone(a.cone), _cone(a.other)))


def cmd_extend(a):
    return cone_to_json(separation.regular_extension(_cone(a.cone)))


def cmd_certify(a):
    return cortege_to_json(separation.nonmember_certificate(_cone(a.cone), _point(a.point)))


def cmd_infdim(a):
    x = finsupp_from_json(load_json(a.point))
    out = {"point": finsupp_to_json(x)}
    if a.cone == "orthant":
        I = infdim.orthant_signature(x)
        out["member"] = I is not None
        if I is not None:
            out["support"] = sorted(I)
            out["not_dominated"] = finsupp_to_json(infdim.empty_icr_witness(infdim.ORTHANT, x))
        if a.other is not None:
            out["dominates"] = infdim.orthant_dominates(finsupp_from_json(load_json(a.other)), x)
    else:
        s = infdim.ext_signature(x)
        out["member"] = s is not None and s.tag != "LINEALITY"
        out["signature"] = None if s is None else repr(s)
        if s is not None and s.tag == "LEVEL":
            out["not_dominated"] = finsupp_to_json(infdim.empty_icr_witness(infdim.HAT_FACE, x))
        if a.other is not None:
            out["dominates"] = infdim.ext_dominates(finsupp_from_json(load_json(a.other)), x)
    return out


COMMANDS = {
    "member": (cmd_member, "membership of a point", ("point",)),
    "dominates": (cmd_dominates, "does x dominate y", ("x", "y")),
    "signature": (cmd_signature, "component label of a point", ("point",)),
    "components": (cmd_components, "open components and their semilattice", ()),
    "icr": (cmd_icr, "intrinsic-core membership", ("point",)),
    "face": (cmd_face, "minimal face containing a point", ("point",)),
    "halfspace-components": (cmd_halfspace_components, "component chain of a lex halfspace", ()),
    "separate": (cmd_separate, "step-linear separation of two cones", ("other",)),
    "extend": (cmd_extend, "regular extension to a lex halfspace", ()),
    "certify": (cmd_certify, "non-membership certificate for a point", ("point",)),
    "infdim": (cmd_infdim, "finitely supported infinite-dimensional examples", ("point",)),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "dot"), default="json")
    common.add_argument("--dot", dest="format", action="store_const", const="dot")
    common.add_argument("--cap", type=int, default=cones.PIECE_CAP,
                        help="candidate cap for component enumeration")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="stepcone", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_, _) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_, parents=[common])
        if name == "infdim":
            sp.add_argument("--cone", choices=("halfspace", "orthant"), default="halfspace")
            sp.add_argument("--point", required=True, help="FinSuppVector JSON")
            sp.add_argument("--other", help="second FinSuppVector; reports whether it is dominated")
            continue
        sp.add_argument("cone", help="cone JSON file or inline JSON")
        if name == "separate":
            sp.add_argument("other", help="second cone")
        if name in ("member", "signature", "icr", "face", "certify"):
            sp.add_argument("--point", required=True, help='e.g. "[\\"1/2\\", 3]"')
        if name == "dominates":
            sp.add_argument("--x", required=True, help="dominating point")
            sp.add_argument("--y", required=True, help="dominated point")
    return p


def _emit(result, out):
    if isinstance(result, str):
        out.write(result)
    else:
        out.write(json.dumps(result, sort_keys=True) + "\n")


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    random.seed(args.seed)  # every algorithm is deterministic; kept for reproducible extensions
    fn = COMMANDS[args.command][0]
    try:
        result = fn(args)
    except ParseError as exc:
        _emit({"error": exc.code, "detail": str(exc)}, out)
        return 2
    except ConeError as exc:
        _emit({"error": exc.code, "detail": str(exc)}, out)
        return 1
    except (KeyError, TypeError, ValueError) as exc:
        _emit({"error": "ParseError", "detail": str(exc)}, out)
        return 2
    _emit(result, out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

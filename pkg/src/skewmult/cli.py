"""Command-line front end.

    skewmult --ring "gf(3^2; mod=g^2+1; frob=1)" lclm "x - g" "x - 2*g"

Exit status is 0 on success (booleans print ``true``/``false``), 1 on a
domain error, 2 on a parse or usage error.
"""

import argparse
import json
import sys

from . import interp, multiplicity as mult, skewpoly as sp
from .errors import ParseError, SkewError
from .parsing import (
    format_seq, parse_element, parse_interp_entry, parse_point, parse_poly,
    parse_ring, parse_seq,
)


class _UsageError(Exception):
    pass


def _int(text, name, minimum=1):
    try:
        v = int(text)
    except ValueError:
        raise ParseError(0, f"integer {name}", text) from None
    if v < minimum:
        raise ParseError(0, f"{name} >= {minimum}", text)
    return v


def _pointset(ctx, texts):
    entries = []
    for t in texts:
        kind, obj, r = parse_point(ctx, t)
        if kind == "simple":
            entries.append((obj, "simple", 1, sp.SkewPoly.linear(obj)))
        elif kind == "power":
            entries.append((obj, "power", r, sp.SkewPoly.linear(obj) ** r))
        else:
            entries.append((obj.head, "sequence", obj.points, obj.poly))
    if not entries:
        raise _UsageError("at least one point is required")
    return sp.PointSet(ctx, entries)


def _validated(ctx, text):
    return parse_seq(ctx, text).validate()


def _as_seq(ctx, text):
    kind, obj, r = parse_point(ctx, text)
    if kind == "sequence":
        return obj
    return mult.MultSeq((obj,) * r)


# Each handler returns a result: str, bool, or a dict of named strings.

def cmd_divr(ctx, a):
    Q, R = sp.right_divmod(parse_poly(ctx, a.F), parse_poly(ctx, a.P))
    return {"Q": str(Q), "R": str(R)}


def cmd_divl(ctx, a):
    Q, R = sp.left_divmod(parse_poly(ctx, a.F), parse_poly(ctx, a.P))
    return {"Q": str(Q), "R": str(R)}


def cmd_eval(ctx, a):
    return str(sp.eval_point(parse_poly(ctx, a.F), parse_element(ctx, a.a)))


def cmd_evalhigh(ctx, a):
    return str(sp.eval_high(parse_poly(ctx, a.F), parse_poly(ctx, a.P)))


def cmd_gcrd(ctx, a):
    D, U, V = sp.gcrd_extended(parse_poly(ctx, a.F), parse_poly(ctx, a.G))
    if a.bezout:
        return {"D": str(D), "U": str(U), "V": str(V)}
    return str(D)


def cmd_lclm(ctx, a):
    return str(sp.lclm(parse_poly(ctx, a.F), parse_poly(ctx, a.G)))


def cmd_minpoly(ctx, a):
    return str(sp.minimal_poly(_pointset(ctx, a.points)))


def cmd_pindep(ctx, a):
    return sp.is_p_independent(_pointset(ctx, a.points))


def cmd_hasse(ctx, a):
    return str(mult.hasse_derivative(parse_poly(ctx, a.F), parse_seq(ctx, a.seq).points))


def cmd_taylor(ctx, a):
    G, ds = mult.taylor_expand(parse_poly(ctx, a.F), parse_seq(ctx, a.seq).points)
    return {"G": str(G), "D": format_seq(ds)}


def cmd_multcheck1(ctx, a):
    return mult.mult_I_check(parse_poly(ctx, a.F), parse_element(ctx, a.a), _int(a.r, "multiplicity"))


def cmd_multcheck2(ctx, a):
    return mult.mult_II_check(parse_poly(ctx, a.F), _validated(ctx, a.seq))


def cmd_seqvalidate(ctx, a):
    seq = parse_seq(ctx, a.seq)
    if a.closed_form:
        return mult.validate_multseq_specialized(seq.points)
    return mult.validate_multseq(seq.points)


def cmd_seqextend(ctx, a):
    return str(mult.extend_multseq(_validated(ctx, a.seq)))


def cmd_vandermonde(ctx, a):
    V = interp.build_vandermonde([_as_seq(ctx, t) for t in a.points], _int(a.N, "order"))
    return str(V)


def cmd_interp(ctx, a):
    seqs, values = [], []
    for text in a.entries:
        seq, targets = parse_interp_entry(ctx, text)
        seqs.append(seq.validate())
        values.append(list(targets))
    return str(interp.hermite_interpolate(seqs, values))


def cmd_zeros(ctx, a):
    return format_seq(sp.zero_set_brute(parse_poly(ctx, a.F)))


def cmd_classpoly(ctx, a):
    r = _int(a.r, "power") if a.r is not None else 1
    return str(mult.conjclass_minpoly_pow(parse_element(ctx, a.a), r))


def cmd_classcheck(ctx, a):
    return mult.mult_on_class_check(parse_poly(ctx, a.F), parse_element(ctx, a.a), _int(a.r, "power"))


def cmd_factor(ctx, a):
    omega = _pointset(ctx, a.points)
    if any(kind == "sequence" for _, kind, _, _ in omega.entries):
        raise _UsageError("factor takes simple points or powers a@r")
    return format_seq(mult.factor_p_independent(omega))


_COMMANDS = {
    "divr": (cmd_divr, "right division F = Q*P + R", [("F",), ("P",)]),
    "divl": (cmd_divl, "left division F = P*Q + R", [("F",), ("P",)]),
    "eval": (cmd_eval, "right evaluation F(a)", [("F",), ("a",)]),
    "evalhigh": (cmd_evalhigh, "remainder of F by P", [("F",), ("P",)]),
    "gcrd": (cmd_gcrd, "monic greatest common right divisor", [("F",), ("G",)]),
    "lclm": (cmd_lclm, "monic least left common multiple", [("F",), ("G",)]),
    "minpoly": (cmd_minpoly, "minimal polynomial of a point set", [("points", "+")]),
    "pindep": (cmd_pindep, "P-independence of a point set", [("points", "+")]),
    "hasse": (cmd_hasse, "Hasse derivative of F at a sequence", [("F",), ("seq",)]),
    "taylor": (cmd_taylor, "Taylor expansion of F along a sequence", [("F",), ("seq",)]),
    "multcheck1": (cmd_multcheck1, "(x - a)^r right-divides F", [("F",), ("a",), ("r",)]),
    "multcheck2": (cmd_multcheck2, "P_a right-divides F for a multiplicity sequence",
                   [("F",), ("seq",)]),
    "seqvalidate": (cmd_seqvalidate, "is the sequence a multiplicity sequence", [("seq",)]),
    "seqextend": (cmd_seqextend, "extend a multiplicity sequence by one point", [("seq",)]),
    "vandermonde": (cmd_vandermonde, "confluent Vandermonde matrix of order N",
                    [("N",), ("points", "+")]),
    "interp": (cmd_interp, "Hermite interpolation; entries 'point; [seq]; t1, t2'",
               [("entries", "+")]),
    "zeros": (cmd_zeros, "all right zeros by enumeration", [("F",)]),
    "classpoly": (cmd_classpoly, "minimal polynomial of the conjugacy class of a (to power r)",
                  [("a",), ("r", "?")]),
    "classcheck": (cmd_classcheck, "F_C(a)^r right-divides F", [("F",), ("a",), ("r",)]),
    "factor": (cmd_factor, "linear factorization of F_Omega for a P-independent set",
               [("points", "+")]),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="skewmult",
        description="Skew polynomials, multiplicities and Hermite interpolation.")
    parser.add_argument("--ring", required=True,
                        help='ring spec: "gf(p^m; mod=...; frob=s)", quat, gaussian, "ratfun(p; c=...)"')
    parser.add_argument("--output", choices=("plain", "jsonl"), default="plain")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text, args) in _COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        for spec in args:
            if len(spec) == 2:
                p.add_argument(spec[0], nargs=spec[1])
            else:
                p.add_argument(spec[0])
        if name == "gcrd":
            p.add_argument("--bezout", action="store_true", help="also print U, V with D = U*F + V*G")
        if name == "seqvalidate":
            p.add_argument("--closed-form", action="store_true",
                           help="use the ring-specific closed-form criterion")
    return parser


def _render(op, result, mode):
    if mode == "jsonl":
        return json.dumps({"op": op, "result": result}, ensure_ascii=False)
    if isinstance(result, bool):
        return "true" if result else "false"
    if isinstance(result, dict):
        return "\n".join(f"{k} = {v}" for k, v in result.items())
    return result


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        ctx = parse_ring(args.ring)
        result = _COMMANDS[args.command][0](ctx, args)
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except SkewError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 1
    print(_render(args.command, result, args.output), file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

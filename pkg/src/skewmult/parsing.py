"""Text formats: ring specs, element and polynomial literals, sequences.

Grammar (whitespace-insensitive)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/')? factor)*        # juxtaposition multiplies
    factor := atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')' | '-' factor

Names are the ring generators (``g``, ``i``/``j``/``k``, ``z``) and ``x``.
Expressions are evaluated in F[x; sigma, delta], so ``x*g`` means
``sigma(g) x``. Division is only allowed by constants and is on the right.
"""

import re

from .errors import InversionOfZero, ParseError
from .multiplicity import MultSeq
from .rings import FiniteField, GaussianRationals, Quaternions, RationalFunctions
from .skewpoly import SkewPoly, format_poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(.))")


def tokenize(text):
    """List of (kind, value, offset); kinds are num, name, op, end."""
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            out.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    """Recursive descent producing a small tuple AST."""

    def __init__(self, text, names):
        self.text = text
        self.names = names
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def error(self, expected, tok=None):
        tok = tok or self.peek()
        raise ParseError(tok[2], expected, self.text)

    def take(self, op):
        kind, val, _ = self.peek()
        if kind == "op" and val == op:
            self.i += 1
            return True
        return False

    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            self.error("operator or end of input")
        return node

    def expr(self):
        node = ("neg", self.term()) if self.take("-") else self.term()
        while True:
            if self.take("+"):
                node = ("add", node, self.term())
            elif self.take("-"):
                node = ("sub", node, self.term())
            else:
                return node

    def _starts_atom(self):
        kind, val, _ = self.peek()
        return kind in ("num", "name") or (kind == "op" and val == "(")

    def term(self):
        node = self.factor()
        while True:
            if self.take("*"):
                node = ("mul", node, self.factor())
            elif self.take("/"):
                node = ("div", node, self.factor())
            elif self._starts_atom():
                node = ("mul", node, self.factor())
            else:
                return node

    def factor(self):
        node = self.atom()
        if self.take("^"):
            neg = self.take("-")
            kind, val, _ = self.peek()
            if kind != "num":
                self.error("integer exponent")
            self.i += 1
            node = ("pow", node, -val if neg else val, self.toks[self.i - 1][2])
        return node

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.i += 1
            return ("num", val)
        if kind == "name":
            if val not in self.names:
                self.error("one of " + ", ".join(sorted(self.names)))
            self.i += 1
            return ("name", val)
        if self.take("("):
            node = self.expr()
            if not self.take(")"):
                self.error("')'")
            return node
        if self.take("-"):
            return ("neg", self.factor())
        self.error("number, name or '('")


def _evaluate(node, ctx, env, text):
    """Evaluate an AST to a SkewPoly over ctx."""
    op = node[0]
    if op == "num":
        return SkewPoly(ctx, [ctx.from_rational(node[1])])
    if op == "name":
        return env[node[1]]
    if op == "neg":
        return -_evaluate(node[1], ctx, env, text)
    if op == "pow":
        base = _evaluate(node[1], ctx, env, text)
        e = node[2]
        if e >= 0:
            return base ** e
        if base.degree != 0:
            raise ParseError(node[3], "nonnegative exponent for a non-constant base", text)
        return SkewPoly(ctx, [base[0] ** e])
    left = _evaluate(node[1], ctx, env, text)
    right = _evaluate(node[2], ctx, env, text)
    if op == "add":
        return left + right
    if op == "sub":
        return left - right
    if op == "mul":
        return left * right
    if op == "div":
        if right.degree != 0:
            raise ParseError(len(text), "division by a nonzero constant", text)
        return left * SkewPoly(ctx, [ctx.inv(right[0])])
    raise AssertionError(op)


def _parse_in(ctx, text, allow_x):
    env = {name: SkewPoly(ctx, [e]) for name, e in ctx.generators().items()}
    if allow_x:
        env["x"] = SkewPoly.x(ctx)
    node = _Parser(text, env).parse()
    try:
        return _evaluate(node, ctx, env, text)
    except InversionOfZero as exc:
        raise ParseError(0, f"a well-defined value ({exc})", text) from exc


def parse_poly(ctx, text):
    """Skew polynomial literal such as ``(2+g)*x^3 + x + 1``."""
    return _parse_in(ctx, text, allow_x=True)


def parse_element(ctx, text):
    """Element literal such as ``2+g``, ``1-2i+3/2*j``, ``(z^2+1)/z``."""
    P = _parse_in(ctx, text, allow_x=False)
    return P[0]


def _split_top(text, sep, offset=0):
    """Split on sep outside brackets/parentheses; yields (piece, start offset)."""
    depth = 0
    start = 0
    out = []
    for n, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append((text[start:n], offset + start))
            start = n + 1
    out.append((text[start:], offset + start))
    return out


def _sub_parse(fn, ctx, piece, offset, full):
    try:
        return fn(ctx, piece)
    except ParseError as exc:
        raise ParseError(offset + exc.position, exc.expected, full) from None


def parse_element_list(ctx, text):
    """``[a1; a2; ...]`` as a tuple of elements (``[]`` is empty)."""
    body = text.strip()
    lead = len(text) - len(text.lstrip())
    if not body.startswith("["):
        raise ParseError(lead, "'['", text)
    if not body.endswith("]"):
        raise ParseError(len(text.rstrip()), "']'", text)
    inner = body[1:-1]
    if not inner.strip():
        return ()
    return tuple(_sub_parse(parse_element, ctx, piece, lead + 1 + off, text)
                 for piece, off in _split_top(inner, ";"))


def parse_seq(ctx, text):
    """Sequence literal ``[a1; a2; ...]`` as an (unvalidated) MultSeq."""
    pts = parse_element_list(ctx, text)
    if not pts:
        raise ParseError(text.find("]"), "at least one element", text)
    return MultSeq(pts)


def parse_point(ctx, text):
    """A point-set entry: ``a`` (simple), ``a@r`` (power), or ``[a1; ...]``.

    Returns (kind, element or MultSeq, r).
    """
    body = text.strip()
    if body.startswith("["):
        return "sequence", parse_seq(ctx, text), None
    if "@" in text:
        at = text.rindex("@")
        a = _sub_parse(parse_element, ctx, text[:at], 0, text)
        r_text = text[at + 1:].strip()
        if not r_text.isdigit() or int(r_text) < 1:
            raise ParseError(at + 1, "positive integer multiplicity", text)
        return "power", a, int(r_text)
    return "simple", parse_element(ctx, text), 1


def parse_interp_entry(ctx, text):
    """One interpolation node: ``point; [sequence]; t1, t2`` or two-part forms.

    ``[a1; a2]; t1, t2`` and ``a; t`` are accepted; the head of the sequence
    must equal the point when both are given. Returns (MultSeq, targets).
    """
    parts = _split_top(text, ";")
    if len(parts) == 3:
        (p, po), (s, so), (t, to) = parts
        a = _sub_parse(parse_element, ctx, p, po, text)
        seq = _sub_parse(parse_seq, ctx, s, so, text)
        if seq.head != a:
            raise ParseError(so, f"a sequence starting at {a}", text)
    elif len(parts) == 2:
        (s, so), (t, to) = parts
        if s.strip().startswith("["):
            seq = _sub_parse(parse_seq, ctx, s, so, text)
        else:
            seq = MultSeq((_sub_parse(parse_element, ctx, s, so, text),))
    else:
        raise ParseError(len(text), "'point; [sequence]; targets'", text)
    targets = tuple(_sub_parse(parse_element, ctx, piece, to + off, text)
                    for piece, off in _split_top(t, ","))
    if len(targets) != len(seq):
        raise ParseError(to, f"{len(seq)} comma-separated targets", text)
    return seq, targets


# -- ring specs ----------------------------------------------------------------------

_GF = re.compile(r"gf\((\d+)(?:\^(\d+))?((?:;[^;]*)*)\)$")
_RATFUN = re.compile(r"ratfun\((\d+)((?:;.*)?)\)$")


def _fp_poly(text, p, var, full, offset):
    """Parse a polynomial over F_p in ``var``; returns low-to-high coefficients."""
    def fold(node):
        op = node[0]
        if op == "num":
            return [node[1] % p]
        if op == "name":
            return [0, 1]
        if op == "neg":
            return [-c % p for c in fold(node[1])]
        if op == "pow":
            if node[2] < 0:
                raise ParseError(offset + node[3], "nonnegative exponent", full)
            out = [1]
            base = fold(node[1])
            for _ in range(node[2]):
                out = mul(out, base)
            return out
        a, b = fold(node[1]), fold(node[2])
        if op == "add":
            return add(a, b)
        if op == "sub":
            return add(a, [-c % p for c in b])
        if op == "mul":
            return mul(a, b)
        raise ParseError(offset, f"polynomial in {var} without division", full)

    def add(a, b):
        n = max(len(a), len(b))
        a, b = a + [0] * (n - len(a)), b + [0] * (n - len(b))
        return [(u + v) % p for u, v in zip(a, b)]

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            for j, v in enumerate(b):
                out[i + j] = (out[i + j] + u * v) % p
        return out

    try:
        node = _Parser(text, {var: None}).parse()
    except ParseError as exc:
        raise ParseError(offset + exc.position, exc.expected, full) from None
    coeffs = fold(node)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def parse_ring(text):
    """Ring spec: ``gf(p^m; mod=...; frob=s)``, ``quat``, ``gaussian``, ``ratfun(p; c=...)``."""
    compact = "".join(text.split())
    # map offsets in the compact string back to the original text
    where = [n for n, ch in enumerate(text) if not ch.isspace()] + [len(text)]
    low = compact.lower()
    if low in ("quat", "quaternion", "quaternions"):
        return Quaternions()
    if low in ("gaussian", "gauss"):
        return GaussianRationals()
    m = _GF.match(compact)
    if m:
        p, deg = int(m.group(1)), int(m.group(2) or 1)
        opts = {}
        opt_text = m.group(3)
        base = m.start(3)
        for piece, off in _split_top(opt_text, ";", base)[1:]:
            key, eq, val = piece.partition("=")
            if key not in ("mod", "frob") or not eq:
                raise ParseError(where[off], "'mod=' or 'frob='", text)
            opts[key] = (val, off + len(key) + 1)
        try:
            modulus = None
            if "mod" in opts:
                val, off = opts["mod"]
                modulus = _fp_poly(val, p, "g", text, where[off])
            frob = 1
            if "frob" in opts:
                val, off = opts["frob"]
                if not val.isdigit():
                    raise ParseError(where[off], "nonnegative integer", text)
                frob = int(val)
            return FiniteField(p, deg, modulus=modulus, frob=frob)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(where[m.start(1)], f"a valid field ({exc})", text) from None
    m = _RATFUN.match(compact)
    if m:
        p = int(m.group(1))
        try:
            R = RationalFunctions(p)
        except ValueError as exc:
            raise ParseError(where[m.start(1)], f"a prime ({exc})", text) from None
        rest = m.group(2)
        if not rest:
            return R
        key, eq, val = rest[1:].partition("=")
        if key != "c" or not eq:
            raise ParseError(where[m.start(2) + 1], "'c='", text)
        off = m.start(2) + 3
        try:
            c = parse_element(R, val)
        except ParseError as exc:
            raise ParseError(where[off + exc.position], exc.expected, text) from None
        if not c:
            raise ParseError(where[off], "nonzero derivation scale", text)
        return RationalFunctions(p, c)
    raise ParseError(where[0] if compact else 0,
                     "gf(p^m; ...), quat, gaussian or ratfun(p; ...)", text)


# -- printing -------------------------------------------------------------------------

def format_element(a):
    return a.ctx.format_element(a)


def format_seq(points):
    return "[" + "; ".join(str(a) for a in points) + "]"


__all__ = [
    "tokenize", "parse_poly", "parse_element", "parse_element_list", "parse_seq",
    "parse_point", "parse_interp_entry", "parse_ring", "format_poly",
    "format_element", "format_seq",
]

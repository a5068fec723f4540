"""Brute-force reference implementations used only by the tests.

Nothing here imports the polynomial layer: polynomials are plain dicts
{degree: coefficient} and every result comes from the commutation rule or
from enumeration, so agreement with the library is meaningful.
"""


def _trim(d, ctx):
    return {k: v for k, v in d.items() if v != ctx.zero}


def _add_into(acc, k, v, ctx):
    acc[k] = ctx.add(acc.get(k, ctx.zero), v)


def x_pow_times(ctx, i, c):
    """x^i * c as a dict, by unfolding x c = sigma(c) x + delta(c) one x at a time."""
    cur = {0: c}
    for _ in range(i):
        nxt = {}
        for k, v in cur.items():
            _add_into(nxt, k + 1, ctx.sigma(v), ctx)
            _add_into(nxt, k, ctx.delta(v), ctx)
        cur = _trim(nxt, ctx)
    return cur


def naive_mul(ctx, F, G):
    """Product of dict polynomials: sum_i sum_j F_i (x^i G_j) x^j."""
    out = {}
    for i, f in F.items():
        for j, g in G.items():
            for k, v in x_pow_times(ctx, i, g).items():
                _add_into(out, k + j, ctx.mul(f, v), ctx)
    return _trim(out, ctx)


def naive_sub(ctx, F, G):
    out = dict(F)
    for k, v in G.items():
        _add_into(out, k, ctx.neg(v), ctx)
    return _trim(out, ctx)


def naive_rem(ctx, F, P):
    """Remainder of right division by a monic dict polynomial P."""
    d = max(P)
    R = _trim(dict(F), ctx)
    while R and max(R) >= d:
        top = max(R)
        term = {top - d: R[top]}
        R = naive_sub(ctx, R, naive_mul(ctx, term, P))
    return R


def naive_eval(ctx, F, a):
    """F(a) as the remainder of F by x - a."""
    R = naive_rem(ctx, F, {0: ctx.neg(a), 1: ctx.one})
    return R.get(0, ctx.zero)


def as_dict(P):
    return {i: c for i, c in enumerate(P.coeffs) if c}


def linear_product_dict(ctx, pts):
    """(x - a_r) ... (x - a_1)."""
    P = {0: ctx.one}
    for a in pts:
        P = naive_mul(ctx, {0: ctx.neg(a), 1: ctx.one}, P)
    return P


def zeros(ctx, F):
    return [b for b in ctx.elements() if naive_eval(ctx, F, b) == ctx.zero]


def is_multseq(ctx, pts):
    """a_1 is the only right zero of P_a."""
    return zeros(ctx, linear_product_dict(ctx, pts)) == [pts[0]]


def conj(ctx, a, beta):
    binv = ctx.inv(beta)
    return ctx.mul(ctx.add(ctx.mul(ctx.sigma(beta), a), ctx.delta(beta)), binv)


def conj_class(ctx, a):
    found = {conj(ctx, a, b) for b in ctx.elements() if b}
    return [b for b in ctx.elements() if b in found]


def centralizer_size(ctx, a):
    return sum(1 for b in ctx.elements()
               if ctx.add(ctx.mul(ctx.sigma(b), a), ctx.delta(b)) == ctx.mul(a, b))


def vspace_size(ctx, a):
    """|V_a| where V_a = {sigma(b) a + delta(b) - a b}."""
    return len({ctx.sub(ctx.add(ctx.mul(ctx.sigma(b), a), ctx.delta(b)), ctx.mul(a, b))
                for b in ctx.elements()})

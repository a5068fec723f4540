"""Gaussian elimination over division rings and over coordinate fields.

Scalars come with an ``ops`` object exposing ``zero``, ``one``, ``add``,
``sub``, ``mul``, ``inv`` and ``is_zero``. A :class:`~skewmult.ring.SkewContext`
qualifies, as do :class:`~skewmult.ring.PrimeField` and ``QQ``.

Side convention: :func:`solve_left` solves ``f . M = b`` for a row vector
``f``, so unknowns multiply matrix entries from the left. Left-coefficient
skew polynomials evaluate this way, so interpolation uses it directly.
"""

from .errors import DimensionMismatch, NoSolution, NonUnique


def _ops_of(M, ops):
    if ops is not None:
        return ops
    for row in M:
        for e in row:
            if hasattr(e, "ctx"):
                return e.ctx
    raise ValueError("cannot infer scalar operations; pass ops explicitly")


def _reduce_equations(eqs, rhs, ncols, ops):
    """Row-reduce equations ``sum_t f_t eqs[c][t] = rhs[c]``.

    Each equation may only be multiplied on the right, which keeps the
    unknowns on the left. Returns (eqs, rhs, pivots) in reduced echelon form;
    ``pivots[k]`` is the unknown pivoting equation k.
    """
    zero, one = ops.zero, ops.one
    eqs = [list(e) for e in eqs]
    rhs = list(rhs)
    pivots = []
    row = 0
    for t in range(ncols):
        p = next((c for c in range(row, len(eqs)) if not ops.is_zero(eqs[c][t])), None)
        if p is None:
            continue
        eqs[row], eqs[p] = eqs[p], eqs[row]
        rhs[row], rhs[p] = rhs[p], rhs[row]
        s = ops.inv(eqs[row][t])
        eqs[row] = [ops.mul(e, s) for e in eqs[row]]
        rhs[row] = ops.mul(rhs[row], s)
        eqs[row][t] = one
        for c in range(len(eqs)):
            if c == row:
                continue
            lam = eqs[c][t]
            if ops.is_zero(lam):
                continue
            eqs[c] = [ops.sub(u, ops.mul(v, lam)) for u, v in zip(eqs[c], eqs[row])]
            rhs[c] = ops.sub(rhs[c], ops.mul(rhs[row], lam))
            eqs[c][t] = zero
        pivots.append(t)
        row += 1
        if row == len(eqs):
            break
    return eqs, rhs, pivots


def solve_left(M, b, ops=None):
    """Unique row vector f with f . M = b.

    ``M`` is an N x C list of rows, ``b`` has length C. Raises
    :class:`NoSolution` (``column`` = an inconsistent equation, i.e. a
    column of M) or :class:`NonUnique` (``column`` = a pivot-free unknown).
    """
    M = [list(r) for r in M]
    n = len(M)
    if n == 0:
        raise DimensionMismatch("empty matrix")
    ncol = len(M[0])
    if any(len(r) != ncol for r in M):
        raise DimensionMismatch("ragged matrix")
    if len(b) != ncol:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {ncol}")
    ops = _ops_of(M + [list(b)], ops)
    eqs = [[M[t][c] for t in range(n)] for c in range(ncol)]
    eqs, rhs, pivots = _reduce_equations(eqs, b, n, ops)
    for c in range(len(pivots), len(eqs)):
        if not ops.is_zero(rhs[c]):
            raise NoSolution("inconsistent system", column=c)
    if len(pivots) < n:
        free = next(t for t in range(n) if t not in pivots)
        raise NonUnique("system has free unknowns", column=free)
    f = [ops.zero] * n
    for k, t in enumerate(pivots):
        f[t] = rhs[k]
    return f


def row_times_matrix(f, M, ops=None):
    """The row vector f . M."""
    ops = _ops_of([list(f)] + [list(r) for r in M], ops)
    ncol = len(M[0]) if M else 0
    out = []
    for c in range(ncol):
        acc = ops.zero
        for ft, row in zip(f, M):
            acc = ops.add(acc, ops.mul(ft, row[c]))
        out.append(acc)
    return out


# -- commutative helpers over a coordinate field ------------------------------------------

def rref(rows, ops):
    """Reduced row echelon form of a matrix over a commutative field.

    Returns (rows, pivot_columns).
    """
    ncols = len(rows[0]) if rows else 0
    # rows are equations in unknowns indexed by column; rhs unused
    eqs, _, piv = _reduce_equations(rows, [ops.zero] * len(rows), ncols, ops)
    return eqs, piv


def rank(vectors, ops):
    """Dimension of the span of the given vectors."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return len(rref(vectors, ops)[1])


def kernel(columns, ops):
    """Basis of {v : sum_j columns[j] * v_j = 0} for a matrix given by columns."""
    ncols = len(columns)
    if ncols == 0:
        return []
    nrows = len(columns[0])
    rows = [[columns[j][i] for j in range(ncols)] for i in range(nrows)]
    if nrows == 0:
        red, piv = [], []
    else:
        red, piv = rref(rows, ops)
    basis = []
    for free in range(ncols):
        if free in piv:
            continue
        v = [ops.zero] * ncols
        v[free] = ops.one
        for k, t in enumerate(piv):
            v[t] = ops.neg(red[k][free]) if hasattr(ops, "neg") else ops.sub(ops.zero, red[k][free])
        basis.append(v)
    return basis


def in_span(vectors, v, ops):
    """True iff v lies in the span of the given vectors."""
    vectors = [list(u) for u in vectors]
    return rank(vectors + [list(v)], ops) == rank(vectors, ops)

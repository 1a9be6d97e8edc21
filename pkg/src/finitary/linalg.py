"""Exact Gaussian elimination over a coefficient field.

Matrices are lists of rows of raw field values (``Fraction`` for QQ,
``int`` in ``[0, p)`` for prime fields); see :meth:`Field._reduce`.
"""


def solve(field, rows, rhs):
    """Return one solution of ``rows @ x = rhs`` (free variables set to 0), or None.

    >>> from finitary.field import QQ
    >>> solve(QQ, [[2, 1], [4, 2]], [3, 6])
    [Fraction(3, 2), Fraction(0, 1)]
    >>> solve(QQ, [[1, 1], [1, 1]], [0, 1]) is None
    True
    """
    red, inv = field._reduce, field._inv
    m = [[red(v) for v in row] + [red(b)] for row, b in zip(rows, rhs)]
    nrows = len(m)
    ncols = len(m[0]) - 1 if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        f = inv(m[r][c])
        m[r] = [red(v * f) for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                g = m[i][c]
                m[i] = [red(a - g * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    if any(row[-1] for row in m[r:]):
        return None
    x = [red(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][-1]
    return x

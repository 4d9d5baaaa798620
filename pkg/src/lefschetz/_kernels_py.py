"""Pure-Python integer row reduction; the reference the compiled kernel must match."""

from math import gcd


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def rref(rows, ncols):
    """Fraction-free reduced row echelon form of an integer matrix.

    Returns ``(reduced, pivots)``: the non-zero reduced rows, each made
    primitive with a positive pivot, and the pivot column of each row.
    Every pivot column is zero outside its own row, so over the rationals
    ``reduced[i][c] / reduced[i][pivots[i]]`` is the usual RREF entry.
    Pivots are taken in column order, first non-zero row wins.
    """
    a = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    n = len(a)
    for c in range(ncols):
        if r == n:
            break
        p = r
        while p < n and not a[p][c]:
            p += 1
        if p == n:
            continue
        a[r], a[p] = a[p], a[r]
        pr = a[r]
        if pr[c] < 0:
            pr = [-x for x in pr]
        pr = _primitive(pr)
        a[r] = pr
        pv = pr[c]
        for i in range(n):
            x = a[i][c]
            if i != r and x:
                a[i] = _primitive([pv * y - x * z for y, z in zip(a[i], pr)])
        pivots.append(c)
        r += 1
    return a[:r], pivots

"""Exact linear algebra over the rationals on top of an integer row-reduction kernel.

The kernel is compiled (Cython, int64 with overflow detection) when the
extension is built, and pure Python otherwise.  Set ``LEFSCHETZ_BACKEND`` to
``python`` to force the fallback.  Overflow in the compiled kernel silently
retries in Python, so results never depend on the backend.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import lcm
from typing import Sequence

from . import _kernels_py

try:
    from . import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

if os.environ.get("LEFSCHETZ_BACKEND", "").lower() == "python":
    _kernels_c = None

BACKEND = "compiled" if _kernels_c is not None else "python"


def rref(rows: Sequence[Sequence[int]], ncols: int, backend: str | None = None):
    """Integer RREF, see ``_kernels_py.rref`` for the contract."""
    use = backend or BACKEND
    if use == "compiled":
        if _kernels_c is None:
            raise RuntimeError("compiled kernel is not available")
        try:
            return _kernels_c.rref(rows, ncols)
        except OverflowError:
            pass
    return _kernels_py.rref(rows, ncols)


def integer_row(row: Sequence) -> list[int]:
    """Scale a rational row to a primitive-denominator integer row (same span)."""
    if all(type(x) is int for x in row):
        return list(row)
    dens = [x.denominator for x in row if isinstance(x, Fraction) and x.denominator != 1]
    if not dens:
        return [int(x) for x in row]
    m = lcm(*dens)
    return [int(x * m) for x in row]


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref([integer_row(r) for r in rows], ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[int]]:
    """Integer basis of the right kernel, one vector per free column (ascending)."""
    red, piv = rref([integer_row(r) for r in rows], ncols)
    pivset = set(piv)
    basis = []
    if red:
        scale = lcm(*(red[i][c] for i, c in enumerate(piv)))
    else:
        scale = 1
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = scale
        for i, c in enumerate(piv):
            v[c] = -red[i][f] * (scale // red[i][c])
        basis.append(v)
    return basis


def independent_columns(columns: Sequence[Sequence[int]], nrows: int) -> list[int]:
    """Indices of the greedy (leftmost) maximal independent subset of ``columns``."""
    if not columns:
        return []
    rows = [[col[i] for col in columns] for i in range(nrows)]
    return rref(rows, len(columns))[1]


def solve_in_basis(
    basis: Sequence[Sequence],
    targets: Sequence[Sequence],
    nrows: int,
) -> list[list[Fraction]] | None:
    """Coordinates of each target column in the independent ``basis`` columns.

    Returns ``None`` if some target is outside the span.
    """
    k = len(basis)
    cols = list(basis) + list(targets)
    if not cols:
        return []
    rows = [integer_row([col[i] for col in cols]) for i in range(nrows)]
    red, piv = rref(rows, len(cols))
    if piv[:k] != list(range(k)) and k:
        raise ValueError("basis columns are not independent")
    if len(piv) > k:
        return None
    out = []
    for t in range(len(targets)):
        c = k + t
        out.append([Fraction(red[i][c], red[i][i]) for i in range(k)])
    return out

"""Exact dense linear algebra over a field.

Matrices are lists of rows of canonical field scalars.  Over F_p with a
modulus small enough that products cannot overflow int64, elimination is
vectorized with numpy; otherwise a generic pure-Python path is used (the
two produce identical results: the reduced row echelon form is canonical).
"""

from __future__ import annotations

import numpy as np


def _np_ok(field, width: int) -> bool:
    m = field.modulus
    return m is not None and (m - 1) * (m - 1) * (width + 1) < 2**63


def _rref_np(rows, p):
    a = np.array(rows, dtype=np.int64) % p
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return [[int(x) for x in row] for row in a[:r]], pivots


def _rref_generic(rows, field):
    a = [list(row) for row in rows]
    if not a:
        return [], []
    m, n = len(a), len(a[0])
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        pr = next((i for i in range(r, m) if not field.is_zero(a[i][c])), None)
        if pr is None:
            continue
        if pr != r:
            a[r], a[pr] = a[pr], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(x, inv) for x in a[r]]
        for i in range(m):
            if i != r and not field.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rref(rows, field):
    """Reduced row echelon form: (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    if _np_ok(field, len(rows[0])):
        return _rref_np(rows, field.modulus)
    return _rref_generic(rows, field)


def rank(rows, field) -> int:
    return len(rref(rows, field)[0])


def right_nullspace(rows, field):
    """Canonical basis (RREF) of {x : A @ x = 0} for the matrix A."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    n = len(rows[0])
    red, pivots = rref(rows, field)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(red[i][f])
        basis.append(v)
    red_basis, _ = rref(basis, field)
    return red_basis


def reduce_against(vec, red_rows, pivots, field):
    """Residual of vec after elimination by RREF rows; zero iff in row space."""
    v = list(vec)
    for row, pc in zip(red_rows, pivots):
        c = v[pc]
        if not field.is_zero(c):
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
    return v


class IncrementalBasis:
    """Grow an independent set of vectors, tracking how RREF rows combine them.

    ``express(vec)`` returns coordinates of ``vec`` in the *accepted* vectors
    (in acceptance order), or None if ``vec`` lies outside the span.
    """

    def __init__(self, field, width: int):
        self.field = field
        self.width = width
        self.rows = []        # RREF rows
        self.pivots = []
        self.transform = []   # rows[i] == sum_j transform[i][j] * accepted[j]
        self.count = 0

    def add(self, vec) -> bool:
        """Accept vec if independent of the current span."""
        F = self.field
        v = list(vec)
        t = [F.zero] * self.count + [F.one]
        for row, pc, trow in zip(self.rows, self.pivots, self.transform):
            c = v[pc]
            if not F.is_zero(c):
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
                t = [F.sub(x, F.mul(c, y)) for x, y in zip(t, trow + [F.zero])]
        lead = next((i for i, x in enumerate(v) if not F.is_zero(x)), None)
        if lead is None:
            return False
        inv = F.inv(v[lead])
        v = [F.mul(x, inv) for x in v]
        t = [F.mul(x, inv) for x in t]
        # keep rows in RREF: clear the new pivot column above, insert in order
        for i in range(len(self.rows)):
            c = self.rows[i][lead]
            if not F.is_zero(c):
                self.rows[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(self.rows[i], v)]
                self.transform[i] = [F.sub(x, F.mul(c, y))
                                     for x, y in zip(self.transform[i] + [F.zero], t)]
            else:
                self.transform[i] = self.transform[i] + [F.zero]
        pos = next((k for k, pc in enumerate(self.pivots) if pc > lead), len(self.pivots))
        self.rows.insert(pos, v)
        self.pivots.insert(pos, lead)
        self.transform.insert(pos, t)
        self.count += 1
        return True

    def contains(self, vec) -> bool:
        F = self.field
        res = reduce_against(vec, self.rows, self.pivots, F)
        return all(F.is_zero(x) for x in res)

    def express(self, vec):
        F = self.field
        v = list(vec)
        coeffs = [F.zero] * self.count
        for row, pc, trow in zip(self.rows, self.pivots, self.transform):
            c = v[pc]
            if not F.is_zero(c):
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
                for j in range(self.count):
                    coeffs[j] = F.add(coeffs[j], F.mul(c, trow[j]))
        if any(not F.is_zero(x) for x in v):
            return None
        return coeffs

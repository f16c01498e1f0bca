"""Exact dense linear algebra over the integers and rationals.

Every matrix handled here is small (rank <= 22), so the code favours
exactness and auditability over asymptotics: determinants use
fraction-free (Bareiss) elimination, kernels and finite quotients go
through the Smith normal form, and the inertia of a symmetric form is
obtained by fraction-free symmetric congruence elimination.  numpy
object arrays serve purely as containers for python ints and Fractions;
no floating point enters at any stage.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np


def as_matrix(rows) -> np.ndarray:
    """Copy nested sequences (or an array) into a 2-D object array."""
    if isinstance(rows, np.ndarray):
        if rows.ndim != 2:
            raise ValueError("expected a 2-D matrix")
        return rows.astype(object, copy=True)
    try:
        data = [list(row) for row in rows]
    except TypeError:
        raise ValueError("expected a 2-D matrix") from None
    if not data:
        return np.empty((0, 0), dtype=object)
    out = np.array(data, dtype=object)
    if out.ndim != 2:
        raise ValueError("expected a rectangular 2-D matrix")
    return out


def as_int_matrix(rows) -> np.ndarray:
    """Like as_matrix, but entries must be integers (integral Fractions ok)."""
    arr = as_matrix(rows)
    n, m = arr.shape
    if n and m:
        return np.array(_int_rows(arr), dtype=object)
    return arr


def identity(n: int) -> np.ndarray:
    out = np.full((n, n), 0, dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def zeros(n: int, m: int) -> np.ndarray:
    return np.full((n, m), 0, dtype=object)


def block_diag(a, b) -> np.ndarray:
    """Block-diagonal join of two matrices."""
    a, b = as_matrix(a), as_matrix(b)
    out = zeros(a.shape[0] + b.shape[0], a.shape[1] + b.shape[1])
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0] :, a.shape[1] :] = b
    return out


def is_symmetric(a) -> bool:
    a = as_matrix(a)
    return a.shape[0] == a.shape[1] and bool(np.array_equal(a, a.T))


def _int_rows(a) -> list[list[int]]:
    """Validated copy as lists of python ints."""
    rows = a.tolist() if isinstance(a, np.ndarray) else a
    out = []
    for row in rows:
        cur = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError("expected integer entries")
                x = x.numerator
            elif not isinstance(x, int):
                raise ValueError(f"expected integer entries, got {type(x).__name__}")
            cur.append(int(x))
        out.append(cur)
    return out


def bareiss_determinant(a) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = _int_rows(as_matrix(a))
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pkk = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, dst, src, factor):
    """row_dst += factor * row_src"""
    m[dst] = [x + factor * y for x, y in zip(m[dst], m[src])]


def _add_col(m, dst, src, factor):
    """col_dst += factor * col_src"""
    for row in m:
        row[dst] += factor * row[src]


def smith_normal_form(a, check: bool = False):
    """Diagonalize an integer matrix: U @ a @ V == D with U, V unimodular.

    The nonzero diagonal entries of D are positive and each divides the
    next.  With check=True the defining identities are re-verified
    before returning (useful in tests, skipped on hot paths).
    """
    a = as_matrix(a)
    d = _int_rows(a) if a.size else []
    n = len(d)
    m = len(d[0]) if n else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(m)] for i in range(m)]
    t = 0
    while t < min(n, m):
        best = None
        for i in range(t, n):
            row = d[i]
            for j in range(t, m):
                x = row[j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            _swap_rows(d, t, bi)
            _swap_rows(u, t, bi)
        if bj != t:
            _swap_cols(d, t, bj)
            _swap_cols(v, t, bj)
        while True:
            p = d[t][t]
            dirty = False
            for i in range(t + 1, n):
                if d[i][t]:
                    q = d[i][t] // p
                    if q:
                        _add_row(d, i, t, -q)
                        _add_row(u, i, t, -q)
                    if d[i][t]:
                        # nonzero remainder beats the pivot; promote it
                        _swap_rows(d, t, i)
                        _swap_rows(u, t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, m):
                if d[t][j]:
                    q = d[t][j] // p
                    if q:
                        _add_col(d, j, t, -q)
                        _add_col(v, j, t, -q)
                    if d[t][j]:
                        _swap_cols(d, t, j)
                        _swap_cols(v, t, j)
                        dirty = True
                        break
            if dirty:
                continue
            # row and column are clear; force divisibility of the rest
            p = d[t][t]
            bad = None
            for i in range(t + 1, n):
                row = d[i]
                if any(row[j] % p for j in range(t + 1, m)):
                    bad = i
                    break
            if bad is None:
                break
            _add_row(d, t, bad, 1)
            _add_row(u, t, bad, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    umat = np.array(u, dtype=object) if n else np.empty((0, 0), dtype=object)
    vmat = np.array(v, dtype=object) if m else np.empty((0, 0), dtype=object)
    dmat = np.array(d, dtype=object) if n and m else zeros(n, m)
    if check:
        assert np.array_equal(umat @ a @ vmat, dmat)
        assert abs(bareiss_determinant(umat)) == 1
        assert abs(bareiss_determinant(vmat)) == 1
    return umat, dmat, vmat


def elementary_divisors(a) -> list[int]:
    """Nonzero diagonal of the Smith form, in divisibility order."""
    _, d, _ = smith_normal_form(a)
    n, m = d.shape
    return [int(d[i, i]) for i in range(min(n, m)) if d[i, i] != 0]


def integer_kernel(a) -> np.ndarray:
    """Columns spanning the integer kernel of `a`.

    Coming out of the Smith form, the kernel lattice is saturated: any
    integer vector in its rational span is an integer combination of
    the returned columns.
    """
    arr = as_matrix(a)
    n, m = arr.shape
    _, d, v = smith_normal_form(arr)
    free = [j for j in range(m) if j >= n or d[j, j] == 0]
    return v[:, free]


def solve_integer(a, b) -> np.ndarray:
    """Solve a @ x = b over the integers, for `a` of full column rank.

    Raises ValueError when the system is inconsistent or has no
    integral solution.
    """
    amat = as_matrix(a)
    bmat = as_matrix(b)
    n, r = amat.shape
    if bmat.shape[0] != n:
        raise ValueError("shape mismatch in solve_integer")
    k = bmat.shape[1]
    u, d, v = smith_normal_form(amat)
    rhs = u @ bmat
    z = zeros(r, k)
    for i in range(r):
        di = int(d[i, i]) if i < min(n, r) else 0
        if di == 0:
            raise ValueError("matrix does not have full column rank")
        for j in range(k):
            q, rem = divmod(rhs[i, j], di)
            if rem:
                raise ValueError("no integral solution")
            z[i, j] = q
    for i in range(r, n):
        if any(rhs[i, j] != 0 for j in range(k)):
            raise ValueError("inconsistent linear system")
    return v @ z


def rational_inverse(a) -> np.ndarray:
    """Exact inverse over Q as a matrix of Fractions."""
    arr = as_matrix(a)
    n, m = arr.shape
    if n != m:
        raise ValueError("inverse needs a square matrix")
    aug = [
        [Fraction(arr[i, j]) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv_p = 1 / aug[c][c]
        aug[c] = [x * inv_p for x in aug[c]]
        prow = aug[c]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], prow)]
    return np.array([row[n:] for row in aug], dtype=object)


def inertia(a) -> tuple[int, int, int]:
    """Inertia (pos, neg, null) of a symmetric matrix with exact entries.

    Fractions are cleared first (scaling the form by a positive integer
    does not move eigenvalue signs), then the form is reduced by
    fraction-free symmetric elimination; the sign of each exact pivot
    is the sign of the product of consecutive Bareiss pivots.  A block
    with an all-zero diagonal gets a pivot manufactured by a symmetric
    row-and-column addition.
    """
    arr = as_matrix(a)
    n = arr.shape[0]
    if arr.shape[1] != n or not np.array_equal(arr, arr.T):
        raise ValueError("inertia needs a symmetric matrix")
    if n == 0:
        return (0, 0, 0)
    den = 1
    for i in range(n):
        for j in range(n):
            x = arr[i, j]
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
            elif not isinstance(x, int):
                raise ValueError(f"expected exact entries, got {type(x).__name__}")
    s = [[int(arr[i, j] * den) for j in range(n)] for i in range(n)]
    pos = neg = null = 0
    prev = 1
    t = 0
    while t < n:
        if s[t][t] == 0:
            piv = next((i for i in range(t + 1, n) if s[i][i] != 0), None)
            if piv is not None:
                _sym_swap(s, t, piv, t)
            else:
                pair = None
                for i in range(t, n):
                    for j in range(i + 1, n):
                        if s[i][j] != 0:
                            pair = (i, j)
                            break
                    if pair:
                        break
                if pair is None:
                    null += n - t
                    break
                i, j = pair
                for kk in range(t, n):
                    s[i][kk] += s[j][kk]
                for kk in range(t, n):
                    s[kk][i] += s[kk][j]
                if i != t:
                    _sym_swap(s, t, i, t)
        p = s[t][t]
        if (p > 0) == (prev > 0):
            pos += 1
        else:
            neg += 1
        row_t = s[t]
        for i in range(t + 1, n):
            row_i = s[i]
            sit = row_i[t]
            for j in range(t + 1, n):
                row_i[j] = (row_i[j] * p - sit * row_t[j]) // prev
        prev = p
        t += 1
    return pos, neg, null


def _sym_swap(s, i, j, start):
    s[i], s[j] = s[j], s[i]
    for row in s[start:]:
        row[i], row[j] = row[j], row[i]

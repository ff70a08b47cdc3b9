"""Hot numeric kernels: modular polynomial arithmetic on int64 arrays.

Every residue lives in [0, mod) with mod*(mod+1) < 2**63, so a product of two
residues never overflows a signed 64-bit integer and every intermediate is
reduced before the next multiplication.  Polynomials are coefficient arrays,
lowest degree first; quotient polynomials g are monic of length m+1.

The @njit decorator comes from the shim in _accel: with RKKSUMS_NO_NUMBA=1
the same bodies run uncompiled on NumPy scalars.
"""

import numpy as np

from ._accel import njit


@njit(cache=True)
def powmod(a, n, mod):
    a = a % mod
    r = 1 % mod
    while n > 0:
        if n & 1:
            r = (r * a) % mod
        a = (a * a) % mod
        n >>= 1
    return r


@njit(cache=True)
def poly_mulmod(a, b, g, mod):
    """(a * b) reduced by the monic polynomial g, coefficients mod `mod`."""
    m = g.shape[0] - 1
    prod = np.zeros(2 * m - 1, dtype=np.int64)
    for i in range(m):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(m):
            prod[i + j] = (prod[i + j] + ai * b[j]) % mod
    for i in range(2 * m - 2, m - 1, -1):
        top = prod[i]
        if top == 0:
            continue
        prod[i] = 0
        for j in range(m):
            prod[i - m + j] = (prod[i - m + j] - top * g[j]) % mod
    return prod[:m].copy()


@njit(cache=True)
def poly_powmod(a, n, g, mod):
    m = g.shape[0] - 1
    out = np.zeros(m, dtype=np.int64)
    out[0] = 1 % mod
    base = a.copy()
    while n > 0:
        if n & 1:
            out = poly_mulmod(out, base, g, mod)
        base = poly_mulmod(base, base, g, mod)
        n >>= 1
    return out


@njit(cache=True)
def weighted_powers_scalar(t, w, mod):
    """sum_{k=1}^{len(w)} w[k-1] * t^k  (mod mod)."""
    acc = 0
    pw = 1 % mod
    for k in range(w.shape[0]):
        pw = (pw * t) % mod
        acc = (acc + w[k] * pw) % mod
    return acc


@njit(cache=True)
def weighted_powers_poly(u, w, g, mod):
    """sum_{k=1}^{len(w)} w[k-1] * u^k in the quotient ring by g."""
    m = g.shape[0] - 1
    acc = np.zeros(m, dtype=np.int64)
    pw = np.zeros(m, dtype=np.int64)
    pw[0] = 1 % mod
    for k in range(w.shape[0]):
        pw = poly_mulmod(pw, u, g, mod)
        wk = w[k]
        if wk == 0:
            continue
        for i in range(m):
            acc[i] = (acc[i] + wk * pw[i]) % mod
    return acc


@njit(cache=True)
def weighted_geometric_sum(coefs, w, x, lo, hi, mod):
    """sum_{k=lo}^{hi-1} coefs[k] * w[k] * x^k  (mod mod)."""
    acc = 0
    xp = powmod(x, lo, mod)
    for k in range(lo, hi):
        t = (coefs[k] * xp) % mod
        acc = (acc + t * w[k]) % mod
        xp = (xp * x) % mod
    return acc


@njit(cache=True)
def trace_mult(u, g, mod):
    """Trace of the multiplication-by-u operator on the basis 1, c, ..., c^(m-1)."""
    m = g.shape[0] - 1
    col = u.copy()
    tr = col[0] % mod
    for j in range(1, m):
        top = col[m - 1]
        for i in range(m - 1, 0, -1):
            col[i] = col[i - 1]
        col[0] = 0
        if top != 0:
            for i in range(m):
                col[i] = (col[i] - top * g[i]) % mod
        tr = (tr + col[j]) % mod
    return tr


@njit(cache=True)
def mult_matrix(u, g, mod):
    """Matrix of multiplication by u; column j holds u * c^j reduced by g."""
    m = g.shape[0] - 1
    mat = np.zeros((m, m), dtype=np.int64)
    col = u.copy()
    for i in range(m):
        mat[i, 0] = col[i] % mod
    for j in range(1, m):
        top = col[m - 1]
        for i in range(m - 1, 0, -1):
            col[i] = col[i - 1]
        col[0] = 0
        if top != 0:
            for i in range(m):
                col[i] = (col[i] - top * g[i]) % mod
        for i in range(m):
            mat[i, j] = col[i]
    return mat


@njit(cache=True)
def fl_charpoly(mat, inv_table, mod):
    """Characteristic polynomial by the Faddeev-LeVerrier scheme.

    inv_table[k-1] must hold the inverse of k mod `mod` for k = 1..m; these
    are the only divisions performed, which keeps the scheme valid when the
    modulus is a prime power.  Returns monic coefficients, lowest first.
    """
    m = mat.shape[0]
    coeffs = np.zeros(m + 1, dtype=np.int64)
    coeffs[m] = 1 % mod
    acc = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        acc[i, i] = 1 % mod
    for k in range(1, m + 1):
        an = np.zeros((m, m), dtype=np.int64)
        for i in range(m):
            for l in range(m):
                a_il = mat[i, l]
                if a_il == 0:
                    continue
                for j in range(m):
                    an[i, j] = (an[i, j] + a_il * acc[l, j]) % mod
        tr = 0
        for i in range(m):
            tr = (tr + an[i, i]) % mod
        ck = (-tr * inv_table[k - 1]) % mod
        coeffs[m - k] = ck
        for i in range(m):
            an[i, i] = (an[i, i] + ck) % mod
        acc = an
    return coeffs

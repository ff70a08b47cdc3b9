"""Independent oracles used across the test suite.

Everything here is deliberately naive: exact rational/big-integer
arithmetic, brute-force root searches and Newton lifting of single roots.
None of it shares code with the package's trace/charpoly machinery, so
agreement is a genuine two-route check.
"""

import math
from fractions import Fraction


def rational_mod(q, m):
    """Reduce a p-integral Fraction mod m."""
    q = Fraction(q)
    return q.numerator * pow(q.denominator, -1, m) % m


def naive_lhs(r, x, d, lo, hi, p, e):
    """sum_{k=lo}^{hi-1} binom(rk,k) x^k / k^d as an exact rational, mod p^e."""
    m = p ** e
    total = Fraction(0)
    for k in range(lo, hi):
        term = Fraction(math.comb(r * k, k)) * Fraction(x) ** k
        if d:
            term /= Fraction(k) ** d
        total += term
    return rational_mod(total, m)


def poly_eval(coeffs, x, m):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % m
    return acc


def roots_mod_p(coeffs, p):
    """Brute-force roots over F_p (with multiplicity ignored)."""
    return [a for a in range(p) if poly_eval(coeffs, a, p) == 0]


def poly_derivative_eval(coeffs, x, m):
    acc = 0
    for i in range(len(coeffs) - 1, 0, -1):
        acc = (acc * x + i * coeffs[i]) % m
    return acc


def lift_root(coeffs, root, p, e):
    """Newton-lift a simple root of the integer polynomial to Z/p^e."""
    m = p ** e
    r = root % p
    for _ in range(e):
        fr = poly_eval(coeffs, r, m)
        fpr = poly_derivative_eval(coeffs, r, m)
        r = (r - fr * pow(fpr, -1, m)) % m
    assert poly_eval(coeffs, r, m) == 0
    return r


def root_poly_coeffs(r, x, p, e):
    """Monic (c-1)^r + x^-1 c^(r-1) over Z/p^e, lowest degree first."""
    m = p ** e
    inv_x = pow(rational_mod(Fraction(x), m), -1, m)
    coeffs = [math.comb(r, j) * (-1) ** (r - j) % m for j in range(r + 1)]
    coeffs[r - 1] = (coeffs[r - 1] + inv_x) % m
    return coeffs


def split_roots(r, x, p, e):
    """All roots of the root polynomial lifted to Z/p^e, or None if not split."""
    coeffs = root_poly_coeffs(r, x, p, 1)
    base = roots_mod_p(coeffs, p)
    if len(base) != r:
        return None
    full = root_poly_coeffs(r, x, p, e)
    return [lift_root(full, a, p, e) for a in base]


def naive_pounds(s, t, p, m):
    """sum_{k=1}^{p-1} t^k / k^s mod m, one term at a time."""
    acc = 0
    for k in range(1, p):
        acc = (acc + pow(t, k, m) * pow(pow(k, s, m), -1, m)) % m
    return acc


def lucas_binom_mod_p(n, k, p):
    """binom(n, k) mod p via the base-p digit product."""
    result = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        result = result * (math.comb(nd, kd) % p) % p
        n //= p
        k //= p
    return result

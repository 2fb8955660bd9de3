"""Independent reference implementations used as test oracles.

Everything here deliberately avoids the library's own code paths: plain
float 2x2 matrices for traces, trial-division factorization over prime
fields, and Fraction Gaussian elimination for determinants.
"""

import math
import random
from fractions import Fraction
from itertools import product


def random_sl2(rng: random.Random):
    """Random 2x2 real matrix, entries in [-2, 2], normalized to det 1."""
    while True:
        m = [[rng.uniform(-2, 2), rng.uniform(-2, 2)], [rng.uniform(-2, 2), rng.uniform(-2, 2)]]
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if det > 0.1:
            s = math.sqrt(det)
            return [[v / s for v in row] for row in m]


def mat_mul(a, b):
    return [
        [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
        [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
    ]


def mat_inv_sl2(a):
    return [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]


def word_matrix(w, A, B):
    m = [[1.0, 0.0], [0.0, 1.0]]
    for g, e in w:
        base = A if g == "a" else B
        m = mat_mul(m, base if e == 1 else mat_inv_sl2(base))
    return m


def numeric_trace(w, A, B) -> float:
    m = word_matrix(w, A, B)
    return m[0][0] + m[1][1]


# -- trial-division factorization over F_p (slow, independent) -----------------


def _norm(c, p):
    c = [x % p for x in c]
    while c and c[-1] == 0:
        c.pop()
    return c


def _divmod_p(a, b, p):
    a = a[:]
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        c = a[-1] * inv % p
        k = len(a) - len(b)
        q[k] = c
        for i in range(len(b)):
            a[i + k] = (a[i + k] - c * b[i]) % p
        a.pop()
        while a and a[-1] % p == 0:
            a.pop()
    return _norm(q, p), _norm(a, p)


def brute_force_factor_degrees(coeffs, p):
    """Sorted (degree, multiplicity) pairs via exhaustive trial division."""
    return tuple(sorted((len(g) - 1, mult) for g, mult in brute_force_factor_list(coeffs, p)))


def brute_force_factor_list(coeffs, p):
    """Full list of (monic factor tuple, multiplicity) by trial division."""
    f = _norm(list(coeffs), p)
    assert len(f) > 1
    factors = {}
    d = 1
    while len(f) - 1 >= 2 * d:
        hit = False
        for tail in product(range(p), repeat=d):
            g = list(tail) + [1]
            q, r = _divmod_p(f, g, p)
            if not r:
                factors[tuple(g)] = factors.get(tuple(g), 0) + 1
                f = q
                hit = True
                break
        if not hit:
            d += 1
    if len(f) > 1:
        key = tuple(_divmod_p(f, [f[-1]], p)[0])  # monic-ize
        factors[key] = factors.get(key, 0) + 1
    return sorted(factors.items())


def fraction_det(mat):
    """Plain Gaussian elimination over Fractions."""
    m = [[Fraction(x) for x in row] for row in mat]
    n = len(m)
    sign = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    out = Fraction(sign)
    for i in range(n):
        out *= m[i][i]
    return out

"""Exact univariate polynomial algebra over the integers.

Everything here is certificate-grade: unbounded integer (or rational)
arithmetic throughout, no floating point.  Provides subresultant gcd,
resultants, Sturm chains, real root isolation/refinement by bisection,
factorization over prime fields, and witness-based irreducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional


class EndpointRootError(ValueError):
    """An interval endpoint is a root; perturb the endpoint rationally."""


class IsolationError(ValueError):
    """An interval fails to isolate exactly one root; carries the count."""

    def __init__(self, message: str, count: Optional[int] = None):
        self.count = count
        super().__init__(message)


class UniPoly:
    """Integer-coefficient polynomial, ascending coefficients, normalized.

    The empty coefficient sequence is the zero polynomial.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise TypeError(f"non-integer coefficient {c}")
                c = c.numerator
            elif not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            cs.append(c)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- basics ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return UniPoly(out)

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, k: int) -> "UniPoly":
        return UniPoly(k * c for c in self.coeffs)

    def shift_up(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UniPoly((0,) * k + self.coeffs)

    def evaluate(self, t) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def sign_at(self, t) -> int:
        v = self.evaluate(t)
        return (v > 0) - (v < 0)

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def content(self) -> int:
        """Positive gcd of the coefficients; 0 for the zero polynomial."""
        import math

        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> "UniPoly":
        """Content removed, sign of the leading coefficient made positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc() < 0:
            g = -g
        return UniPoly(c // g for c in self.coeffs)


def X_poly() -> UniPoly:
    return UniPoly([0, 1])


def constant(c: int) -> UniPoly:
    return UniPoly([c])


# -- division -------------------------------------------------------------


def _prem(f: UniPoly, g: UniPoly) -> UniPoly:
    """Pseudo-remainder: lc(g)^(df-dg+1) * f = q*g + r with deg r < deg g."""
    if g.is_zero():
        raise ValueError("pseudo-division by zero")
    df, dg = f.degree(), g.degree()
    if df < dg:
        return f
    lg = g.lc()
    r = list(f.coeffs)
    for k in range(df, dg - 1, -1):
        top = r[k]
        r = [lg * c for c in r]
        for i in range(dg + 1):
            r[i + k - dg] -= top * g.coeffs[i]
        r[k] = 0
    return UniPoly(r[:dg])


def exact_div(p: UniPoly, q: UniPoly) -> UniPoly:
    """Exact quotient p/q; raises if the division has a remainder or leaves Z[x]."""
    if q.is_zero():
        raise ValueError("division by zero polynomial")
    num = [Fraction(c) for c in p.coeffs]
    out = [Fraction(0)] * max(len(num) - len(q.coeffs) + 1, 0)
    dq = q.degree()
    lq = Fraction(q.lc())
    for k in range(len(num) - 1, dq - 1, -1):
        c = num[k] / lq
        out[k - dq] = c
        if c:
            for i in range(dq + 1):
                num[i + k - dq] -= c * q.coeffs[i]
    if any(num):
        raise ValueError("inexact polynomial division")
    return UniPoly(out)


def gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Primitive gcd with positive leading coefficient (subresultant scheme)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.primitive_part()
    if q.is_zero():
        return p.primitive_part()
    a, b = p.primitive_part(), q.primitive_part()
    if a.degree() < b.degree():
        a, b = b, a
    while not b.is_zero():
        r = _prem(a, b).primitive_part()
        a, b = b, r
    return a.primitive_part()


def square_free_part(p: UniPoly) -> UniPoly:
    """Primitive square-free part (same distinct roots, positive lc)."""
    if p.is_zero():
        raise ValueError("square-free part of zero polynomial")
    if p.degree() == 0:
        return constant(1)
    g = gcd(p, p.derivative())
    return exact_div(p.primitive_part(), g).primitive_part()


# -- resultants -----------------------------------------------------------


def _bareiss_det(mat: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def sylvester_matrix(p: UniPoly, q: UniPoly) -> list[list[int]]:
    dp, dq = p.degree(), q.degree()
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    rows = []
    for i in range(dq):
        rows.append([0] * i + pc + [0] * (dq - 1 - i))
    for i in range(dp):
        rows.append([0] * i + qc + [0] * (dp - 1 - i))
    return rows


def resultant(p: UniPoly, q: UniPoly) -> int:
    """res(p, q) = lc(p)^deg(q) * prod q over the roots of p."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    if p.degree() == 0:
        return p.lc() ** q.degree()
    if q.degree() == 0:
        return q.lc() ** p.degree()
    return _bareiss_det(sylvester_matrix(p, q))


def discriminant(p: UniPoly) -> int:
    """(-1)^(d(d-1)/2) * res(p, p') / lc(p)."""
    d = p.degree()
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return 1
    r = resultant(p, p.derivative())
    s = (-1) ** (d * (d - 1) // 2)
    val, rem = divmod(s * r, p.lc())
    if rem:
        raise AssertionError("resultant not divisible by leading coefficient")
    return val


# -- Sturm chains and root counting ----------------------------------------

NEG_INF = object()
POS_INF = object()


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    """Sturm chain of p: p, p', then negated remainders down to a constant.

    Integer pseudo-remainders with the scaling forced positive, so sign
    variations match the classical rational chain.
    """
    if p.is_zero():
        raise ValueError("Sturm chain of zero polynomial")
    chain = [p]
    d = p.derivative()
    if d.is_zero():
        return chain
    chain.append(d)
    while True:
        f, g = chain[-2], chain[-1]
        if g.degree() < 1:
            break
        r = _prem(f, g)
        if r.is_zero():
            break
        # true remainder is r / lc(g)^(df-dg+1); keep the sign of -rem
        if g.lc() < 0 and (f.degree() - g.degree() + 1) % 2 == 1:
            s = r
        else:
            s = -r
        chain.append(s.primitive_part() if s.lc() > 0 else -((-s).primitive_part()))
    return chain


def _sign_at_point(p: UniPoly, t) -> int:
    if t is NEG_INF:
        if p.is_zero():
            return 0
        return (1 if p.lc() > 0 else -1) * (-1) ** p.degree()
    if t is POS_INF:
        if p.is_zero():
            return 0
        return 1 if p.lc() > 0 else -1
    return p.sign_at(t)


def _variations(chain: list[UniPoly], t) -> int:
    signs = [s for s in (_sign_at_point(p, t) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: UniPoly, lo, hi) -> int:
    """Exact count of distinct real roots of p in the open interval (lo, hi).

    lo may be NEG_INF and hi POS_INF.  Finite endpoints must not be roots.
    """
    if p.is_zero():
        raise ValueError("root counting needs a nonzero polynomial")
    sf = square_free_part(p)
    if sf.degree() == 0:
        return 0
    if lo is not NEG_INF and hi is not POS_INF and Fraction(lo) >= Fraction(hi):
        raise ValueError("empty interval: lo must be less than hi")
    for t, name in ((lo, "lo"), (hi, "hi")):
        if t is not NEG_INF and t is not POS_INF and sf.evaluate(t) == 0:
            raise EndpointRootError(f"endpoint {name}={t} is a root; perturb it rationally")
    chain = sturm_chain(sf)
    return _variations(chain, lo) - _variations(chain, hi)


def root_bound(p: UniPoly) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    if p.is_zero() or p.degree() < 1:
        raise ValueError("root bound needs degree >= 1")
    lead = abs(p.lc())
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree() >= 1 else 0
    return 1 + Fraction(m, lead)


def isolate_real_roots(p: UniPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open rational intervals, one per real root, ascending."""
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    sf = square_free_part(p)
    if sf.degree() <= 0:
        return []
    chain = sturm_chain(sf)
    bound = root_bound(sf)
    out: list[tuple[Fraction, Fraction]] = []

    def count(lo: Fraction, hi: Fraction) -> int:
        return _variations(chain, lo) - _variations(chain, hi)

    def split(lo: Fraction, hi: Fraction, k: int) -> None:
        if k == 0:
            return
        if k == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if sf.evaluate(mid) != 0:
            kl = count(lo, mid)
            split(lo, mid, kl)
            split(mid, hi, k - kl)
            return
        # mid is itself a (rational) root: fence it off, recurse on both sides
        delta = (hi - lo) / 4
        while True:
            m1, m2 = mid - delta, mid + delta
            if sf.evaluate(m1) != 0 and sf.evaluate(m2) != 0 and count(m1, m2) == 1:
                break
            delta /= 2
        kl = count(lo, m1)
        split(lo, m1, kl)
        out.append((m1, m2))
        split(m2, hi, k - kl - 1)

    total = count(-bound, bound)
    split(-bound, bound, total)
    # tighten for predictable downstream display; disjointness is preserved
    return [refine_root(sf, iv, Fraction(1, 4)) for iv in out]


def refine_root(p: UniPoly, interval: tuple[Fraction, Fraction], eps) -> tuple[Fraction, Fraction]:
    """Bisect a sign-isolating interval down to width < eps.

    The input must bracket exactly one simple root (opposite endpoint signs);
    the output keeps opposite endpoint signs.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    slo, shi = p.sign_at(lo), p.sign_at(hi)
    if slo == 0 or shi == 0 or slo == shi:
        raise IsolationError(
            f"interval ({lo}, {hi}) does not sign-isolate a simple root of {format_poly(p)}"
        )
    while hi - lo >= eps:
        mid = (lo + hi) / 2
        sm = p.sign_at(mid)
        if sm == 0:
            # the root is exactly mid; emit a tiny straddling interval
            delta = min(eps / 4, (mid - lo) / 2, (hi - mid) / 2)
            while p.sign_at(mid - delta) != slo or p.sign_at(mid + delta) != shi:
                delta /= 2
            return (mid - delta, mid + delta)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return (lo, hi)


# -- arithmetic modulo a small prime ----------------------------------------
# dense coefficient lists, ascending, trimmed


def _gf_trim(f: list[int], p: int) -> list[int]:
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def _gf_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _gf_trim(out, p)


def _gf_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _gf_trim(
        [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)], p
    )


def _gf_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial mod p")
    a = a[:]
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        k = len(a) - len(b)
        q[k] = c
        for i in range(len(b)):
            a[i + k] = (a[i + k] - c * b[i]) % p
        a.pop()
        while a and a[-1] % p == 0:
            a.pop()
    return _gf_trim(q, p), _gf_trim(a, p)


def _gf_monic(f: list[int], p: int) -> list[int]:
    if not f:
        return f
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def _gf_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _gf_divmod(a, b, p)[1]
    return _gf_monic(a, p)


def _gf_pow_mod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _gf_divmod(base, mod, p)[1]
    while e > 0:
        if e & 1:
            result = _gf_divmod(_gf_mul(result, base, p), mod, p)[1]
        base = _gf_divmod(_gf_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _gf_deriv(f: list[int], p: int) -> list[int]:
    return _gf_trim([i * c % p for i, c in enumerate(f)][1:], p)


def _gf_sqf_list(f: list[int], p: int) -> list[tuple[tuple[int, ...], int]]:
    """Square-free decomposition of monic f over F_p: [(factor, multiplicity)]."""
    out: dict[tuple[int, ...], int] = {}

    def add(g: list[int], e: int) -> None:
        if len(g) > 1:
            key = tuple(g)
            out[key] = out.get(key, 0) + e

    def walk(f: list[int], scale: int) -> None:
        if len(f) <= 1:
            return
        d = _gf_deriv(f, p)
        if not d:
            # f = h(x^p); take the p-th root (Frobenius fixes F_p)
            h = [f[p * i] for i in range((len(f) - 1) // p + 1)]
            walk(_gf_monic(h, p), scale * p)
            return
        g0 = _gf_gcd(f, d, p)
        w = _gf_divmod(f, g0, p)[0]
        i = 1
        while len(w) > 1:
            y = _gf_gcd(w, g0, p)
            z = _gf_divmod(w, y, p)[0]
            add(z, i * scale)
            w = y
            g0 = _gf_divmod(g0, y, p)[0]
            i += 1
        if len(g0) > 1:
            h = [g0[p * i] for i in range((len(g0) - 1) // p + 1)]
            walk(_gf_monic(h, p), scale * p)

    walk(_gf_monic(f, p), 1)
    return sorted(out.items())


def _gf_ddf(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Distinct-degree factorization of monic square-free f: [(product, degree)]."""
    out = []
    x = [0, 1]
    h = _gf_pow_mod(x, p, f, p)
    d = 1
    while len(f) - 1 >= 2 * d:
        g = _gf_gcd(f, _gf_sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _gf_divmod(f, g, p)[0]
            h = _gf_divmod(h, f, p)[1]
        h = _gf_pow_mod(h, p, f, p)
        d += 1
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _gf_element_seq(p: int, max_deg: int) -> Iterator[list[int]]:
    """Deterministic sweep of nonconstant polynomials of degree < max_deg."""
    for deg in range(1, max_deg):
        count = p ** deg
        for code in range(count):
            cs = []
            c = code
            for _ in range(deg):
                cs.append(c % p)
                c //= p
            cs.append(1)
            yield cs


def _gf_edf(f: list[int], d: int, p: int) -> list[list[int]]:
    """Split monic square-free f (all irreducible factors of degree d)."""
    n = len(f) - 1
    if n == d:
        return [f]
    for r in _gf_element_seq(p, n):
        if p == 2:
            # trace map over F_2
            t = [0]
            acc = _gf_divmod(r, f, p)[1]
            for _ in range(d):
                t = _gf_sub(t, [-c for c in acc], p)
                acc = _gf_pow_mod(acc, 2, f, p)
            g = _gf_gcd(f, t, p)
        else:
            e = (p ** d - 1) // 2
            h = _gf_pow_mod(r, e, f, p)
            g = _gf_gcd(f, _gf_sub(h, [1], p), p)
        if 1 < len(g) < len(f):
            other = _gf_divmod(f, g, p)[0]
            return _gf_edf(g, d, p) + _gf_edf(other, d, p)
    raise AssertionError("equal-degree splitting sweep exhausted")


def _is_small_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def gf_factor(f: list[int], p: int) -> list[tuple[tuple[int, ...], int]]:
    """Monic irreducible factors of f over F_p with multiplicities."""
    out = []
    for sq, mult in _gf_sqf_list(f, p):
        for block, d in _gf_ddf(list(sq), p):
            for irr in _gf_edf(block, d, p):
                out.append((tuple(irr), mult))
    return sorted(out)


def factor_mod_p(p: UniPoly, prime: int) -> tuple[tuple[int, int], ...]:
    """Degrees and multiplicities of the irreducible factors of p mod prime."""
    if not _is_small_prime(prime):
        raise ValueError(f"{prime} is not prime")
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.lc() % prime == 0:
        raise ValueError(f"prime {prime} divides the leading coefficient")
    reduced = _gf_trim(list(p.coeffs), prime)
    if len(reduced) <= 1:
        return ()
    factors = gf_factor(reduced, prime)
    return tuple(sorted((len(g) - 1, mult) for g, mult in factors))


def primes(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1) if bound >= 0 else bytearray()
    out = []
    for n in range(2, bound + 1):
        if sieve[n]:
            out.append(n)
            for m in range(n * n, bound + 1, n):
                sieve[m] = 0
    return out


# -- rational roots and irreducibility ---------------------------------------


def rational_roots(p: UniPoly) -> list[Fraction]:
    """All rational roots (candidates from divisors of the outer coefficients)."""
    if p.is_zero():
        raise ValueError("every rational is a root of the zero polynomial")
    coeffs = list(p.coeffs)
    shift = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    q = UniPoly(coeffs)
    roots = set()
    if shift:
        roots.add(Fraction(0))
    if q.degree() >= 1:
        c0, cn = abs(q.coeffs[0]), abs(q.lc())
        for num in _divisors(c0):
            for den in _divisors(cn):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if q.evaluate(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    out = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            if k != n // k:
                out.append(n // k)
        k += 1
    return sorted(out)


@dataclass(frozen=True)
class IrreducibilityVerdict:
    status: str  # "irreducible" | "rational_root" | "inconclusive"
    witness: Optional[int] = None
    root: Optional[Fraction] = None

    def is_irreducible(self) -> bool:
        return self.status == "irreducible"


def irreducible_over_Q(p: UniPoly, prime_bound: int = 500) -> IrreducibilityVerdict:
    """Witness-based irreducibility over Q.

    Reports the lowest prime leaving p irreducible mod that prime, or a
    rational root, or an honest Inconclusive.  Never claims reducibility
    without a rational-root witness.
    """
    if p.is_zero() or p.degree() < 1:
        raise ValueError("irreducibility test needs a nonconstant polynomial")
    q = p.primitive_part()
    if q.degree() >= 2:
        roots = rational_roots(q)
        if roots:
            return IrreducibilityVerdict("rational_root", root=roots[0])
    d = q.degree()
    for prime in primes(prime_bound):
        if q.lc() % prime == 0:
            continue
        if factor_mod_p(q, prime) == ((d, 1),):
            return IrreducibilityVerdict("irreducible", witness=prime)
    return IrreducibilityVerdict("inconclusive")


# -- text format --------------------------------------------------------------


def format_poly(p: UniPoly) -> str:
    """`poly: c0 c1 ... cn` (ascending coefficients)."""
    if p.is_zero():
        return "poly: 0"
    return "poly: " + " ".join(str(c) for c in p.coeffs)


def parse_poly(text: str) -> UniPoly:
    body = text.strip()
    if body.startswith("poly:"):
        body = body[len("poly:"):]
    parts = body.split()
    if not parts:
        raise ValueError(f"no coefficients in polynomial text {text!r}")
    try:
        coeffs = [int(tok) for tok in parts]
    except ValueError as exc:
        raise ValueError(f"bad coefficient in polynomial text {text!r}: {exc}") from None
    return UniPoly(coeffs)

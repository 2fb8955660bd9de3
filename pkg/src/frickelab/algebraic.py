"""Certified algebraic reals and number-theoretic verdicts.

An AlgebraicReal is a square-free integer polynomial together with an
isolating rational interval; all comparisons are exact (Sturm counts and
sign bisection, never floating point).  On top of that sit the verdict
operations: geometric-Salem and Salem certification via the t + 1/t
change of variable, Dedekind cycle-type sampling, and symmetric-group
certification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .intervals import RatInterval
from .poly import (
    IrreducibilityVerdict,
    IsolationError,
    UniPoly,
    _is_small_prime,
    discriminant,
    factor_mod_p,
    format_poly,
    gcd,
    irreducible_over_Q,
    primes,
    refine_root,
    square_free_part,
    sturm_count,
    NEG_INF,
    POS_INF,
)


class AlgebraicReal:
    """A real algebraic number: square-free defining polynomial + isolating interval."""

    __slots__ = ("poly", "lo", "hi")

    def __init__(self, poly: UniPoly, lo: Fraction, hi: Fraction):
        # trusted constructor; use make_algebraic for checked construction
        self.poly = poly
        self.lo = lo
        self.hi = hi

    def __repr__(self) -> str:
        return f"AlgebraicReal({format_poly(self.poly)!r}, ({self.lo}, {self.hi}))"

    def interval(self) -> RatInterval:
        return RatInterval(self.lo, self.hi)

    def refined(self, eps) -> "AlgebraicReal":
        """A new value with isolating interval narrower than eps."""
        lo, hi = refine_root(self.poly, (self.lo, self.hi), eps)
        return AlgebraicReal(self.poly, lo, hi)

    def cmp_rational(self, q) -> int:
        """Exact three-way comparison against a rational."""
        q = Fraction(q)
        if q <= self.lo:
            return 1
        if q >= self.hi:
            return -1
        if self.poly.evaluate(q) == 0:
            return 0
        return -1 if sturm_count(self.poly, self.lo, q) == 1 else 1

    def is_root_of(self, f: UniPoly) -> bool:
        """Exact test that f vanishes at this number."""
        if f.is_zero():
            return True
        g = gcd(self.poly, f)
        if g.degree() < 1:
            return False
        return sturm_count(g, self.lo, self.hi) == 1

    def to_float(self) -> float:
        return float((self.lo + self.hi) / 2)


def make_algebraic(p: UniPoly, hint: tuple) -> AlgebraicReal:
    """Certified algebraic real: square-free part of p restricted to hint.

    Fails with IsolationError when hint does not contain exactly one root.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial does not define an algebraic number")
    sf = square_free_part(p)
    lo, hi = Fraction(hint[0]), Fraction(hint[1])
    if sf.degree() < 1:
        raise IsolationError(f"({lo}, {hi}) contains 0 roots of a constant", count=0)
    count = sturm_count(sf, lo, hi)
    if count != 1:
        raise IsolationError(
            f"interval ({lo}, {hi}) contains {count} roots of {format_poly(sf)}, expected 1",
            count=count,
        )
    # one simple root of a square-free polynomial with non-root endpoints
    # must change sign across the interval
    if sf.sign_at(lo) == sf.sign_at(hi):
        raise AssertionError("sign change missing around a certified simple root")
    return AlgebraicReal(sf, lo, hi)


# -- number field arithmetic ---------------------------------------------------


class NumberField:
    """Q(theta) for theta a certified real root of an irreducible polynomial.

    Elements are reduced polynomials in theta with rational coefficients;
    sign determination is exact (a nonzero element cannot vanish at theta,
    so interval refinement of theta terminates).
    """

    def __init__(self, defining: UniPoly, root: AlgebraicReal, irreducibility: IrreducibilityVerdict):
        if not irreducibility.is_irreducible():
            raise ValueError("number field needs an irreducibility witness for its defining polynomial")
        self.defining = defining
        self.root = root
        self.irreducibility = irreducibility
        self.degree = defining.degree()
        lc = Fraction(defining.lc())
        self._monic = tuple(Fraction(c) / lc for c in defining.coeffs)

    def reduce(self, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
        cs = list(coeffs)
        n = self.degree
        while len(cs) > n:
            top = cs.pop()
            if top:
                for i in range(n):
                    cs[len(cs) - n + i] -= top * self._monic[i]
        cs += [Fraction(0)] * (n - len(cs))
        return tuple(cs)

    def element(self, coeffs) -> "FieldElement":
        return FieldElement(self, self.reduce([Fraction(c) for c in coeffs]))

    def gen(self) -> "FieldElement":
        return self.element([0, 1])

    def from_rational(self, q) -> "FieldElement":
        return self.element([Fraction(q)])


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    def __repr__(self) -> str:
        return f"FieldElement({list(self.coeffs)})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("field elements from different fields")
            return other
        return self.field.from_rational(other)

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "FieldElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FieldElement":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return FieldElement(self.field, self.field.reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        # extended Euclid in Q[t] against the monic defining polynomial
        r0 = list(self.field._monic)
        r1 = list(self.coeffs)
        s0: list[Fraction] = [Fraction(0)]
        s1: list[Fraction] = [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                return self.field.element([c * inv for c in s1])
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))

    def __truediv__(self, other) -> "FieldElement":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.from_rational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def interval(self, eps) -> RatInterval:
        """Enclosure of width < eps, refining the field generator as needed."""
        eps = Fraction(eps)
        root = self.field.root
        while True:
            iv = _horner_interval(self.coeffs, root.interval())
            if iv.width() < eps:
                return iv
            root = root.refined((root.hi - root.lo) / 2)

    def sign(self) -> int:
        """Exact sign; terminates because nonzero elements cannot vanish at theta."""
        if self.is_zero():
            return 0
        root = self.field.root
        while True:
            iv = _horner_interval(self.coeffs, root.interval())
            if iv.lo > 0:
                return 1
            if iv.hi < 0:
                return -1
            root = root.refined((root.hi - root.lo) / 2)

    def cmp_rational(self, q) -> int:
        return (self - Fraction(q)).sign()

    def to_float(self) -> float:
        return float(self.interval(Fraction(1, 10**12)).mid())


def _horner_interval(coeffs, iv: RatInterval) -> RatInterval:
    acc = RatInterval.point(0)
    for c in reversed(coeffs):
        acc = acc * iv + RatInterval.point(c)
    return acc


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and any(a):
        c = a[-1] / b[-1]
        k = len(a) - 1 - db
        q[k] = c
        for i in range(db + 1):
            a[i + k] -= c * b[i]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _qpoly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return [Fraction(0)]
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qpoly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
        for i in range(n)
    ]


# -- Salem verdicts --------------------------------------------------------------


@dataclass(frozen=True)
class SalemVerdict:
    status: str  # "GeometricSalem" | "Salem" | "NotSalem" | "Inconclusive"
    reason: str
    evidence: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.status in ("GeometricSalem", "Salem")


def is_geometric_salem(p: UniPoly, prime_bound: int = 500) -> SalemVerdict:
    """Certify that p is the minimal polynomial of a geometric Salem number:
    one real root above 2, all other roots real with absolute value below 2.
    """
    if p.is_zero() or p.degree() < 1:
        raise ValueError("geometric Salem test needs a nonconstant integer polynomial")
    q = p.primitive_part()
    deg = q.degree()
    evidence = {"degree": deg, "monic": q.lc() == 1}

    if deg == 1:
        root = Fraction(-q.coeffs[0], q.coeffs[1])
        evidence.update(real_roots=1, roots_above_2=int(root > 2), roots_in_window=0)
        if root > 2:
            return SalemVerdict("GeometricSalem", "degree 1: rational root above 2", evidence)
        return SalemVerdict("NotSalem", f"root {root} does not exceed 2", evidence)

    irr = irreducible_over_Q(q, prime_bound)
    evidence["irreducibility"] = irr.status
    if irr.status == "rational_root":
        return SalemVerdict("NotSalem", f"reducible: rational root {irr.root}", evidence)
    if irr.status == "inconclusive":
        return SalemVerdict(
            "Inconclusive", f"no irreducibility witness prime below {prime_bound}", evidence
        )
    evidence["irreducibility_witness"] = irr.witness

    # irreducible of degree >= 2: no rational roots, so +-2 are safe endpoints
    above = sturm_count(q, Fraction(2), POS_INF)
    window = sturm_count(q, Fraction(-2), Fraction(2))
    below = sturm_count(q, NEG_INF, Fraction(-2))
    n_real = above + window + below
    evidence.update(
        real_roots=n_real, roots_above_2=above, roots_in_window=window, roots_below_minus2=below
    )
    if n_real != deg:
        return SalemVerdict(
            "NotSalem", f"only {n_real} of {deg} roots are real (complex conjugates exist)", evidence
        )
    if above != 1:
        return SalemVerdict("NotSalem", f"{above} roots exceed 2, need exactly 1", evidence)
    if window != deg - 1:
        return SalemVerdict(
            "NotSalem", f"a conjugate lies outside (-2, 2): window count {window} != {deg - 1}", evidence
        )
    return SalemVerdict(
        "GeometricSalem", "irreducible, all roots real, one above 2, rest inside (-2, 2)", evidence
    )


def salem_transform(p: UniPoly) -> UniPoly:
    """Expansion of t^d * p(t + 1/t): degree doubles and the result is palindromic."""
    if p.is_zero():
        raise ValueError("transform of the zero polynomial")
    d = p.degree()
    t2p1 = UniPoly([1, 0, 1])  # t^2 + 1
    powers = [UniPoly([1])]
    for _ in range(d):
        powers.append(powers[-1] * t2p1)
    out = UniPoly()
    for i, c in enumerate(p.coeffs):
        if c:
            out = out + powers[i].scale(c).shift_up(d - i)
    return out


def salem_inverse_transform(q: UniPoly) -> UniPoly:
    """Recover h with q = t^m * h(t + 1/t) from a palindromic even-degree q."""
    if q.is_zero() or q.degree() % 2 != 0:
        raise ValueError("inverse transform needs a nonzero even-degree polynomial")
    if tuple(reversed(q.coeffs)) != q.coeffs:
        raise ValueError("inverse transform needs a palindromic polynomial")
    m = q.degree() // 2
    rem = list(q.coeffs)
    t2p1 = UniPoly([1, 0, 1])
    powers = [UniPoly([1])]
    for _ in range(m):
        powers.append(powers[-1] * t2p1)
    h = [0] * (m + 1)
    for j in range(m, -1, -1):
        c = rem[m + j]
        h[j] = c
        if c:
            basis = powers[j].scale(c).shift_up(m - j)
            for idx, bc in enumerate(basis.coeffs):
                rem[idx] -= bc
    if any(rem):
        raise AssertionError("palindromic polynomial failed basis peeling")
    return UniPoly(h)


def is_salem(p: UniPoly) -> SalemVerdict:
    """Certify that monic palindromic p defines a Salem number.

    Writing p = t^m h(t + 1/t), the Salem condition is exactly: h has one
    root above 2 and m-1 roots inside (-2, 2).  All checks are Sturm counts.
    """
    if p.is_zero() or p.degree() < 1:
        raise ValueError("Salem test needs a nonconstant polynomial")
    if p.lc() != 1:
        raise ValueError("Salem test needs a monic polynomial")
    if p.degree() % 2 != 0:
        raise ValueError("Salem test needs even degree (reciprocal polynomials)")
    deg = p.degree()
    evidence = {"degree": deg}
    if deg < 4:
        return SalemVerdict("NotSalem", "degenerate: degree below 4 has no circle conjugates", evidence)
    if tuple(reversed(p.coeffs)) != p.coeffs:
        return SalemVerdict("NotSalem", "not reciprocal (coefficients not palindromic)", evidence)
    if p.evaluate(1) == 0 or p.evaluate(-1) == 0:
        return SalemVerdict("NotSalem", "root at t = 1 or t = -1 (reducible cyclotomic factor)", evidence)
    m = deg // 2
    h = salem_inverse_transform(p)
    evidence["h_polynomial"] = format_poly(h)
    above = sturm_count(h, Fraction(2), POS_INF)
    window = sturm_count(h, Fraction(-2), Fraction(2))
    evidence.update(h_roots_above_2=above, h_roots_in_window=window, h_degree=m)
    if above == 0 and window == m:
        return SalemVerdict("NotSalem", "all roots lie on the unit circle, none outside", evidence)
    if above != 1:
        return SalemVerdict(
            "NotSalem", f"{above} compressed roots exceed 2, need exactly 1", evidence
        )
    if window != m - 1:
        return SalemVerdict(
            "NotSalem", f"(-2, 2) count {window} != {m - 1}: a conjugate pair is off the circle", evidence
        )
    return SalemVerdict(
        "Salem", "one real pair (y, 1/y) with y > 1, all other conjugates on the unit circle", evidence
    )


# -- Galois certificates -----------------------------------------------------------


@dataclass(frozen=True)
class GaloisCertificate:
    irreducibility: IrreducibilityVerdict
    samples: tuple[tuple[int, tuple[int, ...]], ...]  # (prime, sorted factor degrees)
    conclusion: str  # "FullSymmetric(n)" | "ContainsNCycle(n)" | "Unknown"
    note: str = ""

    def is_full_symmetric(self) -> bool:
        return self.conclusion.startswith("FullSymmetric")


def _forces_transposition(pattern: tuple[int, ...]) -> bool:
    """A Frobenius cycle type powers to a transposition iff it has exactly
    one part equal to 2 and every other part odd."""
    twos = sum(1 for d in pattern if d == 2)
    return twos == 1 and all(d % 2 == 1 for d in pattern if d != 2)


def galois_cycle_types(p: UniPoly, prime_bound: int = 500) -> GaloisCertificate:
    """Dedekind sampling: factor degree patterns modulo unramified primes.

    Concludes FullSymmetric(n) for prime n from an n-cycle pattern plus a
    transposition-forcing pattern (with irreducibility giving transitivity).
    Sampling failure yields Unknown, never a negative claim.
    """
    if p.is_zero() or p.degree() < 1:
        raise ValueError("Galois sampling needs a nonconstant polynomial")
    q = square_free_part(p)
    n = q.degree()
    irr = irreducible_over_Q(q, prime_bound)
    disc = discriminant(q)
    samples = []
    for prime in primes(prime_bound):
        if q.lc() % prime == 0 or disc % prime == 0:
            continue
        pattern = tuple(sorted(d for d, mult in factor_mod_p(q, prime) for _ in range(mult)))
        samples.append((prime, pattern))
    samples_t = tuple(samples)

    if not irr.is_irreducible():
        note = (
            f"irreducibility failed: rational root {irr.root}"
            if irr.status == "rational_root"
            else f"no irreducibility witness below {prime_bound}"
        )
        return GaloisCertificate(irr, samples_t, "Unknown", note)

    has_ncycle = any(pat == (n,) for _, pat in samples)
    has_transposition = any(_forces_transposition(pat) for _, pat in samples)
    if _is_small_prime(n) and has_ncycle and has_transposition:
        return GaloisCertificate(
            irr, samples_t, f"FullSymmetric({n})",
            "transitive + n-cycle + transposition generate the symmetric group in prime degree",
        )
    if has_ncycle:
        return GaloisCertificate(irr, samples_t, f"ContainsNCycle({n})", "n-cycle pattern observed")
    return GaloisCertificate(irr, samples_t, "Unknown", "required cycle patterns not observed")


# -- non-arithmeticity report ----------------------------------------------------


@dataclass(frozen=True)
class NonArithmeticityReport:
    lines: tuple[str, ...]
    verdict: str  # "NonArithmeticCertified" | "Silent" | "NotCertified"
    certificate: Optional[GaloisCertificate] = None

    def to_text(self) -> str:
        return "\n".join(self.lines + (f"verdict: {self.verdict}",))


def non_arithmeticity_report(p: UniPoly, prime_bound: int = 500) -> NonArithmeticityReport:
    """Solvability obstruction for a trace's minimal polynomial.

    A nonuniform arithmetic surface group is commensurable with the modular
    group, which forces every trace to be expressible by radicals; a
    certified non-solvable Galois group for the trace's minimal polynomial
    rules that out.
    """
    deg = p.degree()
    lines = [f"minimal polynomial: {format_poly(p)}", f"degree: {deg}"]
    if deg == 1:
        lines.append("conclusion: rational trace; test silent")
        return NonArithmeticityReport(tuple(lines), "Silent")
    if deg <= 4:
        lines.append("conclusion: solvable Galois group; this test is silent")
        return NonArithmeticityReport(tuple(lines), "Silent")

    cert = galois_cycle_types(p, prime_bound)
    if cert.irreducibility.is_irreducible():
        lines.append(f"irreducibility: witness prime {cert.irreducibility.witness}")
    else:
        lines.append(f"irreducibility: {cert.irreducibility.status}")
    lines.append(f"galois: {cert.conclusion}")
    if cert.is_full_symmetric():
        n = deg
        lines.extend(
            [
                f"consequence: S{n} is not solvable, so the root is not expressible by radicals",
                "consequence: a trace of the form lambda + 1/lambda with lambda radical is impossible",
                "consequence: the group is not commensurable with the modular group",
                "conclusion: non-arithmetic: certified",
            ]
        )
        return NonArithmeticityReport(tuple(lines), "NonArithmeticCertified", cert)
    lines.append(f"note: {cert.note}")
    lines.append("conclusion: non-arithmeticity NOT certified")
    return NonArithmeticityReport(tuple(lines), "NotCertified", cert)

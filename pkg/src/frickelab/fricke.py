"""Fricke points of the once-punctured torus and the worked pattern point.

A point of the Teichmuller space T(1,1) is a triple (x, y, z) of trace
coordinates with x, y, z > 2 satisfying the Markov relation
x^2 + y^2 + z^2 - x y z = 0.  Coordinates here are exact rationals,
elements of one shared real number field, or plain rational intervals;
the first two kinds admit exact sign decisions, the last falls back to
certified interval arithmetic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath

from .algebraic import AlgebraicReal, FieldElement, NumberField, make_algebraic
from .intervals import PrecisionError, RatInterval
from .poly import (
    UniPoly,
    irreducible_over_Q,
    isolate_real_roots,
    sturm_count,
    NEG_INF,
    POS_INF,
)
from .tracering import TracePoly, trace_polynomial
from .words import Word

Coordinate = Union[Fraction, FieldElement, RatInterval]

MARKOV = (
    TracePoly.variable("X") ** 2
    + TracePoly.variable("Y") ** 2
    + TracePoly.variable("Z") ** 2
    - TracePoly.variable("X") * TracePoly.variable("Y") * TracePoly.variable("Z")
)


class NonHyperbolicError(ValueError):
    """Trace is not certified > 2: elliptic/parabolic or not enough precision."""


class FrickePoint:
    """Immutable coordinate triple; membership in T(1,1) is checked, not assumed."""

    __slots__ = ("kind", "coords", "field")

    def __init__(self, kind: str, coords: tuple, field: Optional[NumberField] = None):
        self.kind = kind  # "rational" | "field" | "interval"
        self.coords = coords
        self.field = field

    @classmethod
    def from_rationals(cls, x, y, z) -> "FrickePoint":
        return cls("rational", (Fraction(x), Fraction(y), Fraction(z)))

    @classmethod
    def from_field_elements(cls, field: NumberField, x: FieldElement, y: FieldElement, z: FieldElement) -> "FrickePoint":
        return cls("field", (x, y, z), field)

    @classmethod
    def from_intervals(cls, x: RatInterval, y: RatInterval, z: RatInterval) -> "FrickePoint":
        return cls("interval", (x, y, z))

    @classmethod
    def from_coords(cls, x, y, z) -> "FrickePoint":
        """Promote mixed rational/algebraic coordinates to one representation.

        At most one distinct algebraic generator is supported; coordinates
        over unrelated fields would defeat exact membership decisions.
        """
        gens = [c for c in (x, y, z) if isinstance(c, AlgebraicReal)]
        if not gens:
            return cls.from_rationals(x, y, z)
        first = gens[0]
        for other in gens[1:]:
            if other is not first:
                raise ValueError(
                    "coordinates must share a single algebraic generator; "
                    "use from_intervals for unrelated approximate coordinates"
                )
        irr = irreducible_over_Q(first.poly)
        field = NumberField(first.poly, first, irr)
        out = tuple(
            field.gen() if c is first else field.from_rational(Fraction(c)) for c in (x, y, z)
        )
        return cls.from_field_elements(field, *out)

    def __repr__(self) -> str:
        return f"FrickePoint({self.kind}, {self.coords!r})"

    def x(self) -> Coordinate:
        return self.coords[0]

    def y(self) -> Coordinate:
        return self.coords[1]

    def z(self) -> Coordinate:
        return self.coords[2]

    def coordinate_intervals(self, eps) -> tuple[RatInterval, RatInterval, RatInterval]:
        return tuple(_coord_interval(c, eps) for c in self.coords)  # type: ignore[return-value]

    def certification(self) -> str:
        return {
            "rational": "exact rational coordinates",
            "field": "exact elements of a shared real number field",
            "interval": "certified interval coordinates",
        }[self.kind]


def _coord_interval(c: Coordinate, eps) -> RatInterval:
    if isinstance(c, Fraction):
        return RatInterval.point(c)
    if isinstance(c, FieldElement):
        return c.interval(eps)
    return c


def _coord_cmp_rational(c: Coordinate, q) -> int:
    """Exact or certified comparison; raises PrecisionError when undecidable."""
    q = Fraction(q)
    if isinstance(c, Fraction):
        return (c > q) - (c < q)
    if isinstance(c, FieldElement):
        return c.cmp_rational(q)
    if c.lo > q:
        return 1
    if c.hi < q:
        return -1
    if c.lo == q == c.hi:
        return 0
    raise PrecisionError(f"comparison of [{c.lo}, {c.hi}] with {q} is undecidable")


# -- evaluation at a point -----------------------------------------------------


@dataclass(frozen=True)
class EvalResult:
    """Value of a trace polynomial at a point, with its decidability kind."""

    kind: str  # matches the point kind
    value: Coordinate

    def sign(self) -> int:
        """Exact for rational/field values; PrecisionError on straddling intervals."""
        if self.kind == "rational":
            return (self.value > 0) - (self.value < 0)
        if self.kind == "field":
            return self.value.sign()
        return self.value.sign()

    def is_certified_zero(self) -> bool:
        if self.kind == "rational":
            return self.value == 0
        if self.kind == "field":
            return self.value.is_zero()
        return self.value.is_point() and self.value.lo == 0

    def is_certified_nonzero(self) -> bool:
        if self.kind in ("rational", "field"):
            return not self.is_certified_zero()
        return not self.value.contains_zero()

    def interval(self, eps) -> RatInterval:
        return _coord_interval(self.value, eps)


def evaluate_at_point(tp: TracePoly, pt: FrickePoint, eps=Fraction(1, 2**128)) -> EvalResult:
    if pt.kind == "rational":
        return EvalResult("rational", tp.evaluate(*pt.coords))
    if pt.kind == "field":
        zero = pt.field.from_rational(0)
        value = zero + tp.evaluate(*pt.coords)
        return EvalResult("field", value)
    ivs = pt.coordinate_intervals(eps)
    value = RatInterval.point(0) + tp.evaluate(*ivs)
    return EvalResult("interval", value)


def markov_residual(pt: FrickePoint, eps=Fraction(1, 2**128)) -> EvalResult:
    """Certified evaluation of x^2 + y^2 + z^2 - xyz at the point."""
    return evaluate_at_point(MARKOV, pt, eps)


@dataclass(frozen=True)
class MembershipCertificate:
    member: bool
    lines: tuple[str, ...]

    def to_text(self) -> str:
        verdict = "Member" if self.member else "NotMember"
        return "\n".join(self.lines + (f"verdict: {verdict}",))


def in_teichmuller(pt: FrickePoint, tol=Fraction(1, 2**96)) -> MembershipCertificate:
    """Certified membership: x, y, z > 2 strictly and Markov residual
    exactly zero (exact coordinates) or within tol (interval coordinates).

    Raises PrecisionError when a check is undecidable at the available
    precision, never returning a wrong answer.
    """
    tol = Fraction(tol)
    lines = [f"certification: {pt.certification()}"]
    ok = True
    for name, coord in zip("xyz", pt.coords):
        cmp = _coord_cmp_rational(coord, 2)
        good = cmp > 0
        ok = ok and good
        lines.append(f"{name} > 2: {'certified' if good else 'FAILED'}")
    res = markov_residual(pt)
    if pt.kind in ("rational", "field"):
        zero = res.is_certified_zero()
        ok = ok and zero
        lines.append(f"markov residual: {'exactly zero' if zero else 'certified nonzero'}")
    else:
        iv = res.value
        if -tol <= iv.lo and iv.hi <= tol:
            lines.append(f"markov residual: within tolerance {tol} (width {iv.width()})")
        elif iv.lo > tol or iv.hi < -tol:
            ok = False
            lines.append("markov residual: certified outside tolerance")
        else:
            raise PrecisionError(
                f"markov residual interval [{iv.lo}, {iv.hi}] straddles the tolerance band"
            )
    return MembershipCertificate(ok, tuple(lines))


# -- elimination of the equal-length pattern constraints -------------------------


def eliminate_by_substitution() -> UniPoly:
    """Quintic from the constraints y = x and x^2 - 2 = zx - y.

    Solving the second constraint gives z = (x^2 + x - 2)/x; substituting
    into the Markov relation and clearing x^2 yields an integer quintic.
    """
    num = UniPoly([-2, 1, 1])  # x^2 + x - 2
    x = UniPoly([0, 1])
    # x^2 * (x^2 + y^2 + z^2 - xyz) with y = x, z = num/x:
    #   2 x^4 + num^2 - x^3 * num
    residual = UniPoly([2]) * x ** 4 + num * num - x ** 3 * num
    out = residual.primitive_part()
    return out


def eliminate_by_resultants() -> UniPoly:
    """Same quintic via iterated resultants in the trace ring.

    Eliminates y between the Markov polynomial and y - x, then z between
    the two results; the primitive part agrees with the substitution path
    up to sign.
    """
    X = TracePoly.variable("X")
    Y = TracePoly.variable("Y")
    Z = TracePoly.variable("Z")
    markov = MARKOV
    c1 = X - Y
    c2 = X ** 2 - TracePoly.constant(2) - (Z * X - Y)
    m1 = _tp_resultant(markov, c1, var=1)  # eliminate Y
    m2 = _tp_resultant(c2, c1, var=1)
    final = _tp_resultant(m1, m2, var=2)  # eliminate Z
    return _tp_to_unipoly(final, var=0).primitive_part()


def eliminate_pattern_system() -> UniPoly:
    """The pattern quintic, cross-checked along both elimination routes."""
    sub = eliminate_by_substitution()
    res = eliminate_by_resultants()
    if sub != res and sub != -res:
        raise AssertionError("elimination routes disagree")
    return sub if sub.lc() > 0 else -sub


def _tp_as_poly_in(tp: TracePoly, var: int) -> list[TracePoly]:
    """Coefficients of tp as a polynomial in one trace variable, ascending."""
    top = max((m[var] for m in tp.terms), default=0)
    out = [dict() for _ in range(top + 1)]
    for m, c in tp.terms.items():
        rest = list(m)
        e = rest[var]
        rest[var] = 0
        out[e][tuple(rest)] = out[e].get(tuple(rest), 0) + c
    return [TracePoly(d) for d in out]


def _tp_resultant(p: TracePoly, q: TracePoly, var: int) -> TracePoly:
    """Resultant of two trace polynomials with respect to one variable.

    Sylvester determinant over the trace ring, expanded by minors; the
    matrices here are tiny (degree at most 2 in the eliminated variable).
    """
    pc = list(reversed(_tp_as_poly_in(p, var)))
    qc = list(reversed(_tp_as_poly_in(q, var)))
    dp, dq = len(pc) - 1, len(qc) - 1
    if dp < 1 or dq < 1:
        raise ValueError("resultant needs both polynomials to contain the variable")
    zero = TracePoly()
    rows = []
    for i in range(dq):
        rows.append([zero] * i + pc + [zero] * (dq - 1 - i))
    for i in range(dp):
        rows.append([zero] * i + qc + [zero] * (dp - 1 - i))
    return _tp_det(rows)


def _tp_det(mat: list[list[TracePoly]]) -> TracePoly:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    out = TracePoly()
    for j in range(n):
        entry = mat[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = entry * _tp_det(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out


def _tp_to_unipoly(tp: TracePoly, var: int) -> UniPoly:
    coeffs: dict[int, int] = {}
    for m, c in tp.terms.items():
        others = [m[i] for i in range(3) if i != var]
        if any(others):
            raise ValueError("trace polynomial still involves an eliminated variable")
        coeffs[m[var]] = coeffs.get(m[var], 0) + c
    top = max(coeffs, default=-1)
    return UniPoly([coeffs.get(i, 0) for i in range(top + 1)])


# -- the solved pattern point ----------------------------------------------------


@functools.lru_cache(maxsize=None)
def solve_pattern_system(precision_bits: int = 128) -> FrickePoint:
    """The unique Fricke point with tr(a) = tr(b) and tr(a^2) = tr(a^2 b).

    Certifies along the way: the eliminated quintic has exactly one real
    root, that root exceeds 2, and the derived y and z coordinates also
    exceed 2 with Markov residual exactly zero.  Any certification failure
    aborts loudly; it would contradict the construction.
    """
    quintic = eliminate_pattern_system()
    if sturm_count(quintic, NEG_INF, POS_INF) != 1:
        raise AssertionError("pattern quintic must have exactly one real root")
    intervals = isolate_real_roots(quintic)
    if len(intervals) != 1:
        raise AssertionError("isolation disagrees with the Sturm count")
    root = make_algebraic(quintic, intervals[0]).refined(Fraction(1, 2 ** precision_bits))
    irr = irreducible_over_Q(quintic, 200)
    if not irr.is_irreducible():
        raise AssertionError("pattern quintic must be irreducible")
    field = NumberField(quintic, root, irr)
    x = field.gen()
    y = x
    z = (x * x + x - 2) / x
    for name, coord in (("x", x), ("y", y), ("z", z)):
        if coord.cmp_rational(2) != 1:
            raise AssertionError(f"coordinate {name} of the solved point must exceed 2")
    pt = FrickePoint.from_field_elements(field, x, y, z)
    if not markov_residual(pt).is_certified_zero():
        raise AssertionError("solved point must satisfy the Markov relation exactly")
    return pt


# -- traces and lengths ------------------------------------------------------------


def trace_of(pt: FrickePoint, w: Word, eps=Fraction(1, 2**128)) -> EvalResult:
    return evaluate_at_point(trace_polynomial(w), pt, eps)


def _mpf_tuple_to_fraction(t) -> Fraction:
    sign, man, exp, _ = t
    man = int(man)
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise ValueError("non-finite interval endpoint")
    v = Fraction(man) * (Fraction(2) ** int(exp))
    return -v if sign else v


def _iv_endpoints(x) -> tuple[Fraction, Fraction]:
    lo, hi = x._mpi_
    return _mpf_tuple_to_fraction(lo), _mpf_tuple_to_fraction(hi)


def _iv_from_fraction(q: Fraction):
    return mpmath.iv.mpf(q.numerator) / mpmath.iv.mpf(q.denominator)


def length_of(pt: FrickePoint, w: Word, precision=Fraction(1, 2**96)) -> RatInterval:
    """Certified enclosure of the geodesic length 2 arccosh(tr/2).

    Requires the trace certified > 2 (hyperbolic element); raises
    NonHyperbolicError otherwise or when precision runs out.
    """
    precision = Fraction(precision)
    tr = trace_of(pt, w)
    try:
        if not _certified_above_two(tr):
            raise NonHyperbolicError(
                f"trace of {w} is not certified > 2: parabolic or elliptic element"
            )
    except PrecisionError as exc:
        raise NonHyperbolicError(f"trace of {w} undecidable against 2: {exc}") from exc

    bits = _bits_needed(precision) + 32
    eps = precision / 16
    for _ in range(12):
        iv_in = tr.interval(eps)
        old = mpmath.iv.prec
        mpmath.iv.prec = bits
        try:
            # hull of the rigorous enclosures of both rational endpoints
            u = mpmath.iv.mpf([_iv_from_fraction(iv_in.lo).a, _iv_from_fraction(iv_in.hi).b])
            half = u / 2
            val = 2 * mpmath.iv.log(half + mpmath.iv.sqrt(half * half - 1))
            out = RatInterval(*_iv_endpoints(val))
        finally:
            mpmath.iv.prec = old
        if out.width() < precision:
            return out
        eps /= 256
        bits += 64
    raise NonHyperbolicError(f"length enclosure for {w} did not reach width {precision}")


def _bits_needed(eps: Fraction) -> int:
    """Bits b with 2^-b below eps."""
    ratio = eps.denominator // max(eps.numerator, 1)
    return max(64, ratio.bit_length() + 8)


def _certified_above_two(tr: EvalResult) -> bool:
    if tr.kind == "rational":
        return tr.value > 2
    if tr.kind == "field":
        return tr.value.cmp_rational(2) == 1
    if tr.value.lo > 2:
        return True
    if tr.value.hi <= 2:
        return False
    raise PrecisionError("trace interval straddles 2")


# -- sampling Markov-surface points -------------------------------------------------


def sample_markov_point(x: Fraction, y: Fraction) -> Optional[FrickePoint]:
    """Point on the Markov surface with the given x, y > 2 and the larger
    z root, or None when no real z > 2 exists for this (x, y)."""
    x, y = Fraction(x), Fraction(y)
    if x <= 2 or y <= 2:
        return None
    # z^2 - xyz + (x^2 + y^2) = 0
    d = (x * y) ** 2 - 4 * (x * x + y * y)
    if d <= 0:
        return None
    den = (x.denominator * y.denominator) ** 2
    zpoly = UniPoly(
        [
            ((x * x + y * y) * den).numerator,
            (-(x * y) * den).numerator,
            den,
        ]
    )
    roots = isolate_real_roots(zpoly)
    if len(roots) != 2:
        return None
    z = make_algebraic(zpoly, roots[-1])
    if z.cmp_rational(2) != 1:
        return None
    sq = _fraction_sqrt(d)
    if sq is not None:
        # discriminant is a perfect square: z is rational
        return FrickePoint.from_rationals(x, y, (x * y + sq) / 2)
    return FrickePoint.from_coords(x, y, z)


def _fraction_sqrt(q: Fraction) -> Optional[Fraction]:
    import math

    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None

"""Marked length varieties: membership checking and the rigidity hypothesis.

A variety polynomial is a rational-coefficient polynomial F in trace
variables X1..Xn; a word tuple (w1, ..., wn) belongs to the variety of F
at a hyperbolic structure when F vanishes on the traces of the words
there.  Symbolic residuals decide membership for every point of
Teichmuller space at once; numeric membership is decided exactly at
rational or shared-field points and by certified intervals otherwise.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .algebraic import SalemVerdict, is_geometric_salem
from .fricke import EvalResult, FrickePoint, evaluate_at_point, trace_of
from .poly import UniPoly, format_poly
from .tracering import TracePoly, trace_polynomial
from .words import Word, concat

Exponents = tuple[int, ...]


class VarietyPolynomial:
    """Sparse polynomial in X1..Xn over the rationals."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Exponents, Fraction] | Iterable[tuple[Exponents, Fraction]]):
        if arity < 1:
            raise ValueError("arity must be at least 1")
        self.arity = arity
        d = dict(terms)
        self.terms: dict[Exponents, Fraction] = {}
        for m, c in d.items():
            if len(m) != arity:
                raise ValueError(f"monomial {m} does not match arity {arity}")
            c = Fraction(c)
            if c:
                self.terms[tuple(m)] = c

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VarietyPolynomial)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"VarietyPolynomial({self.arity}, {format_variety_poly(self)!r})"

    def __str__(self) -> str:
        return format_variety_poly(self)

    def clear_denominators(self) -> tuple[dict[Exponents, int], int]:
        """Integer coefficient map and the positive common denominator."""
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        return {m: int(c * den) for m, c in self.terms.items()}, den


# the universal trace identity polynomial X1*X2 - X3 - X4
FUNDAMENTAL_IDENTITY = VarietyPolynomial(
    4,
    {
        (1, 1, 0, 0): Fraction(1),
        (0, 0, 1, 0): Fraction(-1),
        (0, 0, 0, 1): Fraction(-1),
    },
)

PATTERN_POLYNOMIAL = VarietyPolynomial(2, {(1, 0): Fraction(1), (0, 1): Fraction(-1)})


def format_variety_poly(F: VarietyPolynomial) -> str:
    if not F.terms:
        return "0"
    parts = []
    for m, c in sorted(F.terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0]))):
        factors = [
            (f"X{i + 1}" if e == 1 else f"X{i + 1}^{e}")
            for i, e in enumerate(m)
            if e > 0
        ]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


_VAR_RE = re.compile(r"^X(\d+)(?:\^(\d+))?$")


def parse_variety_poly(text: str, arity: Optional[int] = None) -> VarietyPolynomial:
    """Parse `X1*X2 - X3 - X4` style text; arity defaults to the top index."""
    text = text.strip()
    if not text:
        raise ValueError("empty variety polynomial text")
    chunks: list[tuple[int, str]] = []
    sign, token = 1, ""
    for ch in text:
        if ch in "+-":
            if token.strip():
                chunks.append((sign, token.strip()))
            elif chunks:
                raise ValueError(f"dangling sign in {text!r}")
            sign = 1 if ch == "+" else -1
            token = ""
        else:
            token += ch
    if token.strip():
        chunks.append((sign, token.strip()))
    raw_terms: list[tuple[dict[int, int], Fraction]] = []
    top = 0
    for sgn, chunk in chunks:
        coeff = Fraction(sgn)
        exps: dict[int, int] = {}
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {chunk!r}")
            m = _VAR_RE.match(factor)
            if m:
                idx = int(m.group(1))
                if idx < 1:
                    raise ValueError(f"variable index must be >= 1 in {factor!r}")
                exp = int(m.group(2)) if m.group(2) else 1
                exps[idx] = exps.get(idx, 0) + exp
                top = max(top, idx)
            else:
                coeff *= Fraction(factor)
        raw_terms.append((exps, coeff))
    n = arity if arity is not None else max(top, 1)
    if top > n:
        raise ValueError(f"variable X{top} exceeds declared arity {n}")
    terms: dict[Exponents, Fraction] = {}
    for exps, coeff in raw_terms:
        mono = tuple(exps.get(i + 1, 0) for i in range(n))
        terms[mono] = terms.get(mono, Fraction(0)) + coeff
    return VarietyPolynomial(n, terms)


# -- symbolic membership -------------------------------------------------------


@dataclass(frozen=True)
class SymbolicResidual:
    """Primitive integer residual together with the cleared denominator.

    The actual residual is poly * (content / denominator); vanishing of the
    primitive part is equivalent to vanishing of the residual.
    """

    poly: TracePoly
    content: int
    denominator: int

    def is_zero(self) -> bool:
        return self.poly.is_zero()


def symbolic_residual(F: VarietyPolynomial, words: Sequence[Word]) -> SymbolicResidual:
    """F composed with the trace polynomials of the words, in the trace ring.

    A zero residual certifies membership at every point of Teichmuller
    space simultaneously.
    """
    if len(words) != F.arity:
        raise ValueError(f"arity mismatch: polynomial takes {F.arity} words, got {len(words)}")
    int_terms, den = F.clear_denominators()
    traces = [trace_polynomial(w) for w in words]
    total = TracePoly()
    for mono, c in sorted(int_terms.items()):
        term = TracePoly.constant(c)
        for t, e in zip(traces, mono):
            if e:
                term = term * t ** e
        total = total + term
    content = total.content()
    if content > 1:
        total = TracePoly({m: c // content for m, c in total.terms.items()})
    return SymbolicResidual(total, max(content, 1), den)


IN, OUT, UNDECIDED = "In", "Out", "Undecided"


def numeric_member(F: VarietyPolynomial, words: Sequence[Word], pt: FrickePoint) -> str:
    """Membership verdict at one point: In / Out, or Undecided only for
    interval-backed points whose residual straddles zero."""
    residual = symbolic_residual(F, words)
    if residual.is_zero():
        return IN
    value = evaluate_at_point(residual.poly, pt)
    if value.is_certified_zero():
        return IN
    if value.is_certified_nonzero():
        return OUT
    return UNDECIDED


def pattern_member(u: Word, v: Word, pt: FrickePoint) -> str:
    """Equal-length-pattern membership: does tr(u) = tr(v) hold at pt."""
    return numeric_member(PATTERN_POLYNOMIAL, (u, v), pt)


# -- the geometric-Salem hypothesis check ----------------------------------------


@dataclass(frozen=True)
class SubsetCheck:
    subset: tuple[int, ...]
    word: Word
    minimal_polynomial: UniPoly
    salem: SalemVerdict
    trace_is_root: bool
    exact: bool

    def passed(self) -> bool:
        return self.salem.status == "GeometricSalem" and self.trace_is_root


@dataclass(frozen=True)
class HypothesisReport:
    checks: tuple[SubsetCheck, ...]
    rigidity_set: tuple[str, ...]
    satisfied: bool

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            subset = "{" + ",".join(str(i) for i in c.subset) + "}"
            root_note = "root: certified" if c.trace_is_root else "root: FAILED"
            if not c.exact:
                root_note += " (interval tolerance only)"
            lines.append(
                f"subset {subset} word {c.word}: {c.salem.status} ({c.salem.reason}); {root_note}"
            )
        lines.append("rigidity set: " + "; ".join(self.rigidity_set))
        lines.append(f"verdict: {'Satisfied' if self.satisfied else 'NotSatisfied'}")
        return "\n".join(lines)


def _subset_word(generators: Sequence[Word], subset: tuple[int, ...]) -> Word:
    out = Word()
    for i in subset:
        out = concat(out, generators[i - 1])
    return out


def _all_subsets(n: int) -> list[tuple[int, ...]]:
    out = []
    for mask in range(1, 1 << n):
        out.append(tuple(i + 1 for i in range(n) if mask >> i & 1))
    return sorted(out, key=lambda s: (len(s), s))


def check_rigidity_hypothesis(
    generators: Sequence[Word],
    minpolys: Mapping[tuple[int, ...], UniPoly],
    pt: FrickePoint,
    prime_bound: int = 500,
    tol: Fraction = Fraction(1, 2**96),
) -> HypothesisReport:
    """Verify the geometric-Salem trace hypothesis for a generating set.

    For every nonempty increasing index subset, the supplied minimal
    polynomial must certify GeometricSalem and the trace of the subset
    product at pt must be one of its roots (exactly for rational or
    shared-field points, within interval tolerance otherwise).
    """
    n = len(generators)
    subsets = _all_subsets(n)
    for s in subsets:
        if s not in minpolys:
            raise ValueError(f"missing minimal polynomial for subset {{{','.join(map(str, s))}}}")
    checks = []
    for s in subsets:
        f = minpolys[s]
        word = _subset_word(generators, s)
        salem = is_geometric_salem(f, prime_bound)
        tr = trace_of(pt, word)
        is_root, exact = _trace_is_root(tr, f, tol)
        checks.append(SubsetCheck(s, word, f, salem, is_root, exact))
    rigidity_set = tuple(
        [format_variety_poly(FUNDAMENTAL_IDENTITY)]
        + [format_poly(minpolys[s]) for s in subsets]
    )
    satisfied = all(c.passed() for c in checks)
    return HypothesisReport(tuple(checks), rigidity_set, satisfied)


def _trace_is_root(tr: EvalResult, f: UniPoly, tol: Fraction) -> tuple[bool, bool]:
    """Whether f vanishes at the trace value; second flag marks exactness."""
    if tr.kind == "rational":
        return f.evaluate(tr.value) == 0, True
    if tr.kind == "field":
        value = tr.value
        acc = value.field.from_rational(0)
        for c in reversed(f.coeffs):
            acc = acc * value + c
        return acc.is_zero(), True
    iv = tr.value
    acc = _horner_on_interval(f, iv)
    return -tol <= acc.lo and acc.hi <= tol, False


def _horner_on_interval(f: UniPoly, iv):
    from .intervals import RatInterval

    acc = RatInterval.point(0)
    for c in reversed(f.coeffs):
        acc = acc * iv + c
    return acc


# -- randomized identity suite -----------------------------------------------------


@dataclass(frozen=True)
class SuiteReport:
    samples: int
    max_len: int
    seed: int
    failures: tuple[tuple[str, str], ...]  # offending word pairs

    def passed(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        lines = [
            f"samples: {self.samples}",
            f"max word length: {self.max_len}",
            f"seed: {self.seed}",
        ]
        for u, v in self.failures[:10]:
            lines.append(f"counterexample: u={u} v={v}")
        lines.append(f"verdict: {'Pass' if self.passed() else 'Fail'}")
        return "\n".join(lines)


def random_word(rng: random.Random, max_len: int) -> Word:
    target = rng.randint(0, max_len)
    letters = [
        (rng.choice("ab"), rng.choice((1, -1)))
        for _ in range(target)
    ]
    return Word(letters)


def trace_identity_suite(
    sample_count: int,
    max_len: int,
    seed: int = 0,
    polynomial: Optional[VarietyPolynomial] = None,
) -> SuiteReport:
    """Assert the symbolic residual of the identity polynomial vanishes on
    (u, v, uv, uv^-1) for seeded random word pairs.

    Passing an adversarial polynomial turns this into a negative control:
    a non-identity must produce counterexamples.
    """
    F = polynomial if polynomial is not None else FUNDAMENTAL_IDENTITY
    rng = random.Random(seed)
    failures = []
    for _ in range(sample_count):
        u = random_word(rng, max_len)
        v = random_word(rng, max_len)
        tup = (u, v, concat(u, v), concat(u, ~v))
        if not symbolic_residual(F, tup).is_zero():
            failures.append((str(u), str(v)))
    return SuiteReport(sample_count, max_len, seed, tuple(failures))

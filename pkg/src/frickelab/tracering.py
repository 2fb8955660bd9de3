"""Symbolic SL(2) trace calculus on the rank-2 free group.

For any word w in F(a, b) there is a unique integer polynomial P in
X = tr(a), Y = tr(b), Z = tr(ab) with P(tr A, tr B, tr AB) = tr(w) for
every SL(2) representation a -> A, b -> B.  trace_polynomial computes it
by the Horowitz reduction built on the identities

    tr(UV) = tr(U) tr(V) - tr(U V^-1),   tr(U^-1) = tr(U),
    tr(UV) = tr(VU),

with base cases tr(1) = 2, tr(a) = X, tr(b) = Y, tr(ab) = Z.
"""

from __future__ import annotations

from typing import Iterable

from .words import Word, concat, cyclic_reduce, invert

Monomial = tuple[int, int, int]  # exponents of X, Y, Z


class TracePoly:
    """Sparse integer polynomial in the trace coordinates X, Y, Z."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        d = dict(terms)
        self.terms: dict[Monomial, int] = {m: c for m, c in d.items() if c != 0}

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "TracePoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def variable(cls, name: str) -> "TracePoly":
        idx = {"X": 0, "Y": 1, "Z": 2}[name]
        mono = [0, 0, 0]
        mono[idx] = 1
        return cls({tuple(mono): 1})

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, TracePoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self) -> str:
        return f"TracePoly({format_tracepoly(self)!r})"

    def __str__(self) -> str:
        return format_tracepoly(self)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "TracePoly") -> "TracePoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return TracePoly(out)

    def __neg__(self) -> "TracePoly":
        return TracePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "TracePoly") -> "TracePoly":
        return self + (-other)

    def __mul__(self, other: "TracePoly") -> "TracePoly":
        out: dict[Monomial, int] = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2, k1 + k2)
                out[m] = out.get(m, 0) + c1 * c2
        return TracePoly(out)

    def scale(self, k: int) -> "TracePoly":
        return TracePoly({m: k * c for m, c in self.terms.items()})

    def __pow__(self, n: int) -> "TracePoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = TracePoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def content(self) -> int:
        import math

        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    def max_exponents(self) -> Monomial:
        if not self.terms:
            return (0, 0, 0)
        return tuple(max(m[i] for m in self.terms) for i in range(3))  # type: ignore[return-value]

    def evaluate(self, x, y, z):
        """Evaluate over any commutative ring (rationals, intervals, field elements)."""
        mi, mj, mk = self.max_exponents()
        xp = _powers(x, mi)
        yp = _powers(y, mj)
        zp = _powers(z, mk)
        total = 0
        for (i, j, k), c in sorted(self.terms.items()):
            term = c
            if i:
                term = term * xp[i]
            if j:
                term = term * yp[j]
            if k:
                term = term * zp[k]
            total = total + term
        return total


def _powers(v, n: int) -> list:
    out = [None, v]
    for _ in range(2, n + 1):
        out.append(out[-1] * v)
    return out


def tp_evaluate(p: TracePoly, x, y, z):
    return p.evaluate(x, y, z)


# -- text format ------------------------------------------------------------


def _term_order(m: Monomial):
    # graded lexicographic with X > Y > Z, largest first
    return (-sum(m), tuple(-e for e in m))


def format_tracepoly(p: TracePoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for m, c in sorted(p.terms.items(), key=lambda item: _term_order(item[0])):
        factors = [
            (name if e == 1 else f"{name}^{e}")
            for name, e in zip("XYZ", m)
            if e > 0
        ]
        if not factors:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(abs(c))] + factors)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def parse_tracepoly(text: str) -> TracePoly:
    """Parse the printed form: terms like `2*X^2*Z - Y + 3`."""
    text = text.strip()
    if not text:
        raise ValueError("empty trace polynomial text")
    if text == "0":
        return TracePoly()
    # normalize to +/- separated terms
    chunks: list[tuple[int, str]] = []
    sign = 1
    token = ""
    for ch in text:
        if ch in "+-":
            if token.strip():
                chunks.append((sign, token.strip()))
            sign = 1 if ch == "+" else -1
            token = ""
        else:
            token += ch
    if token.strip():
        chunks.append((sign, token.strip()))
    out = TracePoly()
    for sgn, chunk in chunks:
        coeff = sgn
        mono = [0, 0, 0]
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in term {chunk!r}")
            if factor[0] in "XYZ":
                idx = "XYZ".index(factor[0])
                rest = factor[1:]
                if rest == "":
                    exp = 1
                elif rest.startswith("^"):
                    exp = int(rest[1:])
                else:
                    raise ValueError(f"bad variable factor {factor!r}")
                mono[idx] += exp
            else:
                coeff *= int(factor)
        out = out + TracePoly({tuple(mono): coeff})
    return out


# -- the Horowitz reduction ---------------------------------------------------

_TWO = TracePoly.constant(2)
_X = TracePoly.variable("X")
_Y = TracePoly.variable("Y")
_Z = TracePoly.variable("Z")

_A = (("a", 1),)
_B = (("b", 1),)
_AB = (("a", 1), ("b", 1))

# memo keyed on the canonical conjugacy representative (single-threaded use;
# results are value-identical regardless of fill order)
_memo: dict[tuple, TracePoly] = {}


def _canonical_key(w: Word) -> Word:
    """Smaller of the conjugacy representatives of w and w^-1."""
    c1 = cyclic_reduce(w)
    c2 = cyclic_reduce(invert(w))
    return c1 if c1.sort_key() <= c2.sort_key() else c2


def trace_polynomial(w: Word) -> TracePoly:
    rep = _canonical_key(w)
    key = rep.letters
    cached = _memo.get(key)
    if cached is not None:
        return cached
    result = _reduce_rep(rep)
    _memo[key] = result
    return result


def _reduce_rep(rep: Word) -> TracePoly:
    letters = rep.letters
    n = len(letters)
    if n == 0:
        return _TWO
    if n == 1:
        return _X if letters[0][0] == "a" else _Y
    if letters == _AB:
        return _Z

    # work with whichever of rep, rep^-1 has fewer inverse letters, so each
    # splitting step strictly decreases (length, inverse-letter count)
    neg = sum(1 for _, e in letters if e < 0)
    if 2 * neg > n:
        letters = invert(rep).letters
        neg = n - neg

    # adjacent equal letters (cyclically): split one letter off the block
    for i in range(n):
        j = (i + 1) % n
        if letters[i] == letters[j]:
            rotated = letters[i:] + letters[:i]
            head = Word([rotated[0]])
            tail = Word(rotated[1:])
            return (
                trace_polynomial(head) * trace_polynomial(tail)
                - trace_polynomial(concat(head, invert(tail)))
            )

    if neg:
        # alternating with an inverse letter: rotate it to the end and use
        # tr(U g^-1) = tr(U) tr(g) - tr(U g)
        i = next(idx for idx, (_, e) in enumerate(letters) if e < 0)
        rotated = letters[i + 1:] + letters[: i + 1]
        u = Word(rotated[:-1])
        gen = rotated[-1][0]
        g_pos = Word([(gen, 1)])
        return (
            trace_polynomial(u) * trace_polynomial(g_pos)
            - trace_polynomial(concat(u, g_pos))
        )

    # all-positive alternating word: a power of the syllable ab (up to
    # rotation); peel one syllable
    head = Word(letters[:2])
    tail = Word(letters[2:])
    return (
        trace_polynomial(head) * trace_polynomial(tail)
        - trace_polynomial(concat(head, invert(tail)))
    )


def clear_trace_memo() -> None:
    """Drop the memo table (used by tests to compare cold and cached runs)."""
    _memo.clear()

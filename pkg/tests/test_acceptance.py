"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

from frickelab.algebraic import (
    is_geometric_salem,
    is_salem,
    non_arithmeticity_report,
    salem_inverse_transform,
    salem_transform,
)
from frickelab.cli import main
from frickelab.fricke import (
    MARKOV,
    eliminate_by_resultants,
    eliminate_by_substitution,
    eliminate_pattern_system,
    sample_markov_point,
    solve_pattern_system,
)
from frickelab.poly import (
    UniPoly,
    NEG_INF,
    POS_INF,
    irreducible_over_Q,
    isolate_real_roots,
    refine_root,
    sturm_count,
)
from frickelab.tracering import TracePoly, trace_polynomial
from frickelab.variety import (
    IN,
    parse_variety_poly,
    pattern_member,
    trace_identity_suite,
)
from frickelab.words import Word, parse_word

from oracles import numeric_trace, random_sl2

QUINTIC = UniPoly([-4, 4, 3, -4, -2, 1])


@contextmanager
def criterion(number: int, label: str):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number}: FAIL - {label}")
        raise
    elapsed = time.monotonic() - start
    print(f"ACCEPTANCE {number}: PASS - {label} ({elapsed:.2f}s)")


def test_criterion_1_quintic_derivation():
    with criterion(1, "quintic coefficients and dual elimination routes, < 1 s"):
        start = time.monotonic()
        q = eliminate_pattern_system()
        assert q.coeffs == (-4, 4, 3, -4, -2, 1)
        sub = eliminate_by_substitution().primitive_part()
        res = eliminate_by_resultants().primitive_part()
        assert sub == res or sub == -res
        assert time.monotonic() - start < 1.0


def test_criterion_2_uniqueness_and_root_value():
    with criterion(2, "single real root, refined digits 2.91330, < 1 s"):
        start = time.monotonic()
        assert sturm_count(QUINTIC, NEG_INF, POS_INF) == 1
        iv = isolate_real_roots(QUINTIC)
        assert len(iv) == 1
        lo, hi = refine_root(QUINTIC, iv[0], Fraction(1, 10 ** 6))
        assert hi - lo < Fraction(1, 10 ** 6)
        assert int(lo * 10 ** 5) == int(hi * 10 ** 5) == 291330
        assert time.monotonic() - start < 1.0


def test_criterion_3_teichmuller_membership():
    with criterion(3, "solved point: y = x > 2, z > 2, residual width < 2^-96"):
        pt = solve_pattern_system(128)
        x, y, z = pt.coords
        assert (x - y).is_zero()
        assert x.cmp_rational(2) == 1
        assert z.cmp_rational(2) == 1
        residual = MARKOV.evaluate(*pt.coordinate_intervals(Fraction(1, 2 ** 128)))
        assert residual.contains_zero()
        assert residual.width() < Fraction(1, 2 ** 96)


def test_criterion_4_non_arithmeticity_certificate():
    with criterion(4, "witness prime <= 200, FullSymmetric(5) by bound 500, < 5 s"):
        start = time.monotonic()
        verdict = irreducible_over_Q(QUINTIC, 200)
        assert verdict.is_irreducible() and verdict.witness <= 200
        report = non_arithmeticity_report(QUINTIC, 500)
        cert = report.certificate
        assert cert is not None
        assert any(pat == (5,) for _, pat in cert.samples)
        assert any(
            sum(1 for d in pat if d == 2) == 1 and all(d % 2 == 1 for d in pat if d != 2)
            for _, pat in cert.samples
        )
        assert cert.conclusion == "FullSymmetric(5)"
        assert report.verdict == "NonArithmeticCertified"
        assert "non-arithmetic: certified" in report.to_text()
        assert time.monotonic() - start < 5.0


def test_criterion_5_universal_trace_identity():
    with criterion(5, "identity residual zero on 200 seeded pairs, broken poly fails, < 30 s"):
        start = time.monotonic()
        good = trace_identity_suite(200, 10, seed=2024)
        assert good.passed()
        broken = trace_identity_suite(200, 10, seed=2024, polynomial=parse_variety_poly("X1*X2 - X3", arity=4))
        assert not broken.passed()
        assert time.monotonic() - start < 30.0


def test_criterion_6_random_matrix_oracle():
    with criterion(6, "1000-word numeric trace oracle at 1e-9, commutator identity, < 60 s"):
        start = time.monotonic()
        rng = random.Random(31415)
        for _ in range(1000):
            w = Word([(rng.choice("ab"), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))])
            A, B = random_sl2(rng), random_sl2(rng)
            x = A[0][0] + A[1][1]
            y = B[0][0] + B[1][1]
            z = numeric_trace(parse_word("ab"), A, B)
            sym = trace_polynomial(w).evaluate(x, y, z)
            num = numeric_trace(w, A, B)
            assert abs(sym - num) <= 1e-9 * max(1.0, abs(num))
        X, Y, Z = (TracePoly.variable(v) for v in "XYZ")
        expected = X ** 2 + Y ** 2 + Z ** 2 - X * Y * Z - TracePoly.constant(2)
        assert trace_polynomial(parse_word("abAB")) == expected
        assert time.monotonic() - start < 60.0


def test_criterion_7_pattern_memberships():
    with criterion(7, "defining patterns In at solved point; 100 seeded samples all fail"):
        pt = solve_pattern_system(128)
        a, b, aa, aab = map(parse_word, ("a", "b", "aa", "aab"))
        assert pattern_member(a, b, pt) == IN
        assert pattern_member(aa, aab, pt) == IN
        rng = random.Random(777)
        seen = 0
        while seen < 100:
            x = Fraction(rng.randint(21, 120), 10)
            y = x if seen % 9 == 4 else Fraction(rng.randint(21, 120), 10)
            sample = sample_markov_point(x, y)
            if sample is None:
                continue
            seen += 1
            both = pattern_member(a, b, sample) == IN and pattern_member(aa, aab, sample) == IN
            assert not both


def test_criterion_8_salem_correspondence():
    with criterion(8, "Salem correspondence at desk scale with quadratic round trips"):
        assert is_geometric_salem(UniPoly([-3, -1, 1])).status == "GeometricSalem"
        assert is_salem(UniPoly([1, -1, -1, -1, 1])).status == "Salem"
        assert is_salem(UniPoly([1, 1, 1, 1, 1])).status == "NotSalem"
        assert is_geometric_salem(QUINTIC).status == "NotSalem"
        for lead in list(range(-9, 0)) + list(range(1, 10)):
            for mid in range(-9, 10):
                for const in range(-9, 10):
                    p = UniPoly([const, mid, lead])
                    if p.degree() != 2:
                        continue
                    if is_geometric_salem(p, prime_bound=60).status != "GeometricSalem":
                        continue
                    q = salem_transform(p)
                    assert salem_inverse_transform(q) == p
                    if p.lc() == 1:
                        assert is_salem(q).status == "Salem"


def test_criterion_9_verify_paper(capsys):
    with criterion(9, "verify-paper exits 0 with byte-identical machine output"):
        code1 = main(["verify-paper", "--machine", "--seed", "5"])
        out1 = capsys.readouterr().out
        code2 = main(["verify-paper", "--machine", "--seed", "5"])
        out2 = capsys.readouterr().out
        assert code1 == 0 and code2 == 0
        assert out1 == out2
        lines = out1.splitlines()
        assert len(lines) == 9
        assert all(line.endswith(": pass") for line in lines)

from math import comb
from random import Random

import mpmath
import pytest

from zdense.polynomials import (
    IntPoly,
    cyclotomic,
    discriminant,
    euler_phi,
    is_cyclotomic_product,
    is_reciprocal,
    l1_norm,
    mahler_bound,
    resultant,
    trace_polynomial,
)

X = IntPoly.monomial(1)


def test_normalization_and_degree():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).degree == -1
    assert IntPoly([5]).degree == 0
    assert IntPoly([0, 0, 1]).is_monic()


def test_divmod_monic():
    f = IntPoly([-1, 0, 0, 0, 1])  # x^4 - 1
    q, r = f.divmod_monic(IntPoly([-1, 1]))  # / (x - 1)
    assert r.is_zero()
    assert q == IntPoly([1, 1, 1, 1])
    with pytest.raises(ValueError):
        f.divmod_monic(IntPoly([1, 2]))


def test_l1_norm_examples():
    assert l1_norm(IntPoly([1, -3, 1])) == 5
    assert l1_norm(IntPoly()) == 0
    assert l1_norm(IntPoly([1, 1, 1, 1, 1])) == 5


def test_discriminant_examples():
    assert discriminant(IntPoly([1, 3, 1])) == 5  # b^2 - 4c
    assert discriminant(IntPoly([-1, -1, 0, 1])) == -23
    assert discriminant(IntPoly([1, -2, 1])) == 0  # (x-1)^2
    assert discriminant(IntPoly([0, 1])) == 1
    with pytest.raises(ValueError):
        discriminant(IntPoly([7]))
    with pytest.raises(ValueError):
        discriminant(IntPoly([1, 1, 2]))


def test_resultant_small():
    # res(x^2+3x+1, 2x+3) = 4 * f(-3/2) = -5
    assert resultant(IntPoly([1, 3, 1]), IntPoly([3, 2])) == -5
    # common factor
    assert resultant(IntPoly([-1, 0, 1]), IntPoly([-1, 1])) == 0
    # swap consistency: res(a,b) = (-1)^(deg a * deg b) res(b,a)
    a, b = IntPoly([1, 3, 1]), IntPoly([-2, 0, 0, 1])
    assert resultant(a, b) == resultant(b, a)  # 2*3 even


def _root_product_discriminant(f: IntPoly) -> float:
    mpmath.mp.dps = 60
    roots = mpmath.polyroots([mpmath.mpf(c) for c in reversed(f.coeffs)], maxsteps=200)
    prod = mpmath.mpf(1)
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            prod *= (roots[i] - roots[j]) ** 2
    return prod


def test_discriminant_matches_root_product_oracle():
    rng = Random(101)
    checked = 0
    while checked < 60:
        deg = rng.randrange(2, 6)
        f = IntPoly([rng.randrange(-9, 10) for _ in range(deg)] + [1])
        d = discriminant(f)
        if d == 0:
            continue
        approx = _root_product_discriminant(f)
        assert abs(abs(d) - abs(approx)) <= 1e-6 * abs(d)
        checked += 1


def test_mahler_bound_examples():
    assert mahler_bound(IntPoly([1, 0, 1])) == 16
    assert abs(discriminant(IntPoly([1, 0, 1]))) == 4
    assert mahler_bound(IntPoly([1, -3, 1])) == 100
    assert mahler_bound(IntPoly([0, 1])) == 1


def test_mahler_inequality_random():
    rng = Random(77)
    for _ in range(200):
        deg = rng.randrange(1, 9)
        f = IntPoly([rng.randrange(-9, 10) for _ in range(deg)] + [1])
        assert abs(discriminant(f)) <= mahler_bound(f)


def test_is_reciprocal():
    assert is_reciprocal(IntPoly([1, 1, 1, 1, 1]))
    assert not is_reciprocal(IntPoly([3, 2, 1]))
    assert is_reciprocal(IntPoly([1, 0, 0, 0, 1]))


def test_trace_polynomial_examples():
    assert trace_polynomial(IntPoly([1, 0, 1])) == X
    assert trace_polynomial(IntPoly([1, 0, 0, 0, 1])) == IntPoly([-2, 0, 1])
    assert trace_polynomial(IntPoly([1, 1, 1, 1, 1])) == IntPoly([-1, 1, 1])
    with pytest.raises(ValueError):
        trace_polynomial(IntPoly([1, 2, 1, 1]))  # odd degree
    with pytest.raises(ValueError):
        trace_polynomial(IntPoly([1, 2, 3, 2, 2]))  # not reciprocal
    with pytest.raises(ValueError):
        trace_polynomial(IntPoly([2, 2, 2, 2, 2]))  # not monic


def _expand_trace_identity(trace_poly: IntPoly, n: int) -> IntPoly:
    # x^n * F(x + 1/x) = sum_k F_k x^(n-k) (x^2+1)^k
    x2p1 = IntPoly([1, 0, 1])
    total = IntPoly()
    power = IntPoly([1])
    for k in range(trace_poly.degree + 1):
        total = total + trace_poly[k] * power * IntPoly.monomial(trace_poly.degree - k)
        power = power * x2p1
    return total


def test_trace_polynomial_identity_random():
    rng = Random(5)
    for _ in range(50):
        n = rng.randrange(1, 7)  # degree 2n <= 12
        mid = [rng.randrange(-9, 10) for _ in range(n)]  # a_1 .. a_n
        f = IntPoly([1] + mid + mid[:-1][::-1] + [1])
        assert is_reciprocal(f) and f.is_monic() and f.degree == 2 * n
        F = trace_polynomial(f)
        assert F.is_monic() and F.degree == n
        assert _expand_trace_identity(F, n) == f


def test_cyclotomic_examples():
    assert cyclotomic(1) == IntPoly([-1, 1])
    assert cyclotomic(4) == IntPoly([1, 0, 1])
    assert cyclotomic(6) == IntPoly([1, -1, 1])


def test_cyclotomic_divides_and_degree():
    for d in range(1, 51):
        phi_d = cyclotomic(d)
        assert phi_d.degree == euler_phi(d)
        assert phi_d.divides(IntPoly.monomial(d) - IntPoly([1]))


def test_is_cyclotomic_product_examples():
    assert is_cyclotomic_product(IntPoly([-1, 0, 1]))  # x^2 - 1
    assert not is_cyclotomic_product(IntPoly([-1, -1, 1]))  # golden ratio
    assert is_cyclotomic_product(IntPoly([-1, 3, -3, 1]))  # (x-1)^3
    with pytest.raises(ValueError):
        is_cyclotomic_product(IntPoly([1, 2]))  # not monic
    with pytest.raises(ValueError):
        is_cyclotomic_product(IntPoly([1]))


def test_cyclotomic_product_multiplicative():
    rng = Random(17)
    for _ in range(40):
        def random_poly():
            if rng.random() < 0.5:
                f = IntPoly([1])
                for _ in range(rng.randrange(1, 4)):
                    f = f * cyclotomic(rng.randrange(1, 13))
                return f
            deg = rng.randrange(1, 4)
            return IntPoly([rng.randrange(-5, 6) for _ in range(deg)] + [1])

        f, g = random_poly(), random_poly()
        assert is_cyclotomic_product(f * g) == (
            is_cyclotomic_product(f) and is_cyclotomic_product(g)
        )


def test_cyclotomic_product_coefficient_bound_shortcut():
    # products of cyclotomics obey |a_(n-k)| <= C(n, k); a huge coefficient
    # must be rejected without any division
    f = IntPoly([10**40, 0, 1])
    assert not is_cyclotomic_product(f)
    n = 6
    g = IntPoly([1])
    for _ in range(6):
        g = g * cyclotomic(1)
    assert all(abs(g[n - k]) <= comb(n, k) for k in range(n + 1))

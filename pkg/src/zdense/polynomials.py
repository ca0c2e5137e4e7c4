"""Exact integer polynomial arithmetic.

Discriminants via a subresultant polynomial remainder sequence, the
coefficient-sum norm and its discriminant bound, reciprocal structure and
trace polynomials, and cyclotomic-product detection.  Everything is done
over Z; coefficients may be arbitrarily large.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, constant term first, no trailing zeros.

    The zero polynomial is the empty coefficient tuple and has degree -1.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @staticmethod
    def monomial(k: int, c: int = 1) -> "IntPoly":
        return IntPoly([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def divmod_monic(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Long division by a monic divisor; exact over Z."""
        if not divisor.is_monic():
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPoly(), IntPoly(rem)
        quo = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                quo[i - dd] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * b
        return IntPoly(quo), IntPoly(rem)

    def divides(self, other: "IntPoly") -> bool:
        """True iff self (monic) divides other exactly."""
        return other.divmod_monic(self)[1].is_zero()

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = "" if abs(c) == 1 and i > 0 else str(abs(c))
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign} {mag}{term}".strip() if parts else f"{sign}{mag}{term}")
        return " ".join(parts)


ONE = IntPoly([1])


def l1_norm(f: IntPoly) -> int:
    """Sum of absolute values of the coefficients."""
    return sum(abs(c) for c in f.coeffs)


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: rem(lc(b)^(deg a - deg b + 1) * a, b), all over Z."""
    da, db = a.degree, b.degree
    lc = b.coeffs[-1]
    rem = list((a * lc ** (da - db + 1)).coeffs)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            assert c % lc == 0
            q = c // lc
            for j, bc in enumerate(b.coeffs):
                rem[i - db + j] -= q * bc
    return IntPoly(rem)


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Resultant of two nonzero integer polynomials (subresultant PRS).

    Intermediate divisions are exact over Z, so coefficient growth stays
    polynomial even when the inputs come from long random words.
    """
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of the zero polynomial")
    sign = 1
    if a.degree < b.degree:
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            sign = -sign
        a, b = b, a
    if b.degree == 0:
        return sign * b.coeffs[0] ** a.degree
    g = h = 1
    while b.degree > 0:
        delta = a.degree - b.degree
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            sign = -sign
        rem = _pseudo_rem(a, b)
        a = b
        divisor = g * h**delta
        b = IntPoly([c // divisor for c in rem.coeffs])
        g = a.coeffs[-1]
        if delta > 0:
            h = g**delta // h ** (delta - 1)
        if b.is_zero():
            return 0
    return sign * (b.coeffs[0] ** a.degree // h ** (a.degree - 1))


def discriminant(f: IntPoly) -> int:
    """Exact discriminant of a monic polynomial of positive degree.

    Sign convention: D(f) = (-1)^(n(n-1)/2) * Res(f, f').
    """
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs positive degree")
    if not f.is_monic():
        raise ValueError("discriminant implemented for monic polynomials")
    if n == 1:
        return 1
    res = resultant(f, f.derivative())
    return (-1) ** (n * (n - 1) // 2) * res


def mahler_bound(f: IntPoly) -> int:
    """Discriminant bound n^n * |f|_1^(2n-2); holds for monic f of degree n."""
    n = f.degree
    if n < 1:
        raise ValueError("bound needs positive degree")
    return n**n * l1_norm(f) ** (2 * n - 2)


def is_reciprocal(f: IntPoly) -> bool:
    """True iff the coefficient sequence reads the same in both directions."""
    c = f.coeffs
    return all(c[i] == c[len(c) - 1 - i] for i in range(len(c) // 2))


def trace_polynomial(f: IntPoly) -> IntPoly:
    """Degree-n polynomial F with x^n * F(x + 1/x) = f(x), for monic
    reciprocal f of even degree 2n.

    Uses the Chebyshev-style basis E_0 = 2, E_1 = z, E_(k+1) = z*E_k - E_(k-1)
    (E_k(x + 1/x) = x^k + x^-k), so F = a_n + sum_k a_(n-k) * E_k.
    """
    if not f.is_monic():
        raise ValueError("trace polynomial needs a monic input")
    if f.degree < 2 or f.degree % 2 != 0:
        raise ValueError("trace polynomial needs even degree >= 2")
    if not is_reciprocal(f):
        raise ValueError("trace polynomial needs a reciprocal input")
    n = f.degree // 2
    z = IntPoly.monomial(1)
    e_prev, e_cur = IntPoly([2]), z
    result = IntPoly([f[n]])
    for k in range(1, n + 1):
        result = result + f[n - k] * e_cur
        e_prev, e_cur = e_cur, z * e_cur - e_prev
    return result


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, by exact division of x^d - 1."""
    if d < 1:
        raise ValueError("d must be positive")
    num = IntPoly.monomial(d) - ONE
    for e in range(1, d):
        if d % e == 0:
            num, rem = num.divmod_monic(cyclotomic(e))
            assert rem.is_zero()
    return num


def euler_phi(d: int) -> int:
    phi, m = 1, d
    p = 2
    while p * p <= m:
        if m % p == 0:
            phi *= p - 1
            m //= p
            while m % p == 0:
                phi *= p
                m //= p
        p += 1
    if m > 1:
        phi *= m - 1
    return phi


def is_cyclotomic_product(f: IntPoly) -> bool:
    """True iff monic f is a product (with multiplicity) of cyclotomic
    polynomials, decided by trial division.

    Any cyclotomic factor Phi_d of f has phi(d) <= deg f, and phi(d) >
    sqrt(d/2), so scanning d <= 2*deg(f)^2 is exhaustive.
    """
    if not f.is_monic():
        raise ValueError("cyclotomic-product test needs a monic input")
    n = f.degree
    if n < 1:
        raise ValueError("cyclotomic-product test needs positive degree")
    # All roots of a cyclotomic product lie on the unit circle, so the
    # coefficients are bounded by binomials; rejects huge-word charpolys fast.
    if any(abs(f[n - k]) > math.comb(n, k) for k in range(n + 1)):
        return False
    rem = f
    for d in range(1, 2 * n * n + 1):
        if euler_phi(d) > rem.degree:
            continue
        phi_d = cyclotomic(d)
        while phi_d.degree <= rem.degree and phi_d.divides(rem):
            rem = rem.divmod_monic(phi_d)[0]
            if rem.degree == 0:
                return True
    return rem.degree == 0

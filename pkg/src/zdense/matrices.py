"""Exact integer matrix arithmetic for finitely generated subgroups of
SL(n,Z) and Sp(2n,Z): validation, characteristic polynomials, adjugate
inverses, and seeded random words over a symmetric generating set.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt
from random import Random
from typing import Iterable, Sequence

from .polynomials import IntPoly


@dataclass(frozen=True)
class Matrix:
    """Immutable square matrix with arbitrary-precision integer entries."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        if not rows:
            raise ValueError("matrix must be nonempty")
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __mul__(self, other: "Matrix") -> "Matrix":
        return multiply(self, other)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def frobenius_sq(self) -> int:
        return sum(v * v for row in self.rows for v in row)

    def flatten(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def max_abs_entry(self) -> int:
        return max(abs(v) for row in self.rows for v in row)

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(v) for v in row) for row in self.rows) + "]"


def multiply(a: Matrix, b: Matrix) -> Matrix:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    bt = list(zip(*b.rows))
    return Matrix(
        [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a.rows]
    )


def commutes(a: Matrix, b: Matrix) -> bool:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return multiply(a, b) == multiply(b, a)


def characteristic_polynomial(a: Matrix) -> IntPoly:
    """det(xI - A) by the Berkowitz iteration: division-free, O(dim^4)
    integer operations, no rational bookkeeping however large the entries.
    """
    n = a.dim
    rows = a.rows
    # p holds coefficients (leading first) for the leading principal k x k block.
    p = [1, -rows[0][0]]
    for k in range(1, n):
        akk = rows[k][k]
        left = rows[k][:k]
        above = [rows[i][k] for i in range(k)]
        # First column of the (k+2) x (k+1) Toeplitz factor:
        # [1, -a_kk, -left.above, -left.M.above, ..., -left.M^(k-1).above]
        toep = [1, -akk]
        v = list(left)
        for _ in range(k):
            toep.append(-sum(x * y for x, y in zip(v, above)))
            v = [sum(v[i] * rows[i][j] for i in range(k)) for j in range(k)]
        p = [
            sum(toep[i - j] * p[j] for j in range(max(0, i - k - 1), min(i, k) + 1))
            for i in range(k + 2)
        ]
    return IntPoly(list(reversed(p)))


def determinant(a: Matrix) -> int:
    # charpoly(0) = det(-A) = (-1)^n det(A)
    p = characteristic_polynomial(a)
    return (-1) ** a.dim * p[0]


def adjugate_inverse(a: Matrix) -> Matrix:
    """The adjugate of a determinant-1 matrix, i.e. its exact integer inverse.

    Cayley-Hamilton: A * (A^(n-1) + c_(n-1) A^(n-2) + ... + c_1 I) = -c_0 I,
    so one Berkowitz pass yields both the determinant check and the inverse.
    """
    n = a.dim
    p = characteristic_polynomial(a)
    det = (-1) ** n * p[0]
    if det != 1:
        raise ValueError(f"adjugate inverse needs det = 1, got {det}")
    ident = Matrix.identity(n)
    acc = ident
    for i in range(n - 1, 0, -1):
        ci = p[i]
        acc = multiply(a, acc)
        acc = Matrix(
            [
                [acc.rows[r][c] + (ci if r == c else 0) for c in range(n)]
                for r in range(n)
            ]
        )
    if n % 2 == 0:
        acc = Matrix([[-v for v in row] for row in acc.rows])
    return acc


class GroupKind(Enum):
    SPECIAL_LINEAR = "SL"
    SYMPLECTIC = "Sp"


def symplectic_form(dim: int) -> Matrix:
    """The standard form J = [[0, I], [-I, 0]] of even size dim."""
    n = dim // 2
    rows = [[0] * dim for _ in range(dim)]
    for i in range(n):
        rows[i][n + i] = 1
        rows[n + i][i] = -1
    return Matrix(rows)


@dataclass(frozen=True)
class GeneratorSet:
    """Validated generators of a subgroup of SL(dim,Z) or Sp(dim,Z), with
    their precomputed inverses and the ceiling of the largest Frobenius norm.
    """

    kind: GroupKind
    dim: int
    generators: tuple[Matrix, ...]
    inverses: tuple[Matrix, ...]
    norm_bound: int

    @property
    def alphabet(self) -> tuple[Matrix, ...]:
        """The symmetric alphabet {g_i} U {g_i^-1}."""
        return self.generators + self.inverses


def validate(
    kind: GroupKind, dim: int, generators: Sequence[Matrix]
) -> GeneratorSet:
    """Check every group invariant and build the GeneratorSet.

    Rejects: empty input, wrong sizes, det != 1, odd symplectic dimension,
    and symplectic-form violations g^T J g != J.
    """
    if dim < 1:
        raise ValueError("dimension must be positive")
    if kind is GroupKind.SYMPLECTIC and (dim < 2 or dim % 2 != 0):
        raise ValueError("symplectic dimension must be even and >= 2")
    generators = tuple(generators)
    if not generators:
        raise ValueError("at least one generator required")
    j = symplectic_form(dim) if kind is GroupKind.SYMPLECTIC else None
    inverses = []
    norm_bound = 1
    for idx, g in enumerate(generators):
        if g.dim != dim:
            raise ValueError(f"generator {idx} has size {g.dim}, expected {dim}")
        try:
            inverses.append(adjugate_inverse(g))
        except ValueError as exc:
            raise ValueError(f"generator {idx}: {exc}") from None
        if j is not None and multiply(multiply(g.transpose(), j), g) != j:
            raise ValueError(f"generator {idx} does not preserve the symplectic form")
        fsq = g.frobenius_sq()
        root = isqrt(fsq)
        norm_bound = max(norm_bound, root if root * root == fsq else root + 1)
    return GeneratorSet(kind, dim, generators, tuple(inverses), norm_bound)


def random_word_letters(gs: GeneratorSet, length: int, rng: Random) -> tuple[int, ...]:
    """Uniform i.i.d. letters indexing the symmetric alphabet."""
    if length < 1:
        raise ValueError("word length must be positive")
    size = 2 * len(gs.generators)
    return tuple(rng.randrange(size) for _ in range(length))


def word_from_letters(gs: GeneratorSet, letters: Sequence[int]) -> Matrix:
    alphabet = gs.alphabet
    acc = Matrix.identity(gs.dim)
    for letter in letters:
        acc = multiply(acc, alphabet[letter])
    return acc


def random_word(gs: GeneratorSet, length: int, rng: Random) -> Matrix:
    """Product of `length` uniform draws from {g_i} U {g_i^-1}; deterministic
    for a fixed rng state."""
    return word_from_letters(gs, random_word_letters(gs, length, rng))

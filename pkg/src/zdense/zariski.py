"""Zariski-density deciders for subgroups of SL(n,Z) and Sp(2n,Z).

Two routes: the Weyl-group route (two random words must both carry the
generic Galois group of the ambient group, plus a standard-representation
irreducibility gate in the symplectic case) and the general route (one
random word of infinite order plus irreducibility of the adjoint action on
the Lie algebra).  TRUE answers are certificate-backed and certain; FALSE
answers are Monte Carlo with the requested bound unless the failure itself
is structural (a reducible action can never be dense).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from random import Random
from typing import Sequence

from . import kernels
from .galois import GaloisVerdict, as_epsilon, is_hyperoctahedral, is_sn
from .galois import DEFAULT_PRIME_RANGE
from .matrices import (
    GeneratorSet,
    GroupKind,
    Matrix,
    characteristic_polynomial,
    commutes,
    multiply,
    random_word_letters,
    word_from_letters,
)
from .modular import random_prime_avoiding
from .polynomials import is_cyclotomic_product

DEFAULT_WORD_CONSTANT = Fraction(10)
_RANK_PRIME_RANGE = (1 << 61, 1 << 62)


class Certainty(Enum):
    CERTAIN = "certain"
    MONTE_CARLO = "monte_carlo"


@dataclass(frozen=True)
class DensityVerdict:
    """dense=True is always Certain; dense=False is wrong with probability
    at most epsilon (and may itself be Certain when the obstruction is
    structural).  The trail records every step for reproduction."""

    dense: bool
    certainty: Certainty
    epsilon: Fraction
    trail: tuple[dict, ...]

    def to_json(self) -> dict:
        return {
            "dense": self.dense,
            "certainty": self.certainty.value,
            "epsilon": str(self.epsilon),
            "trail": [dict(step) for step in self.trail],
        }


@dataclass(frozen=True)
class IrreducibilityResult:
    """Outcome of the matrix-algebra span loop; both answers are exact."""

    irreducible: bool
    certain: bool
    algebra_dimension: int


def word_length(eps, word_constant=DEFAULT_WORD_CONSTANT) -> int:
    """Sampled word length: max(16, ceil(c * ln(1/eps))).

    Exponential-convergence theory guarantees some length linear in
    log(1/eps) suffices; the constant is an empirical knob.
    """
    eps = as_epsilon(eps)
    c = Fraction(word_constant)
    if c <= 0:
        raise ValueError("word constant must be positive")
    log_inv = math.log(eps.denominator) - math.log(eps.numerator)
    return max(16, math.ceil(float(c) * log_inv))


def _bareiss_rank(rows: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Exact rank over Q by fraction-free elimination, plus the original
    indices of the rows swapped into pivot position."""
    a = [list(map(int, r)) for r in rows]
    idx = list(range(len(a)))
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    prev = 1
    pivots = []
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        idx[rank], idx[piv] = idx[piv], idx[rank]
        prow = a[rank]
        pval = prow[col]
        for i in range(rank + 1, m):
            ri = a[i]
            ric = ri[col]
            # rows with a zero in the pivot column still rescale by pval/prev
            for j in range(col + 1, n):
                ri[j] = (pval * ri[j] - ric * prow[j]) // prev
            ri[col] = 0
        prev = pval
        rank += 1
        pivots.append(idx[rank - 1])
        if rank == m:
            break
    return rank, sorted(pivots)


def is_irreducible_algebra(
    mats: Sequence[Matrix], dim: int, rng: Random | None = None
) -> IrreducibilityResult:
    """Does the unital algebra generated by `mats` fill all of the dim x dim
    matrices?  By Burnside, that is equivalent to the group acting
    irreducibly over C.

    Grows span(I) by left multiplication until the dimension stabilizes or
    hits dim^2.  Ranks go through a random 62-bit prime first (full rank
    mod p certifies full rank over Q); any stabilization verdict is
    re-verified by exact fraction-free elimination, so both outcomes are
    certain.
    """
    if dim < 1:
        raise ValueError("dimension must be positive")
    for m in mats:
        if m.dim != dim:
            raise ValueError(f"matrix of size {m.dim} in a dim-{dim} problem")
    if rng is None:
        rng = Random(0x5EED)
    target = dim * dim
    p = random_prime_avoiding(1, _RANK_PRIME_RANGE[0], _RANK_PRIME_RANGE[1], rng)
    basis = [Matrix.identity(dim)]
    rank = 1
    while True:
        cands = list(basis)
        for g in mats:
            for b in basis:
                cands.append(multiply(g, b))
        vecs = [c.flatten() for c in cands]
        rank_p, kept = kernels.rank_mod(vecs, p)
        if rank_p == target:
            return IrreducibilityResult(True, True, target)
        if rank_p > rank:
            basis = [cands[i] for i in kept]
            rank = rank_p
            continue
        # Apparent stabilization mod p: settle it exactly.
        rank_exact, kept_exact = _bareiss_rank(vecs)
        if rank_exact == target:
            return IrreducibilityResult(True, True, target)
        if rank_exact == rank:
            # span(basis) is closed under every generator and contains I:
            # it is the whole algebra, and it is too small.
            return IrreducibilityResult(False, True, rank_exact)
        basis = [cands[i] for i in kept_exact]
        rank = rank_exact


def lie_algebra_dimension(kind: GroupKind, dim: int) -> int:
    if kind is GroupKind.SPECIAL_LINEAR:
        return dim * dim - 1
    m = dim // 2
    return m * (2 * m + 1)


def _unit(dim: int, cells) -> Matrix:
    rows = [[0] * dim for _ in range(dim)]
    for (i, j, v) in cells:
        rows[i][j] = v
    return Matrix(rows)


def lie_algebra_basis(kind: GroupKind, dim: int) -> tuple[Matrix, ...]:
    """Fixed integer basis of the Lie algebra.

    SL(n): E_ij (i<j), then E_11-E_22, ..., then E_ij (i>j); for n = 2 this
    is the classical (e, h, f).  Sp(2m): top-left units paired with their
    negated transposes, then the symmetric upper-right units, then the
    symmetric lower-left units.  Coordinates of any member are read off
    entrywise, so adjoint matrices stay integral.
    """
    if kind is GroupKind.SPECIAL_LINEAR:
        if dim == 1:
            raise ValueError("SL(1) has a trivial Lie algebra")
        upper = [
            _unit(dim, [(i, j, 1)]) for i in range(dim) for j in range(dim) if i < j
        ]
        diag = [
            _unit(dim, [(i, i, 1), (i + 1, i + 1, -1)]) for i in range(dim - 1)
        ]
        lower = [
            _unit(dim, [(i, j, 1)]) for i in range(dim) for j in range(dim) if i > j
        ]
        return tuple(upper + diag + lower)
    m = dim // 2
    a_part = [
        _unit(dim, [(a, b, 1), (m + b, m + a, -1)])
        for a in range(m)
        for b in range(m)
    ]
    b_part = [
        _unit(dim, [(a, m + b, 1)] if a == b else [(a, m + b, 1), (b, m + a, 1)])
        for a in range(m)
        for b in range(a, m)
    ]
    c_part = [
        _unit(dim, [(m + a, b, 1)] if a == b else [(m + a, b, 1), (m + b, a, 1)])
        for a in range(m)
        for b in range(a, m)
    ]
    return tuple(a_part + b_part + c_part)


def _lie_coordinates(kind: GroupKind, dim: int, y: Matrix) -> list[int]:
    rows = y.rows
    if kind is GroupKind.SPECIAL_LINEAR:
        coords = [rows[i][j] for i in range(dim) for j in range(dim) if i < j]
        partial = 0
        for i in range(dim - 1):
            partial += rows[i][i]
            coords.append(partial)
        coords.extend(rows[i][j] for i in range(dim) for j in range(dim) if i > j)
        return coords
    m = dim // 2
    coords = [rows[a][b] for a in range(m) for b in range(m)]
    coords.extend(rows[a][m + b] for a in range(m) for b in range(a, m))
    coords.extend(rows[m + a][b] for a in range(m) for b in range(a, m))
    return coords


def adjoint_matrices(gs: GeneratorSet) -> list[Matrix]:
    """For each generator g, the matrix of X -> g X g^-1 on the fixed Lie
    algebra basis.  Entries are exact integers because the inverses are."""
    basis = lie_algebra_basis(gs.kind, gs.dim)
    out = []
    for g, g_inv in zip(gs.generators, gs.inverses):
        columns = [
            _lie_coordinates(gs.kind, gs.dim, multiply(multiply(g, b), g_inv))
            for b in basis
        ]
        out.append(Matrix(list(zip(*columns))))
    return out


def _galois_certificate(kind: GroupKind, f, eps, rng, prime_range) -> GaloisVerdict:
    if kind is GroupKind.SPECIAL_LINEAR:
        return is_sn(f, eps, rng, prime_range)
    return is_hyperoctahedral(f, eps, rng, prime_range)


def zariski_dense(
    gs: GeneratorSet,
    eps,
    rng: Random,
    word_constant=DEFAULT_WORD_CONSTANT,
    prime_range: tuple[int, int] = DEFAULT_PRIME_RANGE,
) -> DensityVerdict:
    """Weyl-group route.

    Sample two random words; FALSE if they commute; both characteristic
    polynomials must carry the generic Galois group (S_n for SL, the signed
    permutations for Sp), each certified with half the error budget; in
    dimension 2 the certified words must additionally have non-cyclotomic
    characteristic polynomial (infinite order); for Sp the standard action
    must be irreducible.  Any surviving input generates a dense subgroup.
    """
    eps = as_epsilon(eps)
    trail: list[dict] = []
    if gs.dim == 1:
        # SL(1) is the trivial group: every subgroup is all of it.
        trail.append({"step": "trivial_group", "dense": True})
        return DensityVerdict(True, Certainty.CERTAIN, eps, tuple(trail))
    n = word_length(eps, word_constant)
    words = []
    for index in (1, 2):
        letters = random_word_letters(gs, n, rng)
        words.append(word_from_letters(gs, letters))
        trail.append(
            {"step": "sample_word", "word": index, "length": n, "letters": list(letters)}
        )
    w1, w2 = words
    commuting = commutes(w1, w2)
    trail.append({"step": "commutation_check", "commute": commuting})
    if commuting:
        return DensityVerdict(False, Certainty.MONTE_CARLO, eps, tuple(trail))
    for index, w in ((1, w1), (2, w2)):
        f = characteristic_polynomial(w)
        verdict = _galois_certificate(gs.kind, f, eps / 2, rng, prime_range)
        trail.append(
            {
                "step": "galois_certificate",
                "word": index,
                "charpoly": list(f.coeffs),
                "verdict": verdict.to_json(),
            }
        )
        if not verdict.confirmed:
            return DensityVerdict(False, Certainty.MONTE_CARLO, eps, tuple(trail))
        if gs.dim == 2:
            # An abelian Weyl group cannot rule out finite order by itself.
            cyclotomic = is_cyclotomic_product(f)
            trail.append(
                {"step": "finite_order_guard", "word": index, "cyclotomic": cyclotomic}
            )
            if cyclotomic:
                return DensityVerdict(False, Certainty.MONTE_CARLO, eps, tuple(trail))
    if gs.kind is GroupKind.SYMPLECTIC:
        result = is_irreducible_algebra(gs.generators, gs.dim, rng)
        trail.append(
            {
                "step": "standard_rep_irreducibility",
                "irreducible": result.irreducible,
                "algebra_dimension": result.algebra_dimension,
            }
        )
        if not result.irreducible:
            # A reducible action can never be dense: this NO is structural.
            return DensityVerdict(False, Certainty.CERTAIN, eps, tuple(trail))
    return DensityVerdict(True, Certainty.CERTAIN, eps, tuple(trail))


def general_zariski_dense(
    gs: GeneratorSet,
    eps,
    rng: Random,
    word_constant=DEFAULT_WORD_CONSTANT,
    prime_range: tuple[int, int] = DEFAULT_PRIME_RANGE,
) -> DensityVerdict:
    """Adjoint route: FALSE on a cyclotomic-product characteristic polynomial
    of one random word (finite-order suspicion, Monte Carlo), else TRUE iff
    the adjoint action on the Lie algebra is irreducible.

    The cyclotomic gate can misfire on unipotent words of infinite order
    (charpoly (x-1)^n); that stays within the one-sided contract and the
    witness is surfaced in the trail.
    """
    eps = as_epsilon(eps)
    trail: list[dict] = []
    if gs.dim == 1:
        trail.append({"step": "trivial_group", "dense": True})
        return DensityVerdict(True, Certainty.CERTAIN, eps, tuple(trail))
    n = word_length(eps, word_constant)
    letters = random_word_letters(gs, n, rng)
    w = word_from_letters(gs, letters)
    trail.append({"step": "sample_word", "word": 1, "length": n, "letters": list(letters)})
    f = characteristic_polynomial(w)
    cyclotomic = is_cyclotomic_product(f)
    trail.append(
        {"step": "cyclotomic_check", "charpoly": list(f.coeffs), "cyclotomic": cyclotomic}
    )
    if cyclotomic:
        return DensityVerdict(False, Certainty.MONTE_CARLO, eps, tuple(trail))
    adjoint = adjoint_matrices(gs)
    result = is_irreducible_algebra(adjoint, lie_algebra_dimension(gs.kind, gs.dim), rng)
    trail.append(
        {
            "step": "adjoint_irreducibility",
            "irreducible": result.irreducible,
            "algebra_dimension": result.algebra_dimension,
        }
    )
    if not result.irreducible:
        return DensityVerdict(False, Certainty.CERTAIN, eps, tuple(trail))
    return DensityVerdict(True, Certainty.CERTAIN, eps, tuple(trail))

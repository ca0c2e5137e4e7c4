"""One-sided Monte Carlo certifiers for "large" Galois groups.

Factoring f modulo sampled primes yields cycle types of Galois elements
(Frobenius density); the certifiers combine those cycle types into
group-theoretic certificates.  A YES answer is always certificate-backed
and therefore certain:

* empty intersection of cycle-type sumsets  => invariably transitive
  => f irreducible over Q;
* transitive + primitive + a transposition  => the full symmetric group;
* transitive + primitive + a long prime cycle + non-square discriminant
  => the full symmetric group (degree >= 13 route);
* trace polynomial certified S_n + a transposition pattern on f itself
  => the full hyperoctahedral group for reciprocal f.

Cycle types sampled at different primes are all realized inside the one
Galois group of f, so certificates gathered from different primes compose
freely.

A NO answer only says the sampling budget for the requested error bound
was exhausted; it is wrong with probability at most eps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from random import Random
from typing import Iterable

from .modular import factor_degrees_mod, is_prime, random_prime_avoiding
from .polynomials import IntPoly, discriminant, is_reciprocal, trace_polynomial

DEFAULT_PRIME_RANGE = (1 << 20, 1 << 21)

# Asymptotic density of odd-order elements in S_n is ~0.8/sqrt(n); feeding it
# into the trial budgets is a calibration choice, not a correctness input.
ODD_ORDER_DENSITY_CONSTANT = 0.8


class GaloisAnswer(Enum):
    CONFIRMED_SN = "confirmed_sn"
    CONFIRMED_HYPEROCTAHEDRAL = "confirmed_hyperoctahedral"
    IRREDUCIBLE = "irreducible"
    NOT_GENERIC = "not_generic"


@dataclass(frozen=True)
class GaloisVerdict:
    """Decision record: YES answers are certain, NO answers carry the error
    bound honored by the trial budget.  Every witness (q, degrees) reproduces
    under factor_degrees_mod of the polynomial the verdict is about."""

    answer: GaloisAnswer
    epsilon: Fraction
    witnesses: tuple[tuple[int, tuple[int, ...]], ...]
    trials_used: int

    @property
    def confirmed(self) -> bool:
        return self.answer in (
            GaloisAnswer.CONFIRMED_SN,
            GaloisAnswer.CONFIRMED_HYPEROCTAHEDRAL,
            GaloisAnswer.IRREDUCIBLE,
        )

    def to_json(self) -> dict:
        return {
            "answer": self.answer.value,
            "epsilon": str(self.epsilon),
            "trials_used": self.trials_used,
            "witnesses": [
                {"prime": q, "degrees": list(d)} for q, d in self.witnesses
            ],
        }


def as_epsilon(eps) -> Fraction:
    """Normalize an error bound to an exact Fraction in (0, 1)."""
    if isinstance(eps, float):
        eps = Fraction(str(eps))
    else:
        eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {eps}")
    return eps


def _log_inv(eps: Fraction) -> float:
    # ln(1/eps) without floating underflow for tiny eps
    return math.log(eps.denominator) - math.log(eps.numerator)


def trials_invariable_transitivity(eps) -> int:
    """Blocks of 4 samples each fail to certify with probability <= 1/20."""
    return 4 * math.ceil(_log_inv(as_epsilon(eps)) / math.log(20))


def trials_transposition(n_blocks: int, eps) -> int:
    """Budget against the ~c/(2 sqrt(n-1)) density of elements with one
    2-cycle and all other cycles odd."""
    root = math.sqrt(max(n_blocks, 3) - 1)
    return math.ceil(2 * root / ODD_ORDER_DENSITY_CONSTANT * _log_inv(as_epsilon(eps)))


def trials_long_prime_cycle(n: int, eps) -> int:
    """Budget against the ~log2/log n density of long-prime-cycle elements."""
    return math.ceil(math.log(n) / math.log(2) * _log_inv(as_epsilon(eps)))


def sumset(parts: Iterable[int]) -> frozenset[int]:
    """All proper nonempty subset sums of a partition, excluding 0 and the
    total; O(n^2) dynamic program."""
    parts = list(parts)
    if not parts:
        raise ValueError("partition must be nonempty")
    total = sum(parts)
    sums = {0}
    for x in parts:
        sums |= {s + x for s in sums}
    return frozenset(sums - {0, total})


def has_transposition_pattern(degrees: Iterable[int]) -> bool:
    """Exactly one 2 and every other entry odd: the element's power by the
    lcm of the odd cycles is a transposition."""
    degrees = list(degrees)
    return degrees.count(2) == 1 and all(d % 2 == 1 for d in degrees if d != 2)


def has_long_prime_cycle(degrees: Iterable[int], n: int, upper_slack: int) -> bool:
    """Some prime entry l with n/2 < l < n - upper_slack.

    Raising the element to the lcm of its other cycles leaves a bare l-cycle,
    which forces primitivity and (inside the window) A_n-or-S_n.  The widened
    small-degree window n/2 < l <= n is upper_slack = -1.
    """
    return any(
        2 * l > n and l < n - upper_slack and is_prime(l) for l in degrees if l >= 2
    )


def _sample(f, disc, rng, prime_range):
    q = random_prime_avoiding(disc, prime_range[0], prime_range[1], rng)
    return q, factor_degrees_mod(f, q)


def _window_has_prime(n: int, upper_slack: int) -> bool:
    """Does the cycle-length window n/2 < l < n - upper_slack contain a
    prime?  Empty for n in {14, 15, 16} at slack 5 (and {14, 15} at slack 4),
    where the long-cycle certificate is structurally unavailable."""
    return any(is_prime(l) for l in range(n // 2 + 1, n - upper_slack) if l >= 2)


def is_transitive(
    f: IntPoly,
    eps,
    rng: Random,
    prime_range: tuple[int, int] = DEFAULT_PRIME_RANGE,
) -> GaloisVerdict:
    """Certify irreducibility over Q or report "not the symmetric group".

    Keeps the running intersection of cycle-type sumsets; an empty
    intersection means the sampled classes are invariably transitive, so the
    Galois group is transitive and f has no rational factor (certain).
    """
    eps = as_epsilon(eps)
    n = f.degree
    if n < 1 or not f.is_monic():
        raise ValueError("need a monic polynomial of positive degree")
    disc = discriminant(f)
    if disc == 0:
        raise ValueError("discriminant is zero")
    survivors = set(range(1, n))
    witnesses = []
    budget = trials_invariable_transitivity(eps)
    for trial in range(1, budget + 1):
        q, degrees = _sample(f, disc, rng, prime_range)
        witnesses.append((q, degrees))
        survivors &= sumset(degrees)
        if not survivors:
            return GaloisVerdict(
                GaloisAnswer.IRREDUCIBLE, eps, tuple(witnesses), trial
            )
    return GaloisVerdict(GaloisAnswer.NOT_GENERIC, eps, tuple(witnesses), budget)


def is_sn(
    f: IntPoly,
    eps,
    rng: Random,
    prime_range: tuple[int, int] = DEFAULT_PRIME_RANGE,
) -> GaloisVerdict:
    """Decide whether the Galois group of f is the full symmetric group.

    Pipeline: transitivity, then primitivity evidence, then either a
    transposition pattern (degree < 13) or square-discriminant rejection
    plus a long prime cycle (degree >= 13).  The error budget is split
    evenly across the three sampling stages.  A zero discriminant is an
    immediate NO: a polynomial with repeated roots has no S_n action on
    distinct roots.
    """
    eps = as_epsilon(eps)
    n = f.degree
    if n < 1 or not f.is_monic():
        raise ValueError("need a monic polynomial of positive degree")
    disc = discriminant(f)
    if disc == 0:
        return GaloisVerdict(GaloisAnswer.NOT_GENERIC, eps, (), 0)

    if n <= 2:
        # S_1 is trivial and S_2 = C_2: irreducibility alone decides.
        sub = is_transitive(f, eps, rng, prime_range)
        answer = (
            GaloisAnswer.CONFIRMED_SN
            if sub.answer is GaloisAnswer.IRREDUCIBLE
            else GaloisAnswer.NOT_GENERIC
        )
        return GaloisVerdict(answer, eps, sub.witnesses, sub.trials_used)

    stage_eps = eps / 3
    sub = is_transitive(f, stage_eps, rng, prime_range)
    witnesses = list(sub.witnesses)
    trials = sub.trials_used
    if sub.answer is not GaloisAnswer.IRREDUCIBLE:
        return GaloisVerdict(GaloisAnswer.NOT_GENERIC, eps, tuple(witnesses), trials)

    # Primitivity evidence.  Transitive groups of prime degree are primitive;
    # otherwise hunt for a long prime cycle.  Any prime cycle longer than n/2
    # forces primitivity, so the window widens to n/2 < l <= n whenever the
    # strict one holds no prime (always below degree 13, and at 14 and 15).
    if not is_prime(n):
        slack = 4 if n >= 13 and _window_has_prime(n, 4) else -1
        found = False
        for _ in range(trials_long_prime_cycle(n, stage_eps)):
            q, degrees = _sample(f, disc, rng, prime_range)
            witnesses.append((q, degrees))
            trials += 1
            if has_long_prime_cycle(degrees, n, slack):
                found = True
                break
        if not found:
            return GaloisVerdict(
                GaloisAnswer.NOT_GENERIC, eps, tuple(witnesses), trials
            )

    if n < 13:
        for _ in range(trials_transposition(n, stage_eps)):
            q, degrees = _sample(f, disc, rng, prime_range)
            witnesses.append((q, degrees))
            trials += 1
            if has_transposition_pattern(degrees):
                return GaloisVerdict(
                    GaloisAnswer.CONFIRMED_SN, eps, tuple(witnesses), trials
                )
        return GaloisVerdict(GaloisAnswer.NOT_GENERIC, eps, tuple(witnesses), trials)

    # Degree >= 13: a square discriminant means the group sits inside A_n.
    root = math.isqrt(abs(disc))
    if disc > 0 and root * root == disc:
        return GaloisVerdict(GaloisAnswer.NOT_GENERIC, eps, tuple(witnesses), trials)
    if not _window_has_prime(n, 5):
        # degrees 14..16: no prime fits the long-cycle certificate, so use
        # the transposition certificate, which is sound at every degree
        for _ in range(trials_transposition(n, stage_eps)):
            q, degrees = _sample(f, disc, rng, prime_range)
            witnesses.append((q, degrees))
            trials += 1
            if has_transposition_pattern(degrees):
                return GaloisVerdict(
                    GaloisAnswer.CONFIRMED_SN, eps, tuple(witnesses), trials
                )
        return GaloisVerdict(GaloisAnswer.NOT_GENERIC, eps, tuple(witnesses), trials)
    for _ in range(trials_long_prime_cycle(n, stage_eps)):
        q, degrees = _sample(f, disc, rng, prime_range)
        witnesses.append((q, degrees))
        trials += 1
        if has_long_prime_cycle(degrees, n, 5):
            return GaloisVerdict(
                GaloisAnswer.CONFIRMED_SN, eps, tuple(witnesses), trials
            )
    return GaloisVerdict(GaloisAnswer.NOT_GENERIC, eps, tuple(witnesses), trials)


def is_hyperoctahedral(
    f: IntPoly,
    eps,
    rng: Random,
    prime_range: tuple[int, int] = DEFAULT_PRIME_RANGE,
) -> GaloisVerdict:
    """Decide whether the Galois group of a monic reciprocal polynomial of
    degree 2n is the full group of signed permutations C_2 wr S_n.

    The group surjects onto S_n iff the trace polynomial has Galois group
    S_n; together with a transposition (a one-2-rest-odd pattern on f
    itself) that pins down the whole wreath product.  Half the budget goes
    to each stage.  Witnesses recorded on the verdict are the ones sampled
    against f; the trace-stage witnesses belong to the trace polynomial and
    only its trial count is carried over.
    """
    eps = as_epsilon(eps)
    if not f.is_monic():
        raise ValueError("need a monic polynomial")
    if f.degree < 2 or f.degree % 2 != 0:
        raise ValueError("need even degree >= 2")
    if not is_reciprocal(f):
        raise ValueError("need a reciprocal polynomial")
    disc = discriminant(f)
    if disc == 0:
        return GaloisVerdict(GaloisAnswer.NOT_GENERIC, eps, (), 0)
    # A squarefree reciprocal polynomial of even degree cannot vanish at +-1
    # (those roots would be double), so its roots honestly split into pairs
    # r, 1/r and the Galois group embeds in the hyperoctahedral group.
    half = f.degree // 2
    stage_eps = eps / 2
    projection = is_sn(trace_polynomial(f), stage_eps, rng, prime_range)
    trials = projection.trials_used
    if projection.answer is not GaloisAnswer.CONFIRMED_SN:
        return GaloisVerdict(GaloisAnswer.NOT_GENERIC, eps, (), trials)

    witnesses = []
    for _ in range(trials_transposition(half, stage_eps)):
        q, degrees = _sample(f, disc, rng, prime_range)
        witnesses.append((q, degrees))
        trials += 1
        if has_transposition_pattern(degrees):
            return GaloisVerdict(
                GaloisAnswer.CONFIRMED_HYPEROCTAHEDRAL, eps, tuple(witnesses), trials
            )
    return GaloisVerdict(GaloisAnswer.NOT_GENERIC, eps, tuple(witnesses), trials)

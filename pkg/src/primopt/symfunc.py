"""Complete homogeneous symmetric sums over prime weights, and the identity
checks tying them to level sets of the restricted semigroup.

The degree-k sum over weights (x_1..x_m) equals the weighted sum over the
set of semigroup elements with exactly k prime factors, at x_i = p_i^-t.
Everything is a finite positive sum, so the rolling-row DP is numerically
stable; the only cancellations happen inside the explicit residual checks,
which use relative tolerances sized for binary64.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Union

from .analytic import HOLDS, INCONCLUSIVE, FAILS, VerificationReport
from .primes import PrimeSet, omega

Number = Union[float, Fraction]

# Exact-fraction mode is intended for small instances only.
_EXACT_MAX_PRIMES = 6
_EXACT_MAX_DEGREE = 10

REL_TOL = 1e-12


def _check_weights(xs: Sequence[Number]) -> None:
    for x in xs:
        if not (0 < x < 1):
            raise ValueError(f"weight {x} outside (0, 1)")


def weights_from_primes(prime_set: PrimeSet, t: float) -> list[float]:
    """Weight vector p^-t per prime, in prime-set order."""
    if t <= 0:
        raise ValueError("t must be positive")
    return [float(p) ** (-t) for p in prime_set]


def exact_weights_from_primes(prime_set: PrimeSet, t: int) -> list[Fraction]:
    if t < 1 or int(t) != t:
        raise ValueError("exact weights need a positive integer t")
    return [Fraction(1, p ** int(t)) for p in prime_set]


def h_all(xs: Sequence[Number], kmax: int) -> list[Number]:
    """h_0..h_kmax of the weight vector: h_k sums all degree-k monomials
    with non-decreasing indices.

    Rolling-row DP over variables: after processing i variables the row
    holds the sums restricted to those variables.  O(m * kmax) time,
    O(kmax) memory.  Works on floats and Fractions alike.
    """
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    row: list[Number] = [1] + [0] * kmax
    for x in xs:
        for k in range(1, kmax + 1):
            row[k] = row[k] + x * row[k - 1]
    return row


def sigma_nk(
    prime_set: PrimeSet, t: float, k: int, exact: bool = False
) -> Number:
    """Weighted sum over the level-k slice of the semigroup: h_k at p^-t."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if exact:
        if len(prime_set) > _EXACT_MAX_PRIMES or k > _EXACT_MAX_DEGREE:
            raise ValueError(
                "exact mode supports at most "
                f"{_EXACT_MAX_PRIMES} primes and degree {_EXACT_MAX_DEGREE}"
            )
        xs: Sequence[Number] = exact_weights_from_primes(prime_set, int(t))
    else:
        xs = weights_from_primes(prime_set, t)
    return h_all(xs, k)[k]


def schur_check(xs: Sequence[Number], kmax: int) -> tuple[bool, Optional[int]]:
    """Log-concavity of the h-sequence: h_{k+1}^2 - h_k h_{k+2} >= 0
    (up to relative rounding slack) for 0 <= k < kmax.

    Returns (ok, first violating k or None).
    """
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    _check_weights(xs)
    h = h_all(xs, kmax + 1)
    for k in range(kmax):
        det = h[k + 1] * h[k + 1] - h[k] * h[k + 2]
        if det < -REL_TOL * h[k + 1] * h[k + 1]:
            return False, k
    return True, None


def chain_check(prime_set: PrimeSet, t: float, kmax: int) -> VerificationReport:
    """If h_1 >= h_2 at p^-t, the whole sequence h_k must be non-increasing.

    Verdict: holds when the hypothesis and the full chain both check out,
    fails if the hypothesis holds but some later step rises (which would
    contradict log-concavity), inconclusive when h_2 > h_1 so no chain is
    claimed.
    """
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    h = h_all(weights_from_primes(prime_set, t), kmax)
    quantities = {"t": t, "h": list(h)}
    if h[1] < h[2] * (1.0 - REL_TOL):
        return VerificationReport(
            claim=f"level sums non-increasing from k=1 for t={t}",
            verdict=INCONCLUSIVE,
            quantities=quantities,
            notes=["hypothesis h_1 >= h_2 fails; no chain claim"],
        )
    for k in range(1, kmax):
        if h[k] < h[k + 1] * (1.0 - REL_TOL):
            return VerificationReport(
                claim=f"level sums non-increasing from k=1 for t={t}",
                verdict=FAILS,
                quantities=quantities,
                notes=[f"chain breaks at k={k}: h_{k}={h[k]} < h_{k + 1}={h[k + 1]}"],
            )
    return VerificationReport(
        claim=f"level sums non-increasing from k=1 for t={t}",
        verdict=HOLDS,
        quantities=quantities,
        notes=[],
    )


def square_identity_check(prime_set: PrimeSet, t: float) -> float:
    """Residual of (sum p^-t)^2 = 2 h_2(p^-t) - sum p^-2t; must vanish."""
    xs = weights_from_primes(prime_set, t)
    s1 = math.fsum(xs)
    s2 = math.fsum(x * x for x in xs)
    h2 = h_all(xs, 2)[2]
    return abs(s1 * s1 - (2.0 * h2 - s2))


def quadratic_equivalence_check(prime_set: PrimeSet, t: float) -> bool:
    """h_1 >= h_2 iff the weight sum stays below the upper root
    1 + sqrt(1 - S_2), given that it always sits above the lower root.

    Checks both directions of the equivalence and the lower-root chain
    1 - sqrt(1 - S_2) <= S_2 < S_1.  Degenerate near-equality (within
    rounding slack of the root) counts as consistent either way.
    """
    xs = weights_from_primes(prime_set, t)
    s1 = math.fsum(xs)
    s2 = math.fsum(x * x for x in xs)
    if s2 >= 1.0:
        raise ValueError("squared-weight sum must stay below 1")
    h = h_all(xs, 2)
    upper_root = 1.0 + math.sqrt(1.0 - s2)
    lower_root = 1.0 - math.sqrt(1.0 - s2)

    if not (lower_root <= s2 * (1.0 + REL_TOL) and s2 < s1):
        return False

    slack = REL_TOL * max(1.0, s1, upper_root)
    chain_side = h[1] >= h[2] - slack
    root_side = s1 <= upper_root + slack
    if chain_side != root_side:
        # disagreement is only legitimate within rounding distance of the root
        return abs(s1 - upper_root) <= 64.0 * slack
    return True


def level_elements(prime_set: PrimeSet, k: int) -> list[int]:
    """All semigroup elements with exactly k prime factors, sorted.

    The count is C(k + m - 1, m - 1); callers keep k and m small.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    primes = prime_set.as_list()
    out: list[int] = []

    def rec(idx: int, remaining: int, value: int) -> None:
        if remaining == 0:
            out.append(value)
            return
        if idx == len(primes):
            return
        rec(idx + 1, remaining, value)
        rec(idx, remaining - 1, value * primes[idx])

    rec(0, k, 1)
    return sorted(out)


def decomposition_partition_check(prime_set: PrimeSet, ell: int, s: int) -> bool:
    """Partition of the level-ell slice by gcd with a fixed member s.

    For every divisor d of s, the block {n : gcd(n, s) = d} must equal
    d * (level (ell - Omega(d)) of the primes not dividing s/d), and the
    weighted sums must telescope accordingly.  Exact set equality is
    required; the weighted identity is checked at two t values to the
    relative tolerance.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    om = omega(s, prime_set)
    if om is None:
        raise ValueError(f"{s} is not in the semigroup of {prime_set}")
    if om != ell:
        raise ValueError(f"Omega({s}) = {om} != ell = {ell}")

    level = level_elements(prime_set, ell)
    divisors = sorted(_divisors_over(prime_set, s))

    blocks: dict[int, list[int]] = {d: [] for d in divisors}
    for n in level:
        blocks[gcd(n, s)].append(n)

    covered = 0
    for d in divisors:
        cofactor = s // d
        q_d = prime_set.subset(lambda p, c=cofactor: c % p != 0)
        om_d = omega(d, prime_set)
        assert om_d is not None
        predicted = sorted(d * m for m in level_elements(q_d, ell - om_d))
        if blocks[d] != predicted:
            return False
        covered += len(predicted)
    if covered != len(level):
        return False

    for t in (1.0, 1.5):
        lhs = math.fsum(float(n) ** (-t) for n in level)
        rhs = 0.0
        for d in divisors:
            cofactor = s // d
            q_d = prime_set.subset(lambda p, c=cofactor: c % p != 0)
            om_d = omega(d, prime_set)
            rhs += float(d) ** (-t) * float(sigma_nk(q_d, t, ell - om_d))
        if abs(lhs - rhs) > REL_TOL * max(1.0, abs(lhs)):
            return False
    return True


def _divisors_over(prime_set: PrimeSet, s: int) -> list[int]:
    """All divisors of a semigroup member, from its exponent vector."""
    factors: list[tuple[int, int]] = []
    rest = s
    for p in prime_set:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        if e:
            factors.append((p, e))
    divs = [1]
    for p, e in factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return divs

"""Optimality certificates for primitive sets over restricted prime alphabets.

A primitive set contains no element dividing another.  This package computes
the analytic quantities governing when the generating primes (or a fixed
prime-factor-count slice) are the heaviest primitive subset of their
multiplicative semigroup, and certifies those optimality statements on
finite truncations with an exact max-weight-antichain oracle.
"""

from .analytic import (
    ConditionVerdict,
    ErrBoundReal,
    VerificationReport,
    check_condition,
    check_condition_allprimes,
    condition_margin,
    condition_rhs,
    prime_zeta,
    riemann_zeta,
    sigma_t,
    tau_root,
)
from .erdos import dominance_transfer_check, erdos_sum, integral_bridge_check
from .errors import PrecisionError, SizeLimitError
from .oracle import (
    Antichain,
    OptimalityReport,
    TruncatedUniverse,
    build_universe,
    is_primitive,
    max_weight_antichain_bruteforce,
    max_weight_antichain_flow,
    verify_erdos_best,
    verify_gcd_block_reduction,
    verify_tbest,
)
from .primes import PrimeSet, is_prime, omega, sieve_primes, twin_primes
from .symfunc import (
    chain_check,
    decomposition_partition_check,
    h_all,
    quadratic_equivalence_check,
    schur_check,
    sigma_nk,
    square_identity_check,
)
from .twin import (
    BrunInput,
    brun_partial,
    corollary_check,
    full_twin_check,
    twin_reciprocal_bound,
    twin_square_bound,
)

__all__ = [
    "Antichain",
    "BrunInput",
    "ConditionVerdict",
    "ErrBoundReal",
    "OptimalityReport",
    "PrecisionError",
    "PrimeSet",
    "SizeLimitError",
    "TruncatedUniverse",
    "VerificationReport",
    "brun_partial",
    "build_universe",
    "chain_check",
    "check_condition",
    "check_condition_allprimes",
    "condition_margin",
    "condition_rhs",
    "corollary_check",
    "decomposition_partition_check",
    "dominance_transfer_check",
    "erdos_sum",
    "h_all",
    "integral_bridge_check",
    "is_prime",
    "is_primitive",
    "max_weight_antichain_bruteforce",
    "max_weight_antichain_flow",
    "omega",
    "prime_zeta",
    "quadratic_equivalence_check",
    "riemann_zeta",
    "schur_check",
    "sieve_primes",
    "sigma_nk",
    "sigma_t",
    "square_identity_check",
    "full_twin_check",
    "tau_root",
    "twin_primes",
    "twin_reciprocal_bound",
    "twin_square_bound",
    "verify_erdos_best",
    "verify_gcd_block_reduction",
    "verify_tbest",
]

__version__ = "0.1.0"

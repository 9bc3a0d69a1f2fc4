"""Command-line front end: one subcommand per operation plus a one-shot suite.

Every invocation writes a single JSON document to stdout (or aligned text
with --format text) wrapped in a stable envelope: claim, verdict, lhs, rhs,
runtime_ms, detail.  Exit codes: 0 holds/success, 1 fails, 2 inconclusive
or precision-limited, 3 usage/domain error, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import analytic, erdos, oracle, symfunc, twin
from .analytic import HOLDS, FAILS, INCONCLUSIVE, ErrBoundReal
from .errors import PrecisionError, SizeLimitError
from .primes import PrimeSet, sieve_primes, twin_primes

_EXIT_BY_VERDICT = {HOLDS: 0, "success": 0, FAILS: 1, INCONCLUSIVE: 2}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(3)


def _add_prime_set_args(p: _Parser) -> None:
    p.add_argument("--primes", help="comma-separated primes, e.g. 2,3,5")
    p.add_argument("--primes-below", type=int, help="all primes <= N")
    p.add_argument("--twins-below", type=int, help="twin primes <= N")
    p.add_argument(
        "--include-three", action="store_true", help="include 3 with --twins-below"
    )


def _prime_set(args) -> PrimeSet:
    given = [
        args.primes is not None,
        args.primes_below is not None,
        args.twins_below is not None,
    ]
    if sum(given) != 1:
        raise ValueError(
            "exactly one of --primes / --primes-below / --twins-below is required"
        )
    if args.primes is not None:
        return PrimeSet(int(x) for x in args.primes.split(","))
    if args.primes_below is not None:
        return sieve_primes(args.primes_below)
    return twin_primes(args.twins_below, include_three=args.include_three)


def _envelope(claim, verdict, lhs=None, rhs=None, **detail) -> dict:
    def conv(x):
        if isinstance(x, ErrBoundReal):
            return x.to_json()
        if hasattr(x, "to_json"):
            return x.to_json()
        if isinstance(x, Fraction):
            return str(x)
        if isinstance(x, dict):
            return {k: conv(v) for k, v in x.items()}
        if isinstance(x, (list, tuple)):
            return [conv(v) for v in x]
        return x

    return {
        "claim": claim,
        "verdict": verdict,
        "lhs": conv(lhs),
        "rhs": conv(rhs),
        "runtime_ms": None,  # filled in by main
        "detail": conv(detail),
    }


# ---------------------------------------------------------------------------
# subcommand handlers: each returns an envelope dict
# ---------------------------------------------------------------------------


def _cmd_prime_zeta(args):
    value = analytic.prime_zeta(args.t, args.radius)
    return _envelope(f"prime zeta at t={args.t}", HOLDS, lhs=value, rhs=None)


def _cmd_zeta(args):
    value = analytic.riemann_zeta(args.s, args.radius)
    return _envelope(f"zeta at s={args.s}", HOLDS, lhs=value, rhs=None)


def _cmd_tau(args):
    value = analytic.tau_root(args.radius)
    return _envelope("condition-margin threshold root", HOLDS, lhs=value, rhs=None)


def _cmd_check_condition(args):
    if args.all_primes:
        verdict = analytic.check_condition_allprimes(args.t, args.radius)
        claim = f"all-primes condition at t={args.t}"
    else:
        prime_set = _prime_set(args)
        verdict = analytic.check_condition(prime_set, args.t)
        claim = f"condition at t={args.t} for {len(prime_set)} primes"
    return _envelope(claim, verdict.verdict, lhs=verdict.lhs, rhs=verdict.rhs)


def _cmd_hk(args):
    prime_set = _prime_set(args)
    if args.exact:
        xs = symfunc.exact_weights_from_primes(prime_set, int(args.t))
    else:
        xs = symfunc.weights_from_primes(prime_set, args.t)
    h = symfunc.h_all(xs, args.kmax)
    return _envelope(
        f"level sums h_0..h_{args.kmax} at t={args.t}",
        HOLDS,
        lhs=ErrBoundReal.exact(float(h[-1])),
        h=[str(v) if args.exact else float(v) for v in h],
    )


def _cmd_schur(args):
    if args.weights:
        xs = [float(x) for x in args.weights.split(",")]
    else:
        xs = symfunc.weights_from_primes(_prime_set(args), args.t)
    ok, witness = symfunc.schur_check(xs, args.kmax)
    return _envelope(
        f"log-concavity determinants up to k={args.kmax}",
        HOLDS if ok else FAILS,
        first_violation=witness,
    )


def _cmd_chain(args):
    report = symfunc.chain_check(_prime_set(args), args.t, args.kmax)
    return _envelope(
        report.claim,
        report.verdict,
        quantities=report.quantities,
        notes=report.notes,
    )


def _cmd_identity(args):
    prime_set = _prime_set(args)
    residual = symfunc.square_identity_check(prime_set, args.t)
    s1 = analytic.sigma_t(prime_set, args.t).value
    tol = symfunc.REL_TOL * max(1.0, s1 * s1)
    equivalent = symfunc.quadratic_equivalence_check(prime_set, args.t)
    ok = residual <= tol and equivalent
    return _envelope(
        f"square identity and quadratic equivalence at t={args.t}",
        HOLDS if ok else FAILS,
        lhs=ErrBoundReal.exact(residual),
        rhs=ErrBoundReal.exact(tol),
        quadratic_equivalence=equivalent,
    )


def _cmd_decompose(args):
    ok = symfunc.decomposition_partition_check(_prime_set(args), args.ell, args.s)
    return _envelope(
        f"gcd-block partition of level {args.ell} by s={args.s}",
        HOLDS if ok else FAILS,
    )


def _cmd_universe(args):
    u = oracle.build_universe(
        _prime_set(args), args.k_lo, args.max_omega, args.max_value, args.max_elements
    )
    return _envelope(
        "truncated universe enumeration",
        HOLDS,
        size=len(u),
        elements=list(u.elements[:1000]),
    )


def _cmd_oracle(args):
    u = oracle.build_universe(
        _prime_set(args), args.k_lo, args.max_omega, args.max_value, args.max_elements
    )
    if args.brute_force:
        antichain, weight = oracle.max_weight_antichain_bruteforce(u, args.t)
    else:
        antichain, weight = oracle.max_weight_antichain_flow(u, args.t)
    return _envelope(
        f"maximum-weight antichain at t={args.t}",
        HOLDS,
        lhs=ErrBoundReal.exact(weight),
        universe_size=len(u),
        members=antichain.to_json(),
    )


def _cmd_verify_tbest(args):
    report = oracle.verify_tbest(
        _prime_set(args), args.t, args.k, args.max_omega, args.max_value,
        args.max_elements,
    )
    body = report.to_json()
    return _envelope(
        body.pop("claim"),
        body.pop("verdict"),
        lhs=ErrBoundReal.exact(report.optimum_weight),
        rhs=ErrBoundReal.exact(report.reference_weight),
        **body,
    )


def _cmd_verify_erdos(args):
    report = oracle.verify_erdos_best(
        _prime_set(args), args.k, args.max_omega, args.max_value, args.max_elements
    )
    body = report.to_json()
    return _envelope(
        body.pop("claim"),
        body.pop("verdict"),
        lhs=ErrBoundReal.exact(report.optimum_weight),
        rhs=ErrBoundReal.exact(report.reference_weight),
        **body,
    )


def _cmd_twin(args):
    twins = twin_primes(args.below, include_three=args.include_three)
    return _envelope(
        f"twin primes up to {args.below}",
        HOLDS,
        count=len(twins),
        members=twins.as_list()[:1000],
    )


def _cmd_brun(args):
    value = twin.brun_partial(args.limit)
    return _envelope(f"partial Brun sum to {args.limit}", HOLDS, lhs=value)


def _cmd_corollary(args):
    brun_input = twin.BrunInput(args.brun_bound, args.brun_source)
    if args.with_three:
        report = twin.full_twin_check(brun_input, args.limit)
    else:
        report = twin.corollary_check(brun_input, args.limit)
    return _envelope(
        report.claim,
        report.verdict,
        quantities=report.quantities,
        notes=report.notes,
    )


def _cmd_erdos_sum(args):
    members = [int(x) for x in args.members.split(",")]
    return _envelope(
        "reciprocal-log weight sum",
        HOLDS,
        lhs=ErrBoundReal.exact(erdos.erdos_sum(members)),
        members=members,
    )


def _cmd_bridge(args):
    members = [int(x) for x in args.members.split(",")]
    residual = erdos.integral_bridge_check(members, args.tolerance)
    ok = residual <= args.tolerance
    return _envelope(
        "integral bridge between power and reciprocal-log weights",
        HOLDS if ok else FAILS,
        lhs=ErrBoundReal.exact(residual),
        rhs=ErrBoundReal.exact(args.tolerance),
        members=members,
    )


# ---------------------------------------------------------------------------
# the one-shot suite
# ---------------------------------------------------------------------------


def _suite_rows(quick: bool, seed: int) -> list[dict]:
    rng = random.Random(seed)
    rows: list[dict] = []

    def add(claim, computed, expected, ok, started):
        rows.append(
            {
                "claim": claim,
                "computed": computed,
                "expected": expected,
                "verdict": HOLDS if ok else FAILS,
                "runtime_ms": int((time.monotonic() - started) * 1000),
            }
        )

    t0 = time.monotonic()
    p2 = analytic.prime_zeta(2.0, 1e-8)
    add("prime zeta at 2", p2.value, "0.45224742 +- 1e-7",
        abs(p2.value - 0.45224742) <= 1e-7, t0)

    t0 = time.monotonic()
    rhs = analytic.condition_rhs_from_square_sum(p2)
    add("all-primes condition right side at t=1", rhs.value, "1.74010308 +- 1e-7",
        abs(rhs.value - 1.74010308) <= 1e-7, t0)

    t0 = time.monotonic()
    tau = analytic.tau_root(1e-6)
    low = analytic.condition_margin(1.05, 1e-7)
    high = analytic.condition_margin(1.5, 1e-7)
    add("threshold root and margin signs", tau.value,
        "1.1403659 +- 1e-6, margin(1.05)<0<margin(1.5)",
        abs(tau.value - 1.1403659) <= 1e-6 and low.upper() < 0.0 < high.lower(), t0)

    t0 = time.monotonic()
    report = twin.corollary_check(twin.BrunInput(2.347, "proven bound"), 10**6)
    add("twin chain with proven Brun bound", report.verdict, HOLDS,
        report.holds(), t0)

    t0 = time.monotonic()
    limit = 10**7 if quick else 10**8
    hold_report = twin.full_twin_check(twin.BrunInput(2.0959621, "required bound"), limit)
    fail_report = twin.full_twin_check(twin.BrunInput(2.347, "proven bound"), limit)
    add(f"twin-with-3 condition at limit {limit}",
        f"{hold_report.verdict}/{fail_report.verdict}", "holds/fails",
        hold_report.holds() and fail_report.verdict == FAILS, t0)

    t0 = time.monotonic()
    instances = 0
    agree = True
    for combo_seed in range(10**6):
        if instances >= 120:
            break
        subset = [p for p in (2, 3, 5, 7) if rng.random() < 0.6]
        if not subset:
            continue
        prime_set = PrimeSet(subset, validate=False)
        k = rng.choice((1, 2))
        max_omega = rng.randint(k, 5)
        max_value = rng.choice((20, 60, 200, 600))
        try:
            u = oracle.build_universe(prime_set, k, max_omega, max_value)
        except SizeLimitError:
            continue
        if not 1 <= len(u) <= 40:
            continue
        t = rng.choice((1.2, 1.5, 2.0))
        _, w_flow = oracle.max_weight_antichain_flow(u, t)
        _, w_brute = oracle.max_weight_antichain_bruteforce(u, t)
        agree = agree and abs(w_flow - w_brute) <= 1e-9
        instances += 1
    add("flow vs brute-force agreement", f"{instances} instances",
        ">=100 agree to 1e-9", agree and instances >= 100, t0)

    t0 = time.monotonic()
    ok = True
    for k in (1, 2, 3):
        r = oracle.verify_tbest(PrimeSet([2, 3, 5]), 1.5, k, k + 3, 10**6)
        ok = ok and r.holds()
    r = oracle.verify_erdos_best(PrimeSet([5, 7, 11, 13]), 1, 4, 10**6)
    ok = ok and r.holds()
    add("theorem-instance certifications", "holds" if ok else "fails", HOLDS, ok, t0)

    t0 = time.monotonic()
    primes_1e5 = sieve_primes(10**5)
    s1 = analytic.sigma_t(primes_1e5, 1.02).value
    h2 = float(symfunc.sigma_nk(primes_1e5, 1.02, 2))
    add("level-2 sum beats the prime sum at t=1.02", f"{h2:.6f} > {s1:.6f}",
        "level 2 heavier", h2 > s1, t0)

    t0 = time.monotonic()
    ok = True
    base = sieve_primes(1000).as_list()
    for _ in range(100):
        prime_set = PrimeSet(rng.sample(base, rng.randint(1, 40)), validate=False)
        t = rng.uniform(1.0, 3.0)
        residual = symfunc.square_identity_check(prime_set, t)
        s1 = analytic.sigma_t(prime_set, t).value
        ok = ok and residual <= 1e-12 * max(1.0, s1 * s1)
    for _ in range(1000):
        xs = [rng.uniform(1e-6, 1.0 - 1e-6) for _ in range(rng.randint(1, 10))]
        good, _ = symfunc.schur_check(xs, rng.randint(1, 8))
        ok = ok and good
    for subset_mask in range(1, 16):
        subset = [p for i, p in enumerate((2, 3, 5, 7)) if subset_mask >> i & 1]
        prime_set = PrimeSet(subset, validate=False)
        for ell in range(1, 5):
            for s in symfunc.level_elements(prime_set, ell):
                ok = ok and symfunc.decomposition_partition_check(prime_set, ell, s)
    exact = symfunc.h_all([Fraction(1, 2), Fraction(1, 3)], 2)
    ok = ok and exact == [1, Fraction(5, 6), Fraction(19, 36)]
    add("identity suite (random and exhaustive)", "all pass" if ok else "violation",
        "all pass", ok, t0)

    t0 = time.monotonic()
    ok = erdos.integral_bridge_check([2], 1e-6) <= 1e-6
    ok = ok and erdos.integral_bridge_check([2, 3, 5], 1e-4) <= 1e-4
    ok = ok and erdos.integral_bridge_check([4, 6, 9], 1e-4) <= 1e-4
    add("integral bridge residuals", "within tolerance" if ok else "exceeded",
        "within tolerance", ok, t0)

    return rows


def _cmd_suite(args):
    rows = _suite_rows(args.quick, args.seed)
    if args.seed is not None:
        for row in rows:
            row["runtime_ms"] = 0
    all_hold = all(row["verdict"] == HOLDS for row in rows)
    return _envelope(
        "verification suite", HOLDS if all_hold else FAILS, checks=rows
    )


# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="also write the JSON document to this path")

    parser = _Parser(prog="primopt", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("prime-zeta")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--radius", type=float, default=1e-8)
    p.set_defaults(handler=_cmd_prime_zeta)

    p = add_parser("zeta")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--radius", type=float, default=1e-10)
    p.set_defaults(handler=_cmd_zeta)

    p = add_parser("tau")
    p.add_argument("--radius", type=float, default=1e-6)
    p.set_defaults(handler=_cmd_tau)

    p = add_parser("check-condition")
    _add_prime_set_args(p)
    p.add_argument("--all-primes", action="store_true")
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--radius", type=float, default=1e-8)
    p.set_defaults(handler=_cmd_check_condition)

    p = add_parser("hk")
    _add_prime_set_args(p)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--exact", action="store_true")
    p.set_defaults(handler=_cmd_hk)

    p = add_parser("schur")
    _add_prime_set_args(p)
    p.add_argument("--weights", help="comma-separated weights in (0,1)")
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(handler=_cmd_schur)

    p = add_parser("chain")
    _add_prime_set_args(p)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(handler=_cmd_chain)

    p = add_parser("identity")
    _add_prime_set_args(p)
    p.add_argument("--t", type=float, default=1.0)
    p.set_defaults(handler=_cmd_identity)

    p = add_parser("decompose")
    _add_prime_set_args(p)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(handler=_cmd_decompose)

    p = add_parser("universe")
    _add_prime_set_args(p)
    p.add_argument("--k-lo", type=int, default=1)
    p.add_argument("--max-omega", type=int, required=True)
    p.add_argument("--max-value", type=int, required=True)
    p.add_argument("--max-elements", type=int, default=oracle.DEFAULT_MAX_ELEMENTS)
    p.set_defaults(handler=_cmd_universe)

    p = add_parser("oracle")
    _add_prime_set_args(p)
    p.add_argument("--k-lo", type=int, default=1)
    p.add_argument("--max-omega", type=int, required=True)
    p.add_argument("--max-value", type=int, required=True)
    p.add_argument("--max-elements", type=int, default=oracle.DEFAULT_MAX_ELEMENTS)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(handler=_cmd_oracle)

    p = add_parser("verify-tbest")
    _add_prime_set_args(p)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-omega", type=int, required=True)
    p.add_argument("--max-value", type=int, required=True)
    p.add_argument("--max-elements", type=int, default=oracle.DEFAULT_MAX_ELEMENTS)
    p.set_defaults(handler=_cmd_verify_tbest)

    p = add_parser("verify-erdos")
    _add_prime_set_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-omega", type=int, required=True)
    p.add_argument("--max-value", type=int, required=True)
    p.add_argument("--max-elements", type=int, default=oracle.DEFAULT_MAX_ELEMENTS)
    p.set_defaults(handler=_cmd_verify_erdos)

    p = add_parser("twin")
    p.add_argument("--below", type=int, required=True)
    p.add_argument("--include-three", action="store_true")
    p.set_defaults(handler=_cmd_twin)

    p = add_parser("brun")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(handler=_cmd_brun)

    p = add_parser("corollary")
    p.add_argument("--brun-bound", type=float, required=True)
    p.add_argument("--brun-source", default="unspecified")
    p.add_argument("--limit", type=int, default=10**6)
    p.add_argument(
        "--with-three", action="store_true",
        help="check the full twin set including 3 instead",
    )
    p.set_defaults(handler=_cmd_corollary)

    p = add_parser("erdos-sum")
    p.add_argument("--members", required=True)
    p.set_defaults(handler=_cmd_erdos_sum)

    p = add_parser("bridge")
    p.add_argument("--members", required=True)
    p.add_argument("--tolerance", type=float, default=1e-4)
    p.set_defaults(handler=_cmd_bridge)

    p = add_parser("suite")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(handler=_cmd_suite)

    return parser


def _render_text(report: dict) -> str:
    lines = [f"claim:   {report['claim']}", f"verdict: {report['verdict']}"]
    for side in ("lhs", "rhs"):
        if report[side] is not None:
            lines.append(f"{side}:     {report[side]}")
    lines.append(f"runtime: {report['runtime_ms']} ms")
    detail = report.get("detail") or {}
    checks = detail.get("checks")
    if checks:
        width = max(len(row["claim"]) for row in checks)
        for row in checks:
            lines.append(
                f"  {row['claim']:<{width}}  computed={row['computed']}"
                f"  expected={row['expected']}  -> {row['verdict']}"
            )
    else:
        for key, value in detail.items():
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    started = time.monotonic()
    try:
        report = args.handler(args)
    except (PrecisionError,) as exc:
        report = _envelope(str(exc), INCONCLUSIVE)
        report["runtime_ms"] = int((time.monotonic() - started) * 1000)
        _write(report, args)
        return 2
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3

    runtime = int((time.monotonic() - started) * 1000)
    if getattr(args, "seed", None) is not None:
        runtime = 0
    report["runtime_ms"] = runtime
    _write(report, args)
    return _EXIT_BY_VERDICT.get(report["verdict"], 0)


def _write(report: dict, args) -> None:
    if args.format == "json":
        payload = json.dumps(report, indent=2) + "\n"
    else:
        payload = _render_text(report)
    sys.stdout.write(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(report, indent=2) + "\n")


if __name__ == "__main__":
    raise SystemExit(main())

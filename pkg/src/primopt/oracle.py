"""Exact maximum-weight antichains over truncated multiplicative semigroups.

The divisibility order on a truncation (an Omega band intersected with a
value cap) is generated by the multiply-by-one-prime covering edges: any
intermediate divisor of a member is itself a member, so reachability along
those edges is exactly divisibility.  The optimizer runs weighted Dilworth
duality: a minimum flow with per-element lower bounds equals the maximum
antichain weight, and one max-flow over the reversed residual network both
minimizes the flow and exposes the optimal antichain as the split arcs
crossing the final reachability cut.

Weights enter the flow as integers (value * 2^50 rounded), so the network
arithmetic is exact; reported weights are float re-sums of the extracted
members and verdict tolerances absorb the scaling quantum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .analytic import HOLDS, FAILS, ConditionVerdict, check_condition
from .errors import SizeLimitError
from .primes import MAX_ELEMENT, PrimeSet, omega
from .symfunc import h_all, sigma_nk, weights_from_primes

DEFAULT_MAX_ELEMENTS = 200_000
_BRUTE_FORCE_CAP = 40
_WEIGHT_SCALE = 1 << 50
_TIE_TOL = 1e-9


@dataclass(frozen=True)
class TruncatedUniverse:
    """A finite slice of the semigroup: k_lo <= Omega(n) <= max_omega and
    n <= max_value, ordered by divisibility."""

    prime_set: PrimeSet
    k_lo: int
    max_omega: int
    max_value: int
    elements: tuple[int, ...]
    omegas: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def index(self) -> dict[int, int]:
        return {n: i for i, n in enumerate(self.elements)}

    def level(self, k: int) -> list[int]:
        return [n for n, om in zip(self.elements, self.omegas) if om == k]

    def covering_edges(self) -> list[tuple[int, int]]:
        """Index pairs (i, j) with elements[j] = elements[i] * p."""
        idx = self.index()
        edges = []
        for i, n in enumerate(self.elements):
            for p in self.prime_set:
                m = n * p
                if m > self.max_value:
                    continue
                j = idx.get(m)
                if j is not None:
                    edges.append((i, j))
        return edges


def build_universe(
    prime_set: PrimeSet,
    k_lo: int,
    max_omega: int,
    max_value: int,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> TruncatedUniverse:
    """Exhaustive enumeration of the truncation, sorted ascending."""
    if max_omega < k_lo:
        raise ValueError("max_omega must be >= k_lo")
    if k_lo < 0:
        raise ValueError("k_lo must be >= 0")
    if max_value < 2:
        raise ValueError("max_value must be >= 2")
    if max_value > MAX_ELEMENT:
        raise ValueError("max_value exceeds the 64-bit element range")

    primes = prime_set.as_list()
    found: list[tuple[int, int]] = []

    def rec(idx: int, value: int, om: int) -> None:
        if om >= k_lo:
            found.append((value, om))
            if len(found) > max_elements:
                raise SizeLimitError(
                    f"universe exceeds {max_elements} elements; "
                    "raise max_elements to proceed"
                )
        if om == max_omega:
            return
        for i in range(idx, len(primes)):
            nxt = value * primes[i]
            if nxt > max_value:
                # primes are sorted, so later ones overflow the cap too
                break
            rec(i, nxt, om + 1)

    rec(0, 1, 0)
    found.sort()
    return TruncatedUniverse(
        prime_set=prime_set,
        k_lo=k_lo,
        max_omega=max_omega,
        max_value=max_value,
        elements=tuple(v for v, _ in found),
        omegas=tuple(om for _, om in found),
    )


def is_primitive(members) -> bool:
    """No member divides a distinct member, and the set is not just {1}."""
    values = sorted(set(int(n) for n in members))
    if not values:
        raise ValueError("primitivity is defined for nonempty sets")
    if values == [1]:
        return False
    if values[0] < 1:
        raise ValueError("members must be positive integers")
    if len(values) < 2:
        return True
    arr = np.asarray(values, dtype=np.int64)
    for i in range(len(values) - 1):
        rest = arr[i + 1 :]
        candidates = rest[rest % values[i] == 0]
        if candidates.size:
            return False
    return True


@dataclass(frozen=True)
class Antichain:
    """A pairwise non-divisible subset of a truncated universe."""

    members: tuple[int, ...]

    def __post_init__(self):
        if not is_primitive(self.members):
            raise ValueError("members are not pairwise non-divisible")

    def weight(self, weight_fn: Callable[[int], float]) -> float:
        return math.fsum(weight_fn(n) for n in self.members)

    def to_json(self, cap: int = 1000) -> list[int]:
        return list(self.members[:cap])


# ---------------------------------------------------------------------------
# max-weight antichain: min flow with lower bounds, then one max-flow
# ---------------------------------------------------------------------------


class _Dinic:
    """Standard Dinic max-flow on integer capacities (exact, deterministic)."""

    def __init__(self, n: int):
        self.n = n
        self.heads: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, capacity: int) -> int:
        eid = len(self.to)
        self.heads[u].append(eid)
        self.to.append(v)
        self.cap.append(capacity)
        self.heads[v].append(eid + 1)
        self.to.append(u)
        self.cap.append(0)
        return eid

    def max_flow(self, source: int, sink: int) -> int:
        # Path depth is bounded by the poset's level span, so the recursive
        # blocking-flow DFS stays shallow.
        flow = 0
        big = sum(self.cap) + 1
        while True:
            level = [-1] * self.n
            level[source] = 0
            queue = [source]
            for u in queue:
                for eid in self.heads[u]:
                    v = self.to[eid]
                    if self.cap[eid] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[sink] < 0:
                return flow
            it = [0] * self.n
            while True:
                pushed = self._dfs(source, sink, big, level, it)
                if pushed == 0:
                    break
                flow += pushed

    def _dfs(self, u: int, sink: int, limit: int, level: list[int], it: list[int]) -> int:
        if u == sink:
            return limit
        while it[u] < len(self.heads[u]):
            eid = self.heads[u][it[u]]
            v = self.to[eid]
            if self.cap[eid] > 0 and level[v] == level[u] + 1:
                pushed = self._dfs(v, sink, min(limit, self.cap[eid]), level, it)
                if pushed:
                    self.cap[eid] -= pushed
                    self.cap[eid ^ 1] += pushed
                    return pushed
            it[u] += 1
        return 0

    def reachable_from(self, source: int) -> list[bool]:
        seen = [False] * self.n
        seen[source] = True
        queue = [source]
        for u in queue:
            for eid in self.heads[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


def _scaled_weights(universe: TruncatedUniverse, weight_fn) -> list[int]:
    scaled = []
    for n in universe.elements:
        w = weight_fn(n)
        if not (w > 0.0) or not math.isfinite(w):
            raise ValueError(f"weight of {n} must be a positive finite number")
        scaled.append(max(1, round(w * _WEIGHT_SCALE)))
    return scaled


def _flow_optimum(
    universe: TruncatedUniverse, weight_fn: Callable[[int], float]
) -> tuple[list[int], float, int]:
    """Members of a maximum-weight antichain plus its float re-summed weight.

    Network: source -> v_in, split arc v_in -> v_out with lower bound w(v),
    v_out -> sink, v_out -> u_in per covering edge; all capacities unbounded.
    The all-direct-paths flow (w(v) down s -> v_in -> v_out -> t) is feasible,
    and the reversed residual max-flow removes every reroutable unit; what
    remains on the split arcs across the sink-side reachability cut is the
    optimal antichain.
    """
    count = len(universe)
    if count == 0:
        raise ValueError("universe is empty")
    scaled = _scaled_weights(universe, weight_fn)
    total = sum(scaled)
    infinite = total + 1

    source, sink = 0, 1
    node_in = lambda i: 2 + 2 * i
    node_out = lambda i: 3 + 2 * i

    # Reduction network: max-flow from sink to source through the residual
    # of the feasible flow.  Backward (flow-cancelling) arcs carry the
    # feasible flow minus the lower bound; forward arcs are unbounded.
    dinic = _Dinic(2 + 2 * count)
    for i in range(count):
        dinic.add_edge(node_in(i), source, scaled[i])  # cancel s -> v_in
        dinic.add_edge(source, node_in(i), infinite)
        dinic.add_edge(sink, node_out(i), scaled[i])  # cancel v_out -> t
        dinic.add_edge(node_out(i), sink, infinite)
        dinic.add_edge(node_in(i), node_out(i), infinite)  # raise split arc
    for i, j in universe.covering_edges():
        dinic.add_edge(node_out(i), node_in(j), infinite)  # raise poset arc

    reduction = dinic.max_flow(sink, source)
    optimum_scaled = total - reduction

    reach = dinic.reachable_from(sink)
    members = [
        universe.elements[i]
        for i in range(count)
        if reach[node_out(i)] and not reach[node_in(i)]
    ]
    weight = math.fsum(weight_fn(n) for n in members)
    return members, weight, optimum_scaled


def max_weight_antichain_flow(
    universe: TruncatedUniverse, t: float
) -> tuple[Antichain, float]:
    """Exact maximum of sum n^-t over antichains of the universe."""
    members, weight, _ = _flow_optimum(universe, lambda n: float(n) ** (-t))
    return Antichain(tuple(members)), weight


def max_weight_antichain_bruteforce(
    universe: TruncatedUniverse, t: float
) -> tuple[Antichain, float]:
    """Independent exhaustive optimum (universe capped at 40 elements)."""
    members, weight = _brute_optimum(universe, lambda n: float(n) ** (-t))
    return Antichain(tuple(members)), weight


def _brute_optimum(
    universe: TruncatedUniverse, weight_fn: Callable[[int], float]
) -> tuple[list[int], float]:
    count = len(universe)
    if count == 0:
        raise ValueError("universe is empty")
    if count > _BRUTE_FORCE_CAP:
        raise SizeLimitError(
            f"brute force capped at {_BRUTE_FORCE_CAP} elements, got {count}"
        )

    # descending weight order maximizes pruning
    order = sorted(range(count), key=lambda i: -weight_fn(universe.elements[i]))
    values = [universe.elements[i] for i in order]
    weights = [weight_fn(v) for v in values]

    incompatible = [0] * count
    for a in range(count):
        for b in range(count):
            if a != b and (values[a] % values[b] == 0 or values[b] % values[a] == 0):
                incompatible[a] |= 1 << b

    suffix = [0.0] * (count + 1)
    for i in range(count - 1, -1, -1):
        suffix[i] = suffix[i + 1] + weights[i]

    best_weight = -1.0
    best_set = 0

    def rec(i: int, chosen: int, blocked: int, acc: float) -> None:
        nonlocal best_weight, best_set
        if acc + suffix[i] <= best_weight:
            return
        if i == count:
            if acc > best_weight:
                best_weight = acc
                best_set = chosen
            return
        if not (blocked >> i) & 1:
            rec(i + 1, chosen | (1 << i), blocked | incompatible[i], acc + weights[i])
        rec(i + 1, chosen, blocked, acc)

    rec(0, 0, 0, 0.0)
    members = sorted(values[i] for i in range(count) if (best_set >> i) & 1)
    return members, best_weight


# ---------------------------------------------------------------------------
# theorem-instance certification
# ---------------------------------------------------------------------------


@dataclass
class OptimalityReport:
    """Outcome of one optimality certification over a truncation."""

    claim: str
    verdict: str
    optimum_weight: float
    optimum_set: Antichain
    reference_weight: float
    reference_is_complete_level: bool
    tail_bound: Optional[float]
    universe_size: int
    condition_verdict: ConditionVerdict
    notes: list[str] = field(default_factory=list)

    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "verdict": self.verdict,
            "optimum_weight": self.optimum_weight,
            "reference_weight": self.reference_weight,
            "tail_bound": self.tail_bound,
            "universe_size": self.universe_size,
            "optimum_members": self.optimum_set.to_json(),
            "condition_verdict": self.condition_verdict.to_json(),
            "notes": list(self.notes),
        }


def _omega_tail_bound(prime_set: PrimeSet, t: float, max_omega: int) -> Optional[float]:
    """Upper bound for the t-weight of everything above the Omega cap:
    sum_{j>J} h_j <= h_J * r / (1 - r) when r = sum p^-t < 1."""
    xs = weights_from_primes(prime_set, t)
    r = math.fsum(xs)
    if r >= 1.0:
        return None
    h_cap = h_all(xs, max_omega)[max_omega]
    return h_cap * r / (1.0 - r)


def _value_tail_bound(prime_set: PrimeSet, t: float, max_value: int) -> float:
    """Upper bound for the t-weight of semigroup members above the value cap:
    sum over n > V of n^-t <= V^-theta * prod (1 - p^-(t-theta))^-1 with
    theta = (t-1)/2."""
    theta = 0.5 * (t - 1.0)
    if theta <= 0.0:
        return math.inf
    prod = 1.0
    for p in prime_set:
        prod /= 1.0 - float(p) ** (-(t - theta))
    return float(max_value) ** (-theta) * prod


def _certify(
    universe: TruncatedUniverse,
    weight_fn: Callable[[int], float],
    k: int,
    reference_full: Optional[float],
    tail_bound: Optional[float],
    condition: ConditionVerdict,
    claim: str,
) -> OptimalityReport:
    members, optimum, _ = _flow_optimum(universe, weight_fn)
    level = universe.level(k)
    level_weight = math.fsum(weight_fn(n) for n in level)
    level_expected = math.comb(k + len(universe.prime_set) - 1, len(universe.prime_set) - 1)
    level_complete = len(level) == level_expected

    tol = _TIE_TOL + 2.0 * len(universe) / _WEIGHT_SCALE
    notes = []
    if abs(optimum - level_weight) <= tol and sorted(members) != sorted(level):
        notes.append("optimum ties the level set within scaling tolerance")

    ok_level = optimum <= level_weight + tol
    ok_reference = True if reference_full is None else optimum <= reference_full + tol
    verdict = HOLDS if (ok_level and ok_reference) else FAILS

    if condition.verdict != HOLDS:
        notes.append(
            "condition not certified for this prime set: conjecture instance, "
            "not theorem instance (empirical evidence only)"
        )
    if tail_bound is None:
        notes.append(
            "weight sum of the alphabet is >= 1: no tail bound; the claim "
            "is restricted to the truncation"
        )
    if not level_complete:
        notes.append("level set is truncated by the value cap")

    return OptimalityReport(
        claim=claim,
        verdict=verdict,
        optimum_weight=optimum,
        optimum_set=Antichain(tuple(sorted(members))),
        reference_weight=level_weight if reference_full is None else reference_full,
        reference_is_complete_level=level_complete,
        tail_bound=tail_bound,
        universe_size=len(universe),
        condition_verdict=condition,
        notes=notes,
    )


def verify_tbest(
    prime_set: PrimeSet,
    t: float,
    k: int,
    max_omega: int,
    max_value: int,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> OptimalityReport:
    """Certify that the level-k slice is the heaviest antichain of the
    truncated Omega >= k universe under n^-t weights."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if t <= 1.0:
        raise ValueError("t-best certification needs t > 1")
    universe = build_universe(prime_set, k, max_omega, max_value, max_elements)
    condition = check_condition(prime_set, t)
    omega_tail = _omega_tail_bound(prime_set, t, max_omega)
    tail = None
    if omega_tail is not None:
        tail = omega_tail + _value_tail_bound(prime_set, t, max_value)
    return _certify(
        universe,
        lambda n: float(n) ** (-t),
        k,
        reference_full=float(sigma_nk(prime_set, t, k)),
        tail_bound=tail,
        condition=condition,
        claim=f"level {k} is t-best (t={t}) over the truncation",
    )


def verify_erdos_best(
    prime_set: PrimeSet,
    k: int,
    max_omega: int,
    max_value: int,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> OptimalityReport:
    """Same certification under the 1/(n log n) weight."""
    if k < 1:
        raise ValueError("k must be >= 1")
    universe = build_universe(prime_set, k, max_omega, max_value, max_elements)
    condition = check_condition(prime_set, 1.0)

    # 1/(n log n) <= (1/(j log 2)) * n^-1 on the level-j slice, so the
    # geometric h_j bound at t=1 dominates the Omega tail when sum 1/p < 1.
    r = math.fsum(weights_from_primes(prime_set, 1.0))
    tail = None
    if r < 1.0:
        h_cap = h_all(weights_from_primes(prime_set, 1.0), max_omega)[max_omega]
        tail = h_cap * r / (1.0 - r) / ((max_omega + 1) * math.log(2.0))

    return _certify(
        universe,
        lambda n: 1.0 / (n * math.log(n)),
        k,
        reference_full=None,
        tail_bound=tail,
        condition=condition,
        claim=f"level {k} is reciprocal-log-best over the truncation",
    )


def verify_gcd_block_reduction(
    prime_set: PrimeSet, t: float, k: int, antichain: Antichain
) -> bool:
    """Numerical check of the gcd-block reduction identity for a primitive
    subset of the Omega >= k universe.

    With s a member of minimal Omega (= ell) and blocks S_d = (1/d) * {n in S :
    gcd(n, s) = d}, the difference of level-ell and subset weights must equal
    sum over d | s of d^-t * (level-weight of the reduced alphabet minus the
    block weight), and the d = s block must be exactly {1}.
    """
    members = antichain.members
    oms = []
    for n in members:
        om = omega(n, prime_set)
        if om is None:
            raise ValueError(f"{n} is not in the semigroup of {prime_set}")
        if om < k:
            raise ValueError(f"{n} has Omega < {k}")
        oms.append(om)
    ell = min(oms)
    s = min(n for n, om in zip(members, oms) if om == ell)

    from .symfunc import _divisors_over, level_elements

    level = level_elements(prime_set, ell)
    lhs = math.fsum(float(n) ** (-t) for n in level) - math.fsum(
        float(n) ** (-t) for n in members
    )

    rhs = 0.0
    seen = 0
    for d in _divisors_over(prime_set, s):
        cofactor = s // d
        q_d = prime_set.subset(lambda p, c=cofactor: c % p != 0)
        om_d = omega(d, prime_set)
        block = sorted(n // d for n in members if math.gcd(n, s) == d)
        seen += len(block)
        if d == s and block != [1]:
            return False
        level_weight = float(sigma_nk(q_d, t, ell - om_d))
        block_weight = math.fsum(float(m) ** (-t) for m in block)
        rhs += float(d) ** (-t) * (level_weight - block_weight)
    if seen != len(members):
        return False
    return abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs), abs(rhs))

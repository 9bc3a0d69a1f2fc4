import math

import pytest
from scipy.integrate import quad

from primopt.erdos import dominance_transfer_check, erdos_sum, integral_bridge_check
from primopt.oracle import build_universe, max_weight_antichain_flow
from primopt.primes import PrimeSet


def test_erdos_sum_examples():
    assert erdos_sum([2]) == pytest.approx(1.0 / (2.0 * math.log(2.0)))
    assert erdos_sum([2, 3, 5]) == pytest.approx(
        sum(1.0 / (n * math.log(n)) for n in (2, 3, 5))
    )
    assert erdos_sum([2, 3, 5]) == pytest.approx(1.1490276, abs=1e-7)
    assert erdos_sum([4, 6, 9]) == pytest.approx(0.3239242, abs=1e-7)


def test_erdos_sum_domain_errors():
    with pytest.raises(ValueError):
        erdos_sum([])
    with pytest.raises(ValueError):
        erdos_sum([1, 2])


def test_bridge_closed_form_single_element():
    assert integral_bridge_check([2], 1e-6) <= 1e-6


@pytest.mark.parametrize("members", [[2, 3, 5], [4, 6, 9]])
def test_bridge_small_sets(members):
    assert integral_bridge_check(members, 1e-4) <= 1e-4


def test_bridge_agrees_with_scipy_quadrature():
    for members in ([2], [2, 3, 5], [4, 6, 9], [8, 12, 18, 27]):
        target, _ = quad(lambda t: sum(float(n) ** -t for n in members), 1.0, 200.0)
        assert target == pytest.approx(erdos_sum(members), abs=1e-9)
        assert integral_bridge_check(members, 1e-5) <= 1e-5


def test_bridge_rejects_bad_sets():
    with pytest.raises(ValueError):
        integral_bridge_check([1, 2])
    with pytest.raises(ValueError):
        integral_bridge_check([])


def test_dominance_transfer_on_level_slices():
    # deeper slices weigh less for every t, so their reciprocal-log sum
    # cannot win either
    assert dominance_transfer_check([4, 6, 9], [2, 3])
    assert dominance_transfer_check([8, 12, 18, 27], [4, 6, 9])
    # not applicable when the candidate contains smaller elements
    assert not dominance_transfer_check([2, 3], [4, 6, 9])


def test_dominance_transfer_on_oracle_outputs():
    u = build_universe(PrimeSet([2, 3, 5]), 2, 4, 10**4)
    antichain, _ = max_weight_antichain_flow(u, 1.5)
    level2 = [n for n, om in zip(u.elements, u.omegas) if om == 2]
    assert dominance_transfer_check(antichain.members, level2) or sorted(
        antichain.members
    ) == sorted(level2)

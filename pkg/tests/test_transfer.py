import itertools
import math

import pytest

from netthermo.errors import ValidationError
from netthermo.thermo import Network, log_microstates
from netthermo.transfer import (
    max_profit_classical,
    max_profit_exact,
    quote,
    transfer_entropy_change,
)

GRID_N = [0.5, 1, 2, 10, 100]
GRID_Q = [1, 10, 100]


def test_max_profit_exact_examples():
    assert max_profit_exact(100, 100, 50) == pytest.approx(
        100 * (1 - math.log(101 / 100) / math.log(51 / 50)), rel=1e-14
    )
    assert max_profit_exact(100, 100, 50) == pytest.approx(49.7525, abs=1e-4)
    assert max_profit_exact(100, 50, 50) == 0
    # uphill: ln(51/50) / ln(101/100) = 1.990..., so the bound is about -99.01
    assert max_profit_exact(100, 50, 100) == pytest.approx(-99.0148, abs=1e-4)


def test_max_profit_classical_examples():
    assert max_profit_classical(100, 100, 50) == 50
    assert max_profit_classical(7, 3.5, 3.5) == 0
    assert max_profit_classical(100, 1000, 999) == pytest.approx(0.1, rel=1e-12)


@pytest.mark.parametrize("fn", [max_profit_exact, max_profit_classical])
@pytest.mark.parametrize("args", [(0, 1, 1), (1, 0, 1), (1, 1, -2), (-1, 1, 1)])
def test_profit_rejects_non_positive(fn, args):
    with pytest.raises(ValidationError):
        fn(*args)


def test_transfer_entropy_change_examples():
    assert transfer_entropy_change(100, 0, 100, 50) == pytest.approx(0.98523, abs=1e-5)
    w = max_profit_exact(100, 100, 50)
    assert transfer_entropy_change(100, w, 100, 50) == pytest.approx(0, abs=1e-12)
    assert transfer_entropy_change(100, 60, 100, 50) < 0


def test_transfer_entropy_change_rejects_overdraw():
    with pytest.raises(ValidationError):
        transfer_entropy_change(10, 11, 2, 1)


def test_transfer_entropy_change_accepts_supplied_work():
    assert transfer_entropy_change(10, -5, 1, 2) > transfer_entropy_change(10, 0, 1, 2)


@pytest.mark.parametrize("q", GRID_Q)
@pytest.mark.parametrize("n_hot,n_cold", list(itertools.product(GRID_N, GRID_N)))
def test_zero_crossing(q, n_hot, n_cold):
    w = max_profit_exact(q, n_hot, n_cold)
    assert abs(transfer_entropy_change(q, w, n_hot, n_cold)) < 1e-9


@pytest.mark.parametrize("q", GRID_Q)
@pytest.mark.parametrize(
    "n_hot,n_cold", [(a, b) for a, b in itertools.product(GRID_N, GRID_N) if a > b]
)
def test_ordering(q, n_hot, n_cold):
    exact = max_profit_exact(q, n_hot, n_cold)
    classical = max_profit_classical(q, n_hot, n_cold)
    assert 0 < exact < classical < q
    # direction antisymmetry in sign
    assert max_profit_exact(q, n_cold, n_hot) < 0


def test_classical_convergence():
    gap = max_profit_classical(1, 2e4, 1e4) - max_profit_exact(1, 2e4, 1e4)
    assert 0 < gap < 1e-4


def test_micro_consistency():
    """Move one link between concrete nets and recount exact microstates."""
    hot, cold = Network(4, 240), Network(4, 60)  # n = 20 and n = 5
    k = hot.states
    before = log_microstates(hot.links, k) + log_microstates(cold.links, k)
    after = log_microstates(hot.links - 1, k) + log_microstates(cold.links + 1, k)
    predicted = transfer_entropy_change(1, 0, hot.occupation, cold.occupation)
    assert abs((after - before) - predicted) <= math.log1p(1 / cold.links)


class TestQuote:
    def test_numerical_example_nets(self):
        q = quote(100, Network(50, 245000), Network(50, 122500))
        assert (q.hot_occupation, q.cold_occupation) == (100, 50)
        assert q.max_profit_classical == 50
        assert not q.reversed

    def test_identical_nets(self):
        net = Network(10, 300)
        q = quote(1, net, net)
        assert q.max_profit_exact == 0 and q.max_profit_classical == 0

    def test_small_occupations(self):
        q = quote(10, Network(2, 4), Network(2, 2))
        assert q.max_profit_exact == pytest.approx(10 * (1 - math.log(1.5) / math.log(2)))
        assert q.max_profit_exact == pytest.approx(4.150, abs=1e-3)

    def test_orientation_recorded(self):
        q = quote(10, Network(2, 2), Network(2, 4))
        assert q.reversed and q.hot_occupation == 2

    def test_invariants(self):
        q = quote(100, Network(50, 245000), Network(50, 122500))
        assert 0 <= q.max_profit_exact <= q.max_profit_classical <= q.quanta_moved
        assert q.max_profit_exact == pytest.approx(
            100 * (1 - q.per_link_entropy_hot / q.per_link_entropy_cold)
        )

    def test_empty_net_rejected(self):
        with pytest.raises(ValidationError):
            quote(1, Network(3, 0), Network(3, 5))

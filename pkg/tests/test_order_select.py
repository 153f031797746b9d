import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chaosinfer.order_select import (
    OrderRange,
    model_size,
    order_log_prior,
    order_posterior,
    rank_orders,
)
from chaosinfer.symbolize import SymbolSequence


def test_model_size_values():
    assert model_size(3, 2) == 8
    assert model_size(0, 2) == 1
    assert model_size(2, 3) == 18


def test_order_log_prior_values():
    assert order_log_prior(3, 2, "size_penalty") == -8.0
    assert order_log_prior(1, 2, "size_penalty") == -2.0
    assert order_log_prior(5, 2, "uniform") == 0.0
    with pytest.raises(ValueError):
        order_log_prior(1, 2, "bogus")


def test_order_log_prior_overflows_on_absurd_orders():
    with pytest.raises(OverflowError):
        order_log_prior(5000, 2, "size_penalty")


def test_order_range_validation():
    with pytest.raises(ValueError):
        OrderRange(2, 1)
    with pytest.raises(ValueError):
        OrderRange(-1, 3)
    assert list(OrderRange(1, 3).orders()) == [1, 2, 3]


def test_rank_orders_size_penalty_breaks_equal_evidence_toward_small_k():
    orders = (1, 2, 3)
    lp = [order_log_prior(k, 2, "size_penalty") for k in orders]
    ranking = rank_orders(orders, [-10.0, -10.0, -10.0], lp)
    assert ranking.selected == 1
    weights = np.exp(np.array(lp))
    assert np.allclose(ranking.posterior, weights / weights.sum(), atol=1e-12)


def test_rank_orders_uniform_tie_breaks_toward_small_k():
    ranking = rank_orders((2, 3), [-5.0, -5.0], [0.0, 0.0])
    assert ranking.selected == 2
    assert ranking.posterior == pytest.approx((0.5, 0.5), abs=1e-12)


def test_rank_orders_warns_when_top_of_range_wins():
    with pytest.warns(RuntimeWarning):
        ranking = rank_orders((1, 2), [-20.0, -1.0], [0.0, 0.0])
    assert ranking.selected == 2


@given(
    scores=st.lists(st.floats(-500.0, 0.0), min_size=1, max_size=8),
    priors=st.lists(st.floats(-50.0, 0.0), min_size=1, max_size=8),
)
def test_rank_orders_posterior_normalized(scores, priors):
    m = min(len(scores), len(priors))
    ranking = rank_orders(range(m), scores[:m], priors[:m])
    assert abs(sum(ranking.posterior) - 1.0) <= 1e-12
    assert ranking.selected in ranking.orders


def test_periodic_sequence_selects_order_one():
    seq = SymbolSequence(np.tile([0, 1], 1000), 2)
    ranking = order_posterior(seq, OrderRange(1, 3), "size_penalty")
    assert ranking.selected == 1
    # Evidence is nearly flat across orders on this string, so the posterior
    # mass of the winner is set by the penalty gaps: about 0.88 here.
    assert ranking.posterior[0] > 0.8


def test_iid_coin_selects_order_one():
    rng = np.random.default_rng(9)
    seq = SymbolSequence(rng.integers(0, 2, 10_000), 2)
    ranking = order_posterior(seq, OrderRange(1, 8), "size_penalty")
    assert ranking.selected == 1
    assert ranking.posterior[0] > 0.99


def test_iid_coin_with_k0_admitted():
    rng = np.random.default_rng(9)
    seq = SymbolSequence(rng.integers(0, 2, 4096), 2)
    ranking = order_posterior(seq, OrderRange(0, 2), "size_penalty")
    assert ranking.selected == 0


def test_degenerate_range_single_order():
    seq = SymbolSequence(np.tile([0, 1], 50), 2)
    ranking = order_posterior(seq, OrderRange(2, 2), "size_penalty")
    assert ranking.selected == 2
    assert ranking.posterior == (1.0,)


def test_order_posterior_sequence_too_short():
    seq = SymbolSequence(np.array([0, 1, 0]), 2)
    with pytest.raises(ValueError):
        order_posterior(seq, OrderRange(1, 3), "size_penalty")


@given(data=st.lists(st.integers(0, 1), min_size=8, max_size=64))
def test_selection_invariant_under_relabeling(data):
    seq = SymbolSequence(np.array(data), 2)
    flipped = SymbolSequence(1 - np.array(data), 2)
    a = order_posterior(seq, OrderRange(1, 2), "size_penalty")
    b = order_posterior(flipped, OrderRange(1, 2), "size_penalty")
    assert a.selected == b.selected

"""Shared test utilities: independent oracles and synthetic Markov sources.

Every oracle here avoids the code path it checks: the digamma reference uses
mpmath at high precision, the evidence oracles use only counting, division,
and Monte-Carlo draws, and the information-rate oracle averages log
probabilities over posterior samples.
"""

from __future__ import annotations

import math

import mpmath
import numpy as np

from chaosinfer.symbolize import SymbolSequence


def reference_digamma(x: float) -> float:
    """Digamma evaluated with 50 decimal digits, rounded to float."""
    with mpmath.workdps(50):
        return float(mpmath.digamma(mpmath.mpf(x)))


def sequential_log_evidence(symbols, order: int, alpha: float = 1.0, alphabet_size: int = 2) -> float:
    """Log marginal likelihood as a running product of predictive probabilities.

    Conditioned on the first `order` symbols; each later symbol contributes
    (count + alpha) / (context count + alpha * alphabet), with counts taken
    over the history seen so far.
    """
    counts: dict[tuple[int, ...], list[float]] = {}
    syms = [int(s) for s in symbols]
    total = 0.0
    for t in range(order, len(syms)):
        ctx = tuple(syms[t - order : t])
        row = counts.setdefault(ctx, [0.0] * alphabet_size)
        s = syms[t]
        total += math.log((row[s] + alpha) / (sum(row) + alpha * alphabet_size))
        row[s] += 1.0
    return total


def mc_evidence(table: np.ndarray, alpha: float, n_samples: int,
                rng: np.random.Generator, chunk: int = 250_000) -> tuple[float, float]:
    """Monte-Carlo mean and standard error of the prior-averaged likelihood.

    Binary alphabet: each context's success probability is drawn from
    Beta(alpha, alpha) and the likelihood of the counted transitions is
    averaged in probability space.
    """
    n0 = table[:, 0].astype(float)
    n1 = table[:, 1].astype(float)
    like = np.empty(n_samples)
    done = 0
    while done < n_samples:
        m = min(chunk, n_samples - done)
        p = rng.beta(alpha, alpha, size=(m, table.shape[0]))
        assert np.all((p > 0.0) & (p < 1.0))
        ll = (n1 * np.log(p) + n0 * np.log1p(-p)).sum(axis=1)
        like[done : done + m] = np.exp(ll)
        done += m
    return float(like.mean()), float(like.std(ddof=1) / math.sqrt(n_samples))


def mc_expected_info(table: np.ndarray, alpha: float, n_draws: int,
                     rng: np.random.Generator) -> tuple[float, float]:
    """Posterior-sampling estimate of the expected information rate (bits).

    Holds the posterior-mean process fixed and draws the sampled parameters
    from the per-context posterior; each draw contributes
    -sum q(ctx) q(s|ctx) log2 p(s|ctx), whose posterior average is the
    divergence-plus-entropy expectation.
    """
    post = table + alpha
    ctx = post.sum(axis=1)
    q_ctx = ctx / ctx.sum()
    q = post / ctx[:, None]
    p1 = rng.beta(post[:, 1], post[:, 0], size=(n_draws, post.shape[0]))
    assert np.all((p1 > 0.0) & (p1 < 1.0))
    vals = -(q_ctx * (q[:, 1] * np.log2(p1) + q[:, 0] * np.log2(1.0 - p1))).sum(axis=1)
    return float(vals.mean()), float(vals.std(ddof=1) / math.sqrt(n_draws))


def golden_mean_probs() -> np.ndarray:
    """Order-1 chain forbidding consecutive ones; entropy rate 2/3 bit."""
    return np.array([[0.5, 0.5], [1.0, 0.0]])


def sample_markov_sequence(probs: np.ndarray, order: int, n: int,
                           rng: np.random.Generator) -> SymbolSequence:
    """Draw n symbols from a fixed chain given as rows p(symbol | context).

    The first `order` symbols are uniform; afterwards the rolling context
    indexes the transition rows.
    """
    probs = np.asarray(probs, dtype=float)
    n_contexts, a = probs.shape
    assert n_contexts == a**order
    cdf = probs.cumsum(axis=1)
    u = rng.random(n)
    out = np.empty(n, dtype=np.int64)
    for t in range(min(order, n)):
        out[t] = min(int(u[t] * a), a - 1)
    ctx = 0
    for t in range(order):
        ctx = ctx * a + int(out[t])
    for t in range(order, n):
        s = int(np.searchsorted(cdf[ctx], u[t], side="right"))
        out[t] = min(s, a - 1)
        ctx = (ctx * a + out[t]) % n_contexts
    return SymbolSequence(out, a)

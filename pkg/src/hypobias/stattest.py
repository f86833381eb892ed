"""Exact two-sided paired sign test, computed in log space.

The binomial tail is summed from log-gamma terms with log-sum-exp, so p-values
far below double-precision underflow are still reported through log10_p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from scipy.special import gammaln, logsumexp

_LN2 = math.log(2.0)
_LN10 = math.log(10.0)


def log_binom_cdf(k: int, n: int) -> float:
    """Natural log of sum_{i<=k} C(n,i) * 2^-n."""
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"require 0 <= k <= n, got k={k}, n={n}")
    if k == n:
        return 0.0
    log_terms = [gammaln(n + 1) - gammaln(i + 1) - gammaln(n - i + 1) - n * _LN2
                 for i in range(k + 1)]
    return min(0.0, float(logsumexp(log_terms)))


@dataclass(frozen=True)
class SignTestResult:
    n_plus: int    # first classifier correct, second wrong
    n_minus: int   # second classifier correct, first wrong
    n_tie: int
    p_two_sided: float
    log10_p: float


def sign_test(correct_a: Sequence[bool], correct_b: Sequence[bool]) -> SignTestResult:
    """Exact two-sided sign test on positionally paired correctness outcomes."""
    if len(correct_a) != len(correct_b):
        raise ValueError(f"length mismatch: {len(correct_a)} vs {len(correct_b)}")
    n_plus = n_minus = n_tie = 0
    for a, b in zip(correct_a, correct_b):
        if a and not b:
            n_plus += 1
        elif b and not a:
            n_minus += 1
        else:
            n_tie += 1
    n = n_plus + n_minus
    if n == 0:
        return SignTestResult(n_plus=n_plus, n_minus=n_minus, n_tie=n_tie,
                              p_two_sided=1.0, log10_p=0.0)
    log_p = min(0.0, _LN2 + log_binom_cdf(min(n_plus, n_minus), n))
    return SignTestResult(n_plus=n_plus, n_minus=n_minus, n_tie=n_tie,
                          p_two_sided=math.exp(log_p), log10_p=log_p / _LN10)

"""Sound three-valued verification of sigma(n) < e^gamma * n * log log n.

The comparison runs in normalized form: the left side sigma(n)/n is an
exact rational (a product of (p^(k+1)-1)/(p^k(p-1)) over the prime
factorization), the right side e^gamma * ln(ln n) is a certified
enclosure with ln n evaluated as sum k_j ln p_j, so n itself is never
materialized.  A verdict of Satisfied or Violated is only issued when
the exact rational falls strictly outside the enclosure; otherwise the
precision is escalated, and only when the escalation ladder is
exhausted does the check report Indeterminate.

For n = 2 the right side has no useful value (ln ln 2 < 0, so the
inequality cannot hold for any n >= 2 whose sigma(n)/n >= 1); such
inputs are reported Violated with an explicit ``rhs_undefined`` reason
rather than erroring, so range scanners get a total verdict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .factorization import (
    EmptyFactorization,
    Factorization,
    sigma_int,
    sigma_over_n_fraction,
)
from .intervals import (
    _GUARD,
    Comparison,
    DEFAULT_PRECISION,
    Dyadic,
    GAMMA_MAX_BITS,
    PrecisionConfig,
    RealInterval,
    _ln_fp,
    compare,
    dyadic_from_fraction,
    exp_gamma,
)
from . import primes as _primes


class RhsUndefined(Exception):
    """ln(ln n) is not certifiably positive; the RHS has no usable value."""


class Verdict(enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    INDETERMINATE = "indeterminate"


REASON_RHS_UNDEFINED = "rhs_undefined"
REASON_LHS_EXCEEDS_RHS = "lhs_exceeds_rhs"
REASON_ESCALATION_EXHAUSTED = "escalation_exhausted"


@dataclass(frozen=True)
class CheckResult:
    factorization: Factorization
    lhs: Fraction
    rhs: Optional[RealInterval]
    verdict: Verdict
    precision_used: int
    margin_lower_bound: Optional[Dyadic]
    reason: Optional[str] = None


def sigma(f: Factorization) -> int:
    """Exact sum of divisors of n, from the closed-form product."""
    return sigma_int(f)


def sigma_over_n(f: Factorization) -> Fraction:
    """Exact sigma(n)/n in lowest terms, computed without forming n."""
    return sigma_over_n_fraction(f)


# ln(p) bounds cache keyed by (p, W); ln p is recomputed constantly during
# scans and sweeps, and the fixed-point bounds are just two ints.
_LN_PRIME_CACHE: dict[tuple[int, int], tuple[int, int]] = {}
_LN_PRIME_CACHE_MAX = 1 << 18


def _ln_prime_fp(p: int, W: int) -> tuple[int, int]:
    key = (p, W)
    got = _LN_PRIME_CACHE.get(key)
    if got is None:
        got = _ln_fp(p, 1, W)
        if len(_LN_PRIME_CACHE) < _LN_PRIME_CACHE_MAX:
            _LN_PRIME_CACHE[key] = got
    return got


def log_n(f: Factorization, precision_bits: int) -> RealInterval:
    """Enclosure of ln(n) = sum k_j ln(p_j); n is never materialized."""
    if not f.entries:
        raise EmptyFactorization("log_n of the empty factorization")
    W = precision_bits + _GUARD
    lo = 0
    hi = 0
    for p, k in f.entries:
        L, H = _ln_prime_fp(p, W)
        lo += k * L
        hi += k * H
    return RealInterval(Dyadic(lo, -W), Dyadic(hi, -W), precision_bits)


def _rhs_from_log(lnn: RealInterval, precision_bits: int) -> RealInterval:
    """e^gamma * ln(lnn) given a certified lnn with lnn.lo > 1."""
    W = precision_bits + _GUARD
    ln_num, ln_den = lnn.lo.as_num_den()
    L, _ = _ln_fp(ln_num, ln_den, W)
    hn, hd = lnn.hi.as_num_den()
    _, H = _ln_fp(hn, hd, W)
    eg = exp_gamma(precision_bits)
    # all quantities positive: product bounds are the endpoint products
    lo = dyadic_from_fraction(
        eg.lo.as_fraction() * Fraction(L, 1 << W), W, False
    )
    hi = dyadic_from_fraction(
        eg.hi.as_fraction() * Fraction(H, 1 << W), W, True
    )
    return RealInterval(lo, hi, precision_bits)


def robin_rhs(f: Factorization, precision_bits: int) -> RealInterval:
    """Enclosure of e^gamma * ln(ln n).

    Raises RhsUndefined unless ln n > 1 (n > e) is certifiable at this
    precision, which is what makes the outer log's value positive; n = 2
    always fails, n = 3 certifies at any reasonable precision.
    """
    lnn = log_n(f, precision_bits)
    one = Fraction(1)
    if lnn.lo.cmp_fraction(one) <= 0:
        raise RhsUndefined(
            "cannot certify ln n > 1"
            + (" (n <= e, permanently undefined)" if lnn.hi.cmp_fraction(one) <= 0 else "")
        )
    return _rhs_from_log(lnn, precision_bits)


def _next_bits(bits: int, cfg: PrecisionConfig) -> int:
    return min(bits * cfg.escalation_factor, cfg.max_bits, GAMMA_MAX_BITS)


def _effective_max(cfg: PrecisionConfig) -> int:
    return min(cfg.max_bits, GAMMA_MAX_BITS)


def check(f: Factorization, cfg: PrecisionConfig = DEFAULT_PRECISION) -> CheckResult:
    """Certified verdict on sigma(n)/n < e^gamma ln ln n, escalating precision.

    Satisfied and Violated are interval-separated certainties.  A
    permanently undefined RHS (n <= e) maps to Violated with the
    ``rhs_undefined`` reason, since sigma(n)/n >= 1 exceeds any
    negative/undefined right side for n >= 2.
    """
    if not f.entries:
        raise EmptyFactorization("check of the empty factorization")
    lhs = sigma_over_n_fraction(f)
    bits = cfg.start_bits
    one = Fraction(1)
    while True:
        lnn = log_n(f, bits)
        if lnn.hi.cmp_fraction(one) <= 0:
            # certified n <= e: RHS undefined for good
            return CheckResult(f, lhs, None, Verdict.VIOLATED, bits, None,
                               reason=REASON_RHS_UNDEFINED)
        if lnn.lo.cmp_fraction(one) <= 0:
            if bits >= _effective_max(cfg):
                return CheckResult(f, lhs, None, Verdict.INDETERMINATE, bits,
                                   None, reason=REASON_ESCALATION_EXHAUSTED)
            bits = _next_bits(bits, cfg)
            continue
        rhs = _rhs_from_log(lnn, bits)
        cmp_result = compare(lhs, rhs)
        if cmp_result is Comparison.LESS:
            margin = _round_down_margin(rhs.lo.as_fraction() - lhs, bits)
            return CheckResult(f, lhs, rhs, Verdict.SATISFIED, bits, margin)
        if cmp_result is Comparison.GREATER:
            margin = _round_down_margin(lhs - rhs.hi.as_fraction(), bits)
            return CheckResult(f, lhs, rhs, Verdict.VIOLATED, bits, margin,
                               reason=REASON_LHS_EXCEEDS_RHS)
        if bits >= _effective_max(cfg):
            return CheckResult(f, lhs, rhs, Verdict.INDETERMINATE, bits, None,
                               reason=REASON_ESCALATION_EXHAUSTED)
        bits = _next_bits(bits, cfg)


def _round_down_margin(fr: Fraction, bits: int) -> Dyadic:
    # understate the separation so downstream tables never overstate it
    return dyadic_from_fraction(fr, bits, False)


def check_n(n: int, cfg: PrecisionConfig = DEFAULT_PRECISION) -> CheckResult:
    """factorize(n) then check; n must fit the raw-input factoring range."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return check(_primes.factorize(n), cfg)

"""Prime generation, deterministic primality, factorization, parsing.

The sieve is segmented (numpy byte arrays, one segment at a time) so
memory stays proportional to the segment, not the limit.  A single
module-level prime source grows on demand behind a lock; readers only
ever see fully built immutable snapshots.

Raw-integer factorization is supported up to 64-bit magnitude: trial
division by sieved primes below 10^6, then Brent's variant of Pollard
rho with a deterministic Miller-Rabin primality test (the 12-witness
set, valid far beyond 2^64).  Anything larger must arrive pre-factored
as a factor string.
"""

from __future__ import annotations

import bisect
import math
import re
import threading
from math import gcd, isqrt

import numpy as np

from .factorization import Factorization


class LimitTooLarge(Exception):
    """Sieve limit exceeds the configured memory budget."""


class InputTooLarge(Exception):
    """Raw integer outside the supported factoring range; pass a factor string."""


class ParseError(Exception):
    """Factor string does not match the grammar."""


class NotPrime(Exception):
    """A factor-string base (or substituted prime) failed the primality check."""


class DuplicateBase(Exception):
    """The same prime appears twice in a factor string."""


class ZeroExponent(Exception):
    """Exponents in factor strings must be >= 1."""


# Raw n must fit in 64 bits; larger inputs arrive pre-factored.
MAX_FACTOR_INPUT = 2 ** 64 - 1

# Deterministic Miller-Rabin witness set, valid for n < 3.317e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981

_TRIAL_LIMIT = 10 ** 6
_DEFAULT_SEGMENT = 1 << 20
_DEFAULT_SIEVE_BUDGET = 10 ** 8


def _simple_sieve(limit: int) -> np.ndarray:
    """Primes <= limit as an int64 array; plain sieve, used for base primes."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.nonzero(flags)[0].astype(np.int64)


def _segmented_primes(limit: int, segment_size: int = _DEFAULT_SEGMENT):
    """Yield numpy arrays of primes covering [2, limit] segment by segment."""
    if limit < 2:
        return
    root = isqrt(limit)
    base = _simple_sieve(max(root, 2))
    yield base[base <= limit]
    lo = max(root + 1, 3)
    while lo <= limit:
        hi = min(lo + segment_size - 1, limit)
        flags = np.ones(hi - lo + 1, dtype=bool)
        for p in base:
            p = int(p)
            start = ((lo + p - 1) // p) * p
            if start < p * p:
                start = p * p
            if start <= hi:
                flags[start - lo :: p] = False
        yield (np.nonzero(flags)[0] + lo).astype(np.int64)
        lo = hi + 1


class PrimeTable:
    """Immutable ascending list of exactly the primes <= limit."""

    __slots__ = ("limit", "primes")

    def __init__(self, limit: int, primes: tuple[int, ...]):
        self.limit = limit
        self.primes = primes

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __getitem__(self, i):
        return self.primes[i]


def sieve(limit: int, *, segment_size: int = _DEFAULT_SEGMENT,
          budget: int = _DEFAULT_SIEVE_BUDGET) -> PrimeTable:
    """All primes <= limit, sieved segment by segment."""
    if limit < 2:
        raise ValueError("sieve limit must be >= 2")
    if limit > budget:
        raise LimitTooLarge(f"limit {limit} exceeds budget {budget}")
    chunks = list(_segmented_primes(limit, segment_size))
    primes = tuple(int(p) for chunk in chunks for p in chunk)
    return PrimeTable(limit, primes)


class _PrimeSource:
    """On-demand-growing shared prime list; growth is serialized."""

    def __init__(self):
        self._lock = threading.Lock()
        self._limit = 0
        self._primes: tuple[int, ...] = ()

    def _grow_to(self, limit: int):
        with self._lock:
            if limit <= self._limit:
                return
            new_limit = max(limit, 2 * self._limit, 1 << 16)
            chunks = list(_segmented_primes(new_limit))
            self._primes = tuple(int(p) for chunk in chunks for p in chunk)
            self._limit = new_limit

    def primes_up_to(self, limit: int) -> tuple[int, ...]:
        if limit > self._limit:
            self._grow_to(limit)
        primes = self._primes
        # snapshot may extend past limit; cut by bisection
        return primes[: bisect.bisect_right(primes, limit)]

    def first(self, m: int) -> tuple[int, ...]:
        while len(self._primes) < m:
            # p_m < m (ln m + ln ln m) for m >= 6; padded estimate
            if m < 6:
                est = 16
            else:
                est = int(m * (math.log(m) + math.log(math.log(m)))) + 16
            self._grow_to(max(est, 2 * self._limit))
        return self._primes[:m]


_SOURCE = _PrimeSource()


def nth_prime(m: int) -> int:
    """The m-th prime, 1-indexed: nth_prime(1) == 2."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return _SOURCE.first(m)[m - 1]


def first_primes(m: int) -> tuple[int, ...]:
    """The first m primes as an ascending tuple."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return _SOURCE.first(m)


def primes_up_to(limit: int) -> tuple[int, ...]:
    """Shared-source view of the primes <= limit."""
    if limit < 2:
        return ()
    return _SOURCE.primes_up_to(limit)


def primorial_factorization(m: int) -> Factorization:
    """Product of the first m primes, every exponent 1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return Factorization(tuple((p, 1) for p in _SOURCE.first(m)))


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.317e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n >= _MR_DETERMINISTIC_BOUND:
        raise ValueError(f"{n} exceeds the deterministic primality range")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """A nontrivial factor of odd composite n with no tiny prime factor."""
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        y, m_batch, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m_batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m_batch
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # unreachable in range


def factorize(n: int) -> Factorization:
    """Canonical factorization of 2 <= n <= 2^64 - 1; never wrong, may refuse."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if n > MAX_FACTOR_INPUT:
        raise InputTooLarge(
            f"{n} exceeds the raw-input range; supply a factor string instead"
        )
    factors: dict[int, int] = {}
    rem = n
    # strip the dense small factors by trial division; everything past
    # 10^3 is cheaper to find with rho (~sqrt(p) steps) than by trial
    for p in _SOURCE.primes_up_to(min(isqrt(rem), 1000)):
        if p * p > rem:
            break
        while rem % p == 0:
            factors[p] = factors.get(p, 0) + 1
            rem //= p
    stack = [rem] if rem > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            factors[v] = factors.get(v, 0) + 1
            continue
        d = _brent_rho(v)
        stack.append(d)
        stack.append(v // d)
    return Factorization(tuple(factors.items()))


_TERM_RE = re.compile(r"^(\d+)(?:\^(-?\d+))?$")


def parse_factor_string(s: str) -> Factorization:
    """Parse 'p^k*q^j*...' into a canonical Factorization.

    Grammar: term ('*' term)*, term = integer ('^' integer)?, whitespace
    allowed around tokens.  Bases must be distinct primes, exponents >= 1.
    """
    if not s or not s.strip():
        raise ParseError("empty factor string")
    seen: dict[int, int] = {}
    for raw in s.split("*"):
        term = "".join(raw.split())
        m = _TERM_RE.match(term)
        if not m:
            raise ParseError(f"bad term {raw!r}")
        base = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0:
            raise ZeroExponent(f"exponent of {base} is zero")
        if exp < 0:
            raise ParseError(f"negative exponent on {base}")
        if base >= _MR_DETERMINISTIC_BOUND:
            raise ParseError(
                f"base {base} exceeds the deterministic primality range"
            )
        if not is_prime(base):
            raise NotPrime(f"{base} is not prime")
        if base in seen:
            raise DuplicateBase(f"base {base} repeated")
        seen[base] = exp
    return Factorization(tuple(seen.items()))


def format_factor_string(f: Factorization) -> str:
    """Canonical formatter; parse_factor_string is its left inverse."""
    return f.as_string()

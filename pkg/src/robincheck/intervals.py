"""Exact dyadic interval arithmetic with outward rounding.

Every real quantity in this package that is not an exact rational is
carried as a `RealInterval`: a pair of dyadic rationals [lo, hi] that is
guaranteed to contain the true value.  All rounding is directed outward
(floor for lo, ceiling for hi), so a comparison of an exact rational
against an interval that comes out Less or Greater is a mathematical
certainty, never a floating-point accident.

The transcendental primitives are:

  * ``euler_gamma`` -- the Euler-Mascheroni constant, served from an
    embedded digit string (1400 decimal digits, cross-verified against
    two independent arbitrary-precision libraries at build time).
  * ``exp_gamma`` -- e**gamma, computed from the digit string by an
    exact Taylor series with the truncation remainder folded into the
    upper bound.
  * ``ln_interval`` / ``ln_of_interval`` -- natural log of an exact
    rational (or of an enclosure, via monotonicity), computed by
    argument reduction to [2/3, 4/3] plus the atanh series, again with
    a rigorous tail bound.

Series are evaluated in fixed-point integer arithmetic at a working
precision a few dozen bits beyond the requested precision; every
intermediate floor/ceil keeps the lower/upper bound property, so the
result interval is sound by construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class PrecisionUnsupported(Exception):
    """Requested precision exceeds the stored-constant capacity."""


class DomainError(Exception):
    """Argument outside the mathematical domain of the operation."""


# Guard bits added on top of the requested precision for internal series
# work; absorbs per-term rounding (~2 ulp/term) for series of up to a few
# thousand terms.
_GUARD = 32


# ---------------------------------------------------------------------------
# Dyadic rationals
# ---------------------------------------------------------------------------

def _floor_div_shift(num: int, den: int, shift: int) -> int:
    """floor(num * 2**shift / den) for den > 0, exact."""
    if shift >= 0:
        return (num << shift) // den
    return num // (den << -shift)


def _ceil_div_shift(num: int, den: int, shift: int) -> int:
    return -_floor_div_shift(-num, den, shift)


@dataclass(frozen=True)
class Dyadic:
    """An exact dyadic rational m * 2**e, normalized so m is odd or zero."""

    m: int
    e: int

    def __post_init__(self):
        m, e = self.m, self.e
        if m == 0:
            e = 0
        else:
            while m % 2 == 0:
                m //= 2
                e += 1
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "e", e)

    def as_fraction(self) -> Fraction:
        if self.e >= 0:
            return Fraction(self.m << self.e, 1)
        return Fraction(self.m, 1 << -self.e)

    def as_num_den(self) -> tuple[int, int]:
        if self.e >= 0:
            return self.m << self.e, 1
        return self.m, 1 << -self.e

    # Exact arithmetic: dyadics are closed under +, -, *.
    def __add__(self, other: "Dyadic") -> "Dyadic":
        if self.e <= other.e:
            return Dyadic(self.m + (other.m << (other.e - self.e)), self.e)
        return Dyadic((self.m << (self.e - other.e)) + other.m, other.e)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        return self + (-other)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.m, self.e)

    def __mul__(self, other: "Dyadic") -> "Dyadic":
        return Dyadic(self.m * other.m, self.e + other.e)

    def _cmp(self, other: "Dyadic") -> int:
        d = self - other
        return (d.m > 0) - (d.m < 0)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def cmp_fraction(self, fr: Fraction) -> int:
        """Exact sign of (self - fr)."""
        num, den = self.as_num_den()
        lhs = num * fr.denominator
        rhs = fr.numerator * den
        return (lhs > rhs) - (lhs < rhs)

    def __float__(self) -> float:
        # Display convenience only; never used for verdicts.
        try:
            return self.m * 2.0 ** self.e
        except OverflowError:
            return float(self.as_fraction())

    def decimal_str(self) -> str:
        """Exact finite decimal expansion (dyadics always have one)."""
        m, e = self.m, self.e
        if e >= 0:
            return str(m << e)
        k = -e
        sign = "-" if m < 0 else ""
        digits = abs(m) * 5 ** k  # m / 2^k == m * 5^k / 10^k
        s = str(digits).rjust(k + 1, "0")
        ip, fp = s[:-k], s[-k:]
        fp = fp.rstrip("0")
        return f"{sign}{ip}.{fp}" if fp else f"{sign}{ip}"

    def __repr__(self):
        return f"Dyadic({self.m}, {self.e})"


DYADIC_ZERO = Dyadic(0, 0)


def dyadic_from_num_den(num: int, den: int, bits: int, round_up: bool) -> Dyadic:
    """Round num/den (den > 0, not necessarily reduced) to ~bits bits, directed.

    Result differs from the true value by less than |num/den| *
    2**-(bits+1); round_up selects ceiling (result >= num/den),
    otherwise floor.  Takes raw integers so callers with huge unreduced
    ratios can skip gcd normalization entirely.
    """
    if num == 0:
        return DYADIC_ZERO
    e_est = num.bit_length() - den.bit_length()
    shift = bits + 2 - e_est
    if round_up:
        m = _ceil_div_shift(num, den, shift)
    else:
        m = _floor_div_shift(num, den, shift)
    return Dyadic(m, -shift)


def dyadic_from_fraction(fr: Fraction, bits: int, round_up: bool) -> Dyadic:
    """Round fr to a dyadic with ~bits significant bits, directed."""
    return dyadic_from_num_den(fr.numerator, fr.denominator, bits, round_up)


def dyadic_round(d: Dyadic, bits: int, round_up: bool) -> Dyadic:
    """Shorten a dyadic's mantissa to ~bits bits, rounding outward."""
    if d.m == 0 or abs(d.m).bit_length() <= bits + 2:
        return d
    drop = abs(d.m).bit_length() - (bits + 2)
    if round_up:
        m = -((-d.m) >> drop)
    else:
        m = d.m >> drop
    return Dyadic(m, d.e + drop)


# ---------------------------------------------------------------------------
# Intervals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RealInterval:
    """Enclosure [lo, hi] of a real value, endpoints dyadic, lo <= hi.

    ``precision_bits`` records the precision the interval was requested
    at; the construction sites guarantee hi - lo <= 2**-precision_bits *
    max(1, |hi|).
    """

    lo: Dyadic
    hi: Dyadic
    precision_bits: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    def width(self) -> Dyadic:
        return self.hi - self.lo

    def contains_fraction(self, fr: Fraction) -> bool:
        return self.lo.cmp_fraction(fr) <= 0 <= self.hi.cmp_fraction(fr)

    def contains_interval(self, other: "RealInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def midpoint(self) -> Fraction:
        return (self.lo.as_fraction() + self.hi.as_fraction()) / 2

    def __repr__(self):
        return f"RealInterval[{float(self.lo):.17g}, {float(self.hi):.17g}]@{self.precision_bits}"


def interval_from_fractions(lo: Fraction, hi: Fraction, bits: int) -> RealInterval:
    return RealInterval(
        dyadic_from_fraction(lo, bits + _GUARD, False),
        dyadic_from_fraction(hi, bits + _GUARD, True),
        bits,
    )


def iv_mul(x: RealInterval, y: RealInterval, bits: int) -> RealInterval:
    cands = [x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi]
    lo = min(cands)
    hi = max(cands)
    return RealInterval(
        dyadic_round(lo, bits + _GUARD, False),
        dyadic_round(hi, bits + _GUARD, True),
        bits,
    )


class Comparison(enum.Enum):
    """Three-way verdict for exact-rational vs interval comparison."""

    LESS = "less"
    GREATER = "greater"
    OVERLAPPING = "overlapping"


def compare(lhs: Fraction, rhs: RealInterval) -> Comparison:
    """Less iff lhs < rhs.lo, Greater iff lhs > rhs.hi, else Overlapping.

    Less/Greater are mathematically certain; Overlapping means the
    interval is too wide to decide and the caller should escalate.
    """
    if rhs.lo.cmp_fraction(lhs) > 0:
        return Comparison.LESS
    if rhs.hi.cmp_fraction(lhs) < 0:
        return Comparison.GREATER
    return Comparison.OVERLAPPING


# ---------------------------------------------------------------------------
# Precision configuration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrecisionConfig:
    """Escalation ladder for interval precision."""

    start_bits: int = 53
    max_bits: int = 4096
    escalation_factor: int = 2

    def __post_init__(self):
        if self.start_bits <= 0 or self.max_bits <= 0:
            raise ValueError("precision bits must be positive")
        if self.start_bits > self.max_bits:
            raise ValueError("start_bits must not exceed max_bits")
        if self.escalation_factor < 2:
            raise ValueError("escalation_factor must be >= 2")


DEFAULT_PRECISION = PrecisionConfig()


# ---------------------------------------------------------------------------
# The Euler-Mascheroni constant
# ---------------------------------------------------------------------------

# 1400 decimal digits.  Generated with mpmath (mp.euler) and cross-checked
# digit-for-digit against gmpy2.const_euler and the commonly published
# 100-digit value; the two libraries implement independent algorithms.
_GAMMA_DIGITS = (
    "5772156649015328606065120900824024310421593359399235988057672348848677"
    "2677766467093694706329174674951463144724980708248096050401448654283622"
    "4173997644923536253500333742937337737673942792595258247094916008735203"
    "9481656708532331517766115286211995015079847937450857057400299213547861"
    "4669402960432542151905877553526733139925401296742051375413954911168510"
    "2807984234877587205038431093997361372553060889331267600172479537836759"
    "2713515772261027349291394079843010341777177808815495706610750101619166"
    "3340152278935867965497252036212879226555953669628176388792726801324310"
    "1047650596370394739495763890657296792960100901512519595092224350140934"
    "9871228247949747195646976318506676129063811051824197444867836380861749"
    "4551698927923018773910729457815543160050021828440960537724342032854783"
    "6701517739439870030237033951832869000155819398804270741154222781971652"
    "3011073565833967348717650491941812300040654693142999297779569303100503"
    "0863034185698032310836916400258929708909854868257773642882539549258736"
    "2959613329857473930237343884707037028441292016641785024873337908056275"
    "4998434590761643167103146710722370021810745044418664759134803669025532"
    "4586254422253451813879124345735013612977822782881489459098638460062931"
    "6947188714958752549236649352047324364109726827616087759508809512620840"
    "4544477992299157248292516251278427659657083214610298214617951957959095"
    "9227042089896279712553632179488737642106606070659825619901028807561251"
)

# Largest precision (bits) the digit string can serve with outward rounding.
GAMMA_MAX_BITS = int(len(_GAMMA_DIGITS) * 3.3219280948) - 2 * _GUARD

_GAMMA_NUM = int(_GAMMA_DIGITS)
_GAMMA_DEN = 10 ** len(_GAMMA_DIGITS)


def _gamma_bounds(bits: int) -> tuple[Fraction, Fraction]:
    # True gamma lies in [D/10^k, (D+1)/10^k].
    return (
        Fraction(_GAMMA_NUM, _GAMMA_DEN),
        Fraction(_GAMMA_NUM + 1, _GAMMA_DEN),
    )


def euler_gamma(precision_bits: int) -> RealInterval:
    """Enclosure of the Euler-Mascheroni constant, width <= 2**-precision_bits."""
    if precision_bits <= 0:
        raise ValueError("precision_bits must be positive")
    if precision_bits > GAMMA_MAX_BITS:
        raise PrecisionUnsupported(
            f"gamma digit string supports at most {GAMMA_MAX_BITS} bits"
        )
    lo, hi = _gamma_bounds(precision_bits)
    return interval_from_fractions(lo, hi, precision_bits)


# ---------------------------------------------------------------------------
# Fixed-point series kernels
#
# All kernels work on integers at scale 2**W.  Quantities are kept
# nonnegative so that multiplication is monotone and lower/upper bounds
# propagate by flooring/ceiling each step.
# ---------------------------------------------------------------------------

def _fp_floor(num: int, den: int, W: int) -> int:
    return (num << W) // den


def _fp_ceil(num: int, den: int, W: int) -> int:
    return -(((-num) << W) // den)


def _atanh_fp(num: int, den: int, W: int) -> tuple[int, int]:
    """Bounds [L, H] with L <= atanh(num/den) * 2**W <= H, 0 <= num/den <= 1/3."""
    S = 1 << W
    t_lo = _fp_floor(num, den, W)
    t_hi = _fp_ceil(num, den, W)
    if t_hi == 0:
        return 0, 0
    t2_lo = (t_lo * t_lo) >> W
    t2_hi = ((t_hi * t_hi) + S - 1) >> W
    L, H = t_lo, t_hi
    p_lo, p_hi = t_lo, t_hi
    k = 1
    while True:
        p_lo = (p_lo * t2_lo) >> W
        p_hi = ((p_hi * t2_hi) + S - 1) >> W
        d = 2 * k + 1
        L += p_lo // d
        H += (p_hi + d - 1) // d
        if p_hi <= d:
            # Tail: sum_{j>k} t^(2j+1)/(2j+1) <= p_next / (2k+3) / (1 - t^2)
            # with t^2 <= 1/4 the geometric factor is < 2.
            p_next = ((p_hi * t2_hi) + S - 1) >> W
            H += (2 * p_next) // (2 * k + 3) + 2
            return L, H
        k += 1


_LN2_CACHE: dict[int, tuple[int, int]] = {}


def _ln2_fp(W: int) -> tuple[int, int]:
    """Bounds on ln(2) * 2**W; ln 2 = 2*atanh(1/3) exactly."""
    cached = _LN2_CACHE.get(W)
    if cached is None:
        L, H = _atanh_fp(1, 3, W)
        cached = (2 * L, 2 * H)
        if len(_LN2_CACHE) < 64:
            _LN2_CACHE[W] = cached
    return cached


def _ln_fp(num: int, den: int, W: int) -> tuple[int, int]:
    """Bounds [L, H] with L <= ln(num/den) * 2**W <= H, num, den > 0.

    Argument reduction: x = y * 2**s with y in [2/3, 4/3), then
    ln y = 2*atanh((y-1)/(y+1)) with |(y-1)/(y+1)| <= 1/5.
    """
    if num == den:
        return 0, 0
    s = num.bit_length() - den.bit_length()
    # ensure y = x / 2^s in [1, 2)
    if s >= 0:
        if num < (den << s):
            s -= 1
    else:
        if (num << -s) < den:
            s -= 1
    # fold into [2/3, 4/3): if y >= 4/3 use y/2
    if s >= 0:
        if 3 * num >= (den << (s + 2)):
            s += 1
        a, b = num, den << s
    else:
        if (3 * num) << -s >= den << 2:
            s += 1
        if s >= 0:
            a, b = num, den << s
        else:
            a, b = num << -s, den
    tn, td = a - b, a + b
    if tn >= 0:
        aL, aH = _atanh_fp(tn, td, W)
        L, H = 2 * aL, 2 * aH
    else:
        aL, aH = _atanh_fp(-tn, td, W)
        L, H = -2 * aH, -2 * aL
    l2L, l2H = _ln2_fp(W)
    if s >= 0:
        return L + s * l2L, H + s * l2H
    return L + s * l2H, H + s * l2L


def _exp_fp(xn: int, xd: int, W: int) -> tuple[int, int]:
    """Bounds [L, H] with L <= exp(xn/xd) * 2**W <= H, for 0 <= xn/xd <= 1."""
    S = 1 << W
    x_lo = _fp_floor(xn, xd, W)
    x_hi = _fp_ceil(xn, xd, W)
    L = H = S
    t_lo = t_hi = S
    i = 1
    while True:
        t_lo = ((t_lo * x_lo) >> W) // i
        num_hi = (t_hi * x_hi + S - 1) >> W
        t_hi = (num_hi + i - 1) // i
        L += t_lo
        H += t_hi
        if t_hi <= 1 and i >= 2:
            # Tail: sum_{j>i} x^j/j! <= (x^i/i!)/2 for x <= 1, i >= 2.
            H += 2 * t_hi + 2
            return L, H
        i += 1


# ---------------------------------------------------------------------------
# Public transcendental operations
# ---------------------------------------------------------------------------

def ln_interval(x: Union[Fraction, int], precision_bits: int) -> RealInterval:
    """Enclosure of ln(x) for an exact rational x > 0."""
    fr = Fraction(x)
    if fr <= 0:
        raise DomainError("ln requires a positive argument")
    W = precision_bits + _GUARD
    L, H = _ln_fp(fr.numerator, fr.denominator, W)
    return RealInterval(Dyadic(L, -W), Dyadic(H, -W), precision_bits)


def ln_of_interval(x: RealInterval, precision_bits: int) -> RealInterval:
    """Enclosure of ln(t) for every t in x; requires x.lo > 0."""
    if x.lo.m <= 0:
        raise DomainError("interval must be certified positive for ln")
    W = precision_bits + _GUARD
    ln_num, ln_den = x.lo.as_num_den()
    L, _ = _ln_fp(ln_num, ln_den, W)
    hn, hd = x.hi.as_num_den()
    _, H = _ln_fp(hn, hd, W)
    return RealInterval(Dyadic(L, -W), Dyadic(H, -W), precision_bits)


_EXP_GAMMA_CACHE: dict[int, RealInterval] = {}


def exp_gamma(precision_bits: int) -> RealInterval:
    """Enclosure of e**gamma ~ 1.7810724, width <= 2**(-precision_bits+2)."""
    if precision_bits <= 0:
        raise ValueError("precision_bits must be positive")
    if precision_bits > GAMMA_MAX_BITS:
        raise PrecisionUnsupported(
            f"gamma digit string supports at most {GAMMA_MAX_BITS} bits"
        )
    cached = _EXP_GAMMA_CACHE.get(precision_bits)
    if cached is not None:
        return cached
    W = precision_bits + _GUARD
    g_lo, g_hi = _gamma_bounds(precision_bits)
    L, _ = _exp_fp(g_lo.numerator, g_lo.denominator, W)
    _, H = _exp_fp(g_hi.numerator, g_hi.denominator, W)
    result = RealInterval(Dyadic(L, -W), Dyadic(H, -W), precision_bits)
    if len(_EXP_GAMMA_CACHE) < 64:
        _EXP_GAMMA_CACHE[precision_bits] = result
    return result

"""Exact partial sums, rigorous intervals, and breaking-point searches.

Everything here works in normalized units: the k-th scale of the
odd-harmonic family is 1/(2k+1), so the thresholds of interest are the
small integers 2, 3, 5, 7 rather than multiples of pi.

Two rigorous comparison modes are available when deciding whether a
partial sum has crossed a threshold:

* exact rationals, used while the number of summed terms is small;
* directed-rounded intervals at a configurable number of bits, used for
  long scans, escalating precision until the comparison is strict.

Intervals are dyadic fixed point: an ``Interval`` stores integer
mantissas lo, hi meaning [lo/2^P, hi/2^P].  Rounding a rational in is
floor/ceil on the mantissa, addition at equal P is exact, and every
operation returns an enclosure of the exact result.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd

from .rational import rat

DEFAULT_PRECISION_BITS = max(53, int(os.environ.get("SINCPROD_PRECISION_BITS", "128")))

EXACT_TERM_CUTOFF = 10_000
MAX_PRECISION_BITS = 1 << 14


class NonTerminatingSearchError(Exception):
    """The family cannot reach the requested threshold."""


# ---------------------------------------------------------------------------
# Intervals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """Enclosure [lo_num/2^P, hi_num/2^P] with directed rounding at P bits."""

    lo_num: int
    hi_num: int
    precision_bits: int

    def __post_init__(self):
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be >= 53")
        if self.lo_num > self.hi_num:
            raise ValueError("empty interval")

    @classmethod
    def from_rational(cls, x, precision_bits: int = DEFAULT_PRECISION_BITS) -> "Interval":
        x = rat(x)
        p, q = x.numerator, x.denominator
        scaled = p << precision_bits
        lo = scaled // q                # floor
        hi = -((-scaled) // q)          # ceil
        return cls(lo, hi, precision_bits)

    @property
    def lo(self):
        return rat(self.lo_num, 1 << self.precision_bits)

    @property
    def hi(self):
        return rat(self.hi_num, 1 << self.precision_bits)

    def width(self):
        return rat(self.hi_num - self.lo_num, 1 << self.precision_bits)

    def midpoint(self):
        return rat(self.lo_num + self.hi_num, 1 << (self.precision_bits + 1))

    def contains(self, x) -> bool:
        return self.lo <= rat(x) <= self.hi

    def strictly_below(self, x) -> bool:
        return self.hi < rat(x)

    def strictly_above(self, x) -> bool:
        return self.lo > rat(x)

    def _aligned(self, other: "Interval"):
        if self.precision_bits != other.precision_bits:
            raise ValueError("mixed interval precisions; use with_precision first")
        return other

    def with_precision(self, precision_bits: int) -> "Interval":
        shift = precision_bits - self.precision_bits
        if shift >= 0:
            return Interval(self.lo_num << shift, self.hi_num << shift, precision_bits)
        lo = self.lo_num >> -shift
        hi = -((-self.hi_num) >> -shift)
        return Interval(lo, hi, precision_bits)

    def __add__(self, other: "Interval") -> "Interval":
        other = self._aligned(other)
        return Interval(self.lo_num + other.lo_num, self.hi_num + other.hi_num, self.precision_bits)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi_num, -self.lo_num, self.precision_bits)

    def __sub__(self, other: "Interval") -> "Interval":
        return self + (-other)

    def __mul__(self, other: "Interval") -> "Interval":
        other = self._aligned(other)
        cands = [
            self.lo_num * other.lo_num,
            self.lo_num * other.hi_num,
            self.hi_num * other.lo_num,
            self.hi_num * other.hi_num,
        ]
        p = self.precision_bits
        lo = min(cands) >> p                      # floor(x / 2^P)
        hi = -((-max(cands)) >> p)                # ceil
        return Interval(lo, hi, p)

    def __float__(self) -> float:
        return float(self.midpoint())

    def __repr__(self):
        return "Interval(~%.17g, width=%.3g, bits=%d)" % (
            float(self.midpoint()),
            float(self.width()),
            self.precision_bits,
        )


# ---------------------------------------------------------------------------
# Scale families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HarmonicFamily:
    """A sequence of positive scales beta_0, beta_1, ...

    kinds: "odd_harmonic" (beta_k = 1/(2k+1)), "constant" (beta_k = beta),
    "custom" (explicit finite list).
    """

    kind: str
    beta: object = None
    betas: tuple = ()

    @classmethod
    def odd_harmonic(cls) -> "HarmonicFamily":
        return cls("odd_harmonic")

    @classmethod
    def constant(cls, beta) -> "HarmonicFamily":
        beta = rat(beta)
        if beta <= 0:
            raise ValueError("scales must be positive")
        return cls("constant", beta=beta)

    @classmethod
    def custom(cls, betas) -> "HarmonicFamily":
        betas = tuple(rat(b) for b in betas)
        if not betas or any(b <= 0 for b in betas):
            raise ValueError("scales must be a nonempty positive list")
        return cls("custom", betas=betas)

    def scale(self, k: int):
        if self.kind == "odd_harmonic":
            return rat(1, 2 * k + 1)
        if self.kind == "constant":
            return self.beta
        return self.betas[k]

    def size(self):
        """Number of terms, or None for the unbounded families."""
        return len(self.betas) if self.kind == "custom" else None


# ---------------------------------------------------------------------------
# Odd-harmonic partial sums
# ---------------------------------------------------------------------------


def _odd_sum_raw(n: int):
    """(num, den) with den the running lcm of 1, 3, ..., 2n+1.

    Keeping the denominator as the lcm avoids a full gcd reduction per
    term, which is what makes thousands of terms cheap.
    """
    num, den = 0, 1
    for k in range(n + 1):
        d = 2 * k + 1
        mult = d // gcd(den, d)
        den *= mult
        num = num * mult + den // d
    return num, den


def odd_harmonic_sum(n: int):
    """Sum_{k=0..n} 1/(2k+1) exactly, in lowest terms."""
    if n < 0:
        raise ValueError("n must be >= 0")
    num, den = _odd_sum_raw(n)
    return rat(num, den)


def interval_odd_harmonic_sum(n: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> Interval:
    """Enclosure of Sum_{k=0..n} 1/(2k+1) at the requested precision.

    Each term is rounded once, so the width is at most (n+1) ulp, well
    inside the (n+1) * 2^(1-P) * value contract.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if precision_bits < 53:
        raise ValueError("precision_bits must be >= 53")
    one = 1 << precision_bits
    lo = hi = 0
    for k in range(n + 1):
        d = 2 * k + 1
        q, r = divmod(one, d)
        lo += q
        hi += q + (1 if r else 0)
    return Interval(lo, hi, precision_bits)


# ---------------------------------------------------------------------------
# Breaking points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BreakingPointResult:
    n: int
    mode: str              # "exact", "interval", or "closed_form"
    precision_bits: int | None
    terms_scanned: int


def breaking_point(family: HarmonicFamily, threshold, **kwargs) -> int:
    """Largest n with Sum_{k=0..n} beta_k < threshold (strict).

    The decision is rigorous: exact rationals while at most
    ``exact_term_cutoff`` terms are in play, then interval scans with
    precision escalation (restarting at twice the bits whenever a
    comparison straddles), with a final exact fallback if escalation is
    exhausted, which can only happen when the threshold is hit exactly.
    """
    return breaking_point_report(family, threshold, **kwargs).n


def breaking_point_report(
    family: HarmonicFamily,
    threshold,
    exact_term_cutoff: int = EXACT_TERM_CUTOFF,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    max_terms: int = 100_000_000,
) -> BreakingPointResult:
    threshold = rat(threshold)
    if threshold <= 0:
        raise ValueError("threshold must be positive")

    if family.kind == "constant":
        # (n+1) * beta < t  <=>  n + 1 <= ceil(t/beta) - 1
        ratio = threshold / family.beta
        p, q = ratio.numerator, ratio.denominator
        ceil_ratio = -((-p) // q)
        n = ceil_ratio - 2
        if n < 0:
            raise NonTerminatingSearchError("first scale already reaches the threshold")
        return BreakingPointResult(n, "closed_form", None, 0)

    if family.kind == "custom":
        total = rat(0)
        for k, b in enumerate(family.betas):
            total += b
            if total >= threshold:
                if k == 0:
                    raise NonTerminatingSearchError("first scale already reaches the threshold")
                return BreakingPointResult(k - 1, "exact", None, k + 1)
        raise NonTerminatingSearchError(
            "family total %s stays below threshold %s" % (total, threshold)
        )

    # odd_harmonic: exact phase with lcm denominators, then intervals
    t_p, t_q = threshold.numerator, threshold.denominator
    num, den = 0, 1
    k = 0
    while k <= exact_term_cutoff:
        d = 2 * k + 1
        mult = d // gcd(den, d)
        den *= mult
        num = num * mult + den // d
        if num * t_q >= t_p * den:
            if k == 0:
                raise NonTerminatingSearchError("first scale already reaches the threshold")
            return BreakingPointResult(k - 1, "exact", None, k + 1)
        k += 1

    checkpoint_k, checkpoint = k, (num, den)
    bits = precision_bits
    while bits <= MAX_PRECISION_BITS:
        one = 1 << bits
        num, den = checkpoint
        lo = (num << bits) // den
        hi = -((-(num << bits)) // den)
        t_scaled_num = t_p * one   # compare against t_q * mantissa
        k = checkpoint_k
        straddled = False
        while k <= max_terms:
            d = 2 * k + 1
            q, r = divmod(one, d)
            lo += q
            hi += q + (1 if r else 0)
            if lo * t_q >= t_scaled_num:
                return BreakingPointResult(k - 1, "interval", bits, k + 1)
            if hi * t_q >= t_scaled_num:
                straddled = True
                break
            k += 1
        if not straddled:
            raise NonTerminatingSearchError("scan exceeded max_terms without a decision")
        bits *= 2

    # Escalation exhausted: the sum must equal the threshold at some n.
    # Decide the straddling comparisons exactly from the checkpoint.
    num, den = checkpoint
    k = checkpoint_k
    while k <= max_terms:
        d = 2 * k + 1
        mult = d // gcd(den, d)
        den *= mult
        num = num * mult + den // d
        if num * t_q >= t_p * den:
            return BreakingPointResult(k - 1, "exact", None, k + 1)
        k += 1
    raise NonTerminatingSearchError("scan exceeded max_terms without a decision")

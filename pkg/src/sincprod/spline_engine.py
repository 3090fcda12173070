"""Compactly supported piecewise polynomials over exact rationals.

A ``PiecewisePolynomial`` is a strictly increasing breakpoint list
x_0 < ... < x_M together with one coefficient list (ascending powers of
x, global monomial basis) per open interval (x_j, x_{j+1}).  The value
is identically 0 outside [x_0, x_M]; the value exactly at a breakpoint
is fixed by a ``JumpConvention`` at evaluation time, defaulting to the
Dirichlet half-sum of the one-sided limits.

The only constructor that matters downstream is convolution with a
centered box: the result at x is the exact integral of the input over
[x-h, x+h], computed from the piecewise antiderivative.  That raises
every degree by one, widens the support by h on each side, and keeps
every coefficient rational.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from enum import Enum

from .rational import rat, rat_str

SIZE_GUARD_DEFAULT = 1 << 20


class SplineSizeError(Exception):
    """Projected breakpoint count exceeds the configured cap."""


class JumpConvention(Enum):
    HALF_SUM = "half_sum"
    LEFT = "left"
    RIGHT = "right"


def _convention(c) -> JumpConvention:
    return c if isinstance(c, JumpConvention) else JumpConvention(str(c))


# ---------------------------------------------------------------------------
# dense polynomial helpers on coefficient lists (ascending degree)
# ---------------------------------------------------------------------------


def _peval(coeffs, x):
    acc = rat(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _pshift(coeffs, h):
    """Coefficients of p(x + h)."""
    out = [rat(0)]
    for c in reversed(coeffs):
        # out <- out * (x + h) + c
        new = [rat(0)] * (len(out) + 1)
        for i, a in enumerate(out):
            new[i + 1] += a
            new[i] += a * h
        new[0] += c
        out = _ptrim(new)
    return out

def _pint(coeffs):
    return [rat(0)] + [c / (i + 1) for i, c in enumerate(coeffs)]


def _pderive(coeffs):
    if len(coeffs) <= 1:
        return [rat(0)]
    return [c * i for i, c in enumerate(coeffs)][1:]


def _psub(a, b):
    n = max(len(a), len(b))
    out = [rat(0)] * n
    for i in range(n):
        if i < len(a):
            out[i] += a[i]
        if i < len(b):
            out[i] -= b[i]
    return _ptrim(out)


def _ptrim(coeffs):
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PiecewisePolynomial:
    breakpoints: tuple
    pieces: tuple  # pieces[j] valid on (breakpoints[j], breakpoints[j+1])

    def __post_init__(self):
        bps = tuple(rat(b) for b in self.breakpoints)
        pcs = tuple(tuple(rat(c) for c in _ptrim(list(p))) for p in self.pieces)
        if len(bps) != len(pcs) + (1 if pcs else 0):
            raise ValueError("need exactly one piece per breakpoint gap")
        if any(bps[i] >= bps[i + 1] for i in range(len(bps) - 1)):
            raise ValueError("breakpoints must be strictly increasing")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", pcs)

    @classmethod
    def zero(cls) -> "PiecewisePolynomial":
        return cls((), ())

    @property
    def support(self):
        if not self.pieces:
            return None
        return (self.breakpoints[0], self.breakpoints[-1])

    def degree(self) -> int:
        """Max piece degree; -1 for the zero function."""
        deg = -1
        for p in self.pieces:
            if len(p) > 1 or p[0] != 0:
                deg = max(deg, len(p) - 1)
        return deg

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, x, convention=JumpConvention.HALF_SUM):
        x = rat(x)
        if not self.pieces or x < self.breakpoints[0] or x > self.breakpoints[-1]:
            return rat(0)
        i = bisect.bisect_left(self.breakpoints, x)
        if i < len(self.breakpoints) and self.breakpoints[i] == x:
            left = _peval(self.pieces[i - 1], x) if i >= 1 else rat(0)
            right = _peval(self.pieces[i], x) if i < len(self.pieces) else rat(0)
            mode = _convention(convention)
            if mode is JumpConvention.LEFT:
                return left
            if mode is JumpConvention.RIGHT:
                return right
            return (left + right) / 2
        return _peval(self.pieces[i - 1], x)

    def __call__(self, x, convention=JumpConvention.HALF_SUM):
        return self.evaluate(x, convention)

    # -- calculus -----------------------------------------------------------

    def integral(self):
        total = rat(0)
        for j, p in enumerate(self.pieces):
            ip = _pint(p)
            total += _peval(ip, self.breakpoints[j + 1]) - _peval(ip, self.breakpoints[j])
        return total

    def _cumulative(self):
        """Antiderivative pieces, continuous, zero at the left edge."""
        out = []
        cum = rat(0)
        for j, p in enumerate(self.pieces):
            ip = _pint(p)
            ip[0] += cum - _peval(ip, self.breakpoints[j])
            out.append(ip)
            cum = _peval(ip, self.breakpoints[j + 1])
        return out, cum

    def antiderivative(self) -> "PiecewisePolynomial":
        """Restriction of the antiderivative to the support.

        The true antiderivative continues as the constant ``integral()``
        to the right of the support; that tail is not representable
        under the compact-support convention and is dropped.
        """
        if not self.pieces:
            return self
        pieces, _ = self._cumulative()
        return PiecewisePolynomial(self.breakpoints, tuple(tuple(p) for p in pieces))

    def differentiate(self) -> "PiecewisePolynomial":
        """Piecewise derivative (jumps at breakpoints are ignored)."""
        if not self.pieces:
            return self
        return PiecewisePolynomial(
            self.breakpoints, tuple(tuple(_pderive(list(p))) for p in self.pieces)
        )

    def smoothness_order(self) -> int | float:
        """Largest m with matching derivatives up to order m at every
        breakpoint; -1 for a jump, inf when there is no constraint."""
        if not self.pieces:
            return float("inf")
        zero = (rat(0),)
        best = float("inf")
        for i, b in enumerate(self.breakpoints):
            left = list(self.pieces[i - 1]) if i >= 1 else list(zero)
            right = list(self.pieces[i]) if i < len(self.pieces) else list(zero)
            diff = _psub(left, right)
            if diff == [0]:
                continue  # identical polynomials, no constraint here
            order = -1
            while _peval(diff, b) == 0:
                order += 1
                diff = _pderive(diff)
            best = min(best, order)
        return best

    # -- convolution --------------------------------------------------------

    def convolve_with_box(self, halfwidth, size_guard: int = SIZE_GUARD_DEFAULT) -> "PiecewisePolynomial":
        """x -> integral of self over [x - h, x + h], exactly."""
        h = rat(halfwidth)
        if h <= 0:
            raise ValueError("halfwidth must be positive")
        if not self.pieces:
            return self
        bps = self.breakpoints
        newbp = sorted(set([b - h for b in bps] + [b + h for b in bps]))
        if len(newbp) > size_guard:
            raise SplineSizeError(
                "convolution would produce %d breakpoints (cap %d); "
                "use pruned point evaluation instead" % (len(newbp), size_guard)
            )
        anti, total = self._cumulative()

        def shifted_cumulative(lo, hi, shift):
            # polynomial in x equal to G(x + shift) on (lo, hi); the
            # breakpoint union guarantees (lo+shift, hi+shift) meets no
            # breakpoint of G, so one piece (or a constant tail) covers it.
            a, b = lo + shift, hi + shift
            if b <= bps[0]:
                return [rat(0)]
            if a >= bps[-1]:
                return [total]
            j = bisect.bisect_right(bps, a) - 1
            j = min(max(j, 0), len(anti) - 1)
            return _pshift(anti[j], shift)

        pieces = []
        for j in range(len(newbp) - 1):
            lo, hi = newbp[j], newbp[j + 1]
            pieces.append(tuple(_psub(shifted_cumulative(lo, hi, h), shifted_cumulative(lo, hi, -h))))
        return PiecewisePolynomial(tuple(newbp), tuple(pieces))

    def scaled(self, factor) -> "PiecewisePolynomial":
        f = rat(factor)
        return PiecewisePolynomial(
            self.breakpoints, tuple(tuple(c * f for c in p) for p in self.pieces)
        )

    # -- serialization ------------------------------------------------------

    def to_csv(self) -> str:
        """One row per piece: x_lo, x_hi, c0, c1, ..., c_d ("p/q" fields)."""
        lines = []
        for j, p in enumerate(self.pieces):
            cells = [rat_str(self.breakpoints[j]), rat_str(self.breakpoints[j + 1])]
            cells += [rat_str(c) for c in p]
            lines.append(",".join(cells))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_csv(cls, text: str) -> "PiecewisePolynomial":
        bps, pieces = [], []
        for line in text.strip().splitlines():
            if not line.strip():
                continue
            cells = [rat(c) for c in line.split(",")]
            lo, hi, coeffs = cells[0], cells[1], cells[2:]
            if not bps:
                bps.append(lo)
            elif lo != bps[-1]:
                raise ValueError("pieces are not contiguous")
            bps.append(hi)
            pieces.append(tuple(coeffs))
        if not pieces:
            return cls.zero()
        return cls(tuple(bps), tuple(pieces))


def box(halfwidth) -> PiecewisePolynomial:
    """Unit-mass-per-unit-scale box: value 1/h on [-h, h].

    This is the normalized-frequency transform of a single sinc factor
    with scale h, so box(h)(0) = 1/h and integral(box(h)) = 2.
    """
    h = rat(halfwidth)
    if h <= 0:
        raise ValueError("halfwidth must be positive")
    return PiecewisePolynomial((-h, h), ((1 / h,),))

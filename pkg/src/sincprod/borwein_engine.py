"""Exact integrals, weighted integrals and deficits of sinc products.

For f(t) = prod_k sinc(beta_k pi t) the normalized transform
F(x) = fhat(pi x) is a compactly supported piecewise polynomial with
rational breakpoints and coefficients.  It is built recursively:

    F_0 = box(beta_0),   F_j = convolve_with_box(F_{j-1}, beta_j) / (2 beta_j)

which keeps integral(F) = 2 (that is f(0) = 1) for every spec.  Under
this normalization

    integral of f dt             = F(0)
    integral of W_m(t) f(t) dt   = 2 * (F(1) + F(3) + ... + F(2m+1))

with W_m(t) = 2 sum_{k<=m} cos((2k+1) pi t).  When some beta_k equals 1
all nonzero integer samples of f vanish, so the integer/odd-integer
sample sums collapse to 1 and either quantity equals

    1 - 2 * sum of F over the sample points beyond the covered set,

turning "is the integral exactly 1" into a support comparison plus a
few evaluations of F near the edge of its support.

Single points of F are also computable without building the spline: on
sorting the scales descending, F(x) is a signed sum of (S - x)^n over
sign assignments S = sum_k eps_k beta_k that exceed x, and branches
whose maximal achievable S lies at or below x are pruned.  Near the
support edge only O(n) branches survive, which is what makes the
57-factor deficit exact evaluation instant.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .rational import rat, rat_str, to_decimal
from .spline_engine import (
    SIZE_GUARD_DEFAULT,
    JumpConvention,
    PiecewisePolynomial,
    SplineSizeError,
    box,
)

NODE_BUDGET_DEFAULT = 10**8


class NodeBudgetError(Exception):
    """Pruned enumeration exceeded its node budget."""

    def __init__(self, visited, surviving, budget):
        self.visited = visited
        self.surviving = surviving
        self.budget = budget
        super().__init__(
            "pruned enumeration exceeded the node budget "
            "(%d nodes visited, %d surviving branches, budget %d)" % (visited, surviving, budget)
        )


class ExactPathUnavailableError(Exception):
    """Neither the spline nor pruned evaluation can produce the exact value.

    The numeric oracle (sincprod.numeric_oracle) is the fallback for
    these inputs.
    """


# ---------------------------------------------------------------------------
# specs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SincProductSpec:
    """Scale factors beta_k > 0 of f(t) = prod_k sinc(beta_k pi t)."""

    betas: tuple

    def __post_init__(self):
        betas = tuple(rat(b) for b in self.betas)
        if not betas:
            raise ValueError("at least one scale factor is required")
        if any(b <= 0 for b in betas):
            raise ValueError("scale factors must be positive")
        object.__setattr__(self, "betas", betas)

    @classmethod
    def odd_harmonic(cls, n: int) -> "SincProductSpec":
        if n < 0:
            raise ValueError("n must be >= 0")
        return cls(tuple(rat(1, 2 * k + 1) for k in range(n + 1)))

    @classmethod
    def sinc_power(cls, n: int) -> "SincProductSpec":
        if n < 1:
            raise ValueError("n must be >= 1")
        return cls((rat(1),) * n)

    def support_radius(self):
        return sum(self.betas, rat(0))

    def degree(self) -> int:
        return len(self.betas) - 1

    def has_unit_scale(self) -> bool:
        return any(b == 1 for b in self.betas)

    def scaled(self, factor) -> "SincProductSpec":
        f = rat(factor)
        if f <= 0:
            raise ValueError("scaling factor must be positive")
        return SincProductSpec(tuple(b * f for b in self.betas))


@dataclass(frozen=True)
class CosineWeightSpec:
    """Weight W(t) = 2 sum_{k=0..m} cos((2k+1) pi t)."""

    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("m must be >= 0")

    def multipliers(self) -> tuple:
        return tuple(2 * k + 1 for k in range(self.m + 1))


@dataclass(frozen=True)
class EvalReport:
    """Outcome of one exact integral / sum / deficit computation.

    ``deficit`` is 1 - integral when a unit identity applies (some
    beta_k = 1) and None otherwise.  ``deficit_terms`` lists the
    (sample point, F value) pairs whose doubled sum makes up the
    deficit, so exact_value + 2 * sum(F values) = 1 in integral-flavored
    reports.
    """

    exact_value: object
    decimal: str
    support_radius: object
    deficit: object = None
    deficit_terms: tuple = ()
    certified_by_support: bool = False

    def to_dict(self, command: str, spec: SincProductSpec, weights: CosineWeightSpec | None = None) -> dict:
        return {
            "command": command,
            "spec": [rat_str(b) for b in spec.betas],
            "weights": weights.m if weights is not None else None,
            "exact": rat_str(self.exact_value),
            "decimal": self.decimal,
            "support_radius": rat_str(self.support_radius),
            "deficit": rat_str(self.deficit) if self.deficit is not None else None,
            "deficit_terms": [[int(x), rat_str(v)] for x, v in self.deficit_terms],
            "certified_by_support": self.certified_by_support,
        }


# ---------------------------------------------------------------------------
# full-spline path
# ---------------------------------------------------------------------------


def fourier_spline(spec: SincProductSpec, size_guard: int = SIZE_GUARD_DEFAULT) -> PiecewisePolynomial:
    """Normalized transform F of the sinc product, as an exact spline.

    Breakpoints are the signed subset sums of the scales; a scale
    appearing m times contributes a factor m+1, so the projected count
    is prod (m_i + 1) over distinct scales, up to 2^(n+1).  Builds whose
    projection exceeds the size guard are refused up front with a
    pointer to point_eval_pruned.
    """
    projected = 1
    for mult in Counter(spec.betas).values():
        projected *= mult + 1
        if projected > size_guard:
            raise SplineSizeError(
                "projected breakpoint count %s exceeds the size guard %d; "
                "use point_eval_pruned for single points" % (projected, size_guard)
            )
    F = box(spec.betas[0])
    for b in spec.betas[1:]:
        F = F.convolve_with_box(b, size_guard=size_guard).scaled(rat(1, 2) / b)
    return F


def edge_polynomial(spec: SincProductSpec):
    """(C, n, valid_from) with F(x) = C (R - x)^n on (valid_from, R).

    R is the support radius; the edge region ends at R - 2 min(beta),
    the largest signed subset sum below R.
    """
    n = spec.degree()
    prod = rat(1)
    for b in spec.betas:
        prod *= b
    C = rat(1) / (rat(math.factorial(n)) * rat(2) ** n * prod)
    R = spec.support_radius()
    return C, n, R - 2 * min(spec.betas)


# ---------------------------------------------------------------------------
# pruned single-point path
# ---------------------------------------------------------------------------


@dataclass
class _PruneStats:
    visited: int = 0
    surviving: int = 0


def point_eval_pruned(
    spec: SincProductSpec,
    x,
    convention=JumpConvention.HALF_SUM,
    node_budget: int = NODE_BUDGET_DEFAULT,
):
    """Exact F(x) by branch-and-bound over sign assignments.

    Evenness reduces x to |x|.  The jump convention only matters for a
    single-factor spec evaluated exactly at its edge; with two or more
    factors F is continuous and the enumeration (strict exceedance)
    already yields the function value.
    """
    value, _ = _point_eval_pruned_stats(spec, x, convention, node_budget)
    return value


def _point_eval_pruned_stats(spec, x, convention=JumpConvention.HALF_SUM, node_budget=NODE_BUDGET_DEFAULT):
    x = abs(rat(x))
    betas = sorted(spec.betas, reverse=True)
    n = len(betas) - 1

    prod = rat(1)
    for b in betas:
        prod *= b

    if n == 0:
        b0 = betas[0]
        stats = _PruneStats(visited=1, surviving=1)
        if x < b0:
            return rat(1) / b0, stats
        if x > b0:
            return rat(0), stats
        mode = JumpConvention(convention) if not isinstance(convention, JumpConvention) else convention
        weight = {JumpConvention.HALF_SUM: rat(1, 2), JumpConvention.LEFT: rat(1), JumpConvention.RIGHT: rat(0)}[mode]
        return weight / b0, stats

    suffix = [rat(0)] * (len(betas) + 1)
    for i in range(len(betas) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + betas[i]

    stats = _PruneStats()
    acc = rat(0)
    # iterative DFS: (index, partial sum, parity of minus signs)
    stack = [(0, rat(0), 0)]
    while stack:
        i, partial, neg = stack.pop()
        stats.visited += 1
        if stats.visited > node_budget:
            raise NodeBudgetError(stats.visited, stats.surviving, node_budget)
        if partial + suffix[i] <= x:
            # even the all-plus completion cannot strictly exceed x, and
            # a completion hitting x exactly contributes (x - x)^n = 0
            continue
        if i == len(betas):
            stats.surviving += 1
            term = (partial - x) ** n
            acc = acc - term if neg & 1 else acc + term
            continue
        stack.append((i + 1, partial - betas[i], neg + 1))
        stack.append((i + 1, partial + betas[i], neg))
    value = acc / (rat(math.factorial(n)) * rat(2) ** n * prod)
    return value, stats


# ---------------------------------------------------------------------------
# integrals, weighted integrals, deficits
# ---------------------------------------------------------------------------


def theorem1_support_check(spec: SincProductSpec, mode: str = "plain") -> bool:
    """Support condition for sum = integral: radius < 2 (plain sampling)
    or < 3 (alternating)."""
    if mode not in ("plain", "alternating"):
        raise ValueError("mode must be 'plain' or 'alternating'")
    bound = 2 if mode == "plain" else 3
    return spec.support_radius() < bound


def _sample_points_beyond(radius, first: int, step: int = 2):
    """Integer sample points first, first+step, ... up to and including
    the support radius (points past the radius contribute 0)."""
    pts = []
    p = first
    while p <= radius:
        pts.append(p)
        p += step
    return pts


def _eval_points(spec, points, node_budget, size_guard):
    """Exact F at each point, preferring the pruned path, falling back
    to the full spline when pruning blows the budget."""
    values = []
    spline = None
    for p in points:
        try:
            values.append(point_eval_pruned(spec, p, node_budget=node_budget))
        except NodeBudgetError as exc:
            if spline is None:
                try:
                    spline = fourier_spline(spec, size_guard=size_guard)
                except SplineSizeError:
                    raise ExactPathUnavailableError(
                        "exact path unavailable: point x=%s is too deep inside the "
                        "support for pruning (%d surviving branches) and the full "
                        "spline exceeds the size guard; use the numeric oracle "
                        "(sincprod.numeric_oracle.numeric_integral) instead"
                        % (p, exc.surviving)
                    ) from exc
            values.append(spline.evaluate(p))
    return values


def _report(value, digits, radius, deficit=None, terms=(), certified=False):
    return EvalReport(
        exact_value=value,
        decimal=to_decimal(value, digits),
        support_radius=radius,
        deficit=deficit,
        deficit_terms=tuple(terms),
        certified_by_support=certified,
    )


def integral_exact(
    spec: SincProductSpec,
    digits: int = 12,
    node_budget: int = NODE_BUDGET_DEFAULT,
    size_guard: int = SIZE_GUARD_DEFAULT,
) -> EvalReport:
    """Exact integral of prod_k sinc(beta_k pi t) over the real line.

    With a unit scale present the value is 1 when the support radius is
    below 2 (certified with no evaluation at all), and otherwise
    1 - 2 sum F(2k) over even points inside the support.  Without a unit
    scale the value is F(0), which requires the full spline (or deep
    pruned evaluation) and may be infeasible for large specs.
    """
    radius = spec.support_radius()
    if spec.has_unit_scale():
        if radius < 2:
            return _report(rat(1), digits, radius, deficit=rat(0), certified=True)
        points = _sample_points_beyond(radius, first=2)
        values = _eval_points(spec, points, node_budget, size_guard)
        deficit = 2 * sum(values, rat(0))
        return _report(1 - deficit, digits, radius, deficit=deficit, terms=zip(points, values))
    try:
        value = fourier_spline(spec, size_guard=size_guard).evaluate(0)
    except SplineSizeError:
        try:
            value = point_eval_pruned(spec, 0, node_budget=node_budget)
        except NodeBudgetError as exc:
            raise ExactPathUnavailableError(
                "exact path unavailable for this spec (no unit scale, %d "
                "surviving branches at x=0); use the numeric oracle "
                "(sincprod.numeric_oracle.numeric_integral) instead" % exc.surviving
            ) from exc
    return _report(value, digits, radius)


def weighted_integral_exact(
    spec: SincProductSpec,
    weights: CosineWeightSpec,
    digits: int = 12,
    node_budget: int = NODE_BUDGET_DEFAULT,
    size_guard: int = SIZE_GUARD_DEFAULT,
) -> EvalReport:
    """Exact integral of W_m(t) * prod_k sinc(beta_k pi t), which equals
    2 (F(1) + F(3) + ... + F(2m+1)).

    With a unit scale the odd-sample sum is 1, so the value is
    1 - 2 sum F(q) over odd q > 2m+1 inside the support; radius < 2m+3
    certifies the value 1 outright.
    """
    radius = spec.support_radius()
    top = 2 * weights.m + 1
    if spec.has_unit_scale():
        if radius < top + 2:
            return _report(rat(1), digits, radius, deficit=rat(0), certified=True)
        points = _sample_points_beyond(radius, first=top + 2)
        values = _eval_points(spec, points, node_budget, size_guard)
        deficit = 2 * sum(values, rat(0))
        return _report(1 - deficit, digits, radius, deficit=deficit, terms=zip(points, values))
    points = [q for q in range(1, top + 1, 2)]
    try:
        spline = fourier_spline(spec, size_guard=size_guard)
        values = [spline.evaluate(q) for q in points]
    except SplineSizeError:
        try:
            values = [point_eval_pruned(spec, q, node_budget=node_budget) for q in points]
        except NodeBudgetError as exc:
            raise ExactPathUnavailableError(
                "exact path unavailable for this spec (no unit scale); "
                "use the numeric oracle (sincprod.numeric_oracle.numeric_integral) instead"
            ) from exc
    return _report(2 * sum(values, rat(0)), digits, radius)


def deficit_report(
    spec: SincProductSpec,
    weights: CosineWeightSpec | None = None,
    digits: int = 10,
    node_budget: int = NODE_BUDGET_DEFAULT,
    size_guard: int = SIZE_GUARD_DEFAULT,
) -> EvalReport:
    """Report whose exact_value IS the deficit 1 - integral.

    Without weights this is the deficit of the plain integral (even
    sample points beyond 0); with weights, of the weighted integral
    (odd sample points beyond 2m+1).  Requires a unit scale, since the
    unit identity is what defines the deficit.
    """
    if not spec.has_unit_scale():
        raise ValueError("deficit is defined only for specs containing a unit scale")
    base = (
        integral_exact(spec, digits, node_budget, size_guard)
        if weights is None
        else weighted_integral_exact(spec, weights, digits, node_budget, size_guard)
    )
    return EvalReport(
        exact_value=base.deficit,
        decimal=to_decimal(base.deficit, digits),
        support_radius=base.support_radius,
        deficit=base.deficit,
        deficit_terms=base.deficit_terms,
        certified_by_support=base.certified_by_support,
    )


def sinc_power_breaking(m: int, n_max: int, digits: int = 12) -> list:
    """For f = sinc^n(pi t), whether the weighted integral with weight
    count m is exactly 1, for n = 1..n_max.  The law is: unit exactly
    for n <= 2m+3 (the boundary holds because F vanishes continuously at
    the support edge once n >= 2), non-unit beyond."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    weights = CosineWeightSpec(m)
    out = []
    for n in range(1, n_max + 1):
        report = weighted_integral_exact(SincProductSpec.sinc_power(n), weights, digits=digits)
        out.append((n, report.exact_value == 1))
    return out

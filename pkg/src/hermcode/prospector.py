"""Existence criteria for codes beating the Goppa distance bound.

For a Hermitian curve with n = q^3 evaluation places, a choice of l places
and a free effective part of degree t gives a degree s = l + t divisor class
count.  If that count is below the class number, some class of degree s
yields an [n, l+t-g+1, >= n-l+1] code, improving the Goppa guarantee n - s
by t + 1.

Two sufficient conditions are provided, both decided in exact integers:

* ``prop23``:  C(n, l) * q^(2t+2-2g) <= 1
* ``exact``:   C(n, l) * A_t < h

The second uses the exact divisor count A_t instead of the bound
A_t < h q^(2t+2-2g) and is therefore implied by the first.  Floating point
appears only in the asymptotic evaluator at the bottom of the module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import curve, zeta
from .errors import DomainError, RangeError, SizeGuard
from .field import factor_prime_power

CRITERIA = ("prop23", "exact")
DEFAULT_SEARCH_GUARD = 1 << 12  # largest n = q^3 searched by default
# A_t has on the order of t * log(q) digits; beyond this the exact check is skipped
EXACT_CHECK_MAX_T = 5000


def _check(q: int, l: int, t: int) -> int:
    factor_prime_power(q)
    n = q**3
    if not 0 <= l <= n:
        raise RangeError(f"need 0 <= l <= n = {n}, got l={l}")
    if t < 0:
        raise RangeError(f"need t >= 0, got t={t}")
    return n


def prop23_holds(q: int, l: int, t: int) -> bool:
    n = _check(q, l, t)
    g = curve.genus(q)
    slack = 2 * g - 2 - 2 * t
    if slack < 0:
        return comb(n, l) * q**-slack <= 1
    return comb(n, l) <= q**slack


def exact_criterion_holds(q: int, l: int, t: int) -> bool:
    n = _check(q, l, t)
    return comb(n, l) * zeta.a_k_closed(q, t) < zeta.class_number(q)


_CHECKS = {"prop23": prop23_holds, "exact": exact_criterion_holds}


@dataclass(frozen=True)
class ProspectRow:
    l: int
    t: int
    s: int
    k: int
    d_lower: int
    goppa_d_lower: int
    improvement: int
    criterion: str

    @classmethod
    def build(cls, q: int, l: int, t: int, criterion: str) -> ProspectRow:
        n, g = q**3, curve.genus(q)
        s = l + t
        return cls(
            l=l,
            t=t,
            s=s,
            k=s - g + 1,
            d_lower=n - l + 1,
            goppa_d_lower=n - s,
            improvement=t + 1,
            criterion=criterion,
        )


@dataclass(frozen=True)
class ProspectReport:
    q: int
    n: int
    genus: int
    class_number: int
    criterion: str
    k_min: int
    t_max: int
    l_max: int
    rows: tuple[ProspectRow, ...] = field(default_factory=tuple)

    @property
    def best_improvement(self) -> int | None:
        return max((r.improvement for r in self.rows), default=None)

    @property
    def reference_improvement(self) -> int:
        """The g - q level quoted for earlier Hermitian constructions."""
        return self.genus - self.q


def search(
    q: int,
    criterion: str = "exact",
    k_min: int = 1,
    t_max: int | None = None,
    l_max: int | None = None,
    *,
    guard: int | None = DEFAULT_SEARCH_GUARD,
) -> ProspectReport:
    """Every (l, t) with 1 <= l <= l_max, 0 <= t <= t_max meeting the criterion and k >= k_min.

    ``l_max`` defaults to n and ``t_max`` to 2g.  Rows come out by decreasing
    improvement, then decreasing k, then increasing l.
    """
    if criterion not in _CHECKS:
        raise ValueError(f"unknown criterion {criterion!r}; choose from {CRITERIA}")
    factor_prime_power(q)
    n, g = q**3, curve.genus(q)
    if guard is not None and n > guard:
        raise SizeGuard(f"search over n = {n} places", n, guard)
    if t_max is None:
        t_max = 2 * g
    if t_max < 0:
        raise RangeError(f"t_max must be nonnegative, got {t_max}")
    if l_max is None:
        l_max = n
    if not 1 <= l_max <= n:
        raise RangeError(f"need 1 <= l_max <= n = {n}, got {l_max}")
    check = _CHECKS[criterion]
    rows = []
    for l in range(1, l_max + 1):
        for t in range(t_max + 1):
            if l + t - g + 1 >= k_min and check(q, l, t):
                rows.append(ProspectRow.build(q, l, t, criterion))
    rows.sort(key=lambda r: (-r.improvement, -r.k, r.l))
    return ProspectReport(
        q=q,
        n=n,
        genus=g,
        class_number=zeta.class_number(q),
        criterion=criterion,
        k_min=k_min,
        t_max=t_max,
        l_max=l_max,
        rows=tuple(rows),
    )


# -- asymptotic evaluator (floating point) -------------------------------------


def entropy2(delta: float) -> float:
    if not 0 <= delta <= 1:
        raise DomainError(f"entropy needs 0 <= delta <= 1, got {delta}")
    if delta in (0, 1):
        return 0.0
    return -delta * math.log2(delta) - (1 - delta) * math.log2(1 - delta)


def _check_alpha(alpha: float) -> None:
    if not 0 < alpha < 1:
        raise DomainError(f"need 0 < alpha < 1, got {alpha}")


def asymptotic_margin(q: int, alpha: float, theta: float) -> float:
    """Limit of log_q(C(n, l) q^(2t+2-2g)) / n for l = alpha n, t = g - 1 + (theta - 1) l."""
    _check_alpha(alpha)
    if q < 2:
        raise DomainError(f"q must be at least 2, got {q}")
    lq = math.log(q)
    binomial_rate = -alpha * math.log(alpha) / lq - (1 - alpha) * math.log1p(-alpha) / lq
    return binomial_rate + 2 * alpha * (theta - 1)


def theta_star(q: int, alpha: float) -> float:
    """The theta at which the margin changes sign."""
    _check_alpha(alpha)
    if q < 2:
        raise DomainError(f"q must be at least 2, got {q}")
    return 1 - math.log(2) / math.log(q) * entropy2(alpha) / (2 * alpha)


@dataclass(frozen=True)
class AsymptoticProfile:
    q: int
    n: int
    genus: int
    ratio: float  # n * alpha, i.e. q^epsilon
    alpha: float
    theta: float
    entropy: float
    margin: float
    theta_star: float
    l: int
    t: int
    s: int
    k: int
    d_lower: int
    goppa_d_lower: int
    k_plus_d_lower: int
    improvement: int
    predicted_improvement: int
    k_positive: bool
    theta_in_unit_interval: bool
    prop23_at_choice: bool | None
    exact_at_choice: bool | None

    @property
    def improvement_gap(self) -> int:
        return self.improvement - self.predicted_improvement


def theorem_profile(q: int, *, ratio: int | Fraction = 2, slack: float = 1e-6) -> AsymptoticProfile:
    """Instantiate the large-q parameter choice at a concrete q.

    ``ratio`` is n * alpha (the q^epsilon knob); l = floor(ratio) and
    t = g - 1 + floor((theta - 1) l) with theta just below its threshold.
    """
    factor_prime_power(q)
    if q < 4:
        raise RangeError(f"the asymptotic profile needs q >= 4, got q={q}")
    ratio = Fraction(ratio)
    n, g = q**3, curve.genus(q)
    if not 1 <= ratio < n:
        raise RangeError(f"need 1 <= ratio < n, got {ratio}")
    alpha = float(ratio / n)
    l = math.floor(ratio)
    ts = theta_star(q, alpha)
    theta = ts - slack
    t = g - 1 + math.floor((theta - 1) * l)
    s = l + t
    k = s - g + 1
    d_lower = n - l + 1
    exact_ok = prop_ok = None
    if 0 <= t <= EXACT_CHECK_MAX_T:
        prop_ok = prop23_holds(q, l, t)
        exact_ok = exact_criterion_holds(q, l, t)
    return AsymptoticProfile(
        q=q,
        n=n,
        genus=g,
        ratio=float(ratio),
        alpha=alpha,
        theta=theta,
        entropy=entropy2(alpha),
        margin=asymptotic_margin(q, alpha, theta),
        theta_star=ts,
        l=l,
        t=t,
        s=s,
        k=k,
        d_lower=d_lower,
        goppa_d_lower=n - s,
        k_plus_d_lower=k + d_lower,
        improvement=t + 1,
        predicted_improvement=g - 4,
        k_positive=k >= 1,
        theta_in_unit_interval=0 < theta < 1,
        prop23_at_choice=prop_ok,
        exact_at_choice=exact_ok,
    )

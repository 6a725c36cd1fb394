"""Zeta function data of the Hermitian (maximal) curve over F_{q^2}.

Everything here is exact integer arithmetic.  The L-polynomial of a maximal
curve over F_{q^2} is (1 + qT)^{2g}; only Hermitian parameters are accepted,
so the genus is always (q^2 - q)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import curve
from .errors import RangeError, SizeGuard

MAX_SERIES_TERMS = 10_000


def l_polynomial(q: int) -> list[int]:
    g = curve.genus(q)
    out, c = [], 1
    for i in range(2 * g + 1):
        out.append(c)
        c = c * (2 * g - i) * q // (i + 1)
    return out


@lru_cache(maxsize=None)
def class_number(q: int) -> int:
    """h = L(1) = (1 + q)^(2g)."""
    return (1 + q) ** (2 * curve.genus(q))


@lru_cache(maxsize=4096)
def a_k_closed(q: int, k: int) -> int:
    """Number of effective divisors of degree k, from the closed-form sum."""
    if k < 0:
        raise RangeError(f"degree must be nonnegative, got {k}")
    g = curve.genus(q)
    # term i is C(2g, i) q^i (q^(2k+2-2i) - 1) = C(2g, i) (q^(2k+2-i) - q^i), over q^2 - 1;
    # binomials and powers are updated in place rather than recomputed
    total, c, high, low = 0, 1, q ** (2 * k + 2), 1
    for i in range(min(k, 2 * g) + 1):
        total += c * (high - low)
        c = c * (2 * g - i) // (i + 1)
        high //= q
        low *= q
    out, rem = divmod(total, q * q - 1)
    assert rem == 0
    return out


def a_k_series(q: int, kmax: int) -> list[int]:
    """A_0..A_kmax by expanding L(T) / ((1 - T)(1 - q^2 T)) as a power series."""
    if kmax < 0:
        raise RangeError(f"kmax must be nonnegative, got {kmax}")
    if kmax > MAX_SERIES_TERMS:
        raise SizeGuard("zeta series", kmax, MAX_SERIES_TERMS)
    coeffs = l_polynomial(q)
    coeffs = coeffs[: kmax + 1] + [0] * max(0, kmax + 1 - len(coeffs))
    # divide by (1 - T): running sums
    acc, partial = 0, []
    for c in coeffs:
        acc += c
        partial.append(acc)
    # divide by (1 - q^2 T): c_j = b_j + q^2 c_{j-1}
    q2 = q * q
    out, prev = [], 0
    for b in partial:
        prev = b + q2 * prev
        out.append(prev)
    return out


def extension_point_counts(q: int, mmax: int) -> list[int]:
    """N_1..N_mmax over F_{q^{2m}}, via Newton's identities on the L-polynomial.

    With L(T) = prod (1 - a_i T), N_m = q^{2m} + 1 - sum a_i^m.
    """
    L = l_polynomial(q)
    deg = len(L) - 1
    # e_j (elementary symmetric in the a_i) = (-1)^j L_j
    e = [(-1) ** j * L[j] for j in range(deg + 1)]
    power_sums = [0]
    for m in range(1, mmax + 1):
        s = (-1) ** (m - 1) * m * e[m] if m <= deg else 0
        for j in range(1, min(m - 1, deg) + 1):
            s += (-1) ** (j - 1) * e[j] * power_sums[m - j]
        power_sums.append(s)
    return [q ** (2 * m) + 1 - power_sums[m] for m in range(1, mmax + 1)]


@dataclass(frozen=True)
class AkBound:
    k: int
    a_k: int
    exponent: int  # of q in h * q^exponent
    bound_numerator: int
    bound_denominator: int
    holds: bool

    @property
    def bound(self) -> str:
        if self.bound_denominator == 1:
            return str(self.bound_numerator)
        return f"{self.bound_numerator}/{self.bound_denominator}"


def check_Ak_bound(q: int, k: int) -> AkBound:
    """Compare A_k with h * q^(2k+2-2g); negative exponents are cross-multiplied."""
    g = curve.genus(q)
    a = a_k_closed(q, k)
    h = class_number(q)
    e = 2 * k + 2 - 2 * g
    if e >= 0:
        num, den = h * q**e, 1
    else:
        num, den = h, q**-e
    return AkBound(k=k, a_k=a, exponent=e, bound_numerator=num, bound_denominator=den, holds=a * den < num)


@dataclass(frozen=True)
class ZetaProfile:
    q: int
    genus: int
    l_polynomial: tuple[int, ...]
    class_number: int
    a: tuple[int, ...]
    bounds: tuple[AkBound, ...]


def zeta_profile(q: int, kmax: int) -> ZetaProfile:
    a = a_k_series(q, kmax)
    return ZetaProfile(
        q=q,
        genus=curve.genus(q),
        l_polynomial=tuple(l_polynomial(q)),
        class_number=class_number(q),
        a=tuple(a),
        bounds=tuple(check_Ak_bound(q, k) for k in range(kmax + 1)),
    )

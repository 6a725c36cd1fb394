"""One-point Hermitian codes C_L(t P_inf, D) with D the sum of all affine points."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from . import curve
from .errors import RangeError
from .field import DEFAULT_FIELD_GUARD, FieldElement, FieldSpec, factor_prime_power, make_field
from .linalg import rank


@dataclass(frozen=True, order=True)
class Monomial:
    """x^a y^b with 0 <= b < q; its only pole is at P_inf."""

    a: int
    b: int

    def pole_order(self, q: int) -> int:
        return q * self.a + (q + 1) * self.b

    def __call__(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return x**self.a * y**self.b

    def __str__(self) -> str:
        parts = [v if e == 1 else f"{v}^{e}" for v, e in (("x", self.a), ("y", self.b)) if e]
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class LinearCode:
    """A linear code over F_{q^2} given by a generator matrix.

    ``rows`` may contain dependent rows; ``k`` is always the rank.
    """

    field: FieldSpec
    rows: tuple[tuple[FieldElement, ...], ...]
    n: int
    k: int
    design_degree: int | None = None
    d_lower: int | None = None
    d_exact: int | None = None
    row_labels: tuple[str, ...] = ()

    @classmethod
    def from_rows(
        cls,
        field: FieldSpec,
        rows: Sequence[Sequence[FieldElement]],
        *,
        design_degree: int | None = None,
        d_lower: int | None = None,
        row_labels: Sequence[str] = (),
    ) -> LinearCode:
        rows = tuple(tuple(r) for r in rows)
        n = len(rows[0]) if rows else 0
        return cls(
            field=field,
            rows=rows,
            n=n,
            k=rank(field, rows) if rows else 0,
            design_degree=design_degree,
            d_lower=d_lower,
            row_labels=tuple(row_labels),
        )

    @property
    def q(self) -> int:
        return self.field.q

    def matrix(self) -> np.ndarray:
        return np.array([[e.value for e in row] for row in self.rows], dtype=np.int64).reshape(
            len(self.rows), self.n
        )

    def encode(self, message: Sequence[FieldElement]) -> list[FieldElement]:
        word = [self.field.zero] * self.n
        for coef, row in zip(message, self.rows):
            if coef:
                word = [w + coef * g for w, g in zip(word, row)]
        return word

    def with_exact_distance(self, d: int) -> LinearCode:
        return replace(self, d_exact=d)


def monomial_basis(q: int, t: int) -> list[Monomial]:
    """Basis of L(t P_inf): pole orders q (for x) and q+1 (for y) generate the semigroup."""
    factor_prime_power(q)
    if t < 0:
        return []
    out = [Monomial(a, b) for b in range(q) for a in range((t - (q + 1) * b) // q + 1) if (q + 1) * b <= t]
    return sorted(out, key=lambda mono: (mono.pole_order(q), mono.b))


def dimension(q: int, t: int) -> int:
    return len(monomial_basis(q, t))


def _check_t(q: int, t: int) -> None:
    if not 0 <= t < q**3:
        raise RangeError(f"need 0 <= t < q^3 = {q**3}, got t={t}")


def goppa_bound(q: int, t: int) -> int:
    factor_prime_power(q)
    _check_t(q, t)
    return q**3 - t


def yang_kumar_band(q: int, t: int) -> tuple[int, int]:
    """Half-open interval [lo, hi) guaranteed to contain the true distance."""
    g = curve.genus(q)
    if not 2 * g - 1 < t < q**3:
        raise RangeError(f"band needs 2g-1 = {2 * g - 1} < t < q^3 = {q**3}, got t={t}")
    return q**3 - t, q**3 - t + q


def generator_matrix(q: int, t: int, *, guard: int | None = DEFAULT_FIELD_GUARD) -> LinearCode:
    factor_prime_power(q)
    _check_t(q, t)
    F = make_field(q, guard=guard)
    points = curve.affine_points(q, guard=guard)
    basis = monomial_basis(q, t)
    xs = np.array([p.x.value for p in points], dtype=np.int64)
    ys = np.array([p.y.value for p in points], dtype=np.int64)
    rows = []
    for mono in basis:
        vals = F.vmul(F.vpow(xs, mono.a), F.vpow(ys, mono.b))
        rows.append([FieldElement(F, int(v)) for v in vals])
    return LinearCode.from_rows(
        F,
        rows,
        design_degree=t,
        d_lower=goppa_bound(q, t),
        row_labels=[str(m) for m in basis],
    )

"""Constructive check of the class-counting existence lemma on y^2 + y = x^3 over F_4.

This is the q = 2 Hermitian curve: genus 1, nine rational points, and a
group of rational points isomorphic to Z/3 x Z/3 with P_inf as identity.
On a genus-1 curve a divisor class of degree s is determined by s and the
group sum Z of its points (Abel-Jacobi), and Z + (s-1) P_inf is a canonical
representative.  That makes every step exhaustive at desk scale:

* enumerate the classes hit by (m evaluation points) + (effective part of
  degree s - m);
* pick an unhit class G;
* build L(G) explicitly and check the code it gives has dimension s and
  minimum distance at least n - m + 1 by brute force.

Effective divisors are enumerated as multisets of rational points.  That is
complete up to degree 2 only because this curve has no places of degree 2
(it has the same 9 points over F_16 as over F_4), hence the s - m <= 2 cap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from . import curve, zeta
from .curve import INFINITY, CurvePoint
from .errors import LemmaVerificationError, RangeError, ScopeError
from .field import FieldElement, make_field
from .linalg import nullspace
from .onepoint import LinearCode, Monomial, monomial_basis
from .weight import DEFAULT_ENUM_GUARD, min_distance_exact

Q = 2
GENUS = 1
MAX_FREE_DEGREE = 2

# y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
_A1, _A2, _A3, _A4, _A6 = 0, 0, 1, 0, 0


def base_field():
    return make_field(Q)


def rational_points() -> list[CurvePoint]:
    return curve.rational_points(Q)


def affine_points() -> list[CurvePoint]:
    return curve.affine_points(Q)


# -- group law ---------------------------------------------------------------


def ec_neg(P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(P.x, -P.y - _A1 * P.x - _A3)


def ec_add(P: CurvePoint, R: CurvePoint) -> CurvePoint:
    """Chord-tangent addition with P_inf as the identity."""
    if P.is_infinity:
        return R
    if R.is_infinity:
        return P
    x1, y1, x2, y2 = P.x, P.y, R.x, R.y
    if x1 == x2:
        if (y1 + y2 + _A1 * x2 + _A3).is_zero():
            return INFINITY
        lam = (3 * x1 * x1 + 2 * _A2 * x1 + _A4 - _A1 * y1) / (2 * y1 + _A1 * x1 + _A3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam + _A1 * lam - _A2 - x1 - x2
    y3 = -(lam + _A1) * x3 - nu - _A3
    return CurvePoint(x3, y3)


def ec_scalar_mul(k: int, P: CurvePoint) -> CurvePoint:
    if k < 0:
        return ec_scalar_mul(-k, ec_neg(P))
    acc, base = INFINITY, P
    while k:
        if k & 1:
            acc = ec_add(acc, base)
        base = ec_add(base, base)
        k >>= 1
    return acc


def ec_sum(points: Iterable[CurvePoint]) -> CurvePoint:
    acc = INFINITY
    for P in points:
        acc = ec_add(acc, P)
    return acc


# -- divisors and classes -------------------------------------------------------


class Divisor:
    """Finite formal sum of rational points with integer multiplicities."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[CurvePoint, int] | None = None) -> None:
        terms = {P: c for P, c in (terms or {}).items() if c}
        self._terms = tuple(sorted(terms.items(), key=lambda pc: pc[0].sort_key()))

    @classmethod
    def from_points(cls, points: Iterable[CurvePoint]) -> Divisor:
        terms: dict[CurvePoint, int] = {}
        for P in points:
            terms[P] = terms.get(P, 0) + 1
        return cls(terms)

    @property
    def terms(self) -> tuple[tuple[CurvePoint, int], ...]:
        return self._terms

    @property
    def degree(self) -> int:
        return sum(c for _, c in self._terms)

    @property
    def support(self) -> set[CurvePoint]:
        return {P for P, _ in self._terms}

    def is_effective(self) -> bool:
        return all(c > 0 for _, c in self._terms)

    def multiplicity(self, P: CurvePoint) -> int:
        return dict(self._terms).get(P, 0)

    def __add__(self, other: Divisor) -> Divisor:
        terms = dict(self._terms)
        for P, c in other._terms:
            terms[P] = terms.get(P, 0) + c
        return Divisor(terms)

    def __neg__(self) -> Divisor:
        return Divisor({P: -c for P, c in self._terms})

    def __sub__(self, other: Divisor) -> Divisor:
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Divisor) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(repr(P) if c == 1 else f"{c}*{P!r}" for P, c in self._terms)


@dataclass(frozen=True)
class PicClass:
    degree: int
    point: CurvePoint  # Abel-Jacobi image

    def representative(self) -> Divisor:
        """Z + (s-1) P_inf."""
        return Divisor({self.point: 1}) + Divisor({INFINITY: self.degree - 1})


def class_of(D: Divisor) -> PicClass:
    return PicClass(D.degree, ec_sum(ec_scalar_mul(c, P) for P, c in D.terms))


def effective_divisors(degree: int, points: Sequence[CurvePoint] | None = None) -> list[Divisor]:
    """Effective divisors of the given degree supported on rational points."""
    if degree < 0:
        return []
    if degree > MAX_FREE_DEGREE:
        raise ScopeError(
            f"effective divisors of degree {degree} involve places of degree > 1; cap is {MAX_FREE_DEGREE}"
        )
    pts = rational_points() if points is None else list(points)
    return [Divisor.from_points(c) for c in combinations_with_replacement(pts, degree)]


def _validate(eval_set: Sequence[CurvePoint], s: int, m: int) -> list[CurvePoint]:
    pts = list(eval_set)
    affine = set(affine_points())
    if len(set(pts)) != len(pts):
        raise RangeError("evaluation points must be distinct")
    if any(P not in affine for P in pts):
        raise RangeError("evaluation points must be affine rational points of y^2 + y = x^3 over F_4")
    if not 0 <= m <= len(pts):
        raise RangeError(f"need 0 <= m <= {len(pts)}, got m={m}")
    if s < m:
        raise RangeError(f"need s >= m, got s={s}, m={m}")
    if s - m > MAX_FREE_DEGREE:
        raise ScopeError(f"s - m = {s - m} exceeds the completeness cap {MAX_FREE_DEGREE}")
    return pts


def hit_points(eval_set: Sequence[CurvePoint], s: int, m: int) -> set[CurvePoint]:
    """Abel-Jacobi images of all sum(I) + D with |I| = m, D >= 0, deg D = s - m."""
    pts = _validate(eval_set, s, m)
    free = {ec_sum(P for P, c in D.terms for _ in range(c)) for D in effective_divisors(s - m)}
    hit = set()
    for subset in combinations(pts, m):
        base = ec_sum(subset)
        hit.update(ec_add(base, Z) for Z in free)
    return hit


def count_hit_classes(eval_set: Sequence[CurvePoint], s: int, m: int) -> int:
    return len(hit_points(eval_set, s, m))


def find_good_class(eval_set: Sequence[CurvePoint], s: int, m: int) -> PicClass | None:
    """A degree-s class missed by every sum(I) + D, or None if all 9 are hit.

    Classes whose canonical representative avoids the evaluation set are
    preferred; among those, the first in canonical point order wins.
    """
    hit = hit_points(eval_set, s, m)
    unhit = [Z for Z in rational_points() if Z not in hit]
    if not unhit:
        return None
    evals = set(eval_set)
    clean = [Z for Z in unhit if Z not in evals]
    return PicClass(s, (clean or unhit)[0])


# -- Riemann-Roch spaces --------------------------------------------------------


@dataclass(frozen=True)
class RationalFunction:
    """numerator(x, y) / (x - pole_x), or a polynomial when ``pole_x`` is None."""

    numerator: tuple[tuple[Monomial, FieldElement], ...]
    pole_x: FieldElement | None = None

    def _num(self, x: FieldElement, y: FieldElement) -> FieldElement:
        acc = x.field.zero
        for mono, c in self.numerator:
            acc = acc + c * mono(x, y)
        return acc

    def _num_derivative(self, x: FieldElement, y: FieldElement) -> FieldElement:
        # d/dx along y^q + y = x^(q+1): dy/dx = (q+1) x^q
        q = x.field.q
        dy = (q + 1) * x**q
        acc = x.field.zero
        for mono, c in self.numerator:
            a, b = mono.a, mono.b
            if a:
                acc = acc + c * a * x ** (a - 1) * y**b
            if b:
                acc = acc + c * b * x**a * y ** (b - 1) * dy
        return acc

    def __call__(self, P: CurvePoint) -> FieldElement:
        if P.is_infinity:
            raise ValueError("evaluation at P_inf is not defined for these functions")
        num = self._num(P.x, P.y)
        if self.pole_x is None:
            return num
        den = P.x - self.pole_x
        if den:
            return num / den
        if num:
            raise ValueError(f"{P!r} is a pole")
        # x - c is a local parameter at the unramified point P, so the value
        # is the derivative of the numerator along the curve
        return self._num_derivative(P.x, P.y)

    def describe(self) -> dict:
        return {
            "numerator": [
                {"a": mono.a, "b": mono.b, "coeff": c.field.coeff_string(c.value)} for mono, c in self.numerator
            ],
            "denominator": "1" if self.pole_x is None else f"x - ({self.pole_x})",
        }

    def __str__(self) -> str:
        parts = []
        for mono, c in self.numerator:
            if str(mono) == "1":
                parts.append(str(c))
            else:
                parts.append(str(mono) if c.value == 1 else f"({c})*{mono}")
        terms = " + ".join(parts) or "0"
        if self.pole_x is None:
            return terms
        return f"({terms}) / (x - ({self.pole_x}))"


def l_basis(Z: CurvePoint, s: int) -> list[RationalFunction]:
    """Basis of L(Z + (s-1) P_inf), of size exactly s."""
    if s < 1:
        raise RangeError(f"need s >= 1, got s={s}")
    F = base_field()
    if Z.is_infinity:
        return [RationalFunction(((mono, F.one),)) for mono in monomial_basis(Q, s)]
    # div(x - x_Z) = Z + Z' - 2 P_inf, so g / (x - x_Z) lies in L(Z + (s-1) P_inf)
    # exactly when g is in L((s+1) P_inf) and vanishes at Z'
    Zp = ec_neg(Z)
    monos = monomial_basis(Q, s + 1)
    assert all(mono.pole_order(Q) <= s + 1 for mono in monos)
    constraint = [[mono(Zp.x, Zp.y) for mono in monos]]
    out = []
    for vec in nullspace(F, constraint, len(monos)):
        terms = tuple((mono, c) for mono, c in zip(monos, vec) if c)
        out.append(RationalFunction(terms, Z.x))
    if len(out) != s:
        raise LemmaVerificationError(f"L(G) came out with dimension {len(out)}, expected {s}")
    return out


# -- construction and verification -----------------------------------------------


@dataclass(frozen=True)
class LemmaReport:
    eval_set: tuple[CurvePoint, ...]
    s: int
    m: int
    n: int
    hit_classes: int
    class_number: int
    found: PicClass | None
    divisor: Divisor | None
    translation: CurvePoint | None
    basis: tuple[RationalFunction, ...]
    code: LinearCode | None
    k: int | None
    d_exact: int | None
    k_expected: int
    d_required: int
    passed: bool | None


def _representative(cls: PicClass, evals: set[CurvePoint]) -> tuple[Divisor, CurvePoint | None, CurvePoint]:
    """A divisor in ``cls`` with support off ``evals``.

    Returns (G, B, Z0): the code of G on the evaluation set equals the code of
    the canonical L(Z0 + (s-1) P_inf) evaluated at the points P - B.  B is None
    when the canonical representative itself already avoids ``evals``.
    """
    s, Z = cls.degree, cls.point
    if Z not in evals:
        return cls.representative(), None, Z
    # translation by B carries Z0 + (s-1) P_inf to W + (s-1) B with W = Z0 + B
    for B in affine_points():
        if B in evals:
            continue
        Z0 = ec_add(Z, ec_scalar_mul(-s, B))
        W = ec_add(Z0, B)
        if W not in evals:
            return Divisor({W: 1}) + Divisor({B: s - 1}), B, Z0
    raise ScopeError(f"no representative of class {cls} avoids the evaluation set")


def build_and_verify(
    eval_set: Sequence[CurvePoint],
    s: int,
    m: int,
    *,
    guard: int | None = DEFAULT_ENUM_GUARD,
    workers: int = 1,
) -> LemmaReport:
    pts = _validate(eval_set, s, m)
    if s < 1:
        raise RangeError(f"need s >= 1, got s={s}")
    n = len(pts)
    hit = hit_points(pts, s, m)
    h = zeta.class_number(Q)
    found = find_good_class(pts, s, m)
    common = dict(
        eval_set=tuple(pts),
        s=s,
        m=m,
        n=n,
        hit_classes=len(hit),
        class_number=h,
        k_expected=s - GENUS + 1,
        d_required=n - m + 1,
    )
    if found is None:
        return LemmaReport(
            found=None, divisor=None, translation=None, basis=(), code=None, k=None, d_exact=None,
            passed=None, **common,
        )
    G, B, Z0 = _representative(found, set(pts))
    if G.support & set(pts):
        raise LemmaVerificationError(f"divisor {G!r} meets the evaluation set")
    if class_of(G) != found:
        raise LemmaVerificationError(f"representative {G!r} is not in class {found}")
    basis = l_basis(Z0, s)
    shifted = pts if B is None else [ec_add(P, ec_neg(B)) for P in pts]
    F = base_field()
    code = LinearCode.from_rows(
        F,
        [[f(P) for P in shifted] for f in basis],
        design_degree=s,
        d_lower=n - m + 1,
        row_labels=[str(f) for f in basis],
    )
    dist = min_distance_exact(code, guard=guard, workers=workers)
    code = code.with_exact_distance(dist.d)
    passed = code.k == s - GENUS + 1 and dist.d >= n - m + 1
    report = LemmaReport(
        found=found, divisor=G, translation=B, basis=tuple(basis), code=code, k=code.k, d_exact=dist.d,
        passed=passed, **common,
    )
    if not passed:
        raise LemmaVerificationError(
            f"code from {G!r} has k={code.k} (expected {s}) and d={dist.d} (required >= {n - m + 1})"
        )
    return report


def default_eval_set(size: int, seed: int | None = None) -> list[CurvePoint]:
    """The first ``size`` affine points, or a seeded random sample in canonical order."""
    pts = affine_points()
    if not 0 <= size <= len(pts):
        raise RangeError(f"evaluation set size must be between 0 and {len(pts)}, got {size}")
    if seed is None:
        return pts[:size]
    chosen = random.Random(seed).sample(range(len(pts)), size)
    return [pts[i] for i in sorted(chosen)]

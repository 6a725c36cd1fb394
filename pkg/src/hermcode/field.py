"""Finite fields F_{q^{2m}} represented over their prime subfield.

An element is stored as a single integer: the base-p digits of the integer are
the coefficients of a polynomial in the generator ``w`` (lowest degree first).
The modulus is the smallest monic irreducible polynomial under that integer
encoding, so every field (and therefore every matrix or point list built on
top of it) is reproducible.

Multiplication goes through discrete log / antilog tables that are built on
first use.  Vectorised variants (``vadd``, ``vmul``, ``vpow``) operate on numpy
integer arrays and are what the enumeration-heavy modules use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import DivisionByZero, FieldMismatch, NotPrimePower, SizeGuard, WrongField

DEFAULT_FIELD_GUARD = 1 << 24

# Below this cardinality full Cayley tables are cheaper than log arithmetic.
_TABLE_LIMIT = 256


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise :class:`NotPrimePower`."""
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)) or q < 2:
        raise NotPrimePower(f"{q!r} is not a prime power")
    q = int(q)
    p = next((d for d in range(2, int(q**0.5) + 1) if q % d == 0), q)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, e


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
    except NotPrimePower:
        return False
    return True


# -- polynomial helpers over F_p (coefficient lists, lowest degree first) -----


def _digits(value: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _undigits(coeffs: Sequence[int], p: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * p + c
    return value


def _poly_rem(a: list[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``b``."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return a[:db]


def _poly_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    if len(prod) < len(modulus) - 1:
        prod += [0] * (len(modulus) - 1 - len(prod))
    return _poly_rem(prod, modulus, p)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= deg/2."""
    deg = len(modulus) - 1
    if deg < 1 or modulus[-1] != 1:
        return False
    if deg == 1:
        return True
    # roots first: cheap and rejects most candidates
    for r in range(p):
        acc = 0
        for c in reversed(modulus):
            acc = (acc * r + c) % p
        if acc == 0:
            return False
    for d in range(2, deg // 2 + 1):
        for low in range(p**d):
            divisor = _digits(low, p, d) + [1]
            if divisor[0] == 0:
                continue
            if not any(_poly_rem(list(modulus), divisor, p)):
                return False
    return True


@lru_cache(maxsize=None)
def _lowest_irreducible(p: int, degree: int) -> tuple[int, ...]:
    for low in range(p**degree):
        cand = _digits(low, p, degree) + [1]
        if degree > 1 and cand[0] == 0:
            continue
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible polynomial of degree {degree} over F_{p}")


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """The field F_{q^{2m}} = F_p[w] / (modulus).

    ``q`` is the distinguished subfield size: the Hermitian curve lives over
    F_{q^2}, and the extensions of degree ``m`` over it are used for point
    counting.
    """

    p: int
    degree: int
    modulus: tuple[int, ...]
    cardinality: int
    q: int
    _tables: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def m(self) -> int:
        e = factor_prime_power(self.q)[1]
        return self.degree // (2 * e)

    # -- element construction ------------------------------------------------

    def __call__(self, value: int | Sequence[int] = 0) -> FieldElement:
        if isinstance(value, FieldElement):
            self._check(value)
            return value
        if isinstance(value, (int, np.integer)):
            v = int(value)
            if not 0 <= v < self.cardinality:
                raise ValueError(f"index {v} outside F_{self.cardinality}")
            return FieldElement(self, v)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.degree:
            coeffs = _poly_rem(coeffs, self.modulus, self.p)
        return FieldElement(self, _undigits(coeffs, self.p))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The class of ``w`` (the polynomial variable)."""
        if self.degree == 1:
            return FieldElement(self, (-self.modulus[0]) % self.p)
        return FieldElement(self, self.p)

    def from_int(self, n: int) -> FieldElement:
        """Image of an ordinary integer under Z -> F_p -> this field."""
        return FieldElement(self, n % self.p)

    def coeffs(self, value: int) -> tuple[int, ...]:
        return tuple(_digits(value, self.p, self.degree))

    def _check(self, a: FieldElement) -> None:
        if a.field is not self and a.field != self:
            raise FieldMismatch(f"element of {a.field.name} used in {self.name}")

    @property
    def name(self) -> str:
        return f"F_{self.cardinality}"

    # -- tables -----------------------------------------------------------------

    def _log_tables(self) -> tuple[np.ndarray, np.ndarray]:
        t = self._tables
        if "exp" not in t:
            n = self.cardinality - 1
            gen = self._primitive_digits()
            exp = np.empty(n, dtype=np.int64)
            cur = [1] + [0] * (self.degree - 1)
            for i in range(n):
                exp[i] = _undigits(cur, self.p)
                cur = _poly_mulmod(cur, gen, self.modulus, self.p)
            log = np.full(self.cardinality, -1, dtype=np.int64)
            log[exp] = np.arange(n, dtype=np.int64)
            t["exp"], t["log"] = exp, log
        return t["exp"], t["log"]

    def _primitive_digits(self) -> list[int]:
        n = self.cardinality - 1
        if n == 1:
            return [1] + [0] * (self.degree - 1)
        factors = _prime_factors(n)
        for v in range(2, self.cardinality):
            cand = _digits(v, self.p, self.degree)
            if all(self._digits_pow(cand, n // r) != [1] + [0] * (self.degree - 1) for r in factors):
                return cand
        raise AssertionError("field has no primitive element")  # pragma: no cover

    def _digits_pow(self, base: list[int], e: int) -> list[int]:
        result = [1] + [0] * (self.degree - 1)
        while e:
            if e & 1:
                result = _poly_mulmod(result, base, self.modulus, self.p)
            base = _poly_mulmod(base, base, self.modulus, self.p)
            e >>= 1
        return result

    def _cayley(self) -> tuple[np.ndarray, np.ndarray] | None:
        if self.cardinality > _TABLE_LIMIT:
            return None
        t = self._tables
        if "add" not in t:
            idx = np.arange(self.cardinality, dtype=np.int64)
            t["add"] = self._vadd_slow(idx[:, None], idx[None, :])
            t["mul"] = self._vmul_log(idx[:, None], idx[None, :])
        return t["add"], t["mul"]

    # -- scalar arithmetic on integer encodings -------------------------------

    def _add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, out, pw = self.p, 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * pw
            pw *= p
        return out

    def _neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, out, pw = self.p, 0, 1
        while a:
            a, r = divmod(a, p)
            out += ((-r) % p) * pw
            pw *= p
        return out

    def _mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log = self._log_tables()
        return int(exp[(log[a] + log[b]) % (self.cardinality - 1)])

    def _inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"zero has no inverse in {self.name}")
        exp, log = self._log_tables()
        return int(exp[(-log[a]) % (self.cardinality - 1)])

    def _pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero raised to a negative power")
            return 0
        exp, log = self._log_tables()
        return int(exp[(int(log[a]) * e) % (self.cardinality - 1)])

    # -- vectorised arithmetic ---------------------------------------------------

    def _vadd_slow(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        pw = 1
        for _ in range(self.degree):
            out += ((a // pw + b // pw) % self.p) * pw
            pw *= self.p
        return out

    def _vmul_log(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        exp, log = self._log_tables()
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        res = exp[(log[a] + log[b]) % (self.cardinality - 1)]
        return np.where((a == 0) | (b == 0), 0, res)

    def vadd(self, a, b) -> np.ndarray:
        tables = self._cayley()
        if tables is not None:
            return tables[0][np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)]
        return self._vadd_slow(a, b)

    def vmul(self, a, b) -> np.ndarray:
        tables = self._cayley()
        if tables is not None:
            return tables[1][np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)]
        return self._vmul_log(a, b)

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        exp, log = self._log_tables()
        res = exp[(log[a] * e) % (self.cardinality - 1)]
        return np.where(a == 0, 0, res)

    def indices(self) -> np.ndarray:
        return np.arange(self.cardinality, dtype=np.int64)

    # -- formatting ----------------------------------------------------------------

    def format(self, value: int) -> str:
        if value == 0:
            return "0"
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs(value)))):
            if not c:
                continue
            mono = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)

    def coeff_string(self, value: int) -> str:
        """Coefficient vector, lowest degree first, colon separated (CSV safe)."""
        return ":".join(str(c) for c in self.coeffs(value))

    def parse_coeff_string(self, text: str) -> FieldElement:
        return self([int(c) for c in text.split(":")])

    def modulus_string(self) -> str:
        return _poly_string(self.modulus)


def _poly_string(coeffs: Sequence[int]) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) or "0"


@dataclass(frozen=True, slots=True)
class FieldElement:
    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            self.field._check(other)
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field.from_int(int(other)).value
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field._add(self.value, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field._add(self.value, self.field._neg(b)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field._mul(self.value, b))

    __rmul__ = __mul__

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field._mul(self.value, self.field._inv(b)))

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field._pow(self.value, int(e)))

    def __bool__(self) -> bool:
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def __repr__(self) -> str:
        return self.field.format(self.value)

    __str__ = __repr__


def make_field(q: int, m: int = 1, *, guard: int | None = DEFAULT_FIELD_GUARD) -> FieldSpec:
    """Build F_{q^{2m}} with the deterministic modulus.

    ``guard`` bounds the cardinality; pass ``None`` to disable it.
    """
    p, e = factor_prime_power(q)
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ValueError(f"extension degree m must be a positive integer, got {m!r}")
    size = q ** (2 * m)
    if guard is not None and size > guard:
        raise SizeGuard(f"field F_{q}^{2 * m}", size, guard)
    return _make_field(p, 2 * e * int(m), int(q))


@lru_cache(maxsize=None)
def _make_field(p: int, degree: int, q: int) -> FieldSpec:
    modulus = _lowest_irreducible(p, degree)
    return FieldSpec(p=p, degree=degree, modulus=modulus, cardinality=p**degree, q=q)


def enumerate_elements(spec: FieldSpec, *, guard: int | None = DEFAULT_FIELD_GUARD) -> list[FieldElement]:
    if guard is not None and spec.cardinality > guard:
        raise SizeGuard(f"enumeration of {spec.name}", spec.cardinality, guard)
    return [FieldElement(spec, v) for v in range(spec.cardinality)]


def frobenius(x: FieldElement) -> FieldElement:
    """x -> x^q, the generator of Gal(F_{q^2} / F_q) on the base field."""
    return x ** x.field.q


def _require_base(x: FieldElement) -> None:
    if x.field.cardinality != x.field.q**2:
        raise WrongField(f"{x.field.name} is not F_{{q^2}} for q={x.field.q}")


def norm_to_subfield(x: FieldElement) -> FieldElement:
    """N(x) = x^(q+1), landing in F_q."""
    _require_base(x)
    return x ** (x.field.q + 1)


def trace_to_subfield(y: FieldElement) -> FieldElement:
    """Tr(y) = y^q + y, landing in F_q."""
    _require_base(y)
    return y ** y.field.q + y


def in_subfield(x: FieldElement) -> bool:
    return x ** x.field.q == x


def subfield_elements(spec: FieldSpec) -> list[FieldElement]:
    """The elements of F_q inside ``spec`` (those fixed by x -> x^q)."""
    idx = spec.indices()
    fixed = idx[spec.vpow(idx, spec.q) == idx]
    return [FieldElement(spec, int(v)) for v in fixed]


def as_indices(elements: Iterable[FieldElement]) -> np.ndarray:
    return np.array([e.value for e in elements], dtype=np.int64)

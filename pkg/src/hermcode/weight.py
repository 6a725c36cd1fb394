"""Exhaustive minimum distance and weight distribution of small codes.

Messages are enumerated, never stored codewords: the message space is cut into
work items by fixed leading symbols, each item encodes its block of messages
with numpy, and the per-item results are merged by a pure reduction.  The
answer (including the witness) does not depend on how many workers run.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import SizeGuard, ZeroCode
from .field import FieldElement
from .onepoint import LinearCode

DEFAULT_ENUM_GUARD = 1 << 26
_BLOCK = 1 << 15


@dataclass(frozen=True)
class DistanceResult:
    d: int
    enumerated: int
    witness: tuple[FieldElement, ...]


def _check(code: LinearCode, guard: int | None) -> None:
    if not code.rows or code.k == 0:
        raise ZeroCode("the code has dimension 0")
    size = code.field.cardinality ** len(code.rows)
    if guard is not None and size > guard:
        raise SizeGuard(f"message space of a [{code.n},{code.k}] code", size, guard)


class _Enumerator:
    def __init__(self, code: LinearCode) -> None:
        self.F = code.field
        self.Q = code.field.cardinality
        self.G = code.matrix()
        self.r = self.G.shape[0]
        self.n = code.n
        self._spans: dict[int, np.ndarray] = {}

    def span(self, tail: int) -> np.ndarray:
        """All combinations of the last ``tail`` rows, lexicographic in the coefficients."""
        if tail not in self._spans:
            F, Q = self.F, self.Q
            S = np.zeros((1, self.n), dtype=np.int64)
            scal = np.arange(Q, dtype=np.int64)[:, None]
            for row in self.G[self.r - tail :][::-1]:
                multiples = F.vmul(scal, row[None, :])
                S = F.vadd(multiples[:, None, :], S[None, :, :]).reshape(-1, self.n)
            self._spans[tail] = S
        return self._spans[tail]

    def expand(self, prefixes: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
        out = []
        for pre in prefixes:
            if len(pre) < self.r and self.Q ** (self.r - len(pre)) > _BLOCK:
                out.extend(self.expand([pre + (a,) for a in range(self.Q)]))
            else:
                out.append(pre)
        return out

    def block(self, prefix: tuple[int, ...]) -> np.ndarray:
        """Hamming weights of every codeword whose message starts with ``prefix``."""
        F = self.F
        base = np.zeros(self.n, dtype=np.int64)
        for coef, row in zip(prefix, self.G):
            if coef:
                base = F.vadd(base, F.vmul(np.full(self.n, coef, dtype=np.int64), row))
        words = F.vadd(base[None, :], self.span(self.r - len(prefix)))
        return np.count_nonzero(words, axis=1)

    def message(self, prefix: tuple[int, ...], index: int) -> tuple[int, ...]:
        tail = self.r - len(prefix)
        digits = []
        for _ in range(tail):
            index, d = divmod(index, self.Q)
            digits.append(d)
        return prefix + tuple(reversed(digits))


def _run(fn, items, workers: int):
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def min_distance_exact(
    code: LinearCode,
    *,
    guard: int | None = DEFAULT_ENUM_GUARD,
    quotient: bool = True,
    workers: int = 1,
) -> DistanceResult:
    """Minimum Hamming weight over all nonzero messages.

    With ``quotient`` only messages whose first nonzero symbol is 1 are
    visited; weights are invariant under nonzero scalars so nothing is lost.
    The witness is the lexicographically smallest such message of minimum
    weight.
    """
    _check(code, guard)
    en = _Enumerator(code)
    if quotient:
        roots = [(0,) * j + (1,) for j in range(en.r)]
    else:
        roots = [(a,) for a in range(en.Q)]
    items = en.expand(roots)

    def best(prefix):
        w = en.block(prefix)
        if not any(prefix):
            w = w.copy()
            w[0] = en.n + 1  # the zero message
        i = int(np.argmin(w))
        return int(w[i]), en.message(prefix, i), len(w) - (0 if any(prefix) else 1)

    results = _run(best, items, workers)
    d, msg, _ = min(results, key=lambda r: (r[0], r[1]))
    total = sum(r[2] for r in results)
    witness = tuple(FieldElement(code.field, v) for v in msg)
    return DistanceResult(d=d, enumerated=total, witness=witness)


def weight_distribution(
    code: LinearCode, *, guard: int | None = DEFAULT_ENUM_GUARD, workers: int = 1
) -> dict[int, int]:
    """Counts over every codeword image of every message, zero included."""
    _check(code, guard)
    en = _Enumerator(code)
    items = en.expand([(a,) for a in range(en.Q)])
    hists = _run(lambda pre: np.bincount(en.block(pre), minlength=en.n + 1), items, workers)
    total = np.sum(hists, axis=0)
    return {w: int(c) for w, c in enumerate(total) if c}

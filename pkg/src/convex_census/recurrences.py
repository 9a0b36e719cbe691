"""Exact extremal sequences for triangulations of points in convex position.

* ``P(n)``  - most convex paths between two adjacent vertices, n points.
* ``Cx(n)`` - most convex polygons in a triangulation of n points.
* ``lambda_k`` - convex paths across the balanced triangulation on 2^k + 1 points.
* ``alpha_k = 2^k + k + 1`` - exponents of the tail sums in the upper bound.

All values are Python ints; nothing here rounds.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

LAMBDA_CAP = 12


@dataclass(frozen=True)
class SequenceTable:
    name: str
    start: int
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        i = n - self.start
        if not 0 <= i < len(self.values):
            raise IndexError(f"{self.name}({n}) outside computed range "
                             f"{self.start}..{self.start + len(self.values) - 1}")
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def stop(self) -> int:
        return self.start + len(self.values) - 1

    def items(self):
        return [(self.start + i, v) for i, v in enumerate(self.values)]


@lru_cache(maxsize=None)
def _p_values(N: int) -> tuple[int, ...]:
    # index i holds P(i); 0 and 1 unused
    P = [0, 0, 1, 2]
    for n in range(4, N + 1):
        P.append(max(P[n1] * P[n + 1 - n1] + 1 for n1 in range(2, (n + 1) // 2 + 1)))
    return tuple(P[: N + 1])


def p_table(N: int) -> SequenceTable:
    if N < 2:
        raise ValueError("P is defined from n = 2")
    return SequenceTable("P", 2, _p_values(max(N, 3))[2: N + 1])


def ccx_table(N: int) -> SequenceTable:
    if N < 2:
        raise ValueError("Cx is defined from n = 2")
    P = _p_values(max(N, 3))
    C = [0, 0, 0, 1]
    for n in range(4, N + 1):
        C.append(max(P[n1] * P[n + 1 - n1] + C[n1] + C[n + 1 - n1]
                     for n1 in range(2, n)))
    return SequenceTable("Cx", 2, tuple(C[2: N + 1]))


def lambda_seq(K: int, cap: int = LAMBDA_CAP) -> SequenceTable:
    if K < 0:
        raise ValueError("K must be nonnegative")
    if K > cap:
        raise ValueError(f"K = {K} exceeds the configured cap {cap}")
    vals = [1]
    for _ in range(K):
        vals.append(vals[-1] ** 2 + 1)
    return SequenceTable("lambda", 0, tuple(vals))


def alpha(k: int) -> int:
    if k < 1:
        raise ValueError("alpha_k is defined for k >= 1")
    return 2 ** k + k + 1


def alpha_seq(K: int) -> SequenceTable:
    return SequenceTable("alpha", 1, tuple(alpha(k) for k in range(1, K + 1)))


def argmax_split(n: int) -> set[tuple[int, int]]:
    """All splits n1 + n2 = n + 1, 2 <= n1 <= n2, attaining max P(n1) P(n2) + 1."""
    if n < 3:
        raise ValueError("splits exist for n >= 3")
    P = _p_values(max(n, 3))
    splits = {(n1, n + 1 - n1): P[n1] * P[n + 1 - n1] + 1
              for n1 in range(2, (n + 1) // 2 + 1)}
    best = max(splits.values())
    return {s for s, v in splits.items() if v == best}


def tail_sum(lo: int, hi: int) -> Fraction:
    """Exact sum of 2^-alpha_i for lo <= i <= hi (empty when hi < lo)."""
    return sum((Fraction(1, 2 ** alpha(i)) for i in range(lo, hi + 1)), Fraction(0))


def product_bound(k: int) -> Fraction:
    """Right-hand side 2^(2^(k-1)) * prod_{i=1}^{k-1} (1 + 2^-(2^i))^(2^(k-1-i))."""
    if k < 1:
        raise ValueError("k >= 1")
    out = Fraction(2 ** (2 ** (k - 1)))
    for i in range(1, k):
        out *= (1 + Fraction(1, 2 ** (2 ** i))) ** (2 ** (k - 1 - i))
    return out

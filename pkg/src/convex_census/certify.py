"""Rigorous checks of the numeric inequalities behind the growth-rate bounds.

Whenever a claim compares an algebraic number with a decimal constant it is
restated as an integer power comparison (roots cleared).  Only ``exp`` needs
an enclosure; it is computed as a rational :class:`Interval` from a Taylor
partial sum plus a Lagrange remainder bound, with outward rounding to a
dyadic grid of ``bits`` bits.

A verdict is PROVED or REFUTED only when every comparison it rests on is
decided strictly (or exactly) at the precision used.  Precision starts at 64
bits and doubles up to the cap; past the cap the verdict is UNDECIDED.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from .recurrences import alpha, lambda_seq, p_table, tail_sum

Rational = Union[int, Fraction]

PRECISION_ENV = "CONVEX_CENSUS_PRECISION_BITS"
DEFAULT_PRECISION_CAP = 128
START_PRECISION = 64

PROVED = "PROVED"
REFUTED = "REFUTED"
UNDECIDED = "UNDECIDED"


def precision_cap() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_PRECISION_CAP
    cap = int(raw)
    if cap < 8:
        raise ValueError(f"{PRECISION_ENV} must be at least 8, got {cap}")
    return cap


# --- intervals ---------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: Rational) -> "Interval":
        return cls(Fraction(x), Fraction(x))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other) -> "Interval":
        o = _as_interval(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other) -> "Interval":
        return self + (-_as_interval(other))

    def __mul__(self, other) -> "Interval":
        o = _as_interval(other)
        prods = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(prods), max(prods))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Interval":
        if k < 0:
            raise ValueError("negative powers are not supported")
        if k == 0:
            return Interval.point(1)
        if k % 2 == 1 or self.lo >= 0:
            return Interval(self.lo ** k, self.hi ** k)
        if self.hi <= 0:
            return Interval(self.hi ** k, self.lo ** k)
        return Interval(0, max(-self.lo, self.hi) ** k)

    def reciprocal(self) -> "Interval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def round_out(self, bits: int) -> "Interval":
        """Widen to the dyadic grid 2^-bits (the only place rounding happens)."""
        s = 1 << bits
        lo = Fraction(math.floor(self.lo * s), s)
        hi = Fraction(math.ceil(self.hi * s), s)
        return Interval(lo, hi)

    def __repr__(self) -> str:
        return f"Interval[{float(self.lo):.17g}, {float(self.hi):.17g}]"


def _as_interval(x) -> Interval:
    return x if isinstance(x, Interval) else Interval.point(x)


def iv_exp(x: Rational, terms: int) -> Interval:
    """Enclosure of e^x from ``terms`` Taylor terms plus a Lagrange remainder.

    For |x| > 1 the argument is halved until |x| <= 1 and the enclosure is
    squared back up.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    x = Fraction(x)
    halvings = 0
    while abs(x) > 1:
        x /= 2
        halvings += 1
    s = Fraction(0)
    term = Fraction(1)
    for j in range(terms):
        s += term
        term = term * x / (j + 1)
    # term is now x^terms / terms!
    if x >= 0:
        iv = Interval(s, s + 3 * term)  # e^xi <= e <= 3
    else:
        r = abs(term)
        iv = Interval(s - r, s + r)
    for _ in range(halvings):
        iv = iv * iv
    return iv


def exp_enclosure(x: Rational, bits: int) -> Interval:
    """e^x to absolute accuracy about 2^-bits, rounded outward."""
    x = Fraction(x)
    y = abs(x)
    h = 0
    while y > 1:
        y /= 2
        h += 1
    # pick the term count so the remainder is below 2^-(bits + h + 4)
    terms = 1
    bound = Fraction(1)
    target = Fraction(1, 1 << (bits + 2 * h + 4))
    while 3 * bound > target:
        terms += 1
        bound = bound * y / terms
        if y == 0:
            break
    # square back up ourselves, rounding outward each time so operands stay
    # small; the grid is refined by the growth of e^|x| (log2 e < 3/2)
    grid = bits + 2 * h + 4 + math.ceil(3 * abs(x) / 2)
    iv = iv_exp(x / 2 ** h, max(terms, 1)).round_out(grid)
    for _ in range(h):
        iv = (iv * iv).round_out(grid)
    return iv


def iroot(N: int, k: int) -> int:
    """Largest r >= 0 with r^k <= N, by bisection on integers."""
    if N < 0 or k < 1:
        raise ValueError("iroot needs N >= 0 and k >= 1")
    if N < 2:
        return N
    lo, hi = 1, 1 << (N.bit_length() // k + 1)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid ** k <= N:
            lo = mid
        else:
            hi = mid
    return lo


def iv_root(x: Rational, k: int, bits: int) -> Interval:
    """Enclosure of x^(1/k) with width at most 2^-bits * hi."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("root of a nonpositive number")
    if k < 1:
        raise ValueError("k must be >= 1")
    p, q = x.numerator, x.denominator
    rp, rq = iroot(p, k), iroot(q, k)
    if rp ** k == p and rq ** k == q:
        return Interval.point(Fraction(rp, rq))
    # extra bits so that an absolute width of 2^-s is relative 2^-bits
    s = bits + 2 + max(0, (q.bit_length() - p.bit_length()) // k + 1)
    r = iroot((p << (s * k)) // q, k)
    return Interval(Fraction(r, 1 << s), Fraction(r + 1, 1 << s))


# --- verdicts ----------------------------------------------------------------

@dataclass
class CertifiedVerdict:
    claim: str
    status: str
    precision_bits: int
    details: dict = field(default_factory=dict)

    @property
    def proved(self) -> bool:
        return self.status == PROVED

    def to_json(self) -> dict:
        out = {"claim": self.claim, "status": self.status, "precision_bits": self.precision_bits}
        if self.details:
            out["details"] = self.details
        return out


class _Undecided(Exception):
    pass


def _le(iv_left: Interval, right: Rational) -> bool:
    """Decide iv <= right; raise _Undecided when the interval straddles it."""
    if iv_left.hi <= right:
        return True
    if iv_left.lo > right:
        return False
    raise _Undecided


def _ge(iv_left: Interval, right: Rational) -> bool:
    if iv_left.lo >= right:
        return True
    if iv_left.hi < right:
        return False
    raise _Undecided


def _escalate(claim: str, check: Callable[[int], tuple[bool, dict]],
              cap: int | None = None) -> CertifiedVerdict:
    cap = precision_cap() if cap is None else cap
    bits = min(START_PRECISION, cap)
    while True:
        try:
            ok, details = check(bits)
            return CertifiedVerdict(claim, PROVED if ok else REFUTED, bits, details)
        except _Undecided:
            if bits >= cap:
                return CertifiedVerdict(claim, UNDECIDED, bits)
            bits = min(2 * bits, cap)


def _exact(claim: str, ok: bool, details: dict | None = None) -> CertifiedVerdict:
    return CertifiedVerdict(claim, PROVED if ok else REFUTED, 0, details or {})


def _tail_dominated(first: int, offset: int, upto: int = 64) -> bool:
    """alpha_i >= i + offset for first <= i <= upto.

    alpha_i - i = 2^i + 1 is increasing, so the check at i = first settles
    every larger i; the loop is a cheap double check.
    """
    return all(alpha(i) >= i + offset for i in range(first, upto + 1))


# Decimal truncations listed alongside the basis values of P(n)^(1/(n-1)).
BASIS_DECIMALS = {
    3: "1.4142", 4: "1.4422", 5: "1.4953", 6: "1.4757", 7: "1.4913", 8: "1.4859",
    9: "1.50269", 10: "1.4890", 11: "1.4956", 12: "1.4910", 13: "1.5012",
    14: "1.4929", 15: "1.4981", 16: "1.4951", 17: "1.50283", 18: "1.4955",
    19: "1.4988", 20: "1.4959", 21: "1.5018", 22: "1.4966", 23: "1.4998",
    24: "1.4977", 25: "1.5027", 26: "1.4978", 27: "1.5000", 28: "1.4980",
    29: "1.5021", 30: "1.4983", 31: "1.5006", 32: "1.4990",
}
BASIS_VALUES = {
    17: 677, 18: 937, 19: 1457, 20: 2107, 21: 3407, 22: 4759, 23: 7463, 24: 10843,
    25: 17603, 26: 24373, 27: 37913, 28: 54838, 29: 88688, 30: 123892, 31: 194300,
    32: 282310,
}


def _root_has_prefix(value: int, k: int, decimal: str) -> bool:
    """True iff value^(1/k) lies in [d, d + ulp) for the decimal prefix d."""
    d = Fraction(decimal)
    places = len(decimal.split(".")[1])
    ulp = Fraction(1, 10 ** places)
    return d ** k <= value < (d + ulp) ** k


def _basis_max(lo: int, hi: int, base: int, root: int, argmax: int) -> tuple[bool, dict]:
    """max_{lo<=n<=hi} P(n)^(1/(n-1)) = base^(1/root), attained only at n = argmax."""
    P = p_table(hi)
    equal_at = []
    ok = P[argmax] == base and argmax - 1 == root
    for n in range(lo, hi + 1):
        lhs, rhs = P[n] ** root, base ** (n - 1)
        if lhs > rhs:
            ok = False
        elif lhs == rhs:
            equal_at.append(n)
    ok = ok and equal_at == [argmax]
    return ok, {"maximizer": argmax, "equality_at": equal_at}


def fact1(bits: int) -> tuple[bool, dict]:
    s = Fraction(1, 2 ** 4) + Fraction(1, 2 ** 7) + Fraction(1, 2 ** 11)
    tail_ok = alpha(1) == 4 and alpha(2) == 7 and _tail_dominated(3, 9)
    # sqrt(2) e^s <= 1.518  <=>  2 e^(2s) <= 1.518^2
    e2s = exp_enclosure(2 * s, bits)
    ok = _le(2 * e2s, Fraction(1518, 1000) ** 2)
    return tail_ok and ok, {"tail_bound": "2^-4 + 2^-7 + 2^-11"}


def fact2(bits: int) -> tuple[bool, dict]:
    tail_ok = alpha(4) == 21 and _tail_dominated(4, 17)
    # 677^(1/16) e^(2^-20) <= 1.50284  <=>  677 e^(2^-16) <= 1.50284^16
    e = exp_enclosure(Fraction(16, 2 ** 20), bits)
    ok = _le(677 * e, Fraction(150284, 100000) ** 16)
    return tail_ok and ok, {"tail_bound": "2^-20"}


def fact3(bits: int) -> tuple[bool, dict]:
    ok, det = _basis_max(2, 16, 26, 8, 9)
    dec = _root_has_prefix(26, 8, "1.50269")
    return ok and dec, det


def fact4(bits: int) -> tuple[bool, dict]:
    ok, det = _basis_max(17, 32, 677, 16, 17)
    dec = _root_has_prefix(677, 16, "1.50283")
    return ok and dec, det


def fact5(bits: int) -> tuple[bool, dict]:
    """The listed basis values P(17..32) and every listed decimal truncation."""
    P = p_table(32)
    bad_values = [n for n, v in BASIS_VALUES.items() if P[n] != v]
    bad_decimals = [n for n, d in BASIS_DECIMALS.items() if not _root_has_prefix(P[n], n - 1, d)]
    return not bad_values and not bad_decimals, {
        "mismatched_values": bad_values, "mismatched_decimals": bad_decimals}


def eq12_holds(n: int, bits: int) -> bool:
    """P(n) exp(P(n)^-1 677^-(33-n)/16) <= 677^((n-1)/16), powers of 16 taken."""
    P = p_table(32)
    root = iv_root(677, 16, bits)
    # 677^((33-n)/16) >= root.lo^(33-n), so the exponent is at most:
    arg_hi = Fraction(16) / (P[n] * root.lo ** (33 - n))
    e = exp_enclosure(arg_hi, bits)
    return _le(P[n] ** 16 * e, 677 ** (n - 1))


def fact6(bits: int) -> tuple[bool, dict]:
    P = p_table(16)
    per_n = {n: eq12_holds(n, bits) for n in range(2, 17)}
    # the case split: x_n = 677^((n-1)/16) / P(n) lies in [(677/676)^(1/16), 677]
    range_ok = all(676 * 677 ** (n - 1) >= 677 * P[n] ** 16 and
                   677 ** (n - 1) <= 677 ** 16 * P[n] ** 16 for n in range(2, 17))
    low = iv_root(Fraction(677, 676), 16, bits)
    case1 = _le(exp_enclosure(Fraction(2, 677 ** 2), bits), low.lo)
    case2 = _le(exp_enclosure(Fraction(1, 677), bits), 2)
    ok = all(per_n.values()) and range_ok and case1 and case2
    return ok, {"eq12_failures": [n for n, v in per_n.items() if not v]}


FACTS: dict[int, tuple[str, Callable[[int], tuple[bool, dict]]]] = {
    1: ("sqrt(2) * exp(sum_{i>=1} 2^-alpha_i) <= 1.5180", fact1),
    2: ("677^(1/16) * exp(sum_{i>=4} 2^-alpha_i) <= 1.50284", fact2),
    3: ("max_{2<=n<=16} P(n)^(1/(n-1)) = P(9)^(1/8) = 26^(1/8) = 1.50269...", fact3),
    4: ("max_{17<=n<=32} P(n)^(1/(n-1)) = P(17)^(1/16) = 677^(1/16) = 1.50283...", fact4),
    5: ("basis table: P(17..32) values and all listed P(n)^(1/(n-1)) truncations", fact5),
    6: ("P(n) exp(P(n)^-1 677^-(33-n)/16) <= 677^((n-1)/16) for 2 <= n <= 16", fact6),
}


def verify_fact(fact_id: int, cap: int | None = None) -> CertifiedVerdict:
    if fact_id not in FACTS:
        raise ValueError(f"unknown fact {fact_id}; expected 1..6")
    claim, check = FACTS[fact_id]
    return _escalate(f"fact{fact_id}: {claim}", check, cap)


def verify_lambda_bound(K: int) -> CertifiedVerdict:
    """lambda_k <= 1.50284^(2^k) for k <= K, and lambda_4 >= 1.5028^16, exactly."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    lam = lambda_seq(max(K, 4))
    upper_fail = [k for k in range(K + 1)
                  if lam[k] * 100000 ** (2 ** k) > 150284 ** (2 ** k)]
    lower_ok = lam[4] * 10000 ** 16 >= 15028 ** 16
    return _exact(f"lambda_k <= 1.50284^(2^k) for 0 <= k <= {K}; lambda_4 >= 1.5028^16",
                  not upper_fail and lower_ok,
                  {"upper_failures": upper_fail, "lower_bound_lambda4": lower_ok})


def theorem2_k(n: int) -> int:
    """The k with 2^k + 1 <= n <= 2^(k+1)."""
    return (n - 1).bit_length() - 1


def verify_theorem2(N: int, cap: int | None = None) -> CertifiedVerdict:
    """P(n)^16 <= 677^(n-1) exp(16 (n-1) sum_{i=4}^{k-1} 2^-alpha_i) for 2 <= n <= N."""
    if N < 2:
        raise ValueError("N must be >= 2")
    P = p_table(N)
    claim = f"theorem2: P(n)^(1/(n-1)) <= 677^(1/16) exp(sum_(i=4)^(k-1) 2^-alpha_i), 2 <= n <= {N}"

    def check(bits: int) -> tuple[bool, dict]:
        failures = []
        exp_cache: dict[Fraction, Interval] = {}
        for n in range(2, N + 1):
            k = theorem2_k(n)
            arg = 16 * (n - 1) * tail_sum(4, k - 1)
            lhs = P[n] ** 16
            base = 677 ** (n - 1)
            if arg == 0:
                if lhs > base:
                    failures.append(n)
                continue
            e = exp_cache.get(arg)
            if e is None:
                e = exp_cache[arg] = exp_enclosure(arg, bits)
            if not _ge(base * e, lhs):
                failures.append(n)
        return not failures, {"failures": failures[:20]}

    return _escalate(claim, check, cap)


def verify_all(cap: int | None = None) -> list[CertifiedVerdict]:
    return [verify_fact(i, cap) for i in sorted(FACTS)]


def corollary_constant(bits: int = 128) -> CertifiedVerdict:
    """677^(1/16) exp(sum_{i>=4} 2^-alpha_i) <= 1.50284 via the 2^-20 tail bound."""
    return _escalate("677^(1/16) exp(sum_{i>=4} 2^-alpha_i) <= 1.50284", fact2, bits)

"""Chern classes, Riemann-Roch and line-bundle cohomology on X = P^1 x P^2.

Classes are read in the fixed bases

    c1 = a1*t1 + a2*t2,   c2 = b1*t1*t2 + b2*t2^2,   c3 = c*t1*t2^2

so a ``ChernData`` is just the rank plus the integer coordinates
``(a1, a2)``, ``(b1, b2)`` and ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb

from .ring import RingElement, make_ring

__all__ = [
    "X",
    "IntegralityError",
    "ChernData",
    "chern_line",
    "whitney_sum",
    "total_chern",
    "from_total_chern",
    "chern_character",
    "chern_from_character",
    "twist",
    "tangent_twist",
    "todd_class",
    "euler_char_hrr",
    "euler_char_paper",
    "bott_h",
    "kunneth_h",
]

X = make_ring([1, 2])
T1, T2 = X.gens


class IntegralityError(ValueError):
    """A quantity that must be an integer came out fractional."""


@dataclass(frozen=True)
class ChernData:
    rank: int
    c1: tuple[int, int] = (0, 0)
    c2: tuple[int, int] = (0, 0)
    c3: int = 0

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("only sheaves of positive rank are supported")
        object.__setattr__(self, "c1", tuple(int(v) for v in self.c1))
        object.__setattr__(self, "c2", tuple(int(v) for v in self.c2))
        object.__setattr__(self, "c3", int(self.c3))

    @property
    def classes(self) -> tuple[RingElement, RingElement, RingElement]:
        a1, a2 = self.c1
        b1, b2 = self.c2
        return a1 * T1 + a2 * T2, b1 * T1 * T2 + b2 * T2**2, self.c3 * T1 * T2**2

    def __str__(self):
        return f"rank={self.rank}; c1=({self.c1[0]},{self.c1[1]}); c2=({self.c2[0]},{self.c2[1]}); c3={self.c3}"

    def to_dict(self) -> dict:
        return {"rank": self.rank, "c1": list(self.c1), "c2": list(self.c2), "c3": self.c3}

    @classmethod
    def from_dict(cls, data: dict) -> ChernData:
        return cls(data["rank"], tuple(data["c1"]), tuple(data["c2"]), data["c3"])


def _as_int(q: Fraction, what: str) -> int:
    if q.denominator != 1:
        raise IntegralityError(f"{what} = {q} is not an integer")
    return int(q)


def total_chern(x: ChernData) -> RingElement:
    c1, c2, c3 = x.classes
    return X.one + c1 + c2 + c3


def from_total_chern(rank: int, c: RingElement) -> ChernData:
    return ChernData(
        rank,
        (_as_int(c.coeff(1, 0), "c1"), _as_int(c.coeff(0, 1), "c1")),
        (_as_int(c.coeff(1, 1), "c2"), _as_int(c.coeff(0, 2), "c2")),
        _as_int(c.coeff(1, 2), "c3"),
    )


def chern_line(a: int, b: int) -> ChernData:
    return ChernData(1, (a, b))


def whitney_sum(*bundles: ChernData) -> ChernData:
    if not bundles:
        raise ValueError("whitney_sum needs at least one summand")
    c = reduce(lambda acc, e: acc * total_chern(e), bundles, X.one)
    return from_total_chern(sum(e.rank for e in bundles), c)


def chern_character(x: ChernData) -> RingElement:
    c1, c2, c3 = x.classes
    return (
        x.rank
        + c1
        + (c1 * c1 - 2 * c2) / 2
        + (c1**3 - 3 * c1 * c2 + 3 * c3) / 6
    )


def chern_from_character(rank: int, ch: RingElement) -> ChernData:
    """Invert ``chern_character`` through Newton's identities."""
    if ch.graded_part(0) != rank:
        raise ValueError(f"degree-0 part of ch is {ch.graded_part(0)}, expected rank {rank}")
    # power sums p_k = k! * ch_k
    p1, p2, p3 = ch.graded_part(1), 2 * ch.graded_part(2), 6 * ch.graded_part(3)
    c1 = p1
    c2 = (c1 * p1 - p2) / 2
    c3 = (c2 * p1 - c1 * p2 + p3) / 3
    return from_total_chern(rank, X.one + c1 + c2 + c3)


def twist(x: ChernData, s1: int, s2: int) -> ChernData:
    out = chern_from_character(x.rank, chern_character(x) * chern_character(chern_line(s1, s2)))
    assert out.c1 == (x.c1[0] + x.rank * s1, x.c1[1] + x.rank * s2)
    return out


# pullback of T_{P^2}(-1) along the second projection: c = 1 + t2 + t2^2
_TANGENT = ChernData(2, (0, 1), (0, 1), 0)


def tangent_twist(s1: int = 0, s2: int = 0) -> ChernData:
    """Chern data of pi_2^*(T P^2(-1)) (s1, s2)."""
    return twist(_TANGENT, s1, s2)


def todd_class() -> RingElement:
    # td(P^1) * td(P^2) with td(P^n) = (h / (1 - e^-h))^(n+1) truncated
    return (1 + T1) * (1 + Fraction(3, 2) * T2 + T2**2)


def euler_char_hrr(x: ChernData) -> int:
    return _as_int((chern_character(x) * todd_class()).integrate(), "chi")


def euler_char_paper(r: int, a1: int, a2: int, b1: int = 0, b2: int = 0, c3: int = 0) -> int:
    """Closed-form Euler characteristic.

    The bracket term pairs (a1 + 2, a2 + 3) against (b1, b2) crosswise:
    (a2 + 3) * b1 + (a1 + 2) * b2, which is the only reading that agrees with
    ``euler_char_hrr``.
    """
    bracket = 2 * a1 + (a1 + 1) * a2 * (a2 + 3) - ((a2 + 3) * b1 + (a1 + 2) * b2) + c3
    if bracket % 2:
        raise IntegralityError(f"closed form gives the non-integer {r + Fraction(bracket, 2)}")
    return r + bracket // 2


def bott_h(n: int, a: int, i: int) -> int:
    """h^i(P^n, O(a))."""
    if n < 1 or i < 0:
        raise ValueError("need n >= 1 and i >= 0")
    if i == 0:
        return comb(n + a, n) if a >= 0 else 0
    if i == n:
        return comb(-a - 1, n) if a <= -n - 1 else 0
    return 0


def kunneth_h(a: int, b: int, i: int) -> int:
    """h^i(X, O_X(a, b)) as a sum of products of factor cohomologies."""
    return sum(bott_h(1, a, p) * bott_h(2, b, i - p) for p in range(0, min(i, 1) + 1) if i - p >= 0)

"""Numerical invariants of curves C in X = P^1 x P^2.

A curve is recorded only through its number of connected components ``s``,
its bidegree ``(e1, e2) = (deg O_C(1,0), deg O_C(0,1))`` and the arithmetic
genus of the whole (possibly disconnected) curve. Its class in A^2(X) is
``e2*t1*t2 + e1*t2^2``: the bidegree is the c2 coordinate pair read
backwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .bundles import T1, T2
from .ring import RingElement

__all__ = [
    "CurveData",
    "RankRange",
    "UnsupportedRegimeError",
    "DegenerateCurveError",
    "class_from_bidegree",
    "bidegree_from_class",
    "pairing_degree",
    "segre_degree",
    "ci_invariants",
    "ci_rank_range",
    "twisted_canonical_degree",
    "h0_twisted_canonical",
    "serre_rank_range",
    "family_dimension_ci",
]


class UnsupportedRegimeError(ValueError):
    """Aggregate curve data is not enough to determine the requested number."""


class DegenerateCurveError(ValueError):
    pass


@dataclass(frozen=True)
class CurveData:
    s: int
    bidegree: tuple[int, int]
    genus: int

    def __post_init__(self):
        e1, e2 = self.bidegree
        if self.s < 1:
            raise ValueError("a curve has at least one connected component")
        if e1 < 0 or e2 < 0 or (e1, e2) == (0, 0):
            raise ValueError(f"bidegree {self.bidegree} is not the bidegree of a curve")
        if self.genus < 1 - self.s:
            raise ValueError(f"genus {self.genus} is below 1 - s for s = {self.s}")
        object.__setattr__(self, "bidegree", (int(e1), int(e2)))

    @property
    def e1(self) -> int:
        return self.bidegree[0]

    @property
    def e2(self) -> int:
        return self.bidegree[1]

    def __str__(self):
        return f"s={self.s} bidegree=({self.e1},{self.e2}) genus={self.genus}"

    def to_dict(self) -> dict:
        return {"s": self.s, "bidegree": list(self.bidegree), "genus": self.genus}


@dataclass(frozen=True)
class RankRange:
    """Inclusive range of ranks; ``r_min > r_max`` encodes the empty range."""

    r_min: int
    r_max: int

    def __post_init__(self):
        if self.r_min < 1:
            raise ValueError("ranks start at 1")

    @classmethod
    def empty(cls) -> RankRange:
        return cls(3, 2)

    @property
    def is_empty(self) -> bool:
        return self.r_min > self.r_max

    def __contains__(self, r: int) -> bool:
        return self.r_min <= r <= self.r_max

    def __iter__(self):
        return iter(range(self.r_min, self.r_max + 1))

    def __len__(self):
        return max(0, self.r_max - self.r_min + 1)

    def __str__(self):
        return "[]" if self.is_empty else f"[{self.r_min},{self.r_max}]"


def class_from_bidegree(e1: int, e2: int) -> RingElement:
    if e1 < 0 or e2 < 0:
        raise ValueError("bidegrees are nonnegative")
    return e2 * T1 * T2 + e1 * T2**2


def bidegree_from_class(cls: RingElement) -> tuple[int, int]:
    if cls.graded_part(2) != cls:
        raise ValueError(f"{cls} is not a codimension-2 class")
    # e1 = deg O_C(1,0) = int([C] * t1), e2 = int([C] * t2)
    e1, e2 = (cls * T1).integrate(), (cls * T2).integrate()
    return int(e1), int(e2)


def pairing_degree(curve: CurveData, a: int, b: int) -> int:
    """deg O_C(a, b)."""
    return a * curve.e1 + b * curve.e2


def segre_degree(curve: CurveData) -> int:
    """Degree of C in the Segre embedding X in P^5."""
    return pairing_degree(curve, 1, 1)


def ci_invariants(a: int, b: int) -> CurveData:
    """Complete intersection of two divisors in |O_X(a, b)|.

    Adjunction gives omega_Y = O_Y(2a - 2, 2b - 3), hence
    2 p_a - 2 = 2b(3ab - 3a - b).
    """
    if a < 0 or b < 0 or (a, b) == (0, 0):
        raise ValueError("need (a, b) in N^2 minus the origin")
    if a == 0 or b == 0:
        raise DegenerateCurveError(f"O_X({a},{b}) does not cut out a connected curve")
    return CurveData(1, (b * b, 2 * a * b), 1 + b * (3 * a * b - 3 * a - b))


def ci_rank_range(a: int, b: int) -> RankRange:
    """Ranks of bundles having the (a, b) complete intersection as dependency locus.

    The upper end is h^0(O_X(a, b)) - 1 = (a + 1) * C(b + 2, 2) - 1.
    """
    if a < 0 or b < 0 or (a, b) == (0, 0):
        raise ValueError("need (a, b) in N^2 minus the origin")
    return RankRange(3, (a + 1) * comb(b + 2, 2) - 1)


def twisted_canonical_degree(curve: CurveData, u: int, v: int) -> int:
    """deg omega_C(u, v); additive over components, so 2 p_a - 2 suffices."""
    return 2 * curve.genus - 2 + pairing_degree(curve, u, v)


def h0_twisted_canonical(curve: CurveData, u: int, v: int, *, trivial: bool = False) -> int:
    """h^0(omega_C(u, v)) in the regimes where aggregate data determines it.

    ``trivial`` asserts that omega_C(u, v) is the trivial bundle on every
    component; numerically this needs degree 0, but for positive genus degree
    0 alone does not imply it.
    """
    deg = twisted_canonical_degree(curve, u, v)
    if trivial:
        if deg != 0:
            raise ValueError(f"omega_C({u},{v}) has degree {deg}, it cannot be trivial")
        return curve.s
    if curve.s == 1:
        if curve.genus == 0:
            return max(0, deg + 1)
        if deg >= 2 * curve.genus - 1:
            return deg - curve.genus + 1
    elif curve.genus == 1 - curve.s and deg % curve.s == 0 and deg // curve.s >= 0:
        # s rational components of equal degree deg/s
        return deg + curve.s
    raise UnsupportedRegimeError(
        f"h^0(omega_C({u},{v})) is not determined by {curve} (degree {deg})"
    )


def serre_rank_range(curve: CurveData, c1: tuple[int, int], *, canonical: bool = False) -> RankRange:
    """Ranks r of bundles with first Chern class ``c1``, no trivial factor and
    ``curve`` as associated curve.

    If omega_C = O_C(c1 - (2, 3)) the range is [2, s + 1]; otherwise it is
    [3, 1 + h^0(omega_C((2, 3) - c1))].
    """
    u, v = 2 - c1[0], 3 - c1[1]
    deg = twisted_canonical_degree(curve, u, v)
    if canonical and deg != 0:
        raise ValueError(f"{curve} cannot satisfy omega_C = O_C{(-u, -v)}: degree {deg}")
    # on a union of rational curves a degree-0 twist (equal on all components) is trivial
    if deg == 0 and (canonical or curve.genus == 1 - curve.s):
        return RankRange(2, curve.s + 1)
    h0 = h0_twisted_canonical(curve, u, v)
    if h0 < 2:
        return RankRange.empty()
    return RankRange(3, 1 + h0)


def family_dimension_ci(r: int) -> int:
    """Dimension of the family of rank-r quotients of O_X^(r+1) by O_X(-1,-1)."""
    if not 3 <= r <= 5:
        raise ValueError("the (1,1) complete intersection family exists for 3 <= r <= 5")
    # h^0(O_X(1,1)^(r+1)) - dim GL_{r+1}
    return 6 * (r + 1) - (r + 1) ** 2

"""Descriptions of the bundles attached to classification rows.

Every description knows its kind tag and, when the construction pins them
down, the Chern classes of the bundle it names. These are used to cross-check
the rows: c1 must be the row's c1, c2 must be the class of the associated
curve, and for rank >= 3 the top class must be deg omega_C((2,3) - c1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundles import X, ChernData, chern_line, tangent_twist, total_chern, whitney_sum, from_total_chern
from .curves import class_from_bidegree

__all__ = [
    "LineBundle",
    "TangentTwist",
    "DirectSum",
    "UlrichExtension",
    "CompleteIntersectionSerre",
    "QuotientConstruction",
    "Unspecified",
    "Description",
    "description_problems",
]


@dataclass(frozen=True)
class LineBundle:
    a: int
    b: int

    rank = 1

    def chern(self) -> ChernData:
        return chern_line(self.a, self.b)

    @property
    def label(self) -> str:
        return f"O({self.a},{self.b})"


@dataclass(frozen=True)
class TangentTwist:
    """pi_2^*(T P^2(-1)) twisted by O(s1, s2)."""

    s1: int = 0
    s2: int = 0

    rank = 2

    def chern(self) -> ChernData:
        return tangent_twist(self.s1, self.s2)

    @property
    def label(self) -> str:
        base = "pi2*(TP2(-1))"
        return base if (self.s1, self.s2) == (0, 0) else f"{base}({self.s1},{self.s2})"


@dataclass(frozen=True)
class DirectSum:
    summands: tuple[LineBundle | TangentTwist, ...]

    def __post_init__(self):
        for m in self.summands:
            if isinstance(m, LineBundle) and (m.a < 0 or m.b < 0 or (m.a, m.b) == (0, 0)):
                raise ValueError(f"{m.label} is trivial or not globally generated")

    @property
    def kind(self) -> str:
        if all(isinstance(m, LineBundle) for m in self.summands):
            return "DirectSumOfLineBundles"
        if len(self.summands) == 1:
            return "PullbackTangentTwist"
        return "DirectSum"

    @property
    def rank(self) -> int:
        return sum(m.rank for m in self.summands)

    def chern(self, rank: int | None = None) -> ChernData:
        return whitney_sum(*(m.chern() for m in self.summands))

    @property
    def label(self) -> str:
        return " + ".join(m.label for m in self.summands)


@dataclass(frozen=True)
class UlrichExtension:
    """Non-split extension 0 -> O(0,1) -> E -> O(2,0) -> 0."""

    kind = "UlrichExtension"
    rank = 2

    def chern(self, rank: int | None = None) -> ChernData:
        return whitney_sum(chern_line(0, 1), chern_line(2, 0))

    @property
    def label(self) -> str:
        return "Ulrich extension of O(2,0) by O(0,1)"


@dataclass(frozen=True)
class CompleteIntersectionSerre:
    """Bundle with the (a, b) complete intersection curve as dependency locus.

    Its total Chern class is 1 / (1 - h) with h = a*t1 + b*t2, for every
    admissible rank.
    """

    a: int
    b: int

    kind = "CompleteIntersectionSerre"
    rank = None

    def chern(self, rank: int | None = None) -> ChernData:
        if rank is None:
            raise ValueError("the complete intersection construction exists in several ranks")
        h = self.a * X.gen(0) + self.b * X.gen(1)
        return from_total_chern(rank, X.one + h + h**2 + h**3)

    @property
    def label(self) -> str:
        return f"Serre bundle of the ({self.a},{self.b}) complete intersection"


@dataclass(frozen=True)
class QuotientConstruction:
    """Cokernel of a nowhere vanishing section O_X -> ``parent``."""

    parent: DirectSum
    reference: str

    kind = "QuotientConstruction"

    @property
    def rank(self) -> int:
        return self.parent.rank - 1

    def chern(self, rank: int | None = None) -> ChernData:
        c = self.parent.chern()
        return from_total_chern(c.rank - 1, total_chern(c))

    @property
    def label(self) -> str:
        return f"coker(O_X -> {self.parent.label})"


@dataclass(frozen=True)
class Unspecified:
    reference: str

    kind = "Unspecified"
    rank = None

    def chern(self, rank: int | None = None):
        return None

    @property
    def label(self) -> str:
        return f"not described ({self.reference})"


Description = DirectSum | UlrichExtension | CompleteIntersectionSerre | QuotientConstruction | Unspecified


def description_problems(desc: Description, c1: tuple[int, int], bidegree: tuple[int, int] | None,
                         rank: int, top_degree: int | None) -> list[str]:
    """Chern-class mismatches between ``desc`` and the row it is attached to.

    ``bidegree`` None means the associated curve is empty (c2 = 0);
    ``top_degree`` is deg omega_C((2,3) - c1), the expected c3 in rank >= 3.
    """
    if desc.rank is not None and desc.rank != rank:
        return [f"{desc.label} has rank {desc.rank}, row says {rank}"]
    data = desc.chern(rank)
    if data is None:
        return []
    problems = []
    if data.c1 != tuple(c1):
        problems.append(f"{desc.label} has c1={data.c1}, expected {tuple(c1)}")
    curve_class = class_from_bidegree(*bidegree) if bidegree is not None else X.zero
    if data.classes[1] != curve_class:
        problems.append(f"{desc.label} has c2={data.c2}, curve class is {curve_class}")
    expected_c3 = top_degree if rank >= 3 and top_degree is not None else 0
    if bidegree is not None and data.c3 != expected_c3:
        problems.append(f"{desc.label} has c3={data.c3}, expected {expected_c3}")
    return problems

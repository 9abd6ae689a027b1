"""Rule tables and expected classification tables.

The admissibility analysis for each first Chern class is recorded as data:
which curve types (s; e1, e2) with which genus can be the dependency locus of
a globally generated bundle, which are ruled out, and what is known about the
bundles in each rank. Rank ranges are *not* stored here; the classifier
derives them from the curve data.

``EXPECTED`` holds the known classification, transcribed independently
of the rule tables, for ``verify_tables`` to diff against.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curves import CurveData, RankRange
from .descriptions import (
    CompleteIntersectionSerre,
    Description,
    DirectSum,
    LineBundle as L,
    QuotientConstruction,
    TangentTwist as T,
    UlrichExtension,
)

__all__ = [
    "RankCase",
    "AdmissibleRow",
    "ExcludedPattern",
    "RuleTable",
    "RULE_TABLES",
    "ExpectedRow",
    "EXPECTED",
    "DescriptionErratum",
    "DESCRIPTION_ERRATA",
    "SUPPORTED_C1",
]


@dataclass(frozen=True)
class RankCase:
    """Bundles known to occur in ranks ``ranks`` (any of ``alternatives``)."""

    ranks: RankRange
    alternatives: tuple[Description, ...]

    @classmethod
    def at(cls, r: int, *alternatives: Description) -> RankCase:
        return cls(RankRange(r, r), alternatives)


@dataclass(frozen=True)
class AdmissibleRow:
    s: int
    bidegree: tuple[int, int]
    genus: int
    canonical: bool
    citation: str
    cases: tuple[RankCase, ...] = ()
    # (a, b) when the curve is the complete intersection of two |O_X(a, b)| divisors
    ci: tuple[int, int] | None = None

    @property
    def curve(self) -> CurveData:
        return CurveData(self.s, self.bidegree, self.genus)

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.s, *self.bidegree)


@dataclass(frozen=True)
class ExcludedPattern:
    """Curve types with s, e1, e2 in the given inclusive ranges (None: unbounded)."""

    citation: str
    s: tuple[int, int | None] = (1, None)
    e1: tuple[int, int | None] = (0, None)
    e2: tuple[int, int | None] = (0, None)

    def matches(self, s: int, e1: int, e2: int) -> bool:
        return all(
            lo <= v and (hi is None or v <= hi)
            for v, (lo, hi) in ((s, self.s), (e1, self.e1), (e2, self.e2))
        )

    def __str__(self):
        def rng(lo, hi):
            if hi == lo:
                return str(lo)
            return f"{lo}..{'' if hi is None else hi}"

        return f"({rng(*self.s)};{rng(*self.e1)},{rng(*self.e2)})"


def _pt(s: int, e1: int, e2: int, citation: str) -> ExcludedPattern:
    return ExcludedPattern(citation, (s, s), (e1, e1), (e2, e2))


@dataclass(frozen=True)
class RuleTable:
    c1: tuple[int, int]
    admissible: tuple[AdmissibleRow, ...]
    excluded: tuple[ExcludedPattern, ...]
    notes: tuple[str, ...] = field(default=())

    def status(self, s: int, e1: int, e2: int) -> set[str]:
        out = set()
        if any(row.key == (s, e1, e2) for row in self.admissible):
            out.add("admissible")
        if any(p.matches(s, e1, e2) for p in self.excluded):
            out.add("excluded")
        return out

    def overlaps(self) -> list[tuple[AdmissibleRow, ExcludedPattern]]:
        return [(row, p) for row in self.admissible for p in self.excluded if p.matches(*row.key)]


SUPPORTED_C1 = ((1, 1), (2, 1), (1, 2))

_TANGENT = DirectSum((T(),))

# ---------------------------------------------------------------- c1 = (1, 1)

_RULES_11 = RuleTable(
    (1, 1),
    admissible=(
        AdmissibleRow(
            1, (0, 1), 0, True,
            "rank 2 forces a (0,1)-line with omega_C = O_C(-1,-2); E = O(1,0)+O(0,1)",
            (RankCase.at(2, DirectSum((L(1, 0), L(0, 1)))),),
        ),
        AdmissibleRow(
            1, (1, 1), 0, False,
            "connected conic of bidegree (1,1): deg omega_C(1,2) = 1, unique bundle up to Aut(X)",
            (RankCase.at(3, DirectSum((L(1, 0), T()))),),
        ),
        AdmissibleRow(
            1, (1, 2), 0, False,
            "complete intersection of two (1,1) divisors: quotients of O_X^(r+1) by O_X(-1,-1)",
            (RankCase(RankRange(3, 5), (CompleteIntersectionSerre(1, 1),)),),
            ci=(1, 1),
        ),
    ),
    excluded=(
        ExcludedPattern("rank 2 bundles have connected curves; for r >= 3 only s = 1 remains", s=(2, None)),
        ExcludedPattern("C lies in the (1,1) complete intersection of bidegree (1,2)", e1=(2, None)),
        ExcludedPattern("C lies in the (1,1) complete intersection of bidegree (1,2)", e2=(3, None)),
        _pt(1, 1, 0, "a (1,0)-line has deg omega_C(1,2) = -1, not spanned"),
        _pt(1, 0, 2, "{P} x conic puts {P} x P^2 in the base locus of I_C(1,1)"),
    ),
)

# ---------------------------------------------------------------- c1 = (2, 1)

_CANONICAL_21 = "s disjoint lines {P_i} x L_i with omega_C = O_C(0,-2): ranks 2..s+1"

_RULES_21 = RuleTable(
    (2, 1),
    admissible=(
        AdmissibleRow(
            1, (0, 1), 0, True, _CANONICAL_21 + "; s = 1 gives only O(1,1)+O(1,0)",
            (RankCase.at(2, DirectSum((L(1, 1), L(1, 0)))),),
        ),
        AdmissibleRow(
            2, (0, 2), -1, True, _CANONICAL_21 + "; s = 2 in ranks 2 and 3",
            (
                RankCase.at(2, DirectSum((L(2, 0), L(0, 1))), UlrichExtension()),
                RankCase.at(3, DirectSum((L(1, 0), L(1, 0), L(0, 1)))),
            ),
        ),
        AdmissibleRow(3, (0, 3), -2, True, _CANONICAL_21 + "; s = 3"),
        AdmissibleRow(
            1, (1, 1), 0, False,
            "(1;1,1): omega_C(0,2) trivial, the bundle is pi2*(TP2(-1))(1,0)",
            (RankCase.at(2, DirectSum((T(1, 0),))),),
        ),
        AdmissibleRow(
            1, (1, 2), 0, False,
            "(1;1,2): rational, h0(omega_C(0,2)) = 3, ranks 3 and 4, homogeneous bundles",
            (
                RankCase.at(3, DirectSum((L(2, 0), T()))),
                RankCase.at(4, DirectSum((L(1, 0), L(1, 0), T()))),
            ),
        ),
        AdmissibleRow(
            1, (1, 3), 0, False,
            "(1;1,3): rational, realized on a minimal degree surface in |O_X(2,1)|",
        ),
        AdmissibleRow(
            1, (1, 4), 0, False,
            "(1;1,4): complete intersection of two (2,1) divisors, ranks up to h0(O_X(2,1)) - 1",
            (RankCase(RankRange(3, 8), (CompleteIntersectionSerre(2, 1),)),),
            ci=(2, 1),
        ),
    ),
    excluded=(
        ExcludedPattern("C lies in the (2,1) complete intersection of bidegree (1,4)", e1=(2, None)),
        ExcludedPattern("C lies in the (2,1) complete intersection of bidegree (1,4)", e2=(5, None)),
        ExcludedPattern("e1 = 1 on some component forces s = 1", s=(2, None), e1=(1, None)),
        _pt(1, 1, 0, "a (1,0)-line has deg omega_C(0,2) = -2, not spanned"),
        # e1 = 0: every component is a (0,1)-line, so e2 = s
        *(
            ExcludedPattern("e1 = 0 makes each component a (0,1)-line, so e2 = s", s=(s, s), e1=(0, 0), e2=(e2, e2))
            for e2 in range(1, 5)
            for s in range(1, 5)
            if s != e2
        ),
        ExcludedPattern("e1 = 0 makes each component a (0,1)-line, so e2 = s", s=(5, None), e1=(0, 0), e2=(0, 4)),
        _pt(4, 0, 4, "(0,4): the residual (1,0)-line meets C in >= 4 points, I_C(2,1) not spanned"),
    ),
)

# ---------------------------------------------------------------- c1 = (1, 2)

_RULES_12 = RuleTable(
    (1, 2),
    admissible=(
        AdmissibleRow(
            1, (0, 2), 0, True,
            "rank 2, omega_C = O_C(-1,-1): the only bundle is O(1,0)+O(0,2)",
            (RankCase.at(2, DirectSum((L(1, 0), L(0, 2)))),),
        ),
        AdmissibleRow(
            1, (1, 1), 0, True,
            "rank 2, omega_C = O_C(-1,-1): the only bundle is O(1,1)+O(0,1)",
            (RankCase.at(2, DirectSum((L(1, 1), L(0, 1)))),),
        ),
        AdmissibleRow(
            1, (1, 2), 0, False,
            "rational (1,2) curve: deg omega_C(1,1) = 1, E = O(1,0)+O(0,1)^2",
            (RankCase.at(3, DirectSum((L(1, 0), L(0, 1), L(0, 1)))),),
        ),
        AdmissibleRow(
            1, (2, 1), 0, False,
            "(2,1) realized via an extension of I_T(0,1) by O(1,1), T a (1,0)-line",
        ),
        AdmissibleRow(
            1, (2, 2), 0, False,
            "(2,2): Aut(X)-orbit of rational curves; rank 4 homogeneous, rank 3 its quotients",
            (
                RankCase.at(
                    3,
                    QuotientConstruction(
                        DirectSum((T(), L(1, 0), L(0, 1))), "cokernel of a nonzero section"
                    ),
                ),
                RankCase.at(4, DirectSum((T(), L(1, 0), L(0, 1)))),
            ),
        ),
        AdmissibleRow(
            1, (2, 3), 1, False,
            "(2,3): smooth plane cubic, from a reflexive sheaf over a rational (1,2) curve",
        ),
        AdmissibleRow(
            1, (3, 2), 0, False,
            "(x,2), x <= 4: from x general lines P^1 x {p_i}",
        ),
        AdmissibleRow(
            1, (3, 3), 1, False,
            "(3,3): elliptic curve with two degree-3 line bundles; I_C(1,2) spanned",
        ),
        AdmissibleRow(
            1, (4, 2), 0, False,
            "(x,2), x <= 4: from x general lines P^1 x {p_i}",
        ),
        AdmissibleRow(
            1, (4, 4), 3, False,
            "complete intersection of two (1,2) divisors, genus 3",
            (RankCase(RankRange(3, 11), (CompleteIntersectionSerre(1, 2),)),),
            ci=(1, 2),
        ),
    ),
    excluded=(
        ExcludedPattern("pi2 restricted to C is an embedding into a plane curve, so C is connected", s=(2, None)),
        ExcludedPattern("C lies in the (1,2) complete intersection of bidegree (4,4)", e1=(5, None)),
        ExcludedPattern("C lies in the (1,2) complete intersection of bidegree (4,4)", e2=(5, None)),
        ExcludedPattern("pi2 restricted to C is an embedding, so e2 > 0", e2=(0, 0)),
        ExcludedPattern("(x,4) with x <= 3 is not the bidegree of an associated curve", e1=(0, 3), e2=(4, 4)),
        ExcludedPattern("(y,3) with y <= 1 is not the bidegree of an associated curve", e1=(0, 1), e2=(3, 3)),
        _pt(1, 4, 3, "(4,3): the residual (0,1)-line lies in the base locus of I_C(1,2)"),
        _pt(1, 0, 1, "(x,1) is realized only for x in {1, 2}"),
        ExcludedPattern("(x,1) is realized only for x in {1, 2}", e1=(3, 4), e2=(1, 1)),
    ),
    notes=(
        "a (2;2,2) case would contradict s = 1 for r >= 3 and is not encoded",
    ),
)

RULE_TABLES: dict[tuple[int, int], RuleTable] = {t.c1: t for t in (_RULES_11, _RULES_21, _RULES_12)}


# ------------------------------------------------------------ expected tables


@dataclass(frozen=True)
class ExpectedRow:
    s: int
    bidegree: tuple[int, int]
    ranks: tuple[int, int]
    source: str
    # an incorrect rank range in circulation, kept for the report
    quoted: tuple[int, int] | None = None
    note: str = ""

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.s, *self.bidegree)


EXPECTED: dict[tuple[int, int], tuple[ExpectedRow, ...]] = {
    (1, 1): (
        ExpectedRow(1, (0, 1), (2, 2), "c1=(1,1) rank 2: O(1,0)+O(0,1)"),
        ExpectedRow(1, (1, 1), (3, 3), "c1=(1,1) rank 3: conic of bidegree (1,1)"),
        ExpectedRow(1, (1, 2), (3, 5), "c1=(1,1) (1,1) complete intersection: r in {3,4,5}"),
    ),
    (2, 1): (
        *(ExpectedRow(s, (0, s), (2, s + 1), "c1=(2,1) family (s;0,s;r), 2 <= r <= s+1") for s in (1, 2, 3)),
        ExpectedRow(1, (1, 1), (2, 2), "c1=(2,1) family (1;1,b;r), b = 1: r = 2"),
        *(ExpectedRow(1, (1, b), (3, 2 * b), "c1=(2,1) family (1;1,b;r), 3 <= r <= 2b") for b in (2, 3, 4)),
    ),
    (1, 2): (
        ExpectedRow(1, (1, 1), (2, 2), "c1=(1,2) rank 2: O(0,1)+O(1,1)"),
        ExpectedRow(1, (0, 2), (2, 2), "c1=(1,2) rank 2: O(1,0)+O(0,2)"),
        ExpectedRow(1, (4, 4), (3, 11), "c1=(1,2) (1,2) complete intersection: 3 <= r <= 11"),
        ExpectedRow(
            1, (2, 3), (3, 6), "c1=(1,2) plane cubic (1;2,3): 3 <= r <= 6",
            quoted=(3, 8),
            note=(
                "the bound r <= 8 is sometimes quoted; a (2,3) curve is a smooth plane cubic (genus 1), so "
                "deg omega_C(1,1) = 5 and h0 = 5, which gives 3 <= r <= 6"
            ),
        ),
        ExpectedRow(1, (3, 3), (3, 7), "c1=(1,2) elliptic (1;3,3): 3 <= r <= 7"),
        *(ExpectedRow(1, (x, 2), (3, x + 2), "c1=(1,2) rational (1;x,2): 3 <= r <= x+2") for x in (1, 2, 3, 4)),
        ExpectedRow(
            1, (2, 1), (3, 3), "c1=(1,2) rational (1;2,1): r = 3",
            note="easy to miss: the only row with e2 < e1 and r_max = r_min = 3",
        ),
    ),
}


@dataclass(frozen=True)
class DescriptionErratum:
    c1: tuple[int, int]
    bidegree: tuple[int, int]
    rank: int
    quoted: DirectSum
    used: DirectSum
    reason: str


DESCRIPTION_ERRATA: tuple[DescriptionErratum, ...] = (
    DescriptionErratum(
        (2, 1), (1, 2), 4,
        quoted=DirectSum((L(1, 0), L(1, 2), T())),
        used=DirectSum((L(1, 0), L(1, 0), T())),
        reason="the splitting type must sum to c1 = (2,1), which forces O(1,0)^2 + pi2*(TP2(-1))",
    ),
)

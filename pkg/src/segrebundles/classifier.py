"""Classification of globally generated bundles with small first Chern class.

``classify`` turns a rule table into classification entries by computing the
rank range of each admissible curve type (via the Serre correspondence, or
the complete-intersection bound for complete intersection curves) and
attaching what is known about the bundles in each rank. ``verify_tables``
diffs the result against the expected tables in :mod:`segrebundles.tables`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curves import RankRange, ci_rank_range, serre_rank_range, twisted_canonical_degree
from .descriptions import Description, DirectSum, LineBundle, TangentTwist, Unspecified, description_problems
from .tables import (
    DESCRIPTION_ERRATA,
    EXPECTED,
    RULE_TABLES,
    SUPPORTED_C1,
    ExpectedRow,
    RankCase,
    RuleTable,
)

__all__ = [
    "UnsupportedC1Error",
    "DelegatedError",
    "ClassificationEntry",
    "ReportLine",
    "VerificationReport",
    "rule_table",
    "classify",
    "classify_degenerate",
    "classify_any",
    "verify_tables",
]

P2_REFERENCE = (
    "c1=(0,b) with b >= 2 pulls back from spanned bundles on P^2 with c1 = b; "
    "that list is the external Sierra-Ugaglia classification"
)


class UnsupportedC1Error(ValueError):
    pass


class DelegatedError(UnsupportedC1Error):
    """The classification reduces to a list that lives outside this package."""

    def __init__(self, c1, citation: str = P2_REFERENCE):
        super().__init__(f"c1={tuple(c1)}: {citation}")
        self.citation = citation


@dataclass(frozen=True)
class ClassificationEntry:
    """One row: curve type (s; e1, e2), its rank range and the known bundles.

    ``s == 0`` with bidegree (0, 0) stands for an empty associated curve
    (pullbacks from a factor whose c2 vanishes).
    """

    c1: tuple[int, int]
    s: int
    bidegree: tuple[int, int]
    ranks: RankRange
    cases: tuple[RankCase, ...]
    citation: str
    genus: int | None = None

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.s, *self.bidegree)

    def presented(self, as_c2: bool = False) -> tuple[int, int]:
        """Bidegree (e1, e2), or the c2 coordinates (f1, f2) = (e2, e1)."""
        e1, e2 = self.bidegree
        return (e2, e1) if as_c2 else (e1, e2)

    def descriptions_for(self, r: int) -> tuple[Description, ...]:
        for case in self.cases:
            if r in case.ranks:
                return case.alternatives
        return (Unspecified(self.citation),)

    def description_text(self) -> str:
        parts = []
        for case in self.cases:
            alts = " | ".join(d.label for d in case.alternatives)
            parts.append(f"r={case.ranks.r_min}: {alts}" if len(case.ranks) == 1 else f"r in {case.ranks}: {alts}")
        return "; ".join(parts) if parts else "-"

    def to_dict(self, as_c2: bool = False) -> dict:
        return {
            "c1": list(self.c1),
            "s": self.s,
            "c2" if as_c2 else "bidegree": list(self.presented(as_c2)),
            "ranks": [self.ranks.r_min, self.ranks.r_max],
            "descriptions": [
                {
                    "ranks": [case.ranks.r_min, case.ranks.r_max],
                    "alternatives": [{"kind": d.kind, "label": d.label} for d in case.alternatives],
                }
                for case in self.cases
            ],
            "citation": self.citation,
        }

    def text_line(self, as_c2: bool = False) -> str:
        p1, p2 = self.presented(as_c2)
        name = "c2" if as_c2 else "bidegree"
        return (
            f"c1=({self.c1[0]},{self.c1[1]}) s={self.s} {name}=({p1},{p2}) r={self.ranks} "
            f"{self.description_text()} <{self.citation}>"
        )


def rule_table(c1) -> RuleTable:
    c1 = tuple(c1)
    try:
        return RULE_TABLES[c1]
    except KeyError:
        raise UnsupportedC1Error(
            f"no rule table for c1={c1}; supported: {', '.join(map(str, SUPPORTED_C1))}"
        ) from None


def _entry_sort_key(entry: ClassificationEntry):
    return (entry.s, *entry.bidegree, entry.ranks.r_min, entry.description_text())


def classify(c1, tables: dict | None = None) -> list[ClassificationEntry]:
    """Classification rows for c1 in {(1,1), (2,1), (1,2)}, sorted by (s, e1, e2, r_min)."""
    c1 = tuple(c1)
    table = tables[c1] if tables is not None and c1 in tables else rule_table(c1)
    entries = []
    for row in table.admissible:
        curve = row.curve
        if row.ci is not None:
            ranks = ci_rank_range(*row.ci)
        else:
            ranks = serre_rank_range(curve, c1, canonical=row.canonical)
        if ranks.is_empty:
            continue
        entries.append(ClassificationEntry(c1, row.s, row.bidegree, ranks, row.cases, row.citation, row.genus))
    return sorted(entries, key=_entry_sort_key)


def _partitions(n: int, parts: int, largest: int | None = None):
    """Partitions of n into exactly ``parts`` positive parts, nonincreasing."""
    largest = n if largest is None else largest
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n - parts + 1, largest), 0, -1):
        for rest in _partitions(n - first, parts - 1, first):
            yield (first, *rest)


def classify_degenerate(c1) -> list[ClassificationEntry]:
    """Spanned bundles with c1 = (a, 0), a >= 1, or c1 = (0, 1).

    These are pullbacks from one factor: split bundles O(d_i) on P^1, and on
    P^2 with c1 = 1 either O(1) or T P^2(-1).
    """
    a, b = c1 = tuple(c1)
    entries = []
    if a >= 1 and b == 0:
        note = "pullbacks of spanned bundles on P^1 of degree a, i.e. sums of O(d_i), d_i >= 1"
        for r in range(1, a + 1):
            for parts in _partitions(a, r):
                desc = DirectSum(tuple(LineBundle(d, 0) for d in parts))
                entries.append(ClassificationEntry(c1, 0, (0, 0), RankRange(r, r), (RankCase.at(r, desc),), note))
    elif (a, b) == (0, 1):
        note = "pullbacks of spanned bundles on P^2 with c1 = 1"
        entries.append(
            ClassificationEntry(c1, 0, (0, 0), RankRange(1, 1), (RankCase.at(1, DirectSum((LineBundle(0, 1),))),), note)
        )
        # zero locus of a section of pi2*(TP2(-1)) is a (1,0)-line P^1 x {p}
        entries.append(
            ClassificationEntry(
                c1, 1, (1, 0), RankRange(2, 2), (RankCase.at(2, DirectSum((TangentTwist(),))),), note, 0
            )
        )
    elif a == 0 and b >= 2:
        raise DelegatedError(c1)
    else:
        raise UnsupportedC1Error(f"c1={c1} has no zero slot (or is zero); use classify()")
    return sorted(entries, key=_entry_sort_key)


def classify_any(c1) -> list[ClassificationEntry]:
    c1 = tuple(c1)
    if 0 in c1:
        return classify_degenerate(c1)
    return classify(c1)


# ---------------------------------------------------------------- verification


@dataclass(frozen=True)
class ReportLine:
    passed: bool
    c1: tuple[int, int]
    s: int
    bidegree: tuple[int, int]
    ranks: tuple[int, int] | None
    citation: str
    detail: str = ""

    def __str__(self):
        tag = "PASS" if self.passed else "FAIL"
        r = "[]" if self.ranks is None else f"[{self.ranks[0]},{self.ranks[1]}]"
        line = (
            f"[{tag}] c1=({self.c1[0]},{self.c1[1]}) s={self.s} "
            f"bidegree=({self.bidegree[0]},{self.bidegree[1]}) r={r} <{self.citation}>"
        )
        return f"{line} {self.detail}" if self.detail else line

    def to_dict(self) -> dict:
        return {
            "status": "PASS" if self.passed else "FAIL",
            "c1": list(self.c1),
            "s": self.s,
            "bidegree": list(self.bidegree),
            "ranks": None if self.ranks is None else list(self.ranks),
            "citation": self.citation,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    lines: list[ReportLine] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(line.passed for line in self.lines)

    @property
    def failures(self) -> list[ReportLine]:
        return [line for line in self.lines if not line.passed]

    def render(self) -> str:
        out = [str(line) for line in self.lines]
        out += [f"NOTE {n}" for n in self.notes]
        out.append(f"OVERALL {'PASS' if self.passed else 'FAIL'} ({len(self.lines)} rows, {len(self.failures)} failed)")
        return "\n".join(out)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "rows": [line.to_dict() for line in self.lines],
            "notes": list(self.notes),
        }


def _entry_problems(entry: ClassificationEntry) -> list[str]:
    problems = []
    from .curves import CurveData

    curve = CurveData(entry.s, entry.bidegree, entry.genus)
    top = twisted_canonical_degree(curve, 2 - entry.c1[0], 3 - entry.c1[1])
    for case in entry.cases:
        if not (entry.ranks.r_min <= case.ranks.r_min and case.ranks.r_max <= entry.ranks.r_max):
            problems.append(f"described ranks {case.ranks} outside {entry.ranks}")
            continue
        for r in case.ranks:
            for desc in case.alternatives:
                problems += description_problems(desc, entry.c1, entry.bidegree, r, top)
    return problems


def verify_tables(tables: dict[tuple[int, int], RuleTable] | None = None,
                  expected: dict[tuple[int, int], tuple[ExpectedRow, ...]] | None = None) -> VerificationReport:
    """Diff ``classify`` against the expected tables, row by row.

    A row passes when the curve type is present on both sides with the same
    rank range and every computable description attached to it has the
    Chern classes the row predicts.
    """
    expected = EXPECTED if expected is None else expected
    report = VerificationReport()
    for c1 in SUPPORTED_C1:
        table = (tables or RULE_TABLES)[c1]
        for row, pattern in table.overlaps():
            report.lines.append(
                ReportLine(False, c1, row.s, row.bidegree, None, row.citation, f"also excluded by {pattern}")
            )
        got = {e.key: e for e in classify(c1, tables)}
        want = {e.key: e for e in expected[c1]}
        for key in sorted(set(got) | set(want)):
            s, e1, e2 = key
            entry, exp = got.get(key), want.get(key)
            if entry is None:
                report.lines.append(ReportLine(False, c1, s, (e1, e2), exp.ranks, exp.source, "missing from classification"))
                continue
            ranks = (entry.ranks.r_min, entry.ranks.r_max)
            if exp is None:
                report.lines.append(ReportLine(False, c1, s, (e1, e2), ranks, entry.citation, "not in expected table"))
                continue
            detail = []
            if ranks != exp.ranks:
                detail.append(f"expected r=[{exp.ranks[0]},{exp.ranks[1]}]")
            detail += _entry_problems(entry)
            if exp.note:
                report.notes.append(f"c1=({c1[0]},{c1[1]}) s={s} bidegree=({e1},{e2}): {exp.note}")
            report.lines.append(ReportLine(not detail, c1, s, (e1, e2), ranks, exp.source, "; ".join(detail)))
    for err in DESCRIPTION_ERRATA:
        quoted = err.quoted.chern()
        used = err.used.chern()
        report.notes.append(
            f"c1=({err.c1[0]},{err.c1[1]}) bidegree=({err.bidegree[0]},{err.bidegree[1]}) r={err.rank}: "
            f"{err.quoted.label} has c1={quoted.c1}; using {err.used.label} with c1={used.c1} "
            f"({err.reason})"
        )
    return report

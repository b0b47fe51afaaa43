"""Frobenius triple counts, class-product coverage, covering numbers.

The count of factorizations g = cd with c in C and d in D is the usual
character sum |C||D|/|A_n| * sum_chi chi(C) chi(D) chi(g^-1) / chi(1).
Each summand lives in a single quadratic field, so the sum is accumulated
per radicand; a nonzero irrational residue would mean a table bug and is
raised, never rounded away.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ancover.characters import (
    AlgebraicValue,
    CharacterTable,
    RadicandAccumulator,
    an_character_table,
)
from ancover.combinatorics import Partition
from ancover.permutations import (
    ClassLabel,
    an_class_size,
    inverse_label,
    splits_in_an,
)


class IrrationalResidue(ArithmeticError):
    """Irrational parts of a Frobenius sum failed to cancel."""


class NotGenerating(RuntimeError):
    """Class closure stabilized without reaching the whole group."""


def class_size(n: int, cls: ClassLabel) -> int:
    """Number of elements in the labeled A_n class."""
    if cls.n != n:
        raise ValueError(f"label is for n = {cls.n}, not {n}")
    return an_class_size(cls)


def frobenius_count(
    C: ClassLabel,
    D: ClassLabel,
    g: ClassLabel,
    *,
    table: CharacterTable | None = None,
) -> int:
    """Exact number of pairs (c, d) in C x D with c d equal to a fixed
    representative of g."""
    n = C.n
    if D.n != n or g.n != n:
        raise ValueError("labels must share one degree")
    if table is None:
        table = an_character_table(n)
    ci = table.class_index(C)
    di = table.class_index(D)
    gi = table.class_index(inverse_label(g))
    idx1 = table.class_index(_identity_label(n))
    acc = RadicandAccumulator()
    for row in table.values:
        x, y, z = row[ci], row[di], row[gi]
        deg = int(row[idx1].a)
        if x.b == 0 and y.b == 0 and z.b == 0:
            acc.rational += x.a * y.a * z.a / deg
            continue
        term = x * y * z
        acc.add(term * AlgebraicValue(Fraction(1, deg)))
    residues = acc.residues()
    if residues:
        raise IrrationalResidue(
            f"irrational residue {residues} for ({C}, {D}, {g})"
        )
    total = (
        Fraction(an_class_size(C) * an_class_size(D), table.group_order)
        * acc.rational
    )
    if total.denominator != 1 or total < 0:
        raise IrrationalResidue(
            f"count {total} for ({C}, {D}, {g}) is not a nonnegative integer"
        )
    return int(total)


def _identity_label(n: int) -> ClassLabel:
    return ClassLabel(Partition([1] * n))


@dataclass
class CoverageReport:
    """Which nontrivial classes are missing from the product set CD."""

    n: int
    C: ClassLabel
    D: ClassLabel
    uncovered: list[ClassLabel] = field(default_factory=list)

    @property
    def covered(self) -> bool:
        return not self.uncovered

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "C": self.C.text(),
            "D": self.D.text(),
            "uncovered": [c.text() for c in self.uncovered],
            "covered": self.covered,
        }

    def text_lines(self) -> list[str]:
        head = f"n={self.n} C={self.C} D={self.D} covered={'yes' if self.covered else 'no'}"
        return [head] + [f"  missing {c}" for c in self.uncovered]


def covers(C: ClassLabel, D: ClassLabel, *, table: CharacterTable | None = None) -> CoverageReport:
    """List every nontrivial class with zero Frobenius count from (C, D)."""
    n = C.n
    if table is None:
        table = an_character_table(n)
    identity = _identity_label(n)
    missing = [
        g
        for g in table.classes
        if g != identity and frobenius_count(C, D, g, table=table) == 0
    ]
    return CoverageReport(n, C, D, missing)


def labels_of_type(lam: Partition) -> list[ClassLabel]:
    if splits_in_an(lam):
        return [ClassLabel(lam, "+"), ClassLabel(lam, "-")]
    return [ClassLabel(lam)]


def is_covered_by(lam: Partition, g: ClassLabel, *, table: CharacterTable | None = None) -> bool:
    """Whether g lies in CD for every pair of classes C, D of cycle type lam."""
    if not lam.is_even_type():
        raise ValueError(f"{lam.text()} is not an even cycle type")
    if table is None:
        table = an_character_table(lam.n)
    labels = labels_of_type(lam)
    return all(
        frobenius_count(C, D, g, table=table) > 0 for C in labels for D in labels
    )


_SUPPORT_CACHE: dict[tuple[ClassLabel, ClassLabel], frozenset[ClassLabel]] = {}


def product_support(
    A: ClassLabel, C: ClassLabel, *, table: CharacterTable | None = None
) -> frozenset[ClassLabel]:
    """Classes represented in the product set A*C."""
    key = (A, C)
    cached = _SUPPORT_CACHE.get(key)
    if cached is not None:
        return cached
    if table is None:
        table = an_character_table(A.n)
    out = frozenset(
        E for E in table.classes if frobenius_count(A, C, E, table=table) > 0
    )
    _SUPPORT_CACHE[key] = out
    return out


def covering_number(C: ClassLabel, *, table: CharacterTable | None = None, max_power: int = 20) -> int:
    """Least k with C^k equal to all of A_n, by class-support closure."""
    n = C.n
    if n < 5:
        raise ValueError("covering numbers are computed for simple A_n (n >= 5)")
    if C.cycle_type.parts == tuple([1] * n):
        raise ValueError("the identity class does not generate")
    if table is None:
        table = an_character_table(n)
    everything = frozenset(table.classes)
    support: frozenset[ClassLabel] = frozenset([C])
    k = 1
    while support != everything:
        if k >= max_power:
            raise NotGenerating(f"no cover within {max_power} powers")
        new_support: set[ClassLabel] = set()
        for A in support:
            new_support |= product_support(A, C, table=table)
        if frozenset(new_support) == support:
            raise NotGenerating(f"support of {C} powers stabilized at {len(support)}")
        support = frozenset(new_support)
        k += 1
    return k

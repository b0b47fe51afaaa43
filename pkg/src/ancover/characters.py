"""Exact irreducible character values of S_n and A_n.

Values of S_n characters come from the Murnaghan-Nakayama rule, run on
first-column hook lengths (beta sets) with memoization.  A_n irreducibles
are restrictions: one per transpose-pair of partitions, and a pair of
constituents for each self-conjugate partition.  Each constituent pair is
rational except on the two classes whose cycle type equals the diagonal
hooks h_1 > ... > h_m of its partition, where the values are
``(eps +- sqrt(eps * h_1 * ... * h_m)) / 2`` with
``eps = (-1)^((n - m) / 2)``.

The sign bookkeeping is anchored to the class labeling of
:mod:`ancover.permutations`: the "+" constituent is the one taking the
``+sqrt`` value on the "+" class (the class of the consecutive-fill
representative).  Everything is exact: rationals plus one radicand per
value, with the radicand kept squarefree.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ancover.combinatorics import (
    LimitExceeded,
    Partition,
    enumerate_partitions,
    frobenius_symbol,
    transpose,
)
from ancover.permutations import ClassLabel, an_class_labels, an_class_size

DEFAULT_TABLE_LIMIT = 16


def _squarefree_split(d: int) -> tuple[int, int]:
    """d = s*s*d0 with d0 squarefree (sign kept on d0); returns (s, d0)."""
    if d == 0:
        return 1, 0
    sign = -1 if d < 0 else 1
    d = abs(d)
    s = 1
    f = 2
    while f * f <= d:
        while d % (f * f) == 0:
            d //= f * f
            s *= f
        f += 1
    return s, sign * d


@dataclass(frozen=True)
class AlgebraicValue:
    """Exact value a + b*sqrt(d) with rational a, b and integer d.

    Normalized so that d is squarefree and d == 1 exactly when the value
    is rational (b == 0).  d may be negative; conjugation then flips b.
    Sums and products are defined when the radicands are compatible.
    """

    a: Fraction
    b: Fraction
    d: int

    def __init__(self, a, b=0, d=1):
        a = Fraction(a)
        b = Fraction(b)
        s, d0 = _squarefree_split(int(d))
        b *= s
        if d0 in (0, 1):
            a += b * d0  # sqrt(0) = 0, sqrt(1) = 1
            b = Fraction(0)
            d0 = 1
        if b == 0:
            d0 = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d0)

    @classmethod
    def rational(cls, q) -> "AlgebraicValue":
        return cls(Fraction(q))

    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.a

    def conjugate(self) -> "AlgebraicValue":
        """Complex conjugate: flips b only for negative radicands."""
        if self.d < 0:
            return AlgebraicValue(self.a, -self.b, self.d)
        return self

    def galois_conjugate(self) -> "AlgebraicValue":
        return AlgebraicValue(self.a, -self.b, self.d)

    def norm_squared(self) -> "AlgebraicValue":
        """|z|^2 as an exact value (rational whenever d < 0)."""
        if self.d < 0:
            return AlgebraicValue(self.a * self.a - self.b * self.b * self.d)
        return self * self

    def __add__(self, other: "AlgebraicValue ") -> "AlgebraicValue":
        if self.b == 0 or other.b == 0 or self.d == other.d:
            d = other.d if self.b == 0 else self.d
            return AlgebraicValue(self.a + other.a, self.b + other.b, d)
        raise ValueError(f"incompatible radicands {self.d} and {other.d}")

    def __neg__(self) -> "AlgebraicValue":
        return AlgebraicValue(-self.a, -self.b, self.d)

    def __sub__(self, other: "AlgebraicValue") -> "AlgebraicValue":
        return self + (-other)

    def __mul__(self, other: "AlgebraicValue") -> "AlgebraicValue":
        if self.b == 0:
            return AlgebraicValue(self.a * other.a, self.a * other.b, other.d)
        if other.b == 0:
            return AlgebraicValue(self.a * other.a, self.b * other.a, self.d)
        if self.d != other.d:
            raise ValueError(f"incompatible radicands {self.d} and {other.d}")
        return AlgebraicValue(
            self.a * other.a + self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"


class RadicandAccumulator:
    """Exact sum of algebraic values living in different quadratic fields."""

    def __init__(self):
        self.rational = Fraction(0)
        self.irrational: dict[int, Fraction] = {}

    def add(self, v: AlgebraicValue) -> None:
        self.rational += v.a
        if v.b:
            self.irrational[v.d] = self.irrational.get(v.d, Fraction(0)) + v.b

    def residues(self) -> dict[int, Fraction]:
        return {d: c for d, c in self.irrational.items() if c != 0}


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama rule


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """chi_lam evaluated on cycle type mu, parts of mu removed in order."""
    if not mu:
        return 1
    r = mu[0]
    rest = mu[1:]
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in bset:
            continue
        leg = sum(1 for x in beta if c < x < b)
        newbeta = sorted((bset - {b}) | {c}, reverse=True)
        lam2 = tuple(
            x - (k - 1 - i) for i, x in enumerate(newbeta) if x - (k - 1 - i) > 0
        )
        term = _mn(lam2, rest)
        total += -term if leg % 2 else term
    return total


def mn_value(lam: Partition, mu: Partition) -> int:
    """Exact S_n character value chi_lam on the class of cycle type mu."""
    if lam.n != mu.n:
        raise ValueError(f"|lam| = {lam.n} but |mu| = {mu.n}")
    return _mn(lam.parts, tuple(sorted(mu.parts, reverse=True)))


def degree(lam: Partition) -> int:
    """Dimension of the irreducible S_n module, by the hook length formula."""
    t = transpose(lam)
    num = math.factorial(lam.n)
    for i, row in enumerate(lam.parts):
        for j in range(row):
            hook = (row - j) + (t.parts[j] - i) - 1
            num //= hook
    return num


def hook_size(lam: Partition) -> int | None:
    """Size of a hook diagram (shorter of first row/column), else None."""
    if len(lam.parts) > 1 and lam.parts[1] > 1:
        return None
    if not lam.parts:
        return None
    return min(lam.parts[0], len(lam.parts))


# ---------------------------------------------------------------------------
# A_n irreducibles


@dataclass(frozen=True)
class IrreducibleLabel:
    """A_n irreducible: a partition, signed when it is self-conjugate."""

    partition: Partition
    sign: str | None = None

    def __post_init__(self):
        if self.sign not in (None, "+", "-"):
            raise ValueError(f"bad sign {self.sign!r}")
        self_conj = self.partition.n >= 2 and transpose(self.partition) == self.partition
        if (self.sign is not None) != self_conj:
            raise ValueError(
                f"partition {self.partition.text()} "
                + ("requires a sign" if self_conj else "takes no sign")
            )

    @property
    def n(self) -> int:
        return self.partition.n

    def is_split(self) -> bool:
        return self.sign is not None

    def text(self) -> str:
        base = self.partition.text()
        return f"{base}:{self.sign}" if self.sign else base

    def __str__(self) -> str:
        return self.text()


def parse_irreducible_label(text: str) -> IrreducibleLabel:
    body, _, sign = text.strip().partition(":")
    return IrreducibleLabel(Partition.from_text(body), sign if sign else None)


def irreducible_labels(n: int) -> list[IrreducibleLabel]:
    """A_n irreducible labels: one per transpose pair, two per self-conjugate."""
    labels: list[IrreducibleLabel] = []
    for p in enumerate_partitions(n):
        t = transpose(p)
        if p == t and n >= 2:
            labels.append(IrreducibleLabel(p, "+"))
            labels.append(IrreducibleLabel(p, "-"))
        elif p.parts >= t.parts:
            labels.append(IrreducibleLabel(p))
    return labels


def an_degree(chi: IrreducibleLabel) -> int:
    d = degree(chi.partition)
    return d // 2 if chi.is_split() else d


def an_character_value(chi: IrreducibleLabel, cls: ClassLabel) -> AlgebraicValue:
    """Exact value of an A_n irreducible on a labeled class."""
    if chi.n != cls.n:
        raise ValueError(f"degree mismatch: {chi.n} vs {cls.n}")
    if not chi.is_split():
        return AlgebraicValue(mn_value(chi.partition, cls.cycle_type))
    hooks = frobenius_symbol(chi.partition).diagonal_hooks()
    if cls.cycle_type.parts != hooks:
        return AlgebraicValue(Fraction(mn_value(chi.partition, cls.cycle_type), 2))
    n, m = chi.n, len(hooks)
    eps = -1 if ((n - m) // 2) % 2 else 1
    radicand = eps * math.prod(hooks)
    b_sign = 1 if chi.sign == cls.sign else -1
    return AlgebraicValue(Fraction(eps, 2), Fraction(b_sign, 2), radicand)


# ---------------------------------------------------------------------------
# Tables


class CharacterTable:
    """Complete exact A_n character table with deterministic labeling."""

    def __init__(
        self,
        n: int,
        classes: list[ClassLabel],
        class_sizes: list[int],
        irreducibles: list[IrreducibleLabel],
        values: list[list[AlgebraicValue]],
    ):
        self.n = n
        self.classes = list(classes)
        self.class_sizes = list(class_sizes)
        self.irreducibles = list(irreducibles)
        self.values = values
        self.group_order = math.factorial(n) // 2 if n >= 2 else 1
        self._class_index = {c: i for i, c in enumerate(self.classes)}
        self._irr_index = {x: i for i, x in enumerate(self.irreducibles)}

    def class_index(self, cls: ClassLabel) -> int:
        return self._class_index[cls]

    def value(self, chi: IrreducibleLabel, cls: ClassLabel) -> AlgebraicValue:
        return self.values[self._irr_index[chi]][self._class_index[cls]]

    def degrees(self) -> list[int]:
        identity = ClassLabel(Partition([1] * self.n))
        j = self._class_index[identity]
        return [int(row[j].as_fraction()) for row in self.values]

    def column_inner(self, i: int, j: int) -> RadicandAccumulator:
        acc = RadicandAccumulator()
        for row in self.values:
            acc.add(row[i] * row[j].conjugate())
        return acc

    def verify_orthogonality(self) -> None:
        """Exact row and column orthogonality; raises AssertionError on failure."""
        k = len(self.classes)
        for i in range(k):
            for j in range(i, k):
                acc = self.column_inner(i, j)
                assert not acc.residues(), (
                    f"irrational residue in column pair {i},{j}: {acc.residues()}"
                )
                expect = (
                    Fraction(self.group_order, self.class_sizes[i]) if i == j else 0
                )
                assert acc.rational == expect, (
                    f"column orthogonality fails at {self.classes[i]},{self.classes[j]}:"
                    f" {acc.rational} != {expect}"
                )
        for r in range(len(self.irreducibles)):
            for s in range(r, len(self.irreducibles)):
                acc = RadicandAccumulator()
                for idx in range(k):
                    term = self.values[r][idx] * self.values[s][idx].conjugate()
                    acc.add(term * AlgebraicValue(self.class_sizes[idx]))
                assert not acc.residues(), (
                    f"irrational residue in row pair {r},{s}"
                )
                expect = Fraction(self.group_order) if r == s else 0
                assert acc.rational == expect, (
                    f"row orthogonality fails at {self.irreducibles[r]},"
                    f"{self.irreducibles[s]}: {acc.rational} != {expect}"
                )

    def verify_split_pair_sums(self) -> None:
        """Each split pair must sum to the restricted parent character."""
        for chi in self.irreducibles:
            if chi.sign != "+":
                continue
            partner = IrreducibleLabel(chi.partition, "-")
            for cls in self.classes:
                total = self.value(chi, cls) + self.value(partner, cls)
                parent = AlgebraicValue(mn_value(chi.partition, cls.cycle_type))
                assert total == parent, (
                    f"split pair sum fails for {chi.partition.text()} at {cls}"
                )

    def _quick_checks(self) -> None:
        assert len(self.classes) == len(self.irreducibles), "class/irreducible count"
        assert sum(d * d for d in self.degrees()) == self.group_order
        # Column orthogonality across each split class pair: this is the
        # check that pins the constituent/class pairing.
        for idx, cls in enumerate(self.classes):
            if cls.sign != "+":
                continue
            jdx = self._class_index[ClassLabel(cls.cycle_type, "-")]
            for i, j in ((idx, jdx), (idx, idx), (jdx, jdx)):
                acc = self.column_inner(i, j)
                assert not acc.residues(), f"residue at split block {cls}"
                expect = Fraction(self.group_order, self.class_sizes[i]) if i == j else 0
                assert acc.rational == expect, f"split block orthogonality at {cls}"

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        def enc(v: AlgebraicValue) -> list[int]:
            a2, b2 = 2 * v.a, 2 * v.b
            return [a2.numerator, a2.denominator, b2.numerator, b2.denominator, v.d]

        return {
            "schema": 1,
            "kind": "an-character-table",
            "n": self.n,
            "classes": [c.text() for c in self.classes],
            "class_sizes": list(self.class_sizes),
            "irreducibles": [x.text() for x in self.irreducibles],
            "values": [[enc(v) for v in row] for row in self.values],
        }

    def dump(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh, sort_keys=True)
            fh.write("\n")

    @classmethod
    def from_json_dict(cls, data: dict) -> "CharacterTable":
        if data.get("schema") != 1 or data.get("kind") != "an-character-table":
            raise ValueError("not a version-1 character table file")
        from ancover.permutations import parse_class_label

        def dec(item: list[int]) -> AlgebraicValue:
            a2n, a2d, b2n, b2d, d = item
            return AlgebraicValue(Fraction(a2n, a2d) / 2, Fraction(b2n, b2d) / 2, d)

        return cls(
            data["n"],
            [parse_class_label(s) for s in data["classes"]],
            list(data["class_sizes"]),
            [parse_irreducible_label(s) for s in data["irreducibles"]],
            [[dec(item) for item in row] for row in data["values"]],
        )

    @classmethod
    def load(cls, path: str) -> "CharacterTable":
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh))


_TABLE_CACHE: dict[int, CharacterTable] = {}


def an_character_table(n: int, *, limit: int = DEFAULT_TABLE_LIMIT) -> CharacterTable:
    """Build (and cache) the exact A_n character table."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n > limit:
        raise LimitExceeded(f"n = {n} exceeds table limit {limit}")
    cached = _TABLE_CACHE.get(n)
    if cached is not None:
        return cached
    classes = an_class_labels(n)
    sizes = [an_class_size(c) for c in classes]
    irreducibles = irreducible_labels(n)
    values = [[an_character_value(chi, cls) for cls in classes] for chi in irreducibles]
    table = CharacterTable(n, classes, sizes, irreducibles, values)
    table._quick_checks()
    _TABLE_CACHE[n] = table
    return table

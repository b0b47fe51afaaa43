"""Partitions, Young-diagram geometry, and subpartition typing.

A partition plays two roles here: as a cycle type it names conjugacy
classes, and as a diagram it names irreducible characters.  This module
also implements the eight-way decomposition of a target cycle type into
"subpartitions" and the shrinking map ``phi`` used by the constructive
witness pipeline: every part of size 6 or more is replaced by an element
of {4, 5} of the same parity, to be grown back later two points at a time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator

MAX_PART_SUM = 10**4


class Infeasible(ValueError):
    """A combinatorial precondition cannot be met for this input."""


class LimitExceeded(ValueError):
    """Input exceeds a configured size limit."""


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; ``n`` is their sum."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if sum(parts) > MAX_PART_SUM:
            raise ValueError(f"partition size exceeds limit {MAX_PART_SUM}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def counts(self) -> dict[int, int]:
        """Multiplicity of each part size."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def ones(self) -> int:
        """Number of parts equal to 1."""
        return sum(1 for p in self.parts if p == 1)

    def is_even_type(self) -> bool:
        """True iff a permutation of this cycle type is even."""
        return (self.n - len(self.parts)) % 2 == 0

    def text(self) -> str:
        """Serialize as comma-separated decreasing integers, "-" if empty."""
        if not self.parts:
            return "-"
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def from_text(cls, s: str) -> "Partition":
        """Parse "5,3,1" or "-"; token "1x26" abbreviates 26 parts of 1."""
        s = s.strip()
        if s in ("", "-"):
            return cls(())
        parts: list[int] = []
        for tok in s.split(","):
            tok = tok.strip()
            if "x" in tok:
                size, _, count = tok.partition("x")
                parts.extend([int(size)] * int(count))
            else:
                parts.append(int(tok))
        return cls(sorted(parts, reverse=True))

    def __str__(self) -> str:
        return self.text()


def transpose(p: Partition) -> Partition:
    """Young-diagram transpose (an involution)."""
    if not p.parts:
        return p
    cols = [0] * p.parts[0]
    for row in p.parts:
        for j in range(row):
            cols[j] += 1
    return Partition(cols)


@dataclass(frozen=True)
class FrobeniusSymbol:
    """Arm and leg lengths along the diagonal of a Young diagram.

    ``arms[i] = parts[i] - (i+1)`` and ``legs`` is the same for the
    transpose; both lists are strictly decreasing and nonnegative.  For a
    self-conjugate partition arms equal legs and the diagonal hook lengths
    ``2*arms[i] + 1`` are distinct odd integers summing to n.
    """

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.arms)

    def diagonal_hooks(self) -> tuple[int, ...]:
        return tuple(a + l + 1 for a, l in zip(self.arms, self.legs))


def frobenius_symbol(p: Partition) -> FrobeniusSymbol:
    """Frobenius symbol of a nonempty partition."""
    if not p.parts:
        raise ValueError("empty partition has no Frobenius symbol")
    t = transpose(p)
    m = 0
    while m < len(p.parts) and p.parts[m] >= m + 1:
        m += 1
    arms = tuple(p.parts[i] - (i + 1) for i in range(m))
    legs = tuple(t.parts[i] - (i + 1) for i in range(m))
    return FrobeniusSymbol(arms, legs)


def is_split_type(p: Partition) -> bool:
    """True iff all parts are odd and pairwise distinct.

    These are exactly the cycle types whose S_n class breaks into two
    A_n classes of equal size.
    """
    return all(part % 2 == 1 for part in p.parts) and len(set(p.parts)) == len(p.parts)


class SubpartitionKind(IntEnum):
    """The eight shapes a target cycle type is broken into."""

    SINGLE_FIXED_POINT = 1  # 1
    THREE_WITH_FOUR_ONES = 2  # 3,1,1,1,1
    THREE_THREES = 3  # 3,3,3
    ODD_PART = 4  # m odd >= 5
    TWO_TWOS = 5  # 2,2
    FOUR_TWOS = 6  # 2,2,2,2
    TWO_WITH_EVEN = 7  # m even >= 4, with a 2
    EVEN_PAIR = 8  # m1 >= m2 even >= 4


# Length of the subinterval a piece of each kind packs into.
SUBINTERVAL_LENGTH = {
    SubpartitionKind.THREE_WITH_FOUR_ONES: 7,
    SubpartitionKind.THREE_THREES: 9,
    SubpartitionKind.ODD_PART: 5,
    SubpartitionKind.TWO_TWOS: 4,
    SubpartitionKind.FOUR_TWOS: 8,
    SubpartitionKind.TWO_WITH_EVEN: 6,
    SubpartitionKind.EVEN_PAIR: 8,
}


def _kind_template_ok(kind: SubpartitionKind, parts: tuple[int, ...]) -> bool:
    if kind == SubpartitionKind.SINGLE_FIXED_POINT:
        return parts == (1,)
    if kind == SubpartitionKind.THREE_WITH_FOUR_ONES:
        return parts == (3, 1, 1, 1, 1)
    if kind == SubpartitionKind.THREE_THREES:
        return parts == (3, 3, 3)
    if kind == SubpartitionKind.ODD_PART:
        return len(parts) == 1 and parts[0] >= 5 and parts[0] % 2 == 1
    if kind == SubpartitionKind.TWO_TWOS:
        return parts == (2, 2)
    if kind == SubpartitionKind.FOUR_TWOS:
        return parts == (2, 2, 2, 2)
    if kind == SubpartitionKind.TWO_WITH_EVEN:
        return (
            len(parts) == 2
            and parts[1] == 2
            and parts[0] >= 4
            and parts[0] % 2 == 0
        )
    if kind == SubpartitionKind.EVEN_PAIR:
        return (
            len(parts) == 2
            and parts[0] >= parts[1] >= 4
            and parts[0] % 2 == 0
            and parts[1] % 2 == 0
        )
    return False


@dataclass(frozen=True)
class TypedSubpartition:
    kind: SubpartitionKind
    parts: Partition

    def __post_init__(self):
        if not _kind_template_ok(self.kind, self.parts.parts):
            raise ValueError(
                f"parts {self.parts.text()} do not match kind {int(self.kind)}"
            )

    @property
    def size(self) -> int:
        return self.parts.n


def decompose_subpartitions(mu: Partition) -> list[TypedSubpartition]:
    """Break an even cycle type into typed pieces.

    Deterministic policy: odd parts >= 5 stand alone (kind 4); parts of 3
    are grouped in triples (kind 3) and one or two leftovers each absorb
    four 1-parts (kind 2); even parts >= 4 are paired largest-first
    (kind 8) with an unpaired leftover joining a 2-part (kind 7); the
    remaining 2-parts are grouped in fours (kind 6) and at most one pair
    (kind 5); remaining 1-parts stand alone (kind 1).

    Raises Infeasible when the leftover 3-parts cannot absorb enough
    1-parts.  At most two kind-2 pieces and at most one kind-5 piece are
    ever produced.
    """
    if not mu.is_even_type():
        raise ValueError(f"{mu.text()} is not the cycle type of an even permutation")
    counts = mu.counts()
    ones = counts.get(1, 0)
    twos = counts.get(2, 0)
    threes = counts.get(3, 0)
    odd_big = sorted((p for p in mu.parts if p >= 5 and p % 2 == 1), reverse=True)
    even_big = sorted((p for p in mu.parts if p >= 4 and p % 2 == 0), reverse=True)

    pieces: list[TypedSubpartition] = []
    for m in odd_big:
        pieces.append(TypedSubpartition(SubpartitionKind.ODD_PART, Partition((m,))))

    for _ in range(threes // 3):
        pieces.append(TypedSubpartition(SubpartitionKind.THREE_THREES, Partition((3, 3, 3))))
    leftover_threes = threes % 3
    if 4 * leftover_threes > ones:
        raise Infeasible(
            f"{leftover_threes} leftover 3-part(s) need {4 * leftover_threes} "
            f"fixed points but only {ones} are available"
        )
    for _ in range(leftover_threes):
        pieces.append(
            TypedSubpartition(
                SubpartitionKind.THREE_WITH_FOUR_ONES, Partition((3, 1, 1, 1, 1))
            )
        )
        ones -= 4

    i = 0
    while i + 1 < len(even_big):
        pieces.append(
            TypedSubpartition(
                SubpartitionKind.EVEN_PAIR, Partition((even_big[i], even_big[i + 1]))
            )
        )
        i += 2
    if i < len(even_big):
        # Parity of the even-part count is even for an even cycle type, so
        # an unpaired leftover guarantees an available 2-part.
        if twos == 0:
            raise Infeasible("an unpaired even part needs a 2-part companion")
        pieces.append(
            TypedSubpartition(SubpartitionKind.TWO_WITH_EVEN, Partition((even_big[i], 2)))
        )
        twos -= 1

    for _ in range(twos // 4):
        pieces.append(TypedSubpartition(SubpartitionKind.FOUR_TWOS, Partition((2, 2, 2, 2))))
    rem = twos % 4
    if rem == 2:
        pieces.append(TypedSubpartition(SubpartitionKind.TWO_TWOS, Partition((2, 2))))
    elif rem:
        raise Infeasible("odd number of leftover 2-parts")

    for _ in range(ones):
        pieces.append(TypedSubpartition(SubpartitionKind.SINGLE_FIXED_POINT, Partition((1,))))

    pieces.sort(key=lambda s: (int(s.kind), tuple(-p for p in s.parts.parts)))
    assert sorted(itertools.chain(*(s.parts.parts for s in pieces)), reverse=True) == list(
        mu.parts
    )
    return pieces


_PHI_FIXED = {
    SubpartitionKind.THREE_WITH_FOUR_ONES,
    SubpartitionKind.THREE_THREES,
    SubpartitionKind.TWO_TWOS,
    SubpartitionKind.FOUR_TWOS,
}


def phi(s: TypedSubpartition) -> Partition:
    """Shrink a piece: parts >= 6 become the same-parity element of {4, 5}."""
    if s.kind == SubpartitionKind.SINGLE_FIXED_POINT:
        return Partition(())
    if s.kind in _PHI_FIXED:
        return s.parts
    if s.kind == SubpartitionKind.ODD_PART:
        return Partition((5,))
    if s.kind == SubpartitionKind.TWO_WITH_EVEN:
        return Partition((4, 2))
    if s.kind == SubpartitionKind.EVEN_PAIR:
        return Partition((4, 4))
    raise ValueError(f"unknown kind {s.kind}")


def centralizer_order(p: Partition) -> int:
    """Order of the S_n centralizer of a permutation of this cycle type."""
    z = 1
    for size, mult in p.counts().items():
        z *= size**mult
        for j in range(2, mult + 1):
            z *= j
    return z


def enumerate_partitions(n: int, *, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield Partition(())
        return

    def rec(remaining: int, cap: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            yield from rec(remaining - p, p, prefix)
            prefix.pop()

    for parts in rec(n, max_part if max_part is not None else n, []):
        yield Partition(parts)


def enumerate_distinct_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n into pairwise distinct parts."""

    def rec(remaining: int, cap: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            yield from rec(remaining - p, p - 1, prefix)
            prefix.pop()

    yield from (Partition(parts) for parts in rec(n, n, []))


def self_conjugate_partitions(n: int) -> Iterator[Partition]:
    """Self-conjugate partitions of n, via distinct odd diagonal hooks."""
    for hooks in enumerate_distinct_partitions(n):
        if all(h % 2 == 1 for h in hooks.parts):
            yield partition_from_diagonal_hooks(hooks)


def partition_from_diagonal_hooks(hooks: Partition) -> Partition:
    """Self-conjugate partition with the given distinct odd diagonal hooks."""
    if not is_split_type(hooks):
        raise ValueError("diagonal hooks must be distinct odd integers")
    arms = tuple((h - 1) // 2 for h in hooks.parts)
    m = len(arms)
    rows = [arms[i] + i + 1 for i in range(m)]
    # By symmetry the column lengths equal the row lengths.
    cols = rows[:]
    total_rows = cols[0]
    full = [0] * total_rows
    for i in range(m):
        full[i] = rows[i]
    for j in range(m):
        # column j+1 has length cols[j]; rows beyond the diagonal block get
        # one box for each column long enough to reach them
        for r in range(m, cols[j]):
            full[r] += 1
    return Partition([p for p in full if p])

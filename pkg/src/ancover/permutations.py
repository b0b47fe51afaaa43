"""Permutations of {1..n}, cycle structure, and A_n class labels.

Products compose right to left: ``(a * b)(x) == a(b(x))``.  Degrees are
explicit; operations on mismatched degrees raise instead of embedding
silently, and :func:`embed` pads with fixed points when an embedding is
wanted.

An A_n class is named by its cycle type plus an optional sign.  A sign is
present exactly when the type has pairwise distinct odd parts (the split
case).  The ``+`` class is the one containing the representative whose
cycles are filled with consecutive integers in decreasing length order;
this convention is what anchors the irrational character values in
:mod:`ancover.characters`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from ancover.combinatorics import (
    Partition,
    centralizer_order,
    enumerate_partitions,
    is_split_type,
)


class DegreeMismatch(ValueError):
    """Operands act on different point sets."""


class OddPermutation(ValueError):
    """An odd permutation where an element of A_n is required."""


def splits_in_an(p: Partition) -> bool:
    """Whether the S_n class of this even type breaks into two A_n classes.

    Equivalent to distinct odd parts, except at n = 1 where S_1 = A_1.
    """
    return p.n >= 2 and is_split_type(p)


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [int(x) for x in cyc]
            for x in cyc:
                if not 1 <= x <= n:
                    raise ValueError(f"point {x} out of range 1..{n}")
                if x in seen:
                    raise ValueError(f"point {x} appears in two cycles")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise DegreeMismatch(f"degree {self.n} vs {other.n}")
        return Permutation(self.images[y - 1] for y in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, y in enumerate(self.images):
            inv[y - 1] = i + 1
        return Permutation(inv)

    def cycles(self, *, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its minimum, longest first."""
        seen = [False] * self.n
        out: list[tuple[int, ...]] = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self(start)
            while x != start:
                cyc.append(x)
                seen[x - 1] = True
                x = self(x)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        out.sort(key=lambda c: (-len(c), c[0]))
        return out

    def cycle_type(self) -> Partition:
        return cycle_type(self)

    def parity(self) -> int:
        """0 for even, 1 for odd."""
        seen = [False] * self.n
        transpositions = 0
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            length = 0
            x = start
            while not seen[x - 1]:
                seen[x - 1] = True
                length += 1
                x = self(x)
            transpositions += length - 1
        return transpositions % 2

    def is_even(self) -> bool:
        return self.parity() == 0

    def fix_count(self) -> int:
        return sum(1 for i, y in enumerate(self.images) if i + 1 == y)

    def support(self) -> list[int]:
        return [i + 1 for i, y in enumerate(self.images) if i + 1 != y]

    def format_images(self) -> str:
        return " ".join(str(x) for x in self.images)

    def format_cycles(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycs)

    def __str__(self) -> str:
        return self.format_cycles()


def multiply(a: Permutation, b: Permutation) -> Permutation:
    return a * b


def inverse(g: Permutation) -> Permutation:
    return g.inverse()


def conjugate(g: Permutation, s: Permutation) -> Permutation:
    """s g s^-1."""
    if g.n != s.n:
        raise DegreeMismatch(f"degree {g.n} vs {s.n}")
    return s * g * s.inverse()


def parity(g: Permutation) -> int:
    return g.parity()


def fix_count(g: Permutation) -> int:
    return g.fix_count()


def cycle_type(g: Permutation) -> Partition:
    lengths = sorted((len(c) for c in g.cycles(include_fixed=True)), reverse=True)
    return Partition(lengths)


def embed(g: Permutation, n: int) -> Permutation:
    """View g in a larger degree, the new points fixed."""
    if n < g.n:
        raise DegreeMismatch(f"cannot embed degree {g.n} into {n}")
    return Permutation(tuple(g.images) + tuple(range(g.n + 1, n + 1)))


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse "2 3 4 5 1" (image list) or "(1,2,3)(4,5)" (cycles)."""
    text = text.strip()
    if text.startswith("("):
        cycles: list[list[int]] = []
        maxpt = 0
        for chunk in text.replace(")(", ")|(").split("|"):
            chunk = chunk.strip()
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise ValueError(f"bad cycle notation: {text!r}")
            body = chunk[1:-1].strip()
            if not body:
                continue
            cyc = [int(t) for t in body.replace(",", " ").split()]
            cycles.append(cyc)
            maxpt = max(maxpt, max(cyc))
        degree = n if n is not None else maxpt
        return Permutation.from_cycles(degree, cycles)
    images = [int(t) for t in text.replace(",", " ").split()]
    g = Permutation(images)
    if n is not None and n != g.n:
        g = embed(g, n)
    return g


@dataclass(frozen=True)
class ClassLabel:
    """An A_n conjugacy class: cycle type plus sign for split types."""

    cycle_type: Partition
    sign: str | None = None

    def __post_init__(self):
        if self.sign not in (None, "+", "-"):
            raise ValueError(f"sign must be None, '+' or '-', got {self.sign!r}")
        if not self.cycle_type.is_even_type():
            raise ValueError(f"{self.cycle_type.text()} is an odd cycle type")
        if (self.sign is not None) != splits_in_an(self.cycle_type):
            raise ValueError(
                f"type {self.cycle_type.text()} "
                + ("requires a sign" if is_split_type(self.cycle_type) else "takes no sign")
            )

    @property
    def n(self) -> int:
        return self.cycle_type.n

    def is_split(self) -> bool:
        return self.sign is not None

    def text(self) -> str:
        base = self.cycle_type.text()
        return f"{base}:{self.sign}" if self.sign else base

    def __str__(self) -> str:
        return self.text()


def parse_class_label(text: str) -> ClassLabel:
    """Parse "5,3,1:+" or "2,2,1" or "1x26"."""
    body, _, sign = text.strip().partition(":")
    p = Partition.from_text(body)
    return ClassLabel(p, sign if sign else None)


def an_class_labels(n: int) -> list[ClassLabel]:
    """All A_n class labels, in a fixed deterministic order."""
    labels: list[ClassLabel] = []
    for p in enumerate_partitions(n):
        if not p.is_even_type():
            continue
        if splits_in_an(p):
            labels.append(ClassLabel(p, "+"))
            labels.append(ClassLabel(p, "-"))
        else:
            labels.append(ClassLabel(p))
    return labels


def class_representative(label: ClassLabel) -> Permutation:
    """Canonical representative: consecutive fill, longest cycle first.

    The "-" representative is the "+" one conjugated by the transposition
    of the two largest points of its longest cycle.
    """
    n = label.n
    cycles: list[list[int]] = []
    next_pt = 1
    for length in label.cycle_type.parts:
        cycles.append(list(range(next_pt, next_pt + length)))
        next_pt += length
    g = Permutation.from_cycles(n, cycles)
    if label.sign == "-":
        top = label.cycle_type.parts[0]
        if top < 2:
            raise ValueError("split type cannot consist of fixed points only")
        t = Permutation.from_cycles(n, [(top - 1, top)])
        g = t * g * t
    return g


def an_class_of(g: Permutation) -> ClassLabel:
    """Label of the A_n class of an even permutation.

    For a split cycle type the sign is the parity of the canonical
    conjugator aligning g's cycles (longest first, each written from its
    minimum) with the consecutive-fill representative: even means "+".
    The conjugator's parity does not depend on the rotation chosen for
    each cycle because all cycle lengths are odd.
    """
    if not g.is_even():
        raise OddPermutation(f"{g} is not in A_{g.n}")
    t = cycle_type(g)
    if not splits_in_an(t):
        return ClassLabel(t)
    word: list[int] = []
    for cyc in g.cycles(include_fixed=True):
        word.extend(cyc)
    # s maps g's aligned word to 1..n, so s g s^-1 is the "+" representative.
    images = [0] * g.n
    for target, source in enumerate(word, start=1):
        images[source - 1] = target
    s = Permutation(images)
    return ClassLabel(t, "+" if s.is_even() else "-")


def kappa(g: Permutation) -> int:
    """Number of cycles of length congruent to 3 mod 4."""
    return kappa_of_type(cycle_type(g))


def kappa_of_type(t: Partition) -> int:
    return sum(1 for p in t.parts if p % 4 == 3)


def is_real_in_an(g: Permutation) -> bool:
    """Whether g and g^-1 are conjugate in A_n.

    Split-type elements are real exactly when kappa is even.  Non-split
    even elements are always real because their A_n class is a full S_n
    class.
    """
    if not g.is_even():
        raise OddPermutation(f"{g} is not in A_{g.n}")
    t = cycle_type(g)
    if not splits_in_an(t):
        return True
    return kappa_of_type(t) % 2 == 0


def an_class_size(label: ClassLabel) -> int:
    """Size of the labeled A_n class (split classes are half S_n classes)."""
    n = label.n
    size = math.factorial(n) // centralizer_order(label.cycle_type)
    if label.is_split():
        size //= 2
    return size


def inverse_label(label: ClassLabel) -> ClassLabel:
    """Label of the class of inverses; the sign flips iff kappa is odd."""
    if not label.is_split():
        return label
    if kappa_of_type(label.cycle_type) % 2 == 0:
        return label
    return ClassLabel(label.cycle_type, "-" if label.sign == "+" else "+")


def random_permutation(n: int, rng) -> Permutation:
    """Uniform random permutation from an externally seeded Random."""
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


def random_even_permutation(n: int, rng) -> Permutation:
    g = random_permutation(n, rng)
    if g.parity() == 1:
        imgs = list(g.images)
        imgs[0], imgs[1] = imgs[1], imgs[0]
        g = Permutation(imgs)
    return g


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def all_even_permutations(n: int) -> Iterator[Permutation]:
    for g in all_permutations(n):
        if g.is_even():
            yield g

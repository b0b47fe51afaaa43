"""Constructive witness factorizations.

Given cycle types lam (with k parts) and mu (with enough fixed points),
this module produces permutations gamma, delta, delta_bar of type lam
such that gamma*delta and gamma*delta_bar both have type mu, with delta
and delta_bar conjugate by an odd permutation.  When lam has distinct odd
parts the two products therefore witness membership of the mu class in
both C*C and C*D for the two A_n classes C, D of type lam.

The pipeline: break mu into typed subpartitions, shrink each part of size
6 or more to 4 or 5 (same parity), pack the shrunken pieces into the
cycles of gamma as right-justified subintervals, realize each piece by a
"valid sequence" whose product against the host cycle has the shrunken
shape, then grow the shrunken orbits back two points at a time by
conjugating delta with transpositions that consume pairs of fixed points
from the free space.

Separately, :func:`cover_with_ncycles` factors a given even permutation
into two n-cycles from requested classes, by stripping fixed points down
to a small base case, solving it by seeded random search, and lifting the
factors back with one long cycle through the stripped points.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Sequence

from ancover.combinatorics import (
    Infeasible,
    Partition,
    SUBINTERVAL_LENGTH,
    SubpartitionKind,
    TypedSubpartition,
    decompose_subpartitions,
    phi,
)
from ancover.permutations import (
    ClassLabel,
    Permutation,
    an_class_of,
    class_representative,
    cycle_type,
    random_even_permutation,
    splits_in_an,
)


class SearchFailed(RuntimeError):
    """An exhaustive sequence search found no admissible pair."""


class HypothesisViolated(ValueError):
    """A rebuild hypothesis fails; .clause names the failing one."""

    def __init__(self, clause: str, message: str):
        super().__init__(f"hypothesis ({clause}): {message}")
        self.clause = clause


class OnlyTrivialKinds(Infeasible):
    """mu decomposes into fixed points and one 2,2 piece only, and the
    fallback route is unavailable."""


class NotCoverable(ValueError):
    """The requested class pair cannot produce this element."""


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, seed: int, trials: int):
        super().__init__(f"no factorization in {trials} trials (seed {seed})")
        self.seed = seed
        self.trials = trials


# ---------------------------------------------------------------------------
# Intervals and packings


@dataclass(frozen=True)
class Interval:
    a: int
    b: int

    def __post_init__(self):
        if self.a > self.b:
            raise ValueError(f"empty interval [{self.a},{self.b}]")

    @property
    def length(self) -> int:
        return 1 + self.b - self.a

    def points(self) -> range:
        return range(self.a, self.b + 1)


@dataclass(frozen=True)
class PackingPlan:
    """Right-justified subintervals of a host interval [1, host_length].

    ``subintervals[0]`` touches the right end; consecutive subintervals
    abut; whatever remains is an initial free interval.  ``demands[i]``
    records which demand index subinterval i serves.
    """

    host_index: int
    host_length: int
    subintervals: tuple[Interval, ...]
    demands: tuple[int, ...]

    @property
    def free(self) -> Interval | None:
        used = sum(iv.length for iv in self.subintervals)
        return Interval(1, self.host_length - used) if used < self.host_length else None

    def __post_init__(self):
        expect_b = self.host_length
        for iv in self.subintervals:
            if iv.b != expect_b:
                raise ValueError("subintervals must be right-justified and abutting")
            expect_b = iv.a - 1
        if len(self.demands) != len(self.subintervals):
            raise ValueError("one demand index per subinterval")


def greedy_pack(lengths: Sequence[int], demands: Sequence[int]) -> list[PackingPlan]:
    """Pack demands into host intervals, largest demands first.

    Each demand goes to the first host with room, flush against the
    current right end of its free space.  Raises Infeasible when some
    demand fits nowhere.
    """
    remaining = list(lengths)
    slots: list[list[tuple[Interval, int]]] = [[] for _ in lengths]
    order = sorted(range(len(demands)), key=lambda i: (-demands[i], i))
    for di in order:
        need = demands[di]
        for j in range(len(remaining)):
            if remaining[j] >= need:
                iv = Interval(remaining[j] - need + 1, remaining[j])
                slots[j].append((iv, di))
                remaining[j] -= need
                break
        else:
            raise Infeasible(
                f"demand of length {need} does not fit in any remaining free space"
            )
    return [
        PackingPlan(
            j,
            lengths[j],
            tuple(iv for iv, _ in slots[j]),
            tuple(di for _, di in slots[j]),
        )
        for j in range(len(lengths))
    ]


# ---------------------------------------------------------------------------
# Valid sequences


@dataclass(frozen=True)
class ValidSequence:
    """The points of an interval, each once, starting at the right end."""

    terms: tuple[int, ...]

    def __post_init__(self):
        lo, hi = min(self.terms), max(self.terms)
        if sorted(self.terms) != list(range(lo, hi + 1)):
            raise ValueError(f"terms are not an interval: {self.terms}")
        if self.terms[0] != hi:
            raise ValueError(f"first term must be the right endpoint: {self.terms}")

    def shifted(self, offset: int) -> "ValidSequence":
        return ValidSequence(tuple(t + offset for t in self.terms))

    def cycle(self, n: int) -> Permutation:
        return Permutation.from_cycles(n, [self.terms])


# Sequences for the even-length pieces; products against (1..len) have the
# shrunken shape, and each pair is intertwined by an odd resequencing map.
_EVEN_SEQUENCES: dict[tuple[int, tuple[int, ...]], tuple[tuple[int, ...], tuple[int, ...] | None]] = {
    (4, (2, 2)): ((4, 1, 2, 3), None),
    (8, (2, 2, 2, 2)): ((8, 1, 2, 7, 4, 5, 6, 3), (8, 1, 3, 5, 6, 2, 7, 4)),
    (6, (4, 2)): ((6, 1, 2, 4, 5, 3), (6, 1, 3, 4, 5, 2)),
    (8, (4, 4)): ((8, 1, 2, 4, 7, 5, 3, 6), (8, 1, 2, 5, 7, 3, 6, 4)),
}

_SEARCH_SHAPES = {
    (5, (5,)),
    (7, (3, 1, 1, 1, 1)),
    (9, (3, 3, 3)),
}

_SEQUENCE_CACHE: dict[tuple[int, tuple[int, ...]], tuple[tuple[int, ...], tuple[int, ...] | None]] = {}


def _product_type(length: int, word: tuple[int, ...]) -> tuple[int, ...]:
    """Cycle type of (1..length) * (word), as a sorted tuple."""
    nxt = [0] * (length + 1)
    for i, x in enumerate(word):
        y = word[(i + 1) % length]
        nxt[x] = y
    seen = [False] * (length + 1)
    out = []
    for start in range(1, length + 1):
        if seen[start]:
            continue
        size = 0
        x = start
        while not seen[x]:
            seen[x] = True
            size += 1
            y = nxt[x]
            x = y + 1 if y < length else 1
        out.append(size)
    out.sort(reverse=True)
    return tuple(out)


def _word_map_parity(s: tuple[int, ...], t: tuple[int, ...]) -> int:
    """Parity of the permutation sending s to t position by position."""
    images = [0] * len(s)
    for a, b in zip(s, t):
        images[a - 1] = b
    return Permutation(images).parity()


def _search_opposite(length: int, shape: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    first: tuple[int, ...] | None = None
    for tail in itertools.permutations(range(1, length)):
        word = (length,) + tail
        if _product_type(length, word) != shape:
            continue
        if first is None:
            first = word
            continue
        if _word_map_parity(first, word) == 1:
            return first, word
    raise SearchFailed(
        f"no opposite valid sequences of length {length} with product shape {shape}"
    )


def find_opposite_valid_sequences(
    length: int, shape: Partition
) -> tuple[ValidSequence, ValidSequence | None]:
    """Valid sequences on [1, length] whose product with (1..length) has
    the given shape; the two are intertwined by an odd resequencing map.

    Even lengths use the fixed tabulated pairs; odd lengths (5, 7, 9) are
    found once by exhaustive search and cached.  The 2,2 piece has no
    opposite partner.
    """
    key = (length, tuple(shape.parts))
    if key in _SEQUENCE_CACHE:
        s, t = _SEQUENCE_CACHE[key]
        return ValidSequence(s), ValidSequence(t) if t else None
    if key in _EVEN_SEQUENCES:
        s, t = _EVEN_SEQUENCES[key]
    elif key in _SEARCH_SHAPES:
        s, t = _search_opposite(length, key[1])
    else:
        raise ValueError(f"unsupported (length, shape) pair {key}")
    _SEQUENCE_CACHE[key] = (s, t)
    return ValidSequence(s), ValidSequence(t) if t else None


def load_sequence_cache(path: str) -> None:
    """Merge a version-1 sequence cache file into the in-memory cache."""
    with open(path) as fh:
        data = json.load(fh)
    if data.get("schema") != 1:
        raise ValueError("unsupported sequence cache version")
    for key, val in data["sequences"].items():
        length_s, _, shape_s = key.partition("|")
        shape = tuple(int(x) for x in shape_s.split(",")) if shape_s else ()
        s, t = val
        _SEQUENCE_CACHE[(int(length_s), shape)] = (
            tuple(s),
            tuple(t) if t else None,
        )


def save_sequence_cache(path: str) -> None:
    data = {
        "schema": 1,
        "sequences": {
            f"{length}|{','.join(str(x) for x in shape)}": [
                list(s),
                list(t) if t else None,
            ]
            for (length, shape), (s, t) in sorted(_SEQUENCE_CACHE.items())
        },
    }
    with open(path, "w") as fh:
        json.dump(data, fh, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# Packing cycles and rebuilding


def packing_cycle(plan: PackingPlan, sequences: Sequence[ValidSequence]) -> Permutation:
    """The host-length cycle juxtaposing the sequences, then the free
    space in decreasing order."""
    if len(sequences) != len(plan.subintervals):
        raise ValueError("one sequence per subinterval")
    word: list[int] = []
    for iv, seq in zip(plan.subintervals, sequences):
        if min(seq.terms) != iv.a or max(seq.terms) != iv.b:
            raise ValueError(f"sequence {seq.terms} is not on [{iv.a},{iv.b}]")
        word.extend(seq.terms)
    free = plan.free
    if free is not None:
        word.extend(range(free.b, free.a - 1, -1))
    return Permutation.from_cycles(plan.host_length, [word])


def orbit_of(p: Permutation, x: int) -> frozenset[int]:
    out = {x}
    y = p(x)
    while y != x:
        out.add(y)
        y = p(y)
    return frozenset(out)


def rebuild(gamma: Permutation, delta: Permutation, x: int, y: int) -> Permutation:
    """Conjugate delta by (x, y) so the product's orbit of x absorbs the
    fixed pair {y, gamma(y)}.

    Hypotheses, all checked: (a) delta moves x and y; (b) gamma(x) lies in
    the gamma*delta orbit of x; (c) y and gamma(y) are fixed by
    gamma*delta.  The new product agrees with the old outside that orbit
    and {y, gamma(y)}, which fuse into one orbit two points longer.
    """
    if x == y:
        raise HypothesisViolated("a", "x and y must be distinct")
    if delta(x) == x:
        raise HypothesisViolated("a", f"delta fixes x = {x}")
    if delta(y) == y:
        raise HypothesisViolated("a", f"delta fixes y = {y}")
    prod = gamma * delta
    if gamma(x) not in orbit_of(prod, x):
        raise HypothesisViolated("b", f"gamma({x}) leaves the product orbit of {x}")
    if prod(y) != y:
        raise HypothesisViolated("c", f"product moves y = {y}")
    if prod(gamma(y)) != gamma(y):
        raise HypothesisViolated("c", f"product moves gamma(y) = {gamma(y)}")
    eps = Permutation.from_cycles(delta.n, [(x, y)])
    return eps * delta * eps


# ---------------------------------------------------------------------------
# The full construction


@dataclass
class WitnessPair:
    """Verified factorization witnesses.

    gamma, delta and delta_bar all have cycle type lam; gamma*delta and
    gamma*delta_bar both have cycle type mu; delta and delta_bar are
    conjugate by an odd permutation, so when lam splits they represent
    the two A_n classes of their type.
    """

    lam: Partition
    mu: Partition
    gamma: Permutation
    delta: Permutation
    delta_bar: Permutation
    product_label: ClassLabel
    product_label_bar: ClassLabel
    embeddings: tuple[tuple[int, int], ...]
    rebuild_log: tuple[tuple[int, int], ...]
    rebuild_log_bar: tuple[tuple[int, int], ...]
    seed: int | None = None

    def verify(self) -> None:
        assert cycle_type(self.gamma) == self.lam, "gamma type"
        assert cycle_type(self.delta) == self.lam, "delta type"
        assert cycle_type(self.delta_bar) == self.lam, "delta_bar type"
        assert cycle_type(self.gamma * self.delta) == self.mu, "product type"
        assert cycle_type(self.gamma * self.delta_bar) == self.mu, "bar product type"
        expected = sum(max(0, p // 2 - 2) for p in self.mu.parts)
        assert len(self.rebuild_log) == expected, "rebuild count"
        assert len(self.rebuild_log_bar) == expected, "bar rebuild count"
        if splits_in_an(self.lam):
            assert an_class_of(self.delta) != an_class_of(self.delta_bar), (
                "delta and delta_bar must land in the two split classes"
            )

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "n": self.lam.n,
            "lambda": self.lam.text(),
            "mu": self.mu.text(),
            "gamma": self.gamma.format_cycles(),
            "delta": self.delta.format_cycles(),
            "delta_bar": self.delta_bar.format_cycles(),
            "gamma_images": list(self.gamma.images),
            "delta_images": list(self.delta.images),
            "delta_bar_images": list(self.delta_bar.images),
            "product_class": self.product_label.text(),
            "product_class_bar": self.product_label_bar.text(),
            "embeddings": [list(e) for e in self.embeddings],
            "rebuild_log": [list(s) for s in self.rebuild_log],
            "rebuild_log_bar": [list(s) for s in self.rebuild_log_bar],
            "seed": self.seed,
        }


def _demand_length(piece: TypedSubpartition) -> int:
    return SUBINTERVAL_LENGTH[piece.kind]


def _grow_targets(
    pieces: Sequence[TypedSubpartition],
    plans: Sequence[PackingPlan],
    offsets: Sequence[int],
    product: Permutation,
) -> list[tuple[frozenset[int], int]]:
    """Map each shrunken orbit to the part size it must grow back to."""
    placed: dict[int, tuple[int, Interval]] = {}
    for plan in plans:
        for iv, di in zip(plan.subintervals, plan.demands):
            placed[di] = (plan.host_index, iv)
    targets: list[tuple[frozenset[int], int]] = []
    for di, piece in enumerate(pieces):
        big = [p for p in piece.parts.parts if p >= 6]
        if not big:
            continue
        host, iv = placed[di]
        off = offsets[host]
        points = set(range(off + iv.a, off + iv.b + 1))
        orbits: list[frozenset[int]] = []
        while points:
            orb = orbit_of(product, min(points))
            assert orb <= set(range(off + iv.a, off + iv.b + 1))
            points -= orb
            orbits.append(orb)
        grow = sorted((o for o in orbits if len(o) >= 4), key=min)
        big.sort(reverse=True)
        assert len(grow) >= len(big), "missing seed orbits"
        for orb, part in zip(grow, big):
            targets.append((orb, part))
    return targets


def _run_rebuilds(
    gamma: Permutation,
    delta: Permutation,
    targets: list[tuple[frozenset[int], int]],
    pool: Sequence[int],
) -> tuple[Permutation, list[tuple[int, int]]]:
    cur = delta
    log: list[tuple[int, int]] = []
    work = [(set(orb), part) for orb, part in targets]
    pool_iter = iter(pool)
    while True:
        deficits = [(part - len(orb)) // 2 for orb, part in work]
        if not any(d > 0 for d in deficits):
            break
        idx = max(range(len(work)), key=lambda i: (deficits[i], -min(work[i][0])))
        orb, part = work[idx]
        x = min(p for p in orb if cur(p) != p and gamma(p) in orb)
        try:
            y = next(pool_iter)
        except StopIteration:
            raise Infeasible("free-space pool exhausted during rebuilding")
        cur = rebuild(gamma, cur, x, y)
        orb.update({y, gamma(y)})
        log.append((x, y))
    return cur, log


def construct_witnesses(
    lam: Partition,
    mu: Partition,
    *,
    strict: bool = True,
    seed: int = 0,
) -> WitnessPair:
    """Build verified witnesses for the coverage of type mu by type lam.

    In strict mode mu must have at least 8k+9 fixed points (k the number
    of parts of lam); with ``strict=False`` the construction is attempted
    anyway and failures surface as Infeasible.
    """
    n = lam.n
    if mu.n != n:
        raise ValueError(f"|lam| = {n} but |mu| = {mu.n}")
    if not mu.is_even_type():
        raise ValueError(f"{mu.text()} is not an even cycle type")
    if not lam.parts:
        raise ValueError("lam must be nonempty")
    k = len(lam.parts)
    fix = mu.ones()
    if mu.parts == tuple([1] * n):
        raise ValueError("mu = 1^n is excluded")
    if strict and fix < 8 * k + 9:
        raise Infeasible(
            f"mu has {fix} fixed points; the construction wants at least {8 * k + 9}"
        )

    pieces = decompose_subpartitions(mu)
    offsets = tuple(sum(lam.parts[:j]) for j in range(k))
    embeddings = tuple((offsets[j] + 1, offsets[j] + lam.parts[j]) for j in range(k))
    gamma = Permutation.from_cycles(
        n, [tuple(range(offsets[j] + 1, offsets[j] + lam.parts[j] + 1)) for j in range(k)]
    )

    nontrivial = [p for p in pieces if p.kind != SubpartitionKind.SINGLE_FIXED_POINT]
    pivotable = [p for p in nontrivial if p.kind != SubpartitionKind.TWO_TWOS]
    if not pivotable:
        return _construct_two_twos_case(lam, mu, gamma, offsets, embeddings, seed)

    demands = [_demand_length(p) for p in nontrivial]
    plans = greedy_pack(lam.parts, demands)

    seqs: list[tuple[ValidSequence, ValidSequence | None]] = [
        find_opposite_valid_sequences(_demand_length(p), phi(p)) for p in nontrivial
    ]
    pivot = next(i for i, p in enumerate(nontrivial) if p.kind != SubpartitionKind.TWO_TWOS)

    def build_delta(use_bar_at: int | None) -> Permutation:
        words: list[tuple[int, ...]] = []
        for plan in plans:
            local: list[ValidSequence] = []
            for iv, di in zip(plan.subintervals, plan.demands):
                s, sbar = seqs[di]
                chosen = sbar if (di == use_bar_at and sbar is not None) else s
                local.append(chosen.shifted(iv.a - 1))
            cyc = packing_cycle(plan, local)
            off = offsets[plan.host_index]
            words.extend(
                tuple(p + off for p in w) for w in cyc.cycles(include_fixed=False)
            )
        return Permutation.from_cycles(n, words)

    delta0 = build_delta(None)
    delta_bar0 = build_delta(pivot)

    # Growth pool: even positions strictly below the top of each free run,
    # so that {y, gamma(y)} pairs are disjoint and fixed by the products.
    pool: list[int] = []
    for plan in plans:
        free = plan.free
        if free is None:
            continue
        off = offsets[plan.host_index]
        pool.extend(off + y for y in range(2, free.b) if y % 2 == 0)

    needed = sum(max(0, p // 2 - 2) for p in mu.parts)
    if len(pool) < needed:
        raise Infeasible(
            f"free space supplies {len(pool)} growth pairs but {needed} are needed"
        )

    targets = _grow_targets(nontrivial, plans, offsets, gamma * delta0)
    delta, log = _run_rebuilds(gamma, delta0, targets, pool)
    targets_bar = _grow_targets(nontrivial, plans, offsets, gamma * delta_bar0)
    delta_bar, log_bar = _run_rebuilds(gamma, delta_bar0, targets_bar, pool)

    pair = WitnessPair(
        lam,
        mu,
        gamma,
        delta,
        delta_bar,
        an_class_of(gamma * delta),
        an_class_of(gamma * delta_bar),
        embeddings,
        tuple(log),
        tuple(log_bar),
        seed,
    )
    pair.verify()
    return pair


def _construct_two_twos_case(
    lam: Partition,
    mu: Partition,
    gamma: Permutation,
    offsets: tuple[int, ...],
    embeddings: tuple[tuple[int, int], ...],
    seed: int,
) -> WitnessPair:
    """mu is 1^(n-4) 2,2: realize the 2,2 inside the largest cycle of
    gamma by seeded search for a long-cycle cofactor, in both classes."""
    n = lam.n
    m = lam.parts[0]
    if n <= 9 or m < 7:
        raise OnlyTrivialKinds(
            f"type {mu.text()} needs the long-cycle fallback, unavailable at n = {n}"
        )
    gamma1 = Permutation.from_cycles(m, [tuple(range(1, m + 1))])
    rng = random.Random(seed)
    found: dict[str | None, Permutation] = {}
    want_both = splits_in_an(lam)
    budget = 200_000
    other_words = [
        tuple(range(offsets[j] + 1, offsets[j] + lam.parts[j] + 1))
        for j in range(1, len(lam.parts))
    ]
    for _ in range(budget):
        pts = rng.sample(range(1, m + 1), 4)
        h = Permutation.from_cycles(m, [(pts[0], pts[1]), (pts[2], pts[3])])
        d1 = gamma1.inverse() * h
        if tuple(sorted((len(c) for c in d1.cycles(include_fixed=True)), reverse=True)) != (m,):
            continue
        word1 = d1.cycles()[0]
        # other hosts contribute inverse cycles so the product fixes them
        words = [word1] + [tuple(reversed(w)) for w in other_words]
        delta = Permutation.from_cycles(n, words)
        key = an_class_of(delta).sign if want_both else None
        if key not in found:
            found[key] = delta
        if len(found) == (2 if want_both else 1):
            break
    else:
        raise Infeasible(
            f"no long-cycle cofactor for {mu.text()} within {budget} samples"
        )
    if want_both:
        delta = found["+"]
        delta_bar = found["-"]
    else:
        delta = delta_bar = next(iter(found.values()))
    pair = WitnessPair(
        lam,
        mu,
        gamma,
        delta,
        delta_bar,
        an_class_of(gamma * delta),
        an_class_of(gamma * delta_bar),
        embeddings,
        (),
        (),
        seed,
    )
    pair.verify()
    return pair


# ---------------------------------------------------------------------------
# n-cycle coverage of a concrete element


def _rotate_to_end(word: tuple[int, ...], point: int) -> tuple[int, ...]:
    i = word.index(point)
    return word[i + 1 :] + word[: i + 1]


def _rotate_to_start(word: tuple[int, ...], point: int) -> tuple[int, ...]:
    i = word.index(point)
    return word[i:] + word[:i]


def _ncycle_lift_c(cword: tuple[int, ...], m: int, n: int) -> Permutation:
    """(c_1..c_{m-1}, m) becomes (c_1..c_{m-1}, m, m+1, ..., n)."""
    return Permutation.from_cycles(n, [_rotate_to_end(cword, m) + tuple(range(m + 1, n + 1))])


def _ncycle_lift_d(dword: tuple[int, ...], m: int, n: int) -> Permutation:
    """(m, d_1..d_{m-1}) becomes (n, n-1, ..., m, d_1, ..., d_{m-1})."""
    return Permutation.from_cycles(
        n, [tuple(range(n, m, -1)) + _rotate_to_start(dword, m)]
    )


def _lift_sign_maps(m: int, n: int) -> tuple[dict[str, str], dict[str, str]]:
    """How the split sign of an m-cycle transfers through each lift."""
    map_c: dict[str, str] = {}
    map_d: dict[str, str] = {}
    for s in ("+", "-"):
        rep = class_representative(ClassLabel(Partition((m,)), s))
        word = rep.cycles()[0]
        map_c[s] = an_class_of(_ncycle_lift_c(word, m, n)).sign
        map_d[s] = an_class_of(_ncycle_lift_d(word, m, n)).sign
    if set(map_c.values()) != {"+", "-"} or set(map_d.values()) != {"+", "-"}:
        raise RuntimeError("cycle lifting failed to separate the split classes")
    return map_c, map_d


def cover_with_ncycles(
    g: Permutation,
    C: ClassLabel,
    D: ClassLabel,
    *,
    seed: int = 0,
    budget: int = 10**6,
) -> tuple[Permutation, Permutation]:
    """n-cycles c in C and d in D with c*d = g, for odd n >= 5.

    Strips an even number of fixed points (or reduces to degree 7 or 5
    for nearly trivial g), solves the residue by seeded random search
    over C with the cofactor membership-tested, and lifts both factors
    back through the stripped points with one long run each.
    """
    from ancover.characters import DEFAULT_TABLE_LIMIT
    from ancover.classalgebra import frobenius_count

    n = g.n
    if n < 5 or n % 2 == 0:
        raise ValueError("defined for odd n >= 5")
    if not g.is_even():
        raise ValueError("g must be even")
    if g.fix_count() == n:
        raise ValueError("g must be nontrivial")
    ncycle = Partition((n,))
    if C.cycle_type != ncycle or D.cycle_type != ncycle or C.n != n or D.n != n:
        raise ValueError("C and D must be n-cycle classes of matching degree")

    if n <= DEFAULT_TABLE_LIMIT:
        if frobenius_count(C, D, an_class_of(g)) == 0:
            raise NotCoverable(f"{an_class_of(g)} is not in {C} * {D}")

    k = g.fix_count()
    if k <= n - 6:
        r = 2 * (k // 2)
    elif k in (n - 4, n - 5):
        r = n - 7
    else:  # k == n - 3, a single 3-cycle
        r = n - 5
    r = max(r, 0)  # the residual reductions only strip points when n > 7
    m = n - r

    if r == 0:
        sigma = Permutation.identity(n)
        h_small = g
    else:
        moved = sorted(g.support())
        fixed = sorted(set(range(1, n + 1)) - set(moved))
        order = moved + fixed
        images = [0] * n
        for rank, point in enumerate(order, start=1):
            images[point - 1] = rank
        sigma = Permutation(images)
        if not sigma.is_even():
            tau = Permutation.from_cycles(n, [(m + 1, m + 2)])
            sigma = tau * sigma
        h = (sigma * g) * sigma.inverse()
        h_small = Permutation(h.images[:m])

    if r > 0:
        map_c, map_d = _lift_sign_maps(m, n)
    else:
        map_c = map_d = {"+": "+", "-": "-"}
    base_c = ClassLabel(Partition((m,)), next(s for s in "+-" if map_c[s] == C.sign))
    base_d = ClassLabel(Partition((m,)), next(s for s in "+-" if map_d[s] == D.sign))

    if m <= DEFAULT_TABLE_LIMIT:
        if frobenius_count(base_c, base_d, an_class_of(h_small)) == 0:
            raise NotCoverable(
                f"base case {an_class_of(h_small)} is not in {base_c} * {base_d}"
            )

    rng = random.Random(seed)
    rep = class_representative(base_c)
    c_small = d_small = None
    for trial in range(budget):
        w = random_even_permutation(m, rng)
        cand = (w * rep) * w.inverse()
        d_cand = cand.inverse() * h_small
        if len(d_cand.cycles()) == 1 and len(d_cand.cycles()[0]) == m:
            if an_class_of(d_cand) == base_d:
                c_small, d_small = cand, d_cand
                break
    if c_small is None:
        raise SearchBudgetExceeded(seed, budget)

    if r == 0:
        c, d = c_small, d_small
    else:
        c = _ncycle_lift_c(c_small.cycles()[0], m, n)
        d = _ncycle_lift_d(d_small.cycles()[0], m, n)
        inv = sigma.inverse()
        c = (inv * c) * sigma
        d = (inv * d) * sigma

    assert c * d == g, "lifted factorization must reproduce g"
    assert an_class_of(c) == C and an_class_of(d) == D, "lifted labels must match"
    return c, d

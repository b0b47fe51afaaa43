from collections import Counter

import pytest
from hypothesis import given, strategies as st

from ancover.combinatorics import (
    Infeasible,
    Partition,
    SubpartitionKind,
    TypedSubpartition,
    decompose_subpartitions,
    enumerate_distinct_partitions,
    enumerate_partitions,
    frobenius_symbol,
    is_split_type,
    partition_from_diagonal_hooks,
    phi,
    self_conjugate_partitions,
    transpose,
)


@st.composite
def partitions(draw, max_n=18):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))
    parts = sorted(Counter(bins).values(), reverse=True)
    return Partition(parts)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))
    assert Partition(()).n == 0
    assert Partition((4, 2)).n == 6


def test_partition_text_round_trip():
    assert Partition.from_text("5,3,1").parts == (5, 3, 1)
    assert Partition.from_text("-").parts == ()
    assert Partition.from_text("9,4,2,2,1x26").ones() == 26
    assert Partition((5, 3, 1)).text() == "5,3,1"
    assert Partition(()).text() == "-"


def test_transpose_examples():
    assert transpose(Partition((3, 1, 1))) == Partition((3, 1, 1))
    assert transpose(Partition((7,))) == Partition([1] * 7)
    assert transpose(Partition((4, 2))) == Partition((2, 2, 1, 1))


def test_transpose_involution_exhaustive():
    for n in range(0, 31):
        for p in enumerate_partitions(n):
            assert transpose(transpose(p)) == p


@given(partitions())
def test_transpose_preserves_size(p):
    assert transpose(p).n == p.n


def test_frobenius_symbol_examples():
    fs = frobenius_symbol(Partition((1,)))
    assert fs.arms == (0,) and fs.diagonal_hooks() == (1,)
    fs = frobenius_symbol(Partition((3, 1, 1)))
    assert fs.arms == (2,) and fs.diagonal_hooks() == (5,)
    fs = frobenius_symbol(Partition((3, 2, 1)))
    assert fs.arms == (2, 0) and fs.diagonal_hooks() == (5, 1)


def test_frobenius_symbol_self_conjugate():
    for n in range(1, 20):
        for p in self_conjugate_partitions(n):
            fs = frobenius_symbol(p)
            assert fs.arms == fs.legs
            hooks = fs.diagonal_hooks()
            assert all(h % 2 == 1 for h in hooks)
            assert sum(hooks) == n
            assert partition_from_diagonal_hooks(Partition(hooks)) == p


def test_is_split_type():
    assert is_split_type(Partition((5, 3, 1)))
    assert not is_split_type(Partition((3, 3, 1)))
    assert not is_split_type(Partition((4, 2, 1)))


def test_diagonal_hook_bijection():
    # Diagonal-hook multisets of self-conjugate partitions of n are exactly
    # the distinct-odd-part partitions of n.
    for n in range(1, 26):
        from_diagonals = {
            frobenius_symbol(p).diagonal_hooks() for p in self_conjugate_partitions(n)
        }
        distinct_odd = {
            p.parts for p in enumerate_distinct_partitions(n) if is_split_type(p)
        }
        assert from_diagonals == distinct_odd


def test_decompose_all_fixed_points():
    pieces = decompose_subpartitions(Partition([1] * 20))
    assert len(pieces) == 20
    assert all(p.kind == SubpartitionKind.SINGLE_FIXED_POINT for p in pieces)


def test_decompose_examples():
    pieces = decompose_subpartitions(Partition.from_text("7,1x8"))
    kinds = sorted(int(p.kind) for p in pieces)
    assert kinds == [1] * 8 + [4]

    pieces = decompose_subpartitions(Partition.from_text("4,2,2,2,1x6"))
    shapes = {(int(p.kind), p.parts.parts) for p in pieces}
    assert (7, (4, 2)) in shapes
    assert (5, (2, 2)) in shapes


def test_decompose_infeasible_without_ones():
    with pytest.raises(Infeasible):
        decompose_subpartitions(Partition((3, 3, 3, 3, 3)))  # one leftover 3, no 1s


def _even_partitions(n):
    return [p for p in enumerate_partitions(n) if p.is_even_type()]


def test_decompose_reconstitutes_and_respects_quotas():
    for n in range(1, 15):
        for mu in _even_partitions(n):
            try:
                pieces = decompose_subpartitions(mu)
            except Infeasible:
                continue
            merged = sorted(
                (x for p in pieces for x in p.parts.parts), reverse=True
            )
            assert tuple(merged) == mu.parts
            kinds = Counter(int(p.kind) for p in pieces)
            assert kinds[2] <= 2
            assert kinds[5] <= 1
            for p in pieces:
                if 1 in p.parts.parts:
                    assert p.kind in (
                        SubpartitionKind.SINGLE_FIXED_POINT,
                        SubpartitionKind.THREE_WITH_FOUR_ONES,
                    )


def test_typed_subpartition_template_enforced():
    with pytest.raises(ValueError):
        TypedSubpartition(SubpartitionKind.THREE_WITH_FOUR_ONES, Partition((3, 1)))
    with pytest.raises(ValueError):
        TypedSubpartition(SubpartitionKind.ODD_PART, Partition((4,)))


def test_phi_table():
    cases = [
        (SubpartitionKind.SINGLE_FIXED_POINT, (1,), ()),
        (SubpartitionKind.THREE_WITH_FOUR_ONES, (3, 1, 1, 1, 1), (3, 1, 1, 1, 1)),
        (SubpartitionKind.THREE_THREES, (3, 3, 3), (3, 3, 3)),
        (SubpartitionKind.ODD_PART, (7,), (5,)),
        (SubpartitionKind.ODD_PART, (5,), (5,)),
        (SubpartitionKind.TWO_TWOS, (2, 2), (2, 2)),
        (SubpartitionKind.FOUR_TWOS, (2, 2, 2, 2), (2, 2, 2, 2)),
        (SubpartitionKind.TWO_WITH_EVEN, (6, 2), (4, 2)),
        (SubpartitionKind.EVEN_PAIR, (6, 4), (4, 4)),
    ]
    for kind, parts, image in cases:
        assert phi(TypedSubpartition(kind, Partition(parts))) == Partition(image)


def test_phi_replacement_rule():
    # Recombining phi images plus 1-fillers turns each odd part m >= 7 into
    # 1^(m-5) 5 and each even part m >= 6 into 1^(m-4) 4.
    for parts in [(9,), (7,), (11,), (8, 2), (10, 4), (6, 6)]:
        for kind in SubpartitionKind:
            try:
                piece = TypedSubpartition(kind, Partition(parts))
            except ValueError:
                continue
            image = phi(piece)
            fillers = piece.size - image.n
            rebuilt = sorted(image.parts + (1,) * fillers, reverse=True)
            expected = []
            for m in parts:
                if m % 2 == 1 and m >= 7:
                    expected += [5] + [1] * (m - 5)
                elif m % 2 == 0 and m >= 6:
                    expected += [4] + [1] * (m - 4)
                else:
                    expected.append(m)
            assert rebuilt == sorted(expected, reverse=True)

import random
from fractions import Fraction

import pytest

from ancover.characters import (
    AlgebraicValue,
    CharacterTable,
    IrreducibleLabel,
    LimitExceeded,
    an_character_table,
    an_character_value,
    an_degree,
    degree,
    hook_size,
    irreducible_labels,
    mn_value,
    parse_irreducible_label,
)
from ancover.combinatorics import Partition, enumerate_partitions, transpose
from ancover.permutations import ClassLabel

from oracles import sn_character_table_oracle


# -- AlgebraicValue -----------------------------------------------------------


def test_algebraic_value_normalization():
    assert AlgebraicValue(1, 1, 8) == AlgebraicValue(1, 2, 2)
    assert AlgebraicValue(3, 0, 5).d == 1
    assert AlgebraicValue(1, 2, 0) == AlgebraicValue(1)
    assert AlgebraicValue(1, 2, 1) == AlgebraicValue(3)
    v = AlgebraicValue(Fraction(1, 2), Fraction(1, 2), -27)
    assert v.d == -3 and v.b == Fraction(3, 2)


def test_algebraic_value_arithmetic():
    phi = AlgebraicValue(Fraction(1, 2), Fraction(1, 2), 5)
    psi = AlgebraicValue(Fraction(1, 2), Fraction(-1, 2), 5)
    assert phi + psi == AlgebraicValue(1)
    assert phi * psi == AlgebraicValue(-1)  # golden ratio times conjugate
    assert phi * phi == phi + AlgebraicValue(1)  # x^2 = x + 1
    with pytest.raises(ValueError):
        phi * AlgebraicValue(0, 1, 3)
    with pytest.raises(ValueError):
        phi + AlgebraicValue(0, 1, 3)


def test_algebraic_value_conjugation():
    real = AlgebraicValue(1, 1, 5)
    assert real.conjugate() == real
    cplx = AlgebraicValue(1, 1, -7)
    assert cplx.conjugate() == AlgebraicValue(1, -1, -7)
    assert cplx.norm_squared() == AlgebraicValue(8)


# -- Murnaghan-Nakayama values ------------------------------------------------


def test_mn_matches_independent_oracle():
    # Permutation-module peeling never touches the rim-hook recursion.
    for n in range(1, 7):
        oracle = sn_character_table_oracle(n)
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(n):
                assert mn_value(lam, mu) == oracle[(lam.parts, mu.parts)]


def test_mn_frozen_values():
    assert mn_value(Partition((2, 2)), Partition((2, 1, 1))) == 0
    assert mn_value(Partition((5,)), Partition((3, 1, 1))) == 1
    assert mn_value(Partition((3, 1, 1)), Partition((5,))) == 1


def test_mn_on_ncycle_hooks_only():
    for n in (5, 6, 7, 9):
        mu = Partition((n,))
        for lam in enumerate_partitions(n):
            v = mn_value(lam, mu)
            if hook_size(lam) is not None:
                assert v in (1, -1)
            else:
                assert v == 0


def test_mn_size_mismatch():
    with pytest.raises(ValueError):
        mn_value(Partition((3,)), Partition((2,)))


def test_mn_transpose_sign_twist():
    rng = random.Random(5)
    for _ in range(150):
        n = rng.randint(2, 13)
        lams = list(enumerate_partitions(n))
        lam = rng.choice(lams)
        mu = rng.choice(lams)
        sign = -1 if (n - len(mu.parts)) % 2 else 1
        assert mn_value(transpose(lam), mu) == sign * mn_value(lam, mu)


def test_degree():
    assert degree(Partition((7,))) == 1
    assert degree(Partition((3, 1, 1))) == 6
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            assert degree(lam) == mn_value(lam, Partition([1] * n))


def test_hook_size():
    assert hook_size(Partition((6,))) == 1
    assert hook_size(Partition([1] * 6)) == 1
    assert hook_size(Partition((4, 1, 1, 1))) == 4
    assert hook_size(Partition((4, 2))) is None
    # size (n+1)/2 hook for odd n: both sides equal
    assert hook_size(Partition((7,) + (1,) * 6)) == 7


# -- A_n character values -----------------------------------------------------


def test_trivial_character_is_one():
    table = an_character_table(6)
    triv = IrreducibleLabel(Partition((6,)))
    for cls in table.classes:
        assert table.value(triv, cls) == AlgebraicValue(1)


def test_a5_split_values():
    chi = IrreducibleLabel(Partition((3, 1, 1)), "+")
    plus = ClassLabel(Partition((5,)), "+")
    minus = ClassLabel(Partition((5,)), "-")
    golden = AlgebraicValue(Fraction(1, 2), Fraction(1, 2), 5)
    assert an_character_value(chi, plus) == golden
    assert an_character_value(chi, minus) == golden.galois_conjugate()
    other = ClassLabel(Partition((3, 1, 1)))
    assert an_character_value(chi, other) == AlgebraicValue(
        Fraction(mn_value(Partition((3, 1, 1)), Partition((3, 1, 1))), 2)
    )


def test_complex_split_values_at_n7():
    # (4,1,1,1) is self-conjugate with hook 7; eps = -1 gives complex values.
    chi = IrreducibleLabel(Partition((4, 1, 1, 1)), "+")
    plus = ClassLabel(Partition((7,)), "+")
    v = an_character_value(chi, plus)
    assert v.d == -7 and v.a == Fraction(-1, 2)


def test_degrees_and_counts():
    t5 = an_character_table(5)
    assert sorted(t5.degrees()) == [1, 3, 3, 4, 5]
    t4 = an_character_table(4)
    assert sorted(t4.degrees()) == [1, 1, 1, 3]
    for n in range(2, 10):
        t = an_character_table(n)
        assert len(t.classes) == len(t.irreducibles)
        assert sum(d * d for d in t.degrees()) == t.group_order


def test_orthogonality_and_split_sums_small():
    for n in range(2, 9):
        t = an_character_table(n)
        t.verify_orthogonality()
        t.verify_split_pair_sums()


def test_split_degree_halves():
    for n in (4, 5, 8, 9):
        for chi in irreducible_labels(n):
            if chi.is_split():
                assert an_degree(chi) * 2 == degree(chi.partition)


def test_table_limit():
    with pytest.raises(LimitExceeded):
        an_character_table(17)


def test_export_import_round_trip(tmp_path):
    t = an_character_table(7)
    path = tmp_path / "a7.json"
    t.dump(str(path))
    loaded = CharacterTable.load(str(path))
    assert loaded.n == t.n
    assert loaded.classes == t.classes
    assert loaded.irreducibles == t.irreducibles
    assert loaded.class_sizes == t.class_sizes
    assert loaded.values == t.values
    # byte-exact round trip through a second dump
    path2 = tmp_path / "a7b.json"
    loaded.dump(str(path2))
    assert path.read_bytes() == path2.read_bytes()


def test_irreducible_label_parsing():
    assert parse_irreducible_label("3,1,1:+").sign == "+"
    assert parse_irreducible_label("4,1").sign is None
    with pytest.raises(ValueError):
        IrreducibleLabel(Partition((3, 1, 1)), None)  # self-conjugate needs sign
    with pytest.raises(ValueError):
        IrreducibleLabel(Partition((4, 1)), "+")


def test_all_labels_have_values():
    t = an_character_table(8)
    for chi in t.irreducibles:
        for cls in t.classes:
            v = t.value(chi, cls)
            assert v.b == 0 or cls.is_split()

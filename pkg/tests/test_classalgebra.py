import random

import pytest

from ancover.characters import an_character_table
from ancover.classalgebra import (
    class_size,
    covering_number,
    covers,
    frobenius_count,
    is_covered_by,
    labels_of_type,
    product_support,
)
from ancover.combinatorics import Partition
from ancover.oracle import brute_frobenius
from ancover.permutations import (
    an_class_labels,
    an_class_size,
    class_representative,
    inverse_label,
)


def _lbl(text):
    from ancover.permutations import parse_class_label

    return parse_class_label(text)


def test_class_size_examples():
    assert class_size(5, _lbl("1x5")) == 1
    assert class_size(5, _lbl("5:+")) == 12
    assert class_size(5, _lbl("3,1,1")) == 20


def test_identity_class_acts_as_unit():
    identity = _lbl("1x5")
    for D in an_class_labels(5):
        for g in an_class_labels(5):
            expected = 1 if D == g else 0
            assert frobenius_count(identity, D, g) == expected


def test_a5_exception_counts():
    assert frobenius_count(_lbl("5:+"), _lbl("5:+"), _lbl("2,2,1")) == 0
    assert frobenius_count(_lbl("5:-"), _lbl("5:-"), _lbl("2,2,1")) == 0
    assert frobenius_count(_lbl("5:+"), _lbl("5:-"), _lbl("2,2,1")) > 0


def test_counts_match_brute_force_n5_n6():
    for n in (5, 6):
        table = an_character_table(n)
        for C in table.classes:
            for D in table.classes:
                for E in table.classes:
                    assert frobenius_count(C, D, E, table=table) == brute_frobenius(
                        C, D, class_representative(E)
                    )


def test_counts_match_brute_force_sampled_n7():
    rng = random.Random(11)
    table = an_character_table(7)
    for _ in range(60):
        C, D, E = (rng.choice(table.classes) for _ in range(3))
        assert frobenius_count(C, D, E, table=table) == brute_frobenius(
            C, D, class_representative(E)
        )


def test_counting_consistency():
    # Sum over classes of count * |class| recovers |C| * |D|.
    for n in range(5, 11):
        table = an_character_table(n)
        for C in table.classes:
            for D in table.classes:
                total = sum(
                    frobenius_count(C, D, E, table=table) * an_class_size(E)
                    for E in table.classes
                )
                assert total == an_class_size(C) * an_class_size(D)


def test_triple_symmetry_spot_checks():
    rng = random.Random(2)
    for n in (6, 7, 8, 9):
        table = an_character_table(n)
        for _ in range(30):
            C, D, E = (rng.choice(table.classes) for _ in range(3))
            t1 = frobenius_count(C, D, inverse_label(E), table=table) * an_class_size(E)
            t2 = frobenius_count(D, E, inverse_label(C), table=table) * an_class_size(C)
            t3 = frobenius_count(E, C, inverse_label(D), table=table) * an_class_size(D)
            assert t1 == t2 == t3


def test_covers_examples():
    n7 = covers(_lbl("7:+"), _lbl("7:-"))
    assert n7.covered
    rep = covers(_lbl("5:+"), _lbl("5:+"))
    assert not rep.covered
    assert [c.text() for c in rep.uncovered] == ["2,2,1"]
    assert covers(_lbl("5:+"), _lbl("5:-")).covered


def test_coverage_report_serialization():
    rep = covers(_lbl("5:+"), _lbl("5:+"))
    data = rep.to_json_dict()
    assert data["covered"] is False
    assert data["uncovered"] == ["2,2,1"]
    assert set(data) == {"schema", "n", "C", "D", "uncovered", "covered"}
    assert any("missing" in line for line in rep.text_lines())


def test_is_covered_by():
    assert is_covered_by(Partition((7,)), _lbl("5,1,1"))
    assert not is_covered_by(Partition((5,)), _lbl("2,2,1"))
    assert is_covered_by(Partition((5,)), _lbl("5:+"))
    with pytest.raises(ValueError):
        is_covered_by(Partition((2, 1)), _lbl("3,1,1"))  # odd type


def test_labels_of_type():
    assert len(labels_of_type(Partition((5,)))) == 2
    assert len(labels_of_type(Partition((3, 1, 1)))) == 1


def test_covering_numbers_small():
    assert covering_number(_lbl("5:+")) == 3
    assert covering_number(_lbl("5:-")) == 3
    assert covering_number(_lbl("7:+")) == 3
    assert covering_number(_lbl("9:+")) == 2
    # a non-split class for contrast: 3-cycles in A_5 need 2 squarings
    assert covering_number(_lbl("3,1,1")) == 2


def test_covering_number_rejects_identity():
    with pytest.raises(ValueError):
        covering_number(_lbl("1x5"))


def test_product_support_unions_to_consistency():
    table = an_character_table(6)
    C = _lbl("5,1:+")
    supp = product_support(C, C, table=table)
    assert _lbl("1x6") in supp  # kappa even: the class is real
    everything = set(table.classes)
    assert supp <= everything

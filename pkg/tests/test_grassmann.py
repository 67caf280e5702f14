import pytest

from permpat.grassmann import (
    associated_grassmannian,
    corner_report,
    family_member,
    gamma_word,
    grassmannian_from_partition,
    grassmannian_perms,
    is_balanced,
    is_grassmannian,
    unbalance_via_families,
)
from permpat.matching import contains
from permpat.perms import all_perms, descents


def test_is_grassmannian():
    assert is_grassmannian((1, 4, 2, 3, 5))
    # a unique descent is required, so the identity does not qualify
    assert not is_grassmannian((1, 2, 3))
    assert not is_grassmannian((3, 2, 4, 1, 5))


def test_gamma_word_rank12_example():
    pi = (11, 6, 12, 9, 4, 1, 5, 3, 7, 2, 8, 10)
    assert gamma_word(pi, 4) == (6, 9, 4, 5, 7, 8, 10)
    assert associated_grassmannian(pi, 4) == (3, 6, 1, 2, 4, 5, 7)


def test_gamma_word_small():
    assert gamma_word((2, 1, 4, 3), 1) == (2, 1, 4)
    assert associated_grassmannian((2, 1, 4, 3), 1) == (2, 1, 3)


CORNER_EXAMPLES = [
    ((1, 4, 2, 3, 5), (2,), 2, 3, ("too_wide",)),
    ((1, 3, 4, 2, 5), (1, 1), 3, 2, ("too_deep",)),
    (
        (1, 3, 4, 8, 9, 2, 5, 6, 7, 10),
        (4, 4, 1, 1),
        5,
        5,
        ("too_deep", "too_wide"),
    ),
    ((1, 3, 6, 7, 2, 4, 5, 8), (3, 3, 1), 4, 4, ("balanced", "balanced")),
]


@pytest.mark.parametrize("rho,partition,rows,cols,tags", CORNER_EXAMPLES)
def test_corner_examples(rho, partition, rows, cols, tags):
    report = corner_report(rho)
    assert report.partition == partition
    assert (report.box_rows, report.box_cols) == (rows, cols)
    interior = tuple(t for *_, t in report.outer_corners if t != "boundary")
    assert interior == tags


def test_corner_report_rejects_non_grassmannian():
    with pytest.raises(ValueError):
        corner_report((3, 2, 4, 1, 5))
    with pytest.raises(ValueError):
        corner_report((1, 2, 3))


def test_partition_round_trip():
    for n in range(2, 8):
        for rho in grassmannian_perms(n):
            report = corner_report(rho)
            back = grassmannian_from_partition(report.partition, report.box_rows, n)
            assert back == rho


def test_grassmannian_from_partition_validates():
    assert grassmannian_from_partition((2,), 2, 5) == (1, 4, 2, 3, 5)
    with pytest.raises(ValueError):
        grassmannian_from_partition((1, 2), 2, 5)  # must weakly decrease
    with pytest.raises(ValueError):
        grassmannian_from_partition((4,), 1, 4)  # too wide for the box
    with pytest.raises(ValueError):
        grassmannian_from_partition((1, 1, 1), 2, 5)  # too many rows


def test_grassmannian_perms_counts():
    # exactly one descent: 2^n - n - 1 permutations of rank n
    for n in range(2, 9):
        perms = grassmannian_perms(n)
        assert len(perms) == 2**n - n - 1
        assert perms == sorted(perms)
        assert all(len(descents(p)) == 1 for p in perms)


def test_is_balanced():
    assert is_balanced((1, 3, 6, 7, 2, 4, 5, 8))
    assert not is_balanced((1, 4, 2, 3, 5))
    assert not is_balanced((1, 3, 4, 2, 5))
    assert is_balanced((1, 2, 3))  # no descent at all


def test_family_members():
    f1 = family_member("F", 1)
    assert f1.p == (1, 4, 2, 3, 5)
    assert f1.x == frozenset() and f1.y == frozenset({2, 3, 4})
    g1 = family_member("G", 1)
    assert g1.p == (1, 3, 4, 2, 5)
    assert g1.y == frozenset({1, 2, 3})
    f2 = family_member("F", 2)
    assert len(f2.p) == 7
    with pytest.raises(ValueError):
        family_member("H", 1)


def test_family_detection_matches_geometry():
    wide = (1, 4, 2, 3, 5)
    deep = (1, 3, 4, 2, 5)
    assert unbalance_via_families(wide) == {"too_wide": True, "too_deep": False}
    assert unbalance_via_families(deep) == {"too_wide": False, "too_deep": True}
    both = (1, 3, 4, 8, 9, 2, 5, 6, 7, 10)
    assert unbalance_via_families(both) == {"too_wide": True, "too_deep": True}
    balanced = (1, 3, 6, 7, 2, 4, 5, 8)
    assert unbalance_via_families(balanced) == {"too_wide": False, "too_deep": False}


def test_geometry_families_agreement_rank_7():
    for n in range(2, 8):
        for rho in grassmannian_perms(n):
            report = corner_report(rho)
            tags = {t for *_, t in report.outer_corners}
            fam = unbalance_via_families(rho)
            assert ("too_wide" in tags) == fam["too_wide"]
            assert ("too_deep" in tags) == fam["too_deep"]

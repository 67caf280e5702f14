import pytest

from permpat.perms import all_perms
from permpat.matching import avoids, contains
from permpat.patterns import ClassicalPattern
from permpat.schubert import (
    DBI_CLASSICAL,
    HEXAGON_MARKED,
    dbi_selection_findings,
    gorenstein_interval_family,
    gorenstein_interval_patterns,
    is_123_hexagon_avoiding,
    is_boolean,
    is_dbi,
    is_factorial,
    is_gorenstein,
    is_smooth,
    select_dbi_second_pattern,
)


def test_smooth_examples():
    assert is_smooth((1, 2, 3, 4))
    assert not is_smooth((1, 3, 2, 4))
    assert not is_smooth((2, 1, 4, 3))
    assert is_smooth((2, 1, 3))


def test_smooth_counts():
    got = [sum(1 for p in all_perms(n) if is_smooth(p)) for n in range(1, 8)]
    assert got == [1, 2, 6, 22, 88, 366, 1552]


def test_factorial_methods_agree_and_sit_between():
    for n in range(1, 7):
        for pi in all_perms(n):
            patterns = is_factorial(pi, "patterns")
            assert patterns == is_factorial(pi, "forest")
            if is_smooth(pi):
                assert patterns
            if patterns:
                assert is_gorenstein(pi, "bivincular")
    with pytest.raises(ValueError):
        is_factorial((1, 2), "frobenius")


def test_factorial_examples():
    # 1324 is the obstruction in both methods
    assert not is_factorial((1, 3, 2, 4), "patterns")
    assert not is_factorial((1, 3, 2, 4), "forest")
    # only the position-adjacent 2143 obstructs: 21354 contains 2143 with a
    # gap in the middle and stays factorial, 2143 itself does not
    assert not is_factorial((2, 1, 4, 3), "patterns")
    assert is_factorial((2, 1, 3, 5, 4), "patterns")


def test_gorenstein_examples():
    assert not is_gorenstein((3, 1, 5, 2, 4), "bivincular")
    assert not is_gorenstein((2, 4, 1, 5, 3), "bivincular")
    assert is_gorenstein((2, 1, 4, 3), "bivincular")
    assert is_gorenstein((1, 2, 3), "interval")


def test_gorenstein_methods_agree_rank_6():
    for n in range(1, 7):
        for pi in all_perms(n):
            first = is_gorenstein(pi, "bivincular")
            for method in ("marked_mesh", "bruhat", "interval"):
                assert first == is_gorenstein(pi, method)


def test_gorenstein_interval_guard():
    with pytest.raises(ValueError):
        is_gorenstein(tuple(range(1, 11)), "interval")
    with pytest.raises(ValueError):
        is_gorenstein((1, 2), "nope")


def test_gorenstein_interval_family_words():
    g12 = gorenstein_interval_family("g", 1, 2)
    assert g12.lower == (3, 4, 5, 1, 2)
    assert g12.upper == (1, 3, 4, 2, 5)
    h01 = gorenstein_interval_family("h", 0, 1)
    assert h01.lower == (4, 5, 2, 3, 1)
    assert h01.upper == (2, 4, 1, 5, 3)
    with pytest.raises(ValueError):
        gorenstein_interval_family("g", 0, 1)  # g needs a, b > 0
    with pytest.raises(ValueError):
        gorenstein_interval_family("g", 2, 2)  # g needs a != b
    with pytest.raises(ValueError):
        gorenstein_interval_family("h", 0, 0)  # h needs a + b > 0


def test_gorenstein_interval_patterns_capped():
    pats = gorenstein_interval_patterns(9)
    assert all(len(p.upper) <= 9 for p in pats)
    ranks = {len(p.upper) for p in pats}
    assert ranks == {5, 6, 7, 8, 9}


def test_dbi_selection_is_deterministic():
    assert select_dbi_second_pattern(6) == "marks_30_41"
    findings = dbi_selection_findings(6)
    assert findings["marks_30_41"] is None
    pi, classical, marked = findings["marks_30_42"]
    assert pi == (3, 2, 6, 1, 5, 4)
    assert classical is True and marked is False


def test_dbi_methods_agree_rank_6():
    for n in range(1, 7):
        for pi in all_perms(n):
            assert is_dbi(pi, "classical") == is_dbi(pi, "marked_mesh")


def test_dbi_examples():
    for obstruction in DBI_CLASSICAL:
        assert not is_dbi(obstruction, "classical")
    assert is_dbi((2, 1, 4, 3), "classical")


def test_hexagon_rank_8_containers():
    avoiders = [p for p in all_perms(8) if avoids(ClassicalPattern((1, 2, 3)), p)]
    assert len(avoiders) == 1430
    containers = sorted(p for p in avoiders if contains(HEXAGON_MARKED, p))
    assert containers == [
        (4, 3, 2, 1, 8, 7, 6, 5),
        (4, 3, 2, 8, 1, 7, 6, 5),
        (5, 3, 2, 1, 8, 7, 6, 4),
        (5, 3, 2, 8, 1, 7, 6, 4),
    ]
    for pi in containers:
        assert not is_123_hexagon_avoiding(pi, "classical")
        assert not is_123_hexagon_avoiding(pi, "marked_mesh")


def test_boolean_counts_are_alternate_fibonacci():
    got = [sum(1 for p in all_perms(n) if is_boolean(p)) for n in range(1, 8)]
    assert got == [1, 2, 5, 13, 34, 89, 233]


def test_boolean_implies_hexagon_avoiding():
    for n in range(1, 8):
        for pi in all_perms(n):
            if is_boolean(pi):
                assert is_123_hexagon_avoiding(pi, "classical")

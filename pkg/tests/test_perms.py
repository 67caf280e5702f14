import pytest

from permpat.perms import (
    all_perms,
    apply_symmetry,
    bruhat_leq,
    bruhat_leq_fast,
    complement,
    covers,
    cycle_type,
    descents,
    insert,
    inverse,
    inversions,
    non_inversions,
    perm,
    reverse,
)


def test_perm_validates():
    assert perm((3, 1, 2)) == (3, 1, 2)
    assert perm([2, 1]) == (2, 1)
    with pytest.raises(ValueError):
        perm((1, 1, 2))
    with pytest.raises(ValueError):
        perm((0, 1))
    with pytest.raises(ValueError):
        perm((1, 3))


def test_all_perms_lexicographic():
    got = list(all_perms(3))
    assert got == [
        (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1),
    ]
    assert len(list(all_perms(5))) == 120


def test_descents():
    assert descents((3, 2, 4, 1, 5)) == (1, 3)
    assert descents((1, 2, 3)) == ()
    assert descents((3, 2, 1)) == (1, 2)


def test_non_inversions_and_inversions():
    assert non_inversions((1, 2, 3)) == 3
    assert non_inversions((3, 2, 1)) == 0
    assert inversions((3, 2, 1)) == 3
    assert non_inversions((2, 1, 4, 3)) == 4


def test_cycle_type():
    assert cycle_type((2, 1, 4, 5, 3)) == (3, 2)
    assert cycle_type((1, 2, 3)) == (1, 1, 1)
    assert cycle_type((2, 3, 4, 1)) == (4,)


def test_symmetries():
    pi = (3, 1, 5, 2, 4)
    assert reverse(pi) == (4, 2, 5, 1, 3)
    assert complement(pi) == (3, 5, 1, 4, 2)
    assert inverse(pi) == (2, 4, 1, 5, 3)
    for op in ("reverse", "complement", "inverse"):
        assert apply_symmetry(apply_symmetry(pi, op), op) == pi
    with pytest.raises(ValueError):
        apply_symmetry(pi, "transpose")


def test_insert_worked_examples():
    assert insert((3, 4, 1, 2, 5), 3, 4) == (3, 5, 4, 1, 2, 6)
    assert insert((2, 1, 4, 3), 2, 4) == (2, 4, 1, 5, 3)
    assert insert((1,), 1, 2) == (2, 1)
    with pytest.raises(ValueError):
        insert((1, 2), 4, 1)
    with pytest.raises(ValueError):
        insert((1, 2), 1, 0)


def test_covers_requires_clear_window():
    # swapping 2 and 5 in 21534: values between them (3, 4) sit outside
    assert covers((2, 1, 5, 3, 4), (1, 3))
    # 3 sits between positions 1 and 5 with value between 2 and 4
    assert not covers((2, 1, 3, 5, 4), (1, 5))
    assert not covers((2, 1), (1, 2))  # needs pi(a) < pi(b)


def test_covers_changes_rank_by_one():
    for pi in all_perms(4):
        for a in range(1, 4):
            for b in range(a + 1, 5):
                if covers(pi, (a, b)):
                    swapped = list(pi)
                    swapped[a - 1], swapped[b - 1] = swapped[b - 1], swapped[a - 1]
                    assert non_inversions(pi) == non_inversions(tuple(swapped)) + 1


def test_bruhat_orders_agree_exhaustively():
    for n in range(1, 6):
        for pi in all_perms(n):
            for rho in all_perms(n):
                assert bruhat_leq(rho, pi) == bruhat_leq_fast(rho, pi)


def test_bruhat_identity_is_maximal():
    top = (1, 2, 3, 4)
    for rho in all_perms(4):
        assert bruhat_leq(rho, top)
    assert bruhat_leq((4, 3, 2, 1), (1, 2, 3, 4))
    assert not bruhat_leq((1, 2, 3, 4), (4, 3, 2, 1))
    assert bruhat_leq((4, 1, 5, 2, 3), (3, 1, 5, 2, 4))

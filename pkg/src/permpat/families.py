"""Special permutation families: direct definitions next to pattern encodings.

Every family has a plain combinatorial definition and at least one pattern
characterization; the verification suites sweep small symmetric groups
comparing them.  Where an encoding is parameterized ("= k for some odd k"),
the admissible thresholds are finite for a fixed rank and are iterated.

The Dumont encodings come in two variants ("printed" and "corrected");
an oracle picks whichever matches the direct definition, and
dumont_findings reports minimal counterexamples for the rest.  The direct
definitions are authoritative throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .matching import (
    avoids,
    avoids_barred,
    contains_bivincular,
    contains_marked_mesh,
    contains_mesh,
    count_occurrences,
    _contains_base,
)
from .patterns import (
    BarredPattern,
    BivincularPattern,
    MarkedMeshPattern,
    MarkedRegion,
    MeshPattern,
)
from .perms import Perm, all_perms, cycle_structure, perm

BAXTER_VINCULAR = (
    BivincularPattern((3, 1, 4, 2), frozenset({2}), frozenset()),
    BivincularPattern((2, 4, 1, 3), frozenset({2}), frozenset()),
)

BAXTER_BIVINCULAR = (
    BivincularPattern((3, 1, 4, 2), frozenset(), frozenset({2})),
    BivincularPattern((2, 4, 1, 3), frozenset(), frozenset({2})),
)

# The second barred pattern reduces to 2413 (it is the reverse of the first,
# which reduces to 3142), mirroring the vincular pair.
BAXTER_BARRED = (
    BarredPattern((4, 1, 3, 5, 2), frozenset({3})),
    BarredPattern((2, 5, 3, 1, 4), frozenset({3})),
)

SIMSUN_MESH = MeshPattern(
    (3, 2, 1), frozenset({(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)})
)

FREELY_BRAIDED_CLASSICAL = (
    (3, 4, 2, 1),
    (4, 2, 3, 1),
    (4, 3, 1, 2),
    (4, 3, 2, 1),
)

FREELY_BRAIDED_MARKED = MarkedMeshPattern(
    (3, 2, 1),
    (
        MarkedRegion(
            frozenset({(2, 0), (3, 0), (1, 1), (3, 1), (0, 2), (2, 2)}), ">=", 1
        ),
    ),
)

POP_121 = MarkedMeshPattern(
    (1,),
    (
        MarkedRegion(frozenset({(0, 0)}), ">=", 1),
        MarkedRegion(frozenset({(1, 0)}), ">=", 1),
    ),
)

HOU_MANSOUR = MarkedMeshPattern(
    (1, 2, 3),
    (
        MarkedRegion(frozenset({(2, r) for r in range(4)}), "=", 0),
        MarkedRegion(frozenset({(1, r) for r in range(4)}), ">=", 1),
    ),
)


def is_baxter(pi: Perm, method: str = "vincular") -> bool:
    """Baxter permutations via vincular, bivincular, or barred obstructions.

    >>> is_baxter((2, 4, 1, 3))
    False
    >>> is_baxter((1, 2, 3, 4))
    True
    """
    if method == "vincular":
        return not any(contains_bivincular(p, pi) for p in BAXTER_VINCULAR)
    if method == "bivincular":
        return not any(contains_bivincular(p, pi) for p in BAXTER_BIVINCULAR)
    if method == "barred":
        return all(avoids_barred(p, pi) for p in BAXTER_BARRED)
    raise ValueError(f"unknown baxter method {method!r}")


def _has_double_descent(word) -> bool:
    return any(
        word[i] > word[i + 1] > word[i + 2] for i in range(len(word) - 2)
    )


def is_simsun(pi: Perm, method: str = "direct") -> bool:
    """No double descent in any restriction to the values 1..k.

    >>> is_simsun((4, 5, 2, 6, 1, 3))
    False
    >>> is_simsun((3, 2, 1))
    False
    """
    if method == "direct":
        n = len(pi)
        for k in range(3, n + 1):
            if _has_double_descent([v for v in pi if v <= k]):
                return False
        return True
    if method == "mesh":
        return not contains_mesh(SIMSUN_MESH, pi)
    raise ValueError(f"unknown simsun method {method!r}")


# --------------------------------------------------------------------------
# Dumont permutations


def _dumont_first_direct(pi: Perm) -> bool:
    # every even value is followed by a smaller one (so it is not last);
    # every odd value is last or followed by a larger one
    n = len(pi)
    if n % 2:
        return False
    for i, v in enumerate(pi):
        if v % 2 == 0:
            if i == n - 1 or pi[i + 1] >= v:
                return False
        elif i < n - 1 and pi[i + 1] <= v:
            return False
    return True


def dumont_first_pattern(which: int, k: int, p3: str = "selected") -> MarkedMeshPattern:
    """The three parameterized Dumont-I obstructions, for an odd threshold k.

    1: an even value in the last position (trailing boxes empty, k points
       below-before).  2: an even value immediately followed by a larger one.
    3: an odd value immediately followed by a smaller one; the "printed"
       variant instead marks a value-adjacent descent with k points before it.
    """
    if k < 0 or k % 2 == 0:
        raise ValueError("threshold must be odd and non-negative")
    if which == 1:
        return MarkedMeshPattern(
            (1,),
            (
                MarkedRegion(frozenset({(1, 0), (1, 1)}), "=", 0),
                MarkedRegion(frozenset({(0, 0)}), "=", k),
            ),
        )
    if which == 2:
        return MarkedMeshPattern(
            (1, 2),
            (
                MarkedRegion(frozenset({(1, 0), (1, 1), (1, 2)}), "=", 0),
                MarkedRegion(frozenset({(0, 0), (2, 0)}), "=", k),
            ),
        )
    if which == 3:
        if p3 == "selected":
            p3 = select_dumont_first_p3()
        if p3 == "printed":
            return MarkedMeshPattern(
                (2, 1),
                (
                    MarkedRegion(frozenset({(0, 1), (1, 1), (2, 1)}), "=", 0),
                    MarkedRegion(frozenset({(0, 0), (0, 2)}), "=", k),
                ),
            )
        if p3 == "corrected":
            return MarkedMeshPattern(
                (2, 1),
                (
                    MarkedRegion(frozenset({(1, 0), (1, 1), (1, 2)}), "=", 0),
                    MarkedRegion(
                        frozenset({(0, 0), (2, 0), (0, 1), (2, 1)}), "=", k
                    ),
                ),
            )
        raise ValueError(f"unknown third-pattern variant {p3!r}")
    raise ValueError("which must be 1, 2, or 3")


def _dumont_first_marked(pi: Perm, p3: str) -> bool:
    n = len(pi)
    if n % 2:
        return False
    for k in range(1, n, 2):
        for which in (1, 2, 3):
            if contains_marked_mesh(dumont_first_pattern(which, k, p3), pi):
                return False
    return True


_dumont_p3_selection: str | None = None


def select_dumont_first_p3(max_n: int = 6) -> str:
    """Pick the third Dumont-I pattern variant that matches the direct
    definition on all ranks <= max_n; fails loudly if none or both do."""
    global _dumont_p3_selection
    if _dumont_p3_selection is not None:
        return _dumont_p3_selection
    agreeing = []
    for variant in ("printed", "corrected"):
        ok = True
        for n in range(1, max_n + 1):
            for pi in all_perms(n):
                if _dumont_first_marked(pi, variant) != _dumont_first_direct(pi):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            agreeing.append(variant)
    if len(agreeing) != 1:
        raise AssertionError(
            f"Dumont-I third-pattern selection must single out one variant, "
            f"got {agreeing}"
        )
    _dumont_p3_selection = agreeing[0]
    return agreeing[0]


def is_dumont_first(pi: Perm, method: str = "direct") -> bool:
    """Dumont permutations of the first kind.

    >>> is_dumont_first((2, 1)), is_dumont_first((1, 2)), is_dumont_first((4, 2, 1, 3))
    (True, False, True)
    """
    if method == "direct":
        return _dumont_first_direct(pi)
    if method == "marked_mesh":
        return _dumont_first_marked(pi, "selected")
    raise ValueError(f"unknown dumont method {method!r}")


def _dumont_second_direct(pi: Perm) -> bool:
    # position-based: below the diagonal at even positions, weakly above at odd
    n = len(pi)
    if n % 2:
        return False
    return all(
        v < i if i % 2 == 0 else v >= i for i, v in enumerate(pi, start=1)
    )


def dumont_second_pattern(which: int, threshold: int) -> MarkedMeshPattern:
    """The printed Dumont-II obstructions: a point with k (odd) others
    left-above and at least k right-below, or with l (even) left-above and
    at most l-1 right-below."""
    if which == 1:
        if threshold % 2 == 0 or threshold < 1:
            raise ValueError("first pattern needs an odd threshold")
        second = MarkedRegion(frozenset({(1, 0)}), ">=", threshold)
    elif which == 2:
        if threshold % 2 or threshold < 2:
            raise ValueError("second pattern needs an even threshold >= 2")
        second = MarkedRegion(frozenset({(1, 0)}), "<=", threshold - 1)
    else:
        raise ValueError("which must be 1 or 2")
    return MarkedMeshPattern(
        (1,), (MarkedRegion(frozenset({(0, 1)}), "=", threshold), second)
    )


def _dumont_second_marked(pi: Perm) -> bool:
    n = len(pi)
    if n % 2:
        return False
    for k in range(1, n, 2):
        if contains_marked_mesh(dumont_second_pattern(1, k), pi):
            return False
    for ell in range(2, n, 2):
        if contains_marked_mesh(dumont_second_pattern(2, ell), pi):
            return False
    return True


def is_dumont_second(pi: Perm, method: str = "direct") -> bool:
    """Dumont permutations of the second kind.

    The marked-mesh encoding is known to disagree with the direct
    definition (see dumont_findings); the direct definition is
    authoritative.

    >>> is_dumont_second((2, 1)), is_dumont_second((1, 2)), is_dumont_second((3, 1, 4, 2))
    (True, False, True)
    """
    if method == "direct":
        return _dumont_second_direct(pi)
    if method == "marked_mesh":
        return _dumont_second_marked(pi)
    raise ValueError(f"unknown dumont method {method!r}")


def dumont_findings(max_n: int = 6) -> dict[str, tuple[Perm, bool, bool] | None]:
    """Minimal counterexamples (direct vs encoding) for each Dumont route.

    Keys: 'first_printed', 'first_corrected', 'second'; value None means
    agreement everywhere up to max_n, else (perm, direct, encoded) at the
    lexicographically first mismatch of the smallest rank.
    """
    findings: dict[str, tuple[Perm, bool, bool] | None] = {
        "first_printed": None,
        "first_corrected": None,
        "second": None,
    }

    def encoded(key: str, pi: Perm) -> bool:
        if key == "second":
            return _dumont_second_marked(pi)
        return _dumont_first_marked(pi, key.removeprefix("first_"))

    for key in findings:
        direct = (
            _dumont_second_direct if key == "second" else _dumont_first_direct
        )
        done = False
        for n in range(1, max_n + 1):
            for pi in all_perms(n):
                got = encoded(key, pi)
                want = direct(pi)
                if got != want:
                    findings[key] = (pi, want, got)
                    done = True
                    break
            if done:
                break
    return findings


# --------------------------------------------------------------------------
# Freely braided, fixed points, 2-cycles, statistics


def is_freely_braided(pi: Perm, method: str = "classical") -> bool:
    """Avoids 3421, 4231, 4312, 4321 — equivalently one marked 321.

    >>> is_freely_braided((4, 3, 2, 1)), is_freely_braided((3, 2, 1))
    (False, True)
    """
    if method == "classical":
        return not any(_contains_base(pi, p) for p in FREELY_BRAIDED_CLASSICAL)
    if method == "marked_mesh":
        return not contains_marked_mesh(FREELY_BRAIDED_MARKED, pi)
    raise ValueError(f"unknown freely-braided method {method!r}")


def fixed_point_marked_mesh(pi: Perm, i: int) -> bool:
    """The counting encoding of a fixed point at position i: as many points
    left-above as right-below.

    >>> fixed_point_marked_mesh((1, 3, 2), 1)
    True
    >>> fixed_point_marked_mesh((2, 1), 1)
    False
    """
    pi = perm(pi)
    if not 1 <= i <= len(pi):
        raise ValueError(f"position {i} out of range")
    v = pi[i - 1]
    left_above = sum(1 for s in range(i - 1) if pi[s] > v)
    right_below = sum(1 for s in range(i, len(pi)) if pi[s] < v)
    return left_above == right_below


def cycle_check(pi: Perm, positions: tuple[int, int]) -> bool:
    """Counting encoding of a 2-cycle on the given position pair (a < b):
    the descent pair at (a, b) has equal counts below-right-of-a vs
    above-left-of-b taken as (below outside right) = (above outside left)
    and (after, not above top) = (above, not after) — algebraically
    equivalent to pi(a) = b and pi(b) = a."""
    pi = perm(pi)
    n = len(pi)
    a, b = positions
    if not 1 <= a < b <= n:
        raise ValueError(f"positions {positions} out of range")
    u, w = pi[a - 1], pi[b - 1]
    if u < w:
        return False
    low, high = w, u
    # counts around the two chosen points, by (column, row) of the 3x3 grid
    c10 = c20 = c01 = c02 = c21 = c12 = 0
    for s in range(n):
        if s == a - 1 or s == b - 1:
            continue
        v = pi[s]
        col = 0 if s < a - 1 else (1 if s < b - 1 else 2)
        row = 0 if v < low else (1 if v < high else 2)
        if col == 1 and row == 0:
            c10 += 1
        elif col == 2 and row == 0:
            c20 += 1
        elif col == 0 and row == 1:
            c01 += 1
        elif col == 0 and row == 2:
            c02 += 1
        elif col == 2 and row == 1:
            c21 += 1
        elif col == 1 and row == 2:
            c12 += 1
    return c10 + c20 == c01 + c02 and c20 + c21 == c02 + c12


def is_two_cycle(pi: Perm, positions: tuple[int, int]) -> bool:
    a, b = positions
    return a != b and pi[a - 1] == b and pi[b - 1] == a


def jth_kind_pattern(j: int) -> MarkedMeshPattern:
    if j < 1:
        raise ValueError("j must be >= 1")
    return MarkedMeshPattern(
        (2, 1), (MarkedRegion(frozenset({(2, 0)}), "<=", j - 1),)
    )


@dataclass(frozen=True)
class SpecialStatistics:
    jth_kind_inversions: int
    pop_121_occurrences: int
    hou_mansour_avoiding: bool


def special_statistics(pi: Perm, j: int = 1) -> SpecialStatistics:
    """Inversions of the j-th kind, POP-121 occurrences, and avoidance of
    the gapped-123 pattern.

    >>> special_statistics((2, 1)).jth_kind_inversions
    1
    >>> special_statistics((2, 3, 1)).pop_121_occurrences
    1
    >>> special_statistics((1, 2, 3, 4)).hou_mansour_avoiding
    False
    """
    return SpecialStatistics(
        jth_kind_inversions=count_occurrences(jth_kind_pattern(j), pi),
        pop_121_occurrences=count_occurrences(POP_121, pi),
        hou_mansour_avoiding=avoids(HOU_MANSOUR, pi),
    )


def jth_kind_inversions_direct(pi: Perm, j: int = 1) -> int:
    """Reference count: descending pairs (s,t) with at most j-1 later values
    below pi(t)."""
    n = len(pi)
    count = 0
    for t in range(n):
        later_below = sum(1 for u in range(t + 1, n) if pi[u] < pi[t])
        if later_below <= j - 1:
            count += sum(1 for s in range(t) if pi[s] > pi[t])
    return count

"""Singularity classifiers for Schubert varieties, by pattern avoidance.

Every property ships with at least two independent characterizations
(classical / vincular / marked-mesh / Bruhat-restricted / interval-family)
so they can be cross-validated; the verification suites and the test bench
sweep whole symmetric groups comparing them.
"""

from __future__ import annotations

from functools import lru_cache

from .grassmann import is_balanced
from .matching import (
    avoids,
    contains_bivincular,
    contains_bruhat_restricted,
    contains_interval,
    contains_marked_mesh,
    _contains_base,
)
from .patterns import (
    BivincularPattern,
    BruhatRestrictedPattern,
    ClassicalPattern,
    IntervalPattern,
    MarkedMeshPattern,
    MarkedRegion,
)
from .perms import Perm, all_perms, is_forest_like, perm

GORENSTEIN_RANK_CAP = 9

SMOOTH_PATTERNS = ((1, 3, 2, 4), (2, 1, 4, 3))

FACTORIAL_VINCULAR = BivincularPattern((2, 1, 4, 3), frozenset({2}), frozenset())

GORENSTEIN_BIVINCULAR = (
    BivincularPattern((3, 1, 5, 2, 4), frozenset({2}), frozenset({3})),
    BivincularPattern((2, 4, 1, 5, 3), frozenset({3}), frozenset({2})),
)

GORENSTEIN_MARKED = MarkedMeshPattern(
    (2, 1, 4, 3),
    (
        MarkedRegion(
            frozenset({(2, r) for r in range(5)} | {(c, 2) for c in range(5)}), "=", 0
        ),
        MarkedRegion(frozenset({(1, 3), (3, 1)}), ">=", 1),
    ),
)

GORENSTEIN_BRUHAT = (
    BruhatRestrictedPattern((3, 1, 5, 2, 4), frozenset({(1, 5), (2, 3)})),
    BruhatRestrictedPattern((2, 4, 1, 5, 3), frozenset({(1, 5), (3, 4)})),
)

DBI_CLASSICAL = ((2, 4, 1, 5, 3), (3, 1, 5, 2, 4), (4, 2, 6, 1, 5, 3), (1, 3, 2, 4))

DBI_MARKED_FIRST = MarkedMeshPattern(
    (2, 1, 4, 3), (MarkedRegion(frozenset({(1, 3), (3, 1)}), ">=", 1),)
)

# Two candidate encodings for the second DBI obstruction: the one with marks
# at (3,0) and (4,2), and the one with marks at (3,0) and (4,1).  Only one of
# them matches the classical pattern 426153; select_dbi_second_pattern picks
# it by exhaustive comparison.
DBI_SECOND_CANDIDATES = {
    "marks_30_42": MarkedMeshPattern(
        (2, 1, 4, 3),
        (
            MarkedRegion(frozenset({(3, 0)}), ">=", 1),
            MarkedRegion(frozenset({(4, 2)}), ">=", 1),
        ),
    ),
    "marks_30_41": MarkedMeshPattern(
        (2, 1, 4, 3),
        (
            MarkedRegion(frozenset({(3, 0)}), ">=", 1),
            MarkedRegion(frozenset({(4, 1)}), ">=", 1),
        ),
    ),
}

HEXAGON_CLASSICAL = (
    (1, 2, 3),
    (5, 3, 2, 8, 1, 7, 6, 4),
    (5, 3, 2, 1, 8, 7, 6, 4),
    (4, 3, 2, 8, 1, 7, 6, 5),
    (4, 3, 2, 1, 8, 7, 6, 5),
)

HEXAGON_MARKED = MarkedMeshPattern(
    (2, 1, 4, 3),
    (
        MarkedRegion(frozenset({(2, 4)}), ">=", 1),
        MarkedRegion(frozenset({(0, 2)}), ">=", 1),
        MarkedRegion(frozenset({(4, 2)}), ">=", 1),
        MarkedRegion(frozenset({(2, 0)}), ">=", 1),
    ),
)

BOOLEAN_PATTERNS = ((1, 2, 3), (2, 1, 4, 3))


def is_smooth(pi: Perm) -> bool:
    """Avoids 1324 and 2143.

    >>> is_smooth((1, 2, 3, 4))
    True
    >>> is_smooth((1, 3, 2, 4)), is_smooth((2, 1, 4, 3))
    (False, False)
    """
    return not any(_contains_base(pi, p) for p in SMOOTH_PATTERNS)


def is_factorial(pi: Perm, method: str = "patterns") -> bool:
    """Vincular characterization, or acyclicity of the cover-ascent graph."""
    if method == "patterns":
        return not _contains_base(pi, (1, 3, 2, 4)) and not contains_bivincular(
            FACTORIAL_VINCULAR, pi
        )
    if method == "forest":
        return is_forest_like(pi)
    raise ValueError(f"unknown factorial method {method!r}")


def gorenstein_interval_family(which: str, a: int, b: int) -> IntervalPattern:
    """The two interval-pattern families behind the Gorenstein criterion.

    g(a,b) has rank a+b+2 and needs a,b > 0, a != b; h(a,b) has rank a+b+4
    and needs a,b >= 0, not both zero.  Components are ordered canonically:
    the one with fewer non-inversions is the lower.

    >>> gorenstein_interval_family("g", 1, 2)
    IntervalPattern(lower=(3, 4, 5, 1, 2), upper=(1, 3, 4, 2, 5))
    >>> gorenstein_interval_family("h", 0, 1)
    IntervalPattern(lower=(4, 5, 2, 3, 1), upper=(2, 4, 1, 5, 3))
    """
    if which == "g":
        if not (a > 0 and b > 0 and a != b):
            raise ValueError("g(a,b) needs a,b > 0 and a != b")
        first = (*range(a + 2, a + b + 3), *range(1, a + 1), a + 1)
        second = (1, *range(a + 2, a + b + 2), *range(2, a + 1), a + 1, a + b + 2)
    elif which == "h":
        if not (a >= 0 and b >= 0 and (a > 0 or b > 0)):
            raise ValueError("h(a,b) needs a,b >= 0, not both zero")
        first = (
            a + 2,
            *range(a + 4, a + b + 4),
            1,
            a + b + 4,
            *range(2, a + 2),
            a + 3,
        )
        second = (*range(a + 4, a + b + 5), a + 2, a + 3, *range(1, a + 2))
    else:
        raise ValueError("which must be 'g' or 'h'")
    from .perms import non_inversions

    lower, upper = sorted((perm(first), perm(second)), key=non_inversions)
    return IntervalPattern(lower, upper)


@lru_cache(maxsize=16)
def gorenstein_interval_patterns(rank_cap: int) -> tuple[IntervalPattern, ...]:
    """All g/h family members of rank <= rank_cap, in deterministic order."""
    out = []
    for a in range(1, rank_cap - 2):
        for b in range(1, rank_cap - a - 1):
            if a != b:
                out.append(("g", a, b))
    for a in range(0, rank_cap - 3):
        for b in range(0, rank_cap - a - 3):
            if a > 0 or b > 0:
                out.append(("h", a, b))
    out.sort(key=lambda t: (t[1] + t[2], t[0], t[1]))
    return tuple(gorenstein_interval_family(*t) for t in out)


def is_gorenstein(
    pi: Perm, method: str = "bivincular", rank_cap: int = GORENSTEIN_RANK_CAP
) -> bool:
    """Four independent characterizations of Gorensteinness.

    bivincular / marked_mesh / bruhat combine the balanced test with the
    avoidance of one obstruction pair; interval avoids the whole g/h family
    up to rank(pi) and needs rank(pi) <= rank_cap.
    """
    if method == "bivincular":
        return is_balanced(pi) and not any(
            contains_bivincular(p, pi) for p in GORENSTEIN_BIVINCULAR
        )
    if method == "marked_mesh":
        return is_balanced(pi) and not contains_marked_mesh(GORENSTEIN_MARKED, pi)
    if method == "bruhat":
        return is_balanced(pi) and not any(
            contains_bruhat_restricted(p, pi) for p in GORENSTEIN_BRUHAT
        )
    if method == "interval":
        n = len(pi)
        if n > rank_cap:
            raise ValueError(
                f"interval method needs rank <= {rank_cap}, got {n}"
            )
        return not any(
            contains_interval(p, pi)
            for p in gorenstein_interval_patterns(n)
        )
    raise ValueError(f"unknown gorenstein method {method!r}")


_dbi_selection: tuple[str, int] | None = None


def select_dbi_second_pattern(max_n: int = 7) -> str:
    """Pick the second DBI marked-mesh encoding by exhaustive comparison
    against the classical characterization, over all ranks <= max_n.

    Exactly one candidate must agree everywhere; returns its key.
    """
    global _dbi_selection
    if _dbi_selection is not None and _dbi_selection[1] >= max_n:
        return _dbi_selection[0]
    survivors = dict.fromkeys(DBI_SECOND_CANDIDATES)
    for n in range(1, max_n + 1):
        for pi in all_perms(n):
            classical = is_dbi(pi, method="classical")
            prefix = not _contains_base(pi, (1, 3, 2, 4)) and not contains_marked_mesh(
                DBI_MARKED_FIRST, pi
            )
            for key in survivors:
                if survivors[key] is not None:
                    continue
                marked = prefix and not contains_marked_mesh(
                    DBI_SECOND_CANDIDATES[key], pi
                )
                if marked != classical:
                    survivors[key] = (pi, classical, marked)
    agreeing = [k for k, v in survivors.items() if v is None]
    if len(agreeing) != 1:
        raise AssertionError(
            f"DBI selection must single out one candidate, got {agreeing}; "
            f"counterexamples: {survivors}"
        )
    _dbi_selection = (agreeing[0], max_n)
    return agreeing[0]


def dbi_selection_findings(max_n: int = 6) -> dict[str, tuple | None]:
    """First disagreement with the classical method per candidate (None if
    none up to max_n); deterministic, for the verification report."""
    findings: dict[str, tuple | None] = dict.fromkeys(DBI_SECOND_CANDIDATES)
    for n in range(1, max_n + 1):
        for pi in all_perms(n):
            classical = is_dbi(pi, method="classical")
            for key, found in findings.items():
                if found is None:
                    marked = _dbi_marked(pi, DBI_SECOND_CANDIDATES[key])
                    if marked != classical:
                        findings[key] = (pi, classical, marked)
    return findings


def _dbi_marked(pi: Perm, second: MarkedMeshPattern) -> bool:
    return (
        not _contains_base(pi, (1, 3, 2, 4))
        and not contains_marked_mesh(DBI_MARKED_FIRST, pi)
        and not contains_marked_mesh(second, pi)
    )


def is_dbi(pi: Perm, method: str = "classical") -> bool:
    """Defined-by-inclusions: classical obstruction set, or the marked-mesh
    route with the oracle-selected second encoding."""
    if method == "classical":
        return not any(_contains_base(pi, p) for p in DBI_CLASSICAL)
    if method == "marked_mesh":
        key = select_dbi_second_pattern()
        return _dbi_marked(pi, DBI_SECOND_CANDIDATES[key])
    raise ValueError(f"unknown dbi method {method!r}")


def is_123_hexagon_avoiding(pi: Perm, method: str = "classical") -> bool:
    if method == "classical":
        return not any(_contains_base(pi, p) for p in HEXAGON_CLASSICAL)
    if method == "marked_mesh":
        return not _contains_base(pi, (1, 2, 3)) and not contains_marked_mesh(
            HEXAGON_MARKED, pi
        )
    raise ValueError(f"unknown hexagon method {method!r}")


def is_boolean(pi: Perm) -> bool:
    """Avoids 123 and 2143.

    >>> is_boolean((3, 2, 1))
    True
    >>> is_boolean((2, 1, 4, 3))
    False
    """
    return not any(_contains_base(pi, p) for p in BOOLEAN_PATTERNS)

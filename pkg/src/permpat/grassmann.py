"""Associated Grassmannian permutations, lattice paths, and corner analysis.

A Grassmannian permutation (exactly one descent, at d) is drawn as a lattice
path in the d x (n-d) bounding box: walking from the bottom-left corner,
step i goes up (V) when value i sits at a position <= d and right (H)
otherwise.  The partition of row lengths above the path, its inner corners
(V-to-H turns) and outer corners (H-to-V turns) drive the balanced test.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matching import contains_bivincular
from .patterns import BivincularPattern
from .perms import Perm, descents, flatten, perm

INNER_TAGS = ("too_wide", "too_deep", "balanced", "boundary")


@dataclass(frozen=True)
class CornerReport:
    """Lattice-path summary of a Grassmannian permutation.

    inner_corners entries are (x, y, distance) with distance = x + (d - y);
    outer_corners entries are (x, y, tag).
    """

    box_rows: int
    box_cols: int
    path: str
    partition: tuple[int, ...]
    inner_corners: tuple[tuple[int, int, int], ...]
    outer_corners: tuple[tuple[int, int, str], ...]


def is_grassmannian(pi: Perm) -> bool:
    return len(descents(pi)) == 1


def gamma_word(pi: Perm, d: int) -> tuple[int, ...]:
    """Right-to-left minima of the prefix up to d, then left-to-right maxima
    of the rest.

    >>> gamma_word((11, 6, 12, 9, 4, 1, 5, 3, 7, 2, 8, 10), 4)
    (6, 9, 4, 5, 7, 8, 10)
    >>> gamma_word((2, 1, 4, 3), 1)
    (2, 1, 4)
    """
    pi = perm(pi)
    if d not in descents(pi):
        raise ValueError(f"{d} is not a descent of {pi}")
    prefix, rest = pi[:d], pi[d:]
    minima: list[int] = []
    running = None
    for v in reversed(prefix):
        if running is None or v < running:
            minima.append(v)
            running = v
    minima.reverse()
    maxima: list[int] = []
    for v in rest:
        if not maxima or v > maxima[-1]:
            maxima.append(v)
    return tuple(minima + maxima)


def associated_grassmannian(pi: Perm, d: int) -> Perm:
    """Flatten the gamma word; the result has exactly one descent.

    >>> associated_grassmannian((11, 6, 12, 9, 4, 1, 5, 3, 7, 2, 8, 10), 4)
    (3, 6, 1, 2, 4, 5, 7)
    """
    return flatten(gamma_word(pi, d))


def corner_report(rho: Perm) -> CornerReport:
    rho = perm(rho)
    des = descents(rho)
    if len(des) != 1:
        raise ValueError(f"{rho} is not Grassmannian: descents {des}")
    d = des[0]
    n = len(rho)
    position = {v: i for i, v in enumerate(rho, start=1)}
    path = "".join("V" if position[i] <= d else "H" for i in range(1, n + 1))

    inner: list[tuple[int, int, int]] = []
    outer_points: list[tuple[int, int]] = []
    outer_between: list[tuple[int, int]] = []  # (index of inner below, above); -1 = none
    x = y = 0
    prev = ""
    for step in path:
        if prev == "V" and step == "H":
            inner.append((x, y, x + (d - y)))
        if prev == "H" and step == "V":
            below = len(inner) - 1 if inner else -1
            outer_points.append((x, y))
            outer_between.append((below, -1))  # above filled once known
        x, y = (x, y + 1) if step == "V" else (x + 1, y)
        prev = step
    for idx, (below, _) in enumerate(outer_between):
        above = below + 1 if below + 1 < len(inner) else -1
        if below == -1:
            above = 0 if inner else -1
        outer_between[idx] = (below, above)

    outer: list[tuple[int, int, str]] = []
    for (ox, oy), (below, above) in zip(outer_points, outer_between):
        if below < 0 or above < 0:
            tag = "boundary"
        else:
            x1, y1, _ = inner[below]
            x2, y2, _ = inner[above]
            if y2 - y1 < x2 - x1:
                tag = "too_wide"
            elif y2 - y1 > x2 - x1:
                tag = "too_deep"
            else:
                tag = "balanced"
        outer.append((ox, oy, tag))

    rows_bottom_up = []
    h_count = 0
    for step in path:
        if step == "V":
            rows_bottom_up.append(h_count)
        else:
            h_count += 1
    partition = tuple(r for r in reversed(rows_bottom_up) if r > 0)

    return CornerReport(
        box_rows=d,
        box_cols=n - d,
        path=path,
        partition=partition,
        inner_corners=tuple(inner),
        outer_corners=tuple(outer),
    )


def grassmannian_from_partition(partition, d: int, n: int) -> Perm:
    """Inverse of corner_report's (d, partition) view; identity if empty."""
    part = tuple(partition)
    if any(a < b for a, b in zip(part, part[1:])):
        raise ValueError("partition rows must weakly decrease")
    if len(part) > d or any(r > n - d for r in part) or (part and part[-1] < 1):
        raise ValueError(f"partition {part} does not fit in {d}x{n - d}")
    if not 0 < d < n:
        raise ValueError("need 0 < d < n")
    rows_bottom_up = [0] * (d - len(part)) + list(reversed(part))
    steps: list[str] = []
    h_done = 0
    for h_before in rows_bottom_up:
        steps.extend("H" * (h_before - h_done))
        h_done = h_before
        steps.append("V")
    steps.extend("H" * (n - d - h_done))
    inverse = []
    v_seen = h_seen = 0
    for step in steps:
        if step == "V":
            v_seen += 1
            inverse.append(v_seen)
        else:
            h_seen += 1
            inverse.append(d + h_seen)
    rho = [0] * n
    for i, p in enumerate(inverse, start=1):
        rho[p - 1] = i
    return tuple(rho)


def grassmannian_perms(n: int):
    """All rank-n permutations with exactly one descent, in lexicographic order."""
    found = []

    def parts(limit: int, length: int, acc: list[int]):
        if acc:
            found.append(grassmannian_from_partition(tuple(acc), d, n))
        if length == 0:
            return
        for r in range(min(limit, acc[-1] if acc else limit), 0, -1):
            acc.append(r)
            parts(limit, length - 1, acc)
            acc.pop()

    for d in range(1, n):
        parts(n - d, d, [])
    return sorted(set(found))


def is_balanced(pi: Perm) -> bool:
    """True iff, for every descent, the associated Grassmannian permutation
    has all inner corners on one anti-diagonal (no corner too wide or deep).

    >>> is_balanced((1, 3, 6, 7, 2, 4, 5, 8))
    True
    >>> is_balanced((1, 4, 2, 3, 5))
    False
    """
    pi = perm(pi)
    for d in descents(pi):
        report = corner_report(associated_grassmannian(pi, d))
        distances = {dist for _, _, dist in report.inner_corners}
        if len(distances) > 1:
            return False
    return True


def family_member(which: str, index: int) -> BivincularPattern:
    """The bivincular witnesses of unbalance: F(i) for too-wide, G(i) for
    too-deep, each of rank 2*index + 3.

    >>> family_member("F", 1)
    BivincularPattern(p=(1, 4, 2, 3, 5), x=frozenset(), y=frozenset({2, 3, 4}))
    """
    if index < 1:
        raise ValueError("index must be >= 1")
    k = 2 * index + 3
    if which == "F":
        ell = (k + 1) // 2
        y = frozenset(range(2, k))
    elif which == "G":
        ell = (k - 1) // 2
        y = frozenset(range(1, k - 1))
    else:
        raise ValueError("which must be 'F' or 'G'")
    word = (1, *range(ell + 1, k), *range(2, ell + 1), k)
    return BivincularPattern(word, frozenset(), y)


def unbalance_via_families(rho: Perm, rank_cap: int | None = None) -> dict[str, bool]:
    """Pattern-side unbalance test: contains some F(i) (too wide) or G(i)
    (too deep) of rank up to rank_cap (defaults to rank(rho))."""
    rho = perm(rho)
    if rank_cap is None:
        rank_cap = len(rho)
    result = {"too_wide": False, "too_deep": False}
    for which, key in (("F", "too_wide"), ("G", "too_deep")):
        index = 1
        while 2 * index + 3 <= rank_cap:
            if contains_bivincular(family_member(which, index), rho):
                result[key] = True
                break
            index += 1
    return result

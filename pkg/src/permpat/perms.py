"""Permutations in one-line notation and the order-theoretic primitives built on them.

A permutation is a tuple of the values 1..n, 1-based everywhere: position i holds
value pi[i-1].  All functions here are pure and return plain tuples, so results
can be hashed, compared, and shared freely.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

#: Largest rank enumerated exhaustively; single permutations may be larger.
ENUMERATION_CAP = 12

SYMMETRIES = ("reverse", "complement", "inverse")


def perm(values: Iterable[int]) -> Perm:
    """Validate one-line notation: a bijection on {1..n} with n >= 1.

    >>> perm([3, 1, 2])
    (3, 1, 2)
    """
    pi = tuple(values)
    n = len(pi)
    if n == 0:
        raise ValueError("rank-0 permutations are rejected")
    if sorted(pi) != list(range(1, n + 1)):
        raise ValueError(f"not a bijection on 1..{n}: {pi}")
    return pi


def all_perms(n: int) -> Iterator[Perm]:
    """All permutations of rank n in lexicographic order (n <= ENUMERATION_CAP)."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(f"enumeration rank must be in 1..{ENUMERATION_CAP}, got {n}")
    return itertools.permutations(range(1, n + 1))


def flatten(word: Sequence[int]) -> Perm:
    """The unique permutation whose letters are in the same relative order as word.

    >>> flatten([42, 7, 99])
    (2, 1, 3)
    """
    if len(word) == 0:
        raise ValueError("cannot flatten an empty word")
    ranking = {v: r for r, v in enumerate(sorted(word), start=1)}
    if len(ranking) != len(word):
        raise ValueError(f"duplicate entries in {word}")
    return tuple(ranking[v] for v in word)


def reverse(pi: Perm) -> Perm:
    return pi[::-1]


def complement(pi: Perm) -> Perm:
    n = len(pi)
    return tuple(n + 1 - v for v in pi)


def inverse(pi: Perm) -> Perm:
    n = len(pi)
    out = [0] * n
    for i, v in enumerate(pi):
        out[v - 1] = i + 1
    return tuple(out)


def apply_symmetry(pi: Perm, op: str) -> Perm:
    """Apply one of the symmetries reverse, complement, inverse.

    reverse(pi)(i) = pi(n+1-i); complement(pi)(i) = n+1-pi(i); inverse inverts
    the bijection.  Each is an involution.
    """
    if op == "reverse":
        return reverse(pi)
    if op == "complement":
        return complement(pi)
    if op == "inverse":
        return inverse(pi)
    raise ValueError(f"unknown symmetry {op!r}")


def descents(pi: Perm) -> tuple[int, ...]:
    """Positions d with pi(d) > pi(d+1), ascending.

    >>> descents((3, 2, 4, 1, 5))
    (1, 3)
    """
    return tuple(d for d in range(1, len(pi)) if pi[d - 1] > pi[d])


def cycle_type(pi: Perm) -> tuple[int, ...]:
    """Cycle lengths, longest first.

    >>> cycle_type((2, 1, 4, 5, 3))
    (3, 2)
    """
    seen = [False] * len(pi)
    lengths = []
    for start in range(len(pi)):
        if seen[start]:
            continue
        length = 0
        cursor = start
        while not seen[cursor]:
            seen[cursor] = True
            cursor = pi[cursor] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def non_inversions(pi: Perm) -> int:
    """Number of pairs i < j with pi(i) < pi(j), the reversed-order rank function."""
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] < pi[j])


def inversions(pi: Perm) -> int:
    n = len(pi)
    return n * (n - 1) // 2 - non_inversions(pi)


def insert(pi: Perm, j: int, k: int) -> Perm:
    """The rank-(n+1) permutation with value k at position j.

    Pre-existing values >= k are incremented; the relative order of the
    pre-existing entries is preserved.

    >>> insert((3, 4, 1, 2, 5), 3, 4)
    (3, 5, 4, 1, 2, 6)
    >>> insert((2, 1, 4, 3), 2, 4)
    (2, 4, 1, 5, 3)
    """
    n = len(pi)
    if not 1 <= j <= n + 1:
        raise ValueError(f"insertion position {j} out of 1..{n + 1}")
    if not 1 <= k <= n + 1:
        raise ValueError(f"insertion value {k} out of 1..{n + 1}")
    out = [v if v < k else v + 1 for v in pi]
    out.insert(j - 1, k)
    return tuple(out)


def covers(pi: Perm, t: tuple[int, int]) -> bool:
    """True iff pi(a) < pi(b) and every value strictly between positions a and b
    falls outside the open interval (pi(a), pi(b)).

    When true, pi * t(a,b) covers pi: swapping the two entries removes exactly
    one non-inversion.
    """
    a, b = t
    n = len(pi)
    if not 1 <= a < b <= n:
        raise ValueError(f"transposition ({a},{b}) out of range for rank {n}")
    lo, hi = pi[a - 1], pi[b - 1]
    if lo >= hi:
        return False
    return all(not lo < pi[m] < hi for m in range(a, b - 1))


def _up_covers(sigma: Perm) -> Iterator[Perm]:
    # Neighbours one non-inversion above sigma: swap a descent pair (a, b) whose
    # window holds no value strictly between them.
    n = len(sigma)
    for a in range(n - 1):
        va = sigma[a]
        for b in range(a + 1, n):
            vb = sigma[b]
            if vb < va and all(not vb < sigma[m] < va for m in range(a + 1, b)):
                out = list(sigma)
                out[a], out[b] = vb, va
                yield tuple(out)


def bruhat_leq(rho: Perm, pi: Perm) -> bool:
    """True iff pi is reachable from rho by cover steps, each adding one non-inversion.

    Reversed-order convention: the identity is the unique maximum.  Breadth-first
    search over cover moves; feasible for rank <= 9.
    """
    if len(rho) != len(pi):
        raise ValueError("rank mismatch")
    gap = non_inversions(pi) - non_inversions(rho)
    if gap < 0:
        return False
    if gap == 0:
        return rho == pi
    frontier = {rho}
    for _ in range(gap):
        nxt = set()
        for sigma in frontier:
            nxt.update(_up_covers(sigma))
        if pi in nxt:
            return True
        frontier = nxt
    return False


def bruhat_leq_fast(rho: Perm, pi: Perm) -> bool:
    """Same order as bruhat_leq, decided by sorted-prefix dominance.

    rho <= pi here iff every sorted length-i prefix of pi is entrywise <= the
    sorted length-i prefix of rho.  Cross-checked against the search version.
    """
    if len(rho) != len(pi):
        raise ValueError("rank mismatch")
    import bisect

    pre_p: list[int] = []
    pre_r: list[int] = []
    for vp, vr in zip(pi, rho):
        bisect.insort(pre_p, vp)
        bisect.insort(pre_r, vr)
        for x, y in zip(pre_p, pre_r):
            if x > y:
                return False
    return True


def edge_graph(pi: Perm) -> tuple[tuple[int, int], ...]:
    """Edges {i,j}: i < j, pi(i) < pi(j), and no k between with pi(i) < pi(k) < pi(j)."""
    n = len(pi)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if pi[i] < pi[j] and all(
                not pi[i] < pi[k] < pi[j] for k in range(i + 1, j)
            ):
                edges.append((i + 1, j + 1))
    return tuple(edges)


def is_forest_like(pi: Perm) -> bool:
    """True iff edge_graph(pi) is acyclic."""
    n = len(pi)
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edge_graph(pi):
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj
    return True


def cycle_structure(pi: Perm) -> tuple[tuple[int, ...], ...]:
    """Cycle decomposition of the functional graph i -> pi(i).

    Each cycle starts at its smallest element; cycles are sorted by that element.

    >>> cycle_structure((3, 1, 2))
    ((1, 3, 2),)
    """
    n = len(pi)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = pi[i - 1]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def fixed_points(pi: Perm) -> tuple[int, ...]:
    return tuple(i + 1 for i, v in enumerate(pi) if v == i + 1)

"""Translations from the other formalisms into mesh patterns.

Each translation preserves containment; the verification suites cross-check
them against the direct matcher.  Barred patterns translate to a *set* of
single-box mesh patterns with disjunctive semantics: the source is contained
iff at least one output mesh pattern is.
"""

from __future__ import annotations

from .patterns import (
    BarredPattern,
    BivincularPattern,
    BruhatRestrictedPattern,
    IntervalPattern,
    MeshPattern,
    Pattern,
)
from .perms import insert, non_inversions


def bivincular_to_mesh(pat: BivincularPattern) -> MeshPattern:
    """Position adjacencies become column strips, value adjacencies row strips.

    >>> bivincular_to_mesh(BivincularPattern((1, 2), frozenset(), frozenset()))
    MeshPattern(p=(1, 2), shaded=frozenset())
    """
    k = pat.rank
    shaded = {(x, r) for x in pat.x for r in range(k + 1)}
    shaded.update((c, y) for c in range(k + 1) for y in pat.y)
    return MeshPattern(pat.p, frozenset(shaded))


def barred_to_meshes(pat: BarredPattern) -> frozenset[MeshPattern]:
    """One single-box mesh pattern per bar, on the reduced pattern.

    The box sits where the barred letter would have to be: (number of
    unbarred letters before it, number of unbarred values below it).
    """
    reduced = pat.reduced
    meshes = []
    for b in sorted(pat.bars):
        col = sum(1 for u in range(1, b) if u not in pat.bars)
        w = pat.full[b - 1]
        row = sum(
            1 for u in range(1, pat.rank + 1) if u not in pat.bars and pat.full[u - 1] < w
        )
        meshes.append(MeshPattern(reduced, frozenset({(col, row)})))
    return frozenset(meshes)


def bruhat_to_mesh(pat: BruhatRestrictedPattern) -> MeshPattern:
    """Each restriction t(a,b) shades the rectangle [a, b-1] x [p(a), p(b)-1].

    Requires every restricted pair to have a clear window in the pattern
    itself: an intermediate pattern point inside the rectangle would make the
    pair uncoverable in any occurrence, which shading cannot express.
    """
    p = pat.p
    shaded = set()
    for a, b in pat.restrictions:
        for c in range(a + 1, b):
            if p[a - 1] < p[c - 1] < p[b - 1]:
                raise ValueError(
                    f"t({a},{b}) has the intermediate point ({c},{p[c - 1]}) "
                    "inside its rectangle; no faithful mesh exists"
                )
        for i in range(a, b):
            for j in range(p[a - 1], p[b - 1]):
                shaded.add((i, j))
    return MeshPattern(p, frozenset(shaded))


def interval_to_mesh(pat: IntervalPattern) -> MeshPattern:
    """Shade the boxes where inserting a point moves the two components apart.

    Box (i,j) is shaded iff inserting value j+1 at position i+1 into both
    components changes their non-inversion gap.
    """
    p, q = pat.lower, pat.upper
    k = pat.rank
    gap = pat.length_gap
    shaded = set()
    for i in range(k + 1):
        for j in range(k + 1):
            grown_gap = non_inversions(insert(q, i + 1, j + 1)) - non_inversions(
                insert(p, i + 1, j + 1)
            )
            if grown_gap != gap:
                shaded.add((i, j))
    return MeshPattern(q, frozenset(shaded))


def to_mesh(pat: Pattern) -> MeshPattern | frozenset[MeshPattern]:
    """Dispatch to the right translation; mesh patterns pass through."""
    if isinstance(pat, MeshPattern):
        return pat
    if isinstance(pat, BivincularPattern):
        return bivincular_to_mesh(pat)
    if isinstance(pat, BarredPattern):
        return barred_to_meshes(pat)
    if isinstance(pat, BruhatRestrictedPattern):
        return bruhat_to_mesh(pat)
    if isinstance(pat, IntervalPattern):
        return interval_to_mesh(pat)
    raise TypeError(f"no mesh translation for {type(pat).__name__}")

"""Occurrence search and containment decisions for every pattern formalism.

Positions are 1-based in the public Occurrence type; the search itself runs
on 0-based indices.  Classical embeddings of a base permutation are found by
a left-to-right backtracking scan that prunes by remaining length and by the
value interval forced by the tightest already-placed neighbours; the extra
constraints of each formalism (adjacencies, box emptiness, region counts,
cover windows, length gaps) are checked per completed embedding.

Embeddings are cached for the most recently queried permutation, keyed by
base, so that several patterns over one base (the common case in sweeps and
in translation cross-checks) share one search.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache

from .patterns import (
    BarredPattern,
    BivincularPattern,
    BruhatRestrictedPattern,
    ClassicalPattern,
    IntervalPattern,
    MarkedMeshPattern,
    MeshPattern,
    Pattern,
)
from .perms import Perm, bruhat_leq_fast, non_inversions


@dataclass(frozen=True)
class Occurrence:
    """positions: i_1 < ... < i_k into 1..n; values: the induced subword."""

    positions: tuple[int, ...]
    values: tuple[int, ...]
    sorted_values: tuple[int, ...]


# --------------------------------------------------------------------------
# Classical embedding search


@lru_cache(maxsize=4096)
def _base_plan(base: Perm) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # lo_idx[t]/hi_idx[t]: earlier slot holding the tightest value bound for
    # slot t, or -1 when unbounded on that side.
    k = len(base)
    lo_idx, hi_idx = [-1] * k, [-1] * k
    for t in range(k):
        lo = hi = -1
        for s in range(t):
            if base[s] < base[t] and (lo < 0 or base[s] > base[lo]):
                lo = s
            if base[s] > base[t] and (hi < 0 or base[s] < base[hi]):
                hi = s
        lo_idx[t], hi_idx[t] = lo, hi
    return tuple(lo_idx), tuple(hi_idx)


def _raw_embeddings(pi: Perm, base: Perm) -> list[tuple[int, ...]]:
    n, k = len(pi), len(base)
    if k > n:
        return []
    lo_idx, hi_idx = _base_plan(base)
    out: list[tuple[int, ...]] = []
    idx = [0] * k
    val = [0] * k
    last = k - 1
    t = 0
    i = 0
    while True:
        if i > n - k + t:
            t -= 1
            if t < 0:
                return out
            i = idx[t] + 1
            continue
        v = pi[i]
        lo = lo_idx[t]
        hi = hi_idx[t]
        if (lo < 0 or val[lo] < v) and (hi < 0 or v < val[hi]):
            idx[t] = i
            val[t] = v
            if t == last:
                out.append(tuple(idx))
            else:
                t += 1
        i += 1


def _contains_base(pi: Perm, base: Perm) -> bool:
    n, k = len(pi), len(base)
    if k > n:
        return False
    lo_idx, hi_idx = _base_plan(base)
    idx = [0] * k
    val = [0] * k
    last = k - 1
    t = 0
    i = 0
    while True:
        if i > n - k + t:
            t -= 1
            if t < 0:
                return False
            i = idx[t] + 1
            continue
        v = pi[i]
        lo = lo_idx[t]
        hi = hi_idx[t]
        if (lo < 0 or val[lo] < v) and (hi < 0 or v < val[hi]):
            if t == last:
                return True
            idx[t] = i
            val[t] = v
            t += 1
        i += 1


_cache_pi: Perm | None = None
_cache: dict[Perm, list[tuple[int, ...]]] = {}


def _embeddings(pi: Perm, base: Perm) -> list[tuple[int, ...]]:
    """All classical embeddings (0-based, lex order), cached for the last pi."""
    global _cache_pi
    if pi != _cache_pi:
        _cache_pi = pi
        _cache.clear()
    emb = _cache.get(base)
    if emb is None:
        emb = _raw_embeddings(pi, base)
        _cache[base] = emb
    return emb


def _sorted_values(pi: Perm, emb: tuple[int, ...]) -> list[int]:
    return sorted(pi[i] for i in emb)


# --------------------------------------------------------------------------
# Per-formalism constraint checks (all take a completed embedding)


@lru_cache(maxsize=1024)
def _biv_plan(pat: BivincularPattern):
    k = pat.rank
    x_inner = tuple(m for m in sorted(pat.x) if 0 < m < k)
    y_inner = tuple(m for m in sorted(pat.y) if 0 < m < k)
    return (0 in pat.x, k in pat.x, x_inner, 0 in pat.y, k in pat.y, y_inner)


def _biv_ok(pi: Perm, n: int, emb: tuple[int, ...], plan) -> bool:
    x0, xk, x_inner, y0, yk, y_inner = plan
    if x0 and emb[0] != 0:
        return False
    if xk and emb[-1] != n - 1:
        return False
    for m in x_inner:
        if emb[m] != emb[m - 1] + 1:
            return False
    if y0 or yk or y_inner:
        sv = _sorted_values(pi, emb)
        if y0 and sv[0] != 1:
            return False
        if yk and sv[-1] != n:
            return False
        for m in y_inner:
            if sv[m] != sv[m - 1] + 1:
                return False
    return True


@lru_cache(maxsize=1024)
def _mesh_plan(pat: MeshPattern):
    cols: dict[int, set[int]] = {}
    for a, b in pat.shaded:
        cols.setdefault(a, set()).add(b)
    return tuple((a, frozenset(rows)) for a, rows in sorted(cols.items()))


def _mesh_ok(pi: Perm, n: int, emb: tuple[int, ...], sv: list[int], cols) -> bool:
    k = len(emb)
    for a, rows in cols:
        lo = emb[a - 1] if a > 0 else -1
        hi = emb[a] if a < k else n
        for j in range(lo + 1, hi):
            if bisect_left(sv, pi[j]) in rows:
                return False
    return True


@lru_cache(maxsize=1024)
def _marked_plan(pat: MarkedMeshPattern):
    cols: dict[int, set[int]] = {}
    for region in pat.regions:
        for a, b in region.boxes:
            cols.setdefault(a, set()).add(b)
    by_col = tuple((a, frozenset(rows)) for a, rows in sorted(cols.items()))
    regions = tuple((tuple(r.boxes), r.cmp, r.threshold) for r in pat.regions)
    return by_col, regions


def _marked_ok(pi: Perm, n: int, emb: tuple[int, ...], sv: list[int], plan) -> bool:
    by_col, regions = plan
    k = len(emb)
    counts: dict[tuple[int, int], int] = {}
    for a, rows in by_col:
        lo = emb[a - 1] if a > 0 else -1
        hi = emb[a] if a < k else n
        for j in range(lo + 1, hi):
            b = bisect_left(sv, pi[j])
            if b in rows:
                box = (a, b)
                counts[box] = counts.get(box, 0) + 1
    for boxes, cmp, threshold in regions:
        # boxes are distinct grid cells, so summing never double-counts
        total = sum(counts.get(box, 0) for box in boxes)
        if cmp == "<=":
            if total > threshold:
                return False
        elif cmp == "=":
            if total != threshold:
                return False
        elif total < threshold:
            return False
    return True


@lru_cache(maxsize=1024)
def _barred_plan(pat: BarredPattern):
    full, bars = pat.full, pat.bars
    kk = len(full)
    red_idx = {}
    seen = 0
    for u in range(1, kk + 1):
        if u not in bars:
            red_idx[u] = seen
            seen += 1
    holder = {v: i for i, v in enumerate(full, start=1)}
    plans = []
    for b in sorted(bars):
        w = full[b - 1]
        # neighbours in position and in value are unbarred by the
        # non-adjacency invariant, hence pinned by the reduced embedding
        pl = red_idx[b - 1] if b > 1 else -1
        pr = red_idx[b + 1] if b < kk else -1
        vd = red_idx[holder[w - 1]] if w > 1 else -1
        vu = red_idx[holder[w + 1]] if w < kk else -1
        plans.append((pl, pr, vd, vu))
    return pat.reduced, tuple(plans)


def _bar_extends(pi: Perm, n: int, emb: tuple[int, ...], bar_plans) -> bool:
    # the bars' position windows are disjoint and their value windows are
    # pinned, so each bar is a separate existence check
    for pl, pr, vd, vu in bar_plans:
        pos_lo = emb[pl] if pl >= 0 else -1
        pos_hi = emb[pr] if pr >= 0 else n
        val_lo = pi[emb[vd]] if vd >= 0 else 0
        val_hi = pi[emb[vu]] if vu >= 0 else n + 1
        for j in range(pos_lo + 1, pos_hi):
            if val_lo < pi[j] < val_hi:
                break
        else:
            return False
    return True


@lru_cache(maxsize=1024)
def _bruhat_plan(pat: BruhatRestrictedPattern):
    return tuple((a - 1, b - 1) for a, b in sorted(pat.restrictions))


def _bruhat_ok(pi: Perm, emb: tuple[int, ...], restrictions) -> bool:
    # covers(pi, t(i_a, i_b)) with pi(i_a) < pi(i_b) guaranteed by the
    # pattern invariant: no window value may fall strictly between
    for a0, b0 in restrictions:
        ia, ib = emb[a0], emb[b0]
        va, vb = pi[ia], pi[ib]
        for m in range(ia + 1, ib):
            if va < pi[m] < vb:
                return False
    return True


def _interval_ok(
    pi: Perm, emb: tuple[int, ...], sv: list[int], lower: Perm, gap: int, ninv_pi: int
) -> bool:
    rho = list(pi)
    for slot, pos in enumerate(emb):
        rho[pos] = sv[lower[slot] - 1]
    rho_t = tuple(rho)
    if ninv_pi - non_inversions(rho_t) != gap:
        return False
    return bruhat_leq_fast(rho_t, pi)


# --------------------------------------------------------------------------
# Kind-specific public operations


def occurrences_classical(pat: ClassicalPattern, pi: Perm) -> list[Occurrence]:
    """All occurrences, in lexicographic order of positions.

    >>> [o.positions for o in occurrences_classical(ClassicalPattern((1, 2, 3)), (3, 2, 4, 1, 5))]
    [(1, 3, 5), (2, 3, 5)]
    >>> occurrences_classical(ClassicalPattern((1, 3, 2)), (3, 2, 4, 1, 5))
    []
    """
    return _wrap(pi, _embeddings(pi, pat.p))


def occurrences_bivincular(pat: BivincularPattern, pi: Perm) -> list[Occurrence]:
    n, plan = len(pi), _biv_plan(pat)
    return _wrap(
        pi, (e for e in _embeddings(pi, pat.p) if _biv_ok(pi, n, e, plan))
    )


def contains_bivincular(pat: BivincularPattern, pi: Perm) -> bool:
    n, plan = len(pi), _biv_plan(pat)
    return any(_biv_ok(pi, n, e, plan) for e in _embeddings(pi, pat.p))


def occurrences_mesh(pat: MeshPattern, pi: Perm) -> list[Occurrence]:
    n, cols = len(pi), _mesh_plan(pat)
    return _wrap(
        pi,
        (
            e
            for e in _embeddings(pi, pat.p)
            if _mesh_ok(pi, n, e, _sorted_values(pi, e), cols)
        ),
    )


def contains_mesh(pat: MeshPattern, pi: Perm) -> bool:
    n, cols = len(pi), _mesh_plan(pat)
    return any(
        _mesh_ok(pi, n, e, _sorted_values(pi, e), cols)
        for e in _embeddings(pi, pat.p)
    )


def occurrences_marked_mesh(pat: MarkedMeshPattern, pi: Perm) -> list[Occurrence]:
    n, plan = len(pi), _marked_plan(pat)
    return _wrap(
        pi,
        (
            e
            for e in _embeddings(pi, pat.p)
            if _marked_ok(pi, n, e, _sorted_values(pi, e), plan)
        ),
    )


def contains_marked_mesh(pat: MarkedMeshPattern, pi: Perm) -> bool:
    n, plan = len(pi), _marked_plan(pat)
    return any(
        _marked_ok(pi, n, e, _sorted_values(pi, e), plan)
        for e in _embeddings(pi, pat.p)
    )


def avoids_barred(pat: BarredPattern, pi: Perm) -> bool:
    """True iff every occurrence of the reduced pattern extends to the full one."""
    n = len(pi)
    reduced, bar_plans = _barred_plan(pat)
    return all(_bar_extends(pi, n, e, bar_plans) for e in _embeddings(pi, reduced))


def occurrences_barred(pat: BarredPattern, pi: Perm) -> list[Occurrence]:
    """Containment witnesses: reduced-pattern occurrences that do not extend."""
    n = len(pi)
    reduced, bar_plans = _barred_plan(pat)
    return _wrap(
        pi,
        (e for e in _embeddings(pi, reduced) if not _bar_extends(pi, n, e, bar_plans)),
    )


def occurrences_bruhat_restricted(
    pat: BruhatRestrictedPattern, pi: Perm
) -> list[Occurrence]:
    restrictions = _bruhat_plan(pat)
    return _wrap(
        pi, (e for e in _embeddings(pi, pat.p) if _bruhat_ok(pi, e, restrictions))
    )


def contains_bruhat_restricted(pat: BruhatRestrictedPattern, pi: Perm) -> bool:
    restrictions = _bruhat_plan(pat)
    return any(_bruhat_ok(pi, e, restrictions) for e in _embeddings(pi, pat.p))


def occurrences_interval(pat: IntervalPattern, pi: Perm) -> list[Occurrence]:
    lower, gap, ninv_pi = pat.lower, pat.length_gap, non_inversions(pi)
    return _wrap(
        pi,
        (
            e
            for e in _embeddings(pi, pat.upper)
            if _interval_ok(pi, e, _sorted_values(pi, e), lower, gap, ninv_pi)
        ),
    )


def contains_interval(pat: IntervalPattern, pi: Perm) -> bool:
    lower, gap, ninv_pi = pat.lower, pat.length_gap, non_inversions(pi)
    return any(
        _interval_ok(pi, e, _sorted_values(pi, e), lower, gap, ninv_pi)
        for e in _embeddings(pi, pat.upper)
    )


# --------------------------------------------------------------------------
# Dispatchers


def _wrap(pi: Perm, embs) -> list[Occurrence]:
    out = []
    for emb in embs:
        values = tuple(pi[i] for i in emb)
        out.append(
            Occurrence(
                positions=tuple(i + 1 for i in emb),
                values=values,
                sorted_values=tuple(sorted(values)),
            )
        )
    return out


def occurrences(pat: Pattern, pi: Perm) -> list[Occurrence]:
    """Occurrence listing for any pattern kind.

    For barred patterns the entries are containment witnesses (reduced
    occurrences with no extension); for interval patterns they are the
    embeddings of the upper component meeting the length condition.
    """
    if isinstance(pat, ClassicalPattern):
        return occurrences_classical(pat, pi)
    if isinstance(pat, BivincularPattern):
        return occurrences_bivincular(pat, pi)
    if isinstance(pat, MeshPattern):
        return occurrences_mesh(pat, pi)
    if isinstance(pat, MarkedMeshPattern):
        return occurrences_marked_mesh(pat, pi)
    if isinstance(pat, BarredPattern):
        return occurrences_barred(pat, pi)
    if isinstance(pat, BruhatRestrictedPattern):
        return occurrences_bruhat_restricted(pat, pi)
    if isinstance(pat, IntervalPattern):
        return occurrences_interval(pat, pi)
    raise TypeError(f"not a pattern: {pat!r}")


def contains(pat: Pattern, pi: Perm) -> bool:
    if isinstance(pat, ClassicalPattern):
        return _contains_base(pi, pat.p)
    if isinstance(pat, BivincularPattern):
        return contains_bivincular(pat, pi)
    if isinstance(pat, MeshPattern):
        return contains_mesh(pat, pi)
    if isinstance(pat, MarkedMeshPattern):
        return contains_marked_mesh(pat, pi)
    if isinstance(pat, BarredPattern):
        return not avoids_barred(pat, pi)
    if isinstance(pat, BruhatRestrictedPattern):
        return contains_bruhat_restricted(pat, pi)
    if isinstance(pat, IntervalPattern):
        return contains_interval(pat, pi)
    raise TypeError(f"not a pattern: {pat!r}")


def avoids(pat: Pattern, pi: Perm) -> bool:
    return not contains(pat, pi)


def avoids_all(pats, pi: Perm) -> bool:
    return all(avoids(p, pi) for p in pats)


def count_occurrences(pat: Pattern, pi: Perm) -> int:
    return len(occurrences(pat, pi))

"""Verification suites: exhaustive small-rank cross-checks with counterexamples.

Each suite sweeps symmetric groups comparing independent characterizations
and returns a SuiteResult.  Sweeps iterate permutations in lexicographic
order; with jobs > 1 each rank is partitioned into the blocks sharing a
first value, processed by forked workers, and reduced in block order, so
results are identical for any job count.

Suites declare a minimum rank below which they cannot falsify anything
interesting (SOUND_MIN); callers should warn when running below it.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass, field
from itertools import permutations as _permutations

from .families import (
    BAXTER_BARRED,
    BAXTER_BIVINCULAR,
    BAXTER_VINCULAR,
    cycle_check,
    dumont_findings,
    fixed_point_marked_mesh,
    is_baxter,
    is_dumont_first,
    is_dumont_second,
    is_freely_braided,
    is_simsun,
    is_two_cycle,
    select_dumont_first_p3,
)
from .grassmann import (
    associated_grassmannian,
    corner_report,
    grassmannian_from_partition,
    grassmannian_perms,
    is_balanced,
    unbalance_via_families,
)
from .matching import avoids, contains, contains_mesh
from .patterns import (
    BarredPattern,
    BivincularPattern,
    BruhatRestrictedPattern,
    ClassicalPattern,
    IntervalPattern,
    MarkedMeshPattern,
    MarkedRegion,
    MeshPattern,
    Pattern,
    format_pattern,
    format_perm,
    symmetry_bivincular,
)
from .perms import (
    Perm,
    all_perms,
    apply_symmetry,
    descents,
    insert,
    inverse,
)
from .schubert import (
    dbi_selection_findings,
    gorenstein_interval_family,
    is_123_hexagon_avoiding,
    is_boolean,
    is_dbi,
    is_factorial,
    is_gorenstein,
    is_smooth,
    select_dbi_second_pattern,
)
from .translate import bivincular_to_mesh, bruhat_to_mesh, to_mesh

MAX_REPORTED_FAILURES = 5


@dataclass
class SuiteResult:
    suite: str
    passed: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


# --------------------------------------------------------------------------
# Deterministic sweeps, optionally parallel over first-value blocks

_worker_check = None


def _block(args):
    n, first = args
    rest = [v for v in range(1, n + 1) if v != first]
    count = 0
    fails: list[str] = []
    for tail in _permutations(rest):
        count += 1
        msg = _worker_check((first, *tail))
        if msg:
            fails.append(msg)
    return count, fails


def sweep_rank(n: int, check, jobs: int = 1) -> tuple[int, list[str]]:
    """Apply check to every rank-n permutation in lexicographic order;
    check returns a failure message or None."""
    global _worker_check
    if jobs <= 1 or n < 6:
        count = 0
        fails: list[str] = []
        for pi in all_perms(n):
            count += 1
            msg = check(pi)
            if msg:
                fails.append(msg)
        return count, fails
    _worker_check = check
    try:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(min(jobs, n)) as pool:
            results = pool.map(_block, [(n, v) for v in range(1, n + 1)])
    finally:
        _worker_check = None
    count = sum(c for c, _ in results)
    fails = [m for _, ms in results for m in ms]
    return count, fails


def sweep_ranks(lo: int, hi: int, check, jobs: int = 1) -> tuple[int, list[str]]:
    total = 0
    fails: list[str] = []
    for n in range(lo, hi + 1):
        c, f = sweep_rank(n, check, jobs)
        total += c
        fails.extend(f)
    return total, fails


_worker_pred = None


def _count_block(args):
    n, first = args
    rest = [v for v in range(1, n + 1) if v != first]
    return sum(1 for tail in _permutations(rest) if _worker_pred((first, *tail)))


def count_rank(n: int, pred, jobs: int = 1) -> int:
    """Number of rank-n permutations satisfying pred."""
    global _worker_pred
    if jobs <= 1 or n < 6:
        return sum(1 for pi in all_perms(n) if pred(pi))
    _worker_pred = pred
    try:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(min(jobs, n)) as pool:
            blocks = pool.map(_count_block, [(n, v) for v in range(1, n + 1)])
    finally:
        _worker_pred = None
    return sum(blocks)


def _result(suite: str, checked: int, fails: list[str], notes=()) -> SuiteResult:
    shown = fails[:MAX_REPORTED_FAILURES]
    if len(fails) > MAX_REPORTED_FAILURES:
        shown.append(f"... and {len(fails) - MAX_REPORTED_FAILURES} more")
    return SuiteResult(suite, not fails, checked, shown, list(notes))


# --------------------------------------------------------------------------
# Pattern corpora

NAMED_BIVINCULAR = (
    BivincularPattern((3, 1, 5, 2, 4), frozenset({2}), frozenset({3})),
    BivincularPattern((2, 4, 1, 5, 3), frozenset({3}), frozenset({2})),
    BivincularPattern((2, 1, 4, 3), frozenset({2}), frozenset()),
    BivincularPattern((2, 1, 4, 3), frozenset(), frozenset({2})),
    BivincularPattern((3, 1, 4, 2), frozenset({2}), frozenset()),
    BivincularPattern((2, 4, 1, 3), frozenset({2}), frozenset()),
    BivincularPattern((3, 1, 4, 2), frozenset(), frozenset({2})),
    BivincularPattern((2, 4, 1, 3), frozenset(), frozenset({2})),
    BivincularPattern((1, 2, 3), frozenset({1}), frozenset()),
    BivincularPattern((1, 2, 3), frozenset({2}), frozenset({1, 2})),
    BivincularPattern((1, 2, 3), frozenset(), frozenset({2})),
    BivincularPattern((2, 3, 1, 5, 4), frozenset(), frozenset({2, 3})),
    BivincularPattern((2, 3, 1, 5, 4), frozenset({3}), frozenset()),
    BivincularPattern((1, 4, 2, 3, 5), frozenset(), frozenset({2, 3, 4})),
    BivincularPattern((1, 3, 4, 2, 5), frozenset(), frozenset({1, 2, 3})),
)

NAMED_BARRED = (
    BarredPattern((2, 1, 3, 5, 4), frozenset({3})),
    BarredPattern((1, 2, 3), frozenset({2})),
    BarredPattern((6, 3, 4, 1, 2, 5), frozenset({3, 5})),
    BarredPattern((4, 1, 3, 5, 2), frozenset({3})),
    BarredPattern((2, 5, 3, 1, 4), frozenset({3})),
    BarredPattern((2, 5, 1, 3, 4), frozenset({3})),
)

NAMED_BRUHAT = (
    BruhatRestrictedPattern((2, 1, 4, 3), frozenset({(1, 4)})),
    BruhatRestrictedPattern((2, 1, 4, 3), frozenset({(2, 3)})),
    BruhatRestrictedPattern((3, 1, 5, 2, 4), frozenset({(1, 5)})),
    BruhatRestrictedPattern((3, 1, 5, 2, 4), frozenset({(1, 5), (2, 3)})),
    BruhatRestrictedPattern((2, 4, 1, 5, 3), frozenset({(1, 5), (3, 4)})),
    BruhatRestrictedPattern((2, 1, 5, 4, 3), frozenset({(1, 5)})),
)

NAMED_INTERVAL = (
    IntervalPattern((4, 1, 5, 2, 3), (3, 1, 5, 2, 4)),
    IntervalPattern((4, 5, 1, 2, 3), (3, 1, 5, 2, 4)),
    IntervalPattern((5, 3, 2, 4, 1), (3, 2, 1, 5, 4)),
    gorenstein_interval_family("g", 1, 2),
    gorenstein_interval_family("h", 0, 1),
    gorenstein_interval_family("h", 1, 0),
)


def _random_perm(rng: random.Random, ranks=(2, 3, 4)) -> Perm:
    values = list(range(1, rng.choice(ranks) + 1))
    rng.shuffle(values)
    return tuple(values)


def _random_subset(rng: random.Random, population) -> frozenset[int]:
    return frozenset(x for x in population if rng.random() < 0.35)


def _down_cover_moves(rng: random.Random, upper: Perm, moves: int) -> Perm:
    # walk down in reversed Bruhat order by swapping clear-window ascents
    current = list(upper)
    n = len(current)
    for _ in range(moves):
        options = []
        for a in range(n - 1):
            for b in range(a + 1, n):
                lo, hi = current[a], current[b]
                if lo < hi and all(
                    not lo < current[m] < hi for m in range(a + 1, b)
                ):
                    options.append((a, b))
        if not options:
            break
        a, b = rng.choice(options)
        current[a], current[b] = current[b], current[a]
    return tuple(current)


def random_corpus(seed: int, per_kind: int = 50) -> dict[str, list[Pattern]]:
    """Seeded pseudo-random patterns per formalism, base rank <= 4."""
    rng = random.Random(seed)
    corpus: dict[str, list[Pattern]] = {
        "bivincular": [],
        "barred": [],
        "bruhat": [],
        "interval": [],
    }
    while len(corpus["bivincular"]) < per_kind:
        p = _random_perm(rng)
        k = len(p)
        corpus["bivincular"].append(
            BivincularPattern(
                p, _random_subset(rng, range(k + 1)), _random_subset(rng, range(k + 1))
            )
        )
    while len(corpus["barred"]) < per_kind:
        p = _random_perm(rng, ranks=(2, 3, 4))
        k = len(p)
        n_bars = 2 if k == 4 and rng.random() < 0.3 else 1
        bars = frozenset(rng.sample(range(1, k + 1), n_bars))
        try:
            corpus["barred"].append(BarredPattern(p, bars))
        except ValueError:
            continue
    while len(corpus["bruhat"]) < per_kind:
        p = _random_perm(rng, ranks=(3, 4))
        k = len(p)
        # only clear-window pairs: those are the ones a mesh can express
        valid = [
            (a, b)
            for a in range(1, k)
            for b in range(a + 1, k + 1)
            if p[a - 1] < p[b - 1]
            and not any(p[a - 1] < p[c - 1] < p[b - 1] for c in range(a + 1, b))
        ]
        chosen = frozenset(t for t in valid if rng.random() < 0.4)
        if not chosen:
            continue
        corpus["bruhat"].append(BruhatRestrictedPattern(p, chosen))
    while len(corpus["interval"]) < per_kind:
        upper = _random_perm(rng, ranks=(3, 4))
        lower = _down_cover_moves(rng, upper, rng.randint(0, 3))
        corpus["interval"].append(IntervalPattern(lower, upper))
    return corpus


def translation_corpus(seed: int) -> list[Pattern]:
    rnd = random_corpus(seed)
    return (
        list(NAMED_BIVINCULAR)
        + list(NAMED_BARRED)
        + list(NAMED_BRUHAT)
        + list(NAMED_INTERVAL)
        + rnd["bivincular"]
        + rnd["barred"]
        + rnd["bruhat"]
        + rnd["interval"]
    )


def contains_translated(pat: Pattern, pi: Perm) -> bool:
    """Containment via the mesh translation (disjunction for barred)."""
    translated = to_mesh(pat)
    if isinstance(translated, frozenset):
        return any(contains_mesh(m, pi) for m in translated)
    return contains_mesh(translated, pi)


# --------------------------------------------------------------------------
# Suites

DEFAULT_N = {
    "figure1": 7,
    "symmetries": 6,
    "translations": 7,
    "gorenstein-methods": 7,
    "dbi-methods": 8,
    "hexagon-methods": 8,
    "families": 8,
    "corners": 9,
    "hierarchy": 7,
}

SOUND_MIN = {
    "figure1": 5,
    "symmetries": 6,
    "translations": 6,
    "gorenstein-methods": 5,
    "dbi-methods": 6,
    "hexagon-methods": 8,
    "families": 6,
    "corners": 5,
    "hierarchy": 5,
}


def suite_figure1(max_n: int | None = None, seed: int = 0, jobs: int = 1) -> SuiteResult:
    """Five equivalent faces of one pattern: barred, vincular, bivincular,
    and two Bruhat-restricted versions agree on every permutation."""
    max_n = max_n or DEFAULT_N["figure1"]
    faces = (
        ("barred", BarredPattern((2, 1, 3, 5, 4), frozenset({3}))),
        ("vincular", BivincularPattern((2, 1, 4, 3), frozenset({2}), frozenset())),
        ("bivincular", BivincularPattern((2, 1, 4, 3), frozenset(), frozenset({2}))),
        ("bruhat t(1,4)", BruhatRestrictedPattern((2, 1, 4, 3), frozenset({(1, 4)}))),
        ("bruhat t(2,3)", BruhatRestrictedPattern((2, 1, 4, 3), frozenset({(2, 3)}))),
    )

    def check(pi: Perm) -> str | None:
        verdicts = [(name, avoids(p, pi)) for name, p in faces]
        if len({v for _, v in verdicts}) > 1:
            detail = " ".join(f"{name}={v}" for name, v in verdicts)
            return f"pi={format_perm(pi)}: {detail}"
        return None

    checked, fails = sweep_ranks(1, max_n, check, jobs)
    return _result("figure1", checked, fails)


_PROP_BASES = ((2, 1, 4, 3), (3, 1, 4, 2), (3, 1, 5, 2, 4), (2, 1, 5, 4, 3))


def suite_symmetries(max_n: int | None = None, seed: int = 0, jobs: int = 1) -> SuiteResult:
    """Symmetry transport of bivincular avoidance, the one-directional
    position-to-value adjacency implication, and the Bruhat-restricted
    equivalences with (bi)vincular patterns."""
    max_n = max_n or DEFAULT_N["symmetries"]
    fails: list[str] = []
    checked = 0

    corpus = list(NAMED_BIVINCULAR) + random_corpus(seed)["bivincular"]
    ops = ("reverse", "complement", "inverse")
    sym_pats = {op: [symmetry_bivincular(p, op) for p in corpus] for op in ops}

    # one-directional implication: position adjacency at the slot of the 1
    # implies interior value adjacencies
    implications = []
    for base in _PROP_BASES:
        k = len(base)
        j = base.index(1) + 1
        implications.append(
            (
                BivincularPattern(base, frozenset({j}), frozenset()),
                BivincularPattern(base, frozenset(), frozenset(range(2, k - 1))),
            )
        )

    # Bruhat equivalences: adjacent 1,k <-> vincular; ends l,(l+1) <-> bivincular
    part_a = []
    part_b = []
    for base in _PROP_BASES:
        k = len(base)
        j = base.index(1) + 1
        if j < k and base[j] == k:
            part_a.append(
                (
                    BruhatRestrictedPattern(base, frozenset({(j, j + 1)})),
                    BivincularPattern(base, frozenset({j}), frozenset()),
                )
            )
        if base[-1] == base[0] + 1:
            ell = base[0]
            part_b.append(
                (
                    BruhatRestrictedPattern(base, frozenset({(1, k)})),
                    BivincularPattern(base, frozenset(), frozenset({ell})),
                    BivincularPattern(
                        inverse(base), frozenset({ell}), frozenset()
                    ),
                )
            )

    def check(pi: Perm) -> str | None:
        lefts = [avoids(p, pi) for p in corpus]
        for op in ops:
            sigma = apply_symmetry(pi, op)
            for pat, left, sym_pat in zip(corpus, lefts, sym_pats[op]):
                if left != avoids(sym_pat, sigma):
                    return (
                        f"pi={format_perm(pi)} op={op}: avoidance not preserved "
                        f"for {format_pattern(pat)}"
                    )
        for vinc, biv in implications:
            if avoids(vinc, pi) and not avoids(biv, pi):
                return (
                    f"pi={format_perm(pi)}: avoids {format_pattern(vinc)} "
                    f"but contains {format_pattern(biv)}"
                )
        for brt, vinc in part_a:
            if contains(brt, pi) != contains(vinc, pi):
                return (
                    f"pi={format_perm(pi)}: {format_pattern(brt)} != "
                    f"{format_pattern(vinc)}"
                )
        inv_pi = inverse(pi)
        for brt, biv, vinc_inv in part_b:
            got = contains(brt, pi)
            if got != contains(biv, pi):
                return (
                    f"pi={format_perm(pi)}: {format_pattern(brt)} != "
                    f"{format_pattern(biv)}"
                )
            if got != contains(vinc_inv, inv_pi):
                return (
                    f"pi={format_perm(pi)}: {format_pattern(brt)} != inverse "
                    f"route {format_pattern(vinc_inv)}"
                )
        return None

    c, f = sweep_ranks(1, max_n, check, jobs)
    checked += c
    fails.extend(f)

    # fixed witness separating the value-adjacency and position-adjacency routes
    witness = (4, 2, 3, 1, 6, 5)
    y_pat = BivincularPattern((2, 3, 1, 5, 4), frozenset(), frozenset({2, 3}))
    x_pat = BivincularPattern((2, 3, 1, 5, 4), frozenset({3}), frozenset())
    checked += 1
    if not (avoids(y_pat, witness) and contains(x_pat, witness)):
        fails.append("the 423165 separation witness failed")

    return _result("symmetries", checked, fails)


def suite_translations(max_n: int | None = None, seed: int = 0, jobs: int = 1) -> SuiteResult:
    """Direct containment equals mesh-translation containment over the named
    plus seeded corpus; box-insertion correspondence; degenerate mesh and
    marked-mesh forms; the Gorenstein pair's two mesh routes."""
    max_n = max_n or DEFAULT_N["translations"]
    corpus = translation_corpus(seed)
    translations = [(pat, to_mesh(pat)) for pat in corpus]

    def check_fidelity(pi: Perm) -> str | None:
        for pat, translated in translations:
            direct = contains(pat, pi)
            if isinstance(translated, frozenset):
                via = any(contains_mesh(m, pi) for m in translated)
            else:
                via = contains_mesh(translated, pi)
            if direct != via:
                return (
                    f"pi={format_perm(pi)}: direct={direct} mesh={via} "
                    f"for {format_pattern(pat)}"
                )
        return None

    checked, fails = sweep_ranks(1, max_n, check_fidelity, jobs)
    notes = [f"fidelity corpus size {len(corpus)}"]

    # box-insertion correspondence: a single >=1 mark equals inserting the
    # point; exhaustive on rank-3 bases, seeded sample of rank-4 bases
    rng = random.Random(seed)
    box_cases = []
    for base in all_perms(3):
        for i in range(4):
            for j in range(4):
                box_cases.append((base, i, j))
    rank4 = list(all_perms(4))
    for _ in range(40):
        base = rng.choice(rank4)
        box_cases.append((base, rng.randrange(5), rng.randrange(5)))
    marked_cases = [
        (
            MarkedMeshPattern(
                base, (MarkedRegion(frozenset({(i, j)}), ">=", 1),)
            ),
            ClassicalPattern(insert(base, i + 1, j + 1)),
        )
        for base, i, j in box_cases
    ]

    def check_boxes(pi: Perm) -> str | None:
        for marked, classical in marked_cases:
            if contains(marked, pi) != contains(classical, pi):
                return (
                    f"pi={format_perm(pi)}: {format_pattern(marked)} != "
                    f"insertion {format_pattern(classical)}"
                )
        return None

    box_n = min(max_n, 6)
    c, f = sweep_ranks(1, box_n, check_boxes, jobs)
    checked += c
    fails.extend(f)
    notes.append(f"box-insertion cases {len(marked_cases)} at rank <= {box_n}")

    # degenerate forms: empty mesh == classical, single =0 region == mesh
    empty_pairs = []
    region_pairs = []
    for pat in random_corpus(seed + 1)["bivincular"][:25]:
        mesh = bivincular_to_mesh(pat)
        empty_pairs.append((MeshPattern(mesh.p, frozenset()), ClassicalPattern(mesh.p)))
        if mesh.shaded:
            region_pairs.append(
                (mesh, MarkedMeshPattern(mesh.p, (MarkedRegion(mesh.shaded, "=", 0),)))
            )

    def check_degenerate(pi: Perm) -> str | None:
        for empty_mesh, classical in empty_pairs:
            if contains(empty_mesh, pi) != contains(classical, pi):
                return f"pi={format_perm(pi)}: empty mesh != classical {format_pattern(classical)}"
        for mesh, marked in region_pairs:
            if contains(mesh, pi) != contains(marked, pi):
                return f"pi={format_perm(pi)}: mesh != single-region marked {format_pattern(mesh)}"
        return None

    c, f = sweep_ranks(1, min(max_n, 6), check_degenerate, jobs)
    checked += c
    fails.extend(f)

    # the Gorenstein obstruction pair: bivincular and Bruhat translations
    # are different meshes with identical avoidance
    gor_routes = [
        (
            bivincular_to_mesh(
                BivincularPattern((3, 1, 5, 2, 4), frozenset({2}), frozenset({3}))
            ),
            bruhat_to_mesh(
                BruhatRestrictedPattern((3, 1, 5, 2, 4), frozenset({(1, 5), (2, 3)}))
            ),
        ),
        (
            bivincular_to_mesh(
                BivincularPattern((2, 4, 1, 5, 3), frozenset({3}), frozenset({2}))
            ),
            bruhat_to_mesh(
                BruhatRestrictedPattern((2, 4, 1, 5, 3), frozenset({(1, 5), (3, 4)}))
            ),
        ),
    ]

    def check_gorenstein_pair(pi: Perm) -> str | None:
        for left, right in gor_routes:
            if contains_mesh(left, pi) != contains_mesh(right, pi):
                return (
                    f"pi={format_perm(pi)}: mesh routes split on "
                    f"{format_perm(left.p)}"
                )
        return None

    c, f = sweep_ranks(1, max_n, check_gorenstein_pair, jobs)
    checked += c
    fails.extend(f)

    return _result("translations", checked, fails, notes)


def suite_gorenstein(max_n: int | None = None, seed: int = 0, jobs: int = 1) -> SuiteResult:
    max_n = max_n or DEFAULT_N["gorenstein-methods"]
    methods = ("bivincular", "marked_mesh", "bruhat", "interval")

    def check(pi: Perm) -> str | None:
        votes = [(m, is_gorenstein(pi, m)) for m in methods]
        if len({v for _, v in votes}) > 1:
            detail = " ".join(f"{m}={v}" for m, v in votes)
            return f"pi={format_perm(pi)}: {detail}"
        return None

    checked, fails = sweep_ranks(1, max_n, check, jobs)
    return _result("gorenstein-methods", checked, fails)


def suite_dbi(max_n: int | None = None, seed: int = 0, jobs: int = 1) -> SuiteResult:
    max_n = max_n or DEFAULT_N["dbi-methods"]
    notes = []
    try:
        key = select_dbi_second_pattern(max_n)
    except AssertionError as exc:
        return SuiteResult("dbi-methods", False, 0, [str(exc)])
    notes.append(f"selected second encoding: {key}")
    findings = dbi_selection_findings(min(max_n, 6))
    for cand, finding in sorted(findings.items()):
        if finding is not None:
            pi, classical, marked = finding
            notes.append(
                f"rejected {cand}: first mismatch pi={format_perm(pi)} "
                f"classical={classical} marked={marked}"
            )

    def check(pi: Perm) -> str | None:
        a = is_dbi(pi, "classical")
        b = is_dbi(pi, "marked_mesh")
        if a != b:
            return f"pi={format_perm(pi)}: classical={a} marked_mesh={b}"
        return None

    checked, fails = sweep_ranks(1, max_n, check, jobs)
    return _result("dbi-methods", checked, fails, notes)


def suite_hexagon(max_n: int | None = None, seed: int = 0, jobs: int = 1) -> SuiteResult:
    max_n = max_n or DEFAULT_N["hexagon-methods"]

    def check(pi: Perm) -> str | None:
        a = is_123_hexagon_avoiding(pi, "classical")
        b = is_123_hexagon_avoiding(pi, "marked_mesh")
        if a != b:
            return f"pi={format_perm(pi)}: classical={a} marked_mesh={b}"
        return None

    checked, fails = sweep_ranks(1, max_n, check, jobs)
    return _result("hexagon-methods", checked, fails)


BAXTER_COUNTS = (1, 2, 6, 22, 92, 422)
SMOOTH_COUNTS = (1, 2, 6, 22, 88, 366, 1552)


def suite_families(max_n: int | None = None, seed: int = 0, jobs: int = 1) -> SuiteResult:
    max_n = max_n or DEFAULT_N["families"]
    fails: list[str] = []
    notes: list[str] = []
    checked = 0

    notes.append(f"dumont-I third pattern: {select_dumont_first_p3()}")
    findings = dumont_findings(min(max_n, 6))
    for key, finding in sorted(findings.items()):
        if finding is None:
            notes.append(f"dumont {key}: agrees with direct definition")
        else:
            pi, want, got = finding
            notes.append(
                f"dumont {key}: minimal mismatch pi={format_perm(pi)} "
                f"direct={want} encoded={got} (direct authoritative)"
            )
    check_second = findings["second"] is None

    def check(pi: Perm) -> str | None:
        # checks sharing the embedding cache on pi come first, symmetric
        # images last, so the cache is rebuilt only a few times per pi
        n = len(pi)
        v = is_baxter(pi, "vincular")
        if v != is_baxter(pi, "bivincular") or v != is_baxter(pi, "barred"):
            return f"pi={format_perm(pi)}: baxter methods disagree"
        if is_simsun(pi, "direct") != is_simsun(pi, "mesh"):
            return f"pi={format_perm(pi)}: simsun methods disagree"
        if n <= 7 and is_freely_braided(pi, "classical") != is_freely_braided(
            pi, "marked_mesh"
        ):
            return f"pi={format_perm(pi)}: freely-braided methods disagree"
        if is_dumont_first(pi, "direct") != is_dumont_first(pi, "marked_mesh"):
            return f"pi={format_perm(pi)}: dumont-I selected encoding disagrees"
        if check_second and is_dumont_second(pi, "direct") != is_dumont_second(
            pi, "marked_mesh"
        ):
            return f"pi={format_perm(pi)}: dumont-II encoding disagrees"
        if n <= 7:
            for i in range(1, n + 1):
                if fixed_point_marked_mesh(pi, i) != (pi[i - 1] == i):
                    return f"pi={format_perm(pi)}: fixed-point encoding wrong at {i}"
            for a in range(1, n):
                for b in range(a + 1, n + 1):
                    if cycle_check(pi, (a, b)) != is_two_cycle(pi, (a, b)):
                        return (
                            f"pi={format_perm(pi)}: 2-cycle encoding wrong at "
                            f"({a},{b})"
                        )
            for op in ("reverse", "complement", "inverse"):
                if v != is_baxter(apply_symmetry(pi, op)):
                    return f"pi={format_perm(pi)}: baxter not closed under {op}"
        return None

    c, f = sweep_ranks(1, max_n, check, jobs)
    checked += c
    fails.extend(f)

    for rank, expected in enumerate(BAXTER_COUNTS, start=1):
        if rank > max_n:
            break
        for method in ("vincular", "bivincular", "barred"):
            checked += 1
            got = sum(1 for pi in all_perms(rank) if is_baxter(pi, method))
            if got != expected:
                fails.append(
                    f"baxter({method}) rank {rank}: {got} != {expected}"
                )
    for rank, expected in enumerate(SMOOTH_COUNTS, start=1):
        if rank > max_n:
            break
        checked += 1
        got = sum(1 for pi in all_perms(rank) if is_smooth(pi))
        if got != expected:
            fails.append(f"smooth rank {rank}: {got} != {expected}")

    return _result("families", checked, fails, notes)


def suite_corners(max_n: int | None = None, seed: int = 0, jobs: int = 1) -> SuiteResult:
    """Corner machinery: the four partition examples, geometric vs family
    unbalance on every Grassmannian permutation, the balanced equivalence,
    and the partition round-trip."""
    max_n = max_n or DEFAULT_N["corners"]
    fails: list[str] = []
    notes: list[str] = []
    checked = 0

    examples = (
        ((1, 4, 2, 3, 5), (2,), (2, 3), ("too_wide",)),
        ((1, 3, 4, 2, 5), (1, 1), (3, 2), ("too_deep",)),
        ((1, 3, 4, 8, 9, 2, 5, 6, 7, 10), (4, 4, 1, 1), (5, 5), ("too_deep", "too_wide")),
        ((1, 3, 6, 7, 2, 4, 5, 8), (3, 3, 1), (4, 4), ("balanced", "balanced")),
    )
    for rho, partition, box, tags in examples:
        checked += 1
        rep = corner_report(rho)
        got_tags = tuple(t for *_, t in rep.outer_corners if t != "boundary")
        if (
            rep.partition != partition
            or (rep.box_rows, rep.box_cols) != box
            or got_tags != tags
        ):
            fails.append(
                f"rho={format_perm(rho)}: partition={rep.partition} "
                f"box={rep.box_rows}x{rep.box_cols} tags={got_tags}"
            )

    for n in range(2, max_n + 1):
        for rho in grassmannian_perms(n):
            checked += 1
            rep = corner_report(rho)
            tags = {t for *_, t in rep.outer_corners}
            fam = unbalance_via_families(rho)
            if ("too_wide" in tags) != fam["too_wide"] or (
                "too_deep" in tags
            ) != fam["too_deep"]:
                fails.append(
                    f"rho={format_perm(rho)}: geometric {sorted(tags)} vs "
                    f"families {fam}"
                )
            distances = {dist for *_, dist in rep.inner_corners}
            anti_diagonal = len(distances) <= 1
            no_bad_corner = not (tags & {"too_wide", "too_deep"})
            if anti_diagonal != no_bad_corner:
                fails.append(
                    f"rho={format_perm(rho)}: distance test {anti_diagonal} vs "
                    f"corner tags {sorted(tags)}"
                )
            back = grassmannian_from_partition(rep.partition, rep.box_rows, n)
            if back != rho:
                fails.append(
                    f"rho={format_perm(rho)}: round-trip gave {format_perm(back)}"
                )

    balanced_n = min(max_n, 7)
    notes.append(f"balanced equivalence swept to rank {balanced_n}")

    def check_balanced(pi: Perm) -> str | None:
        via_families = all(
            not any(
                unbalance_via_families(
                    associated_grassmannian(pi, d)
                ).values()
            )
            for d in descents(pi)
        )
        if is_balanced(pi) != via_families:
            return f"pi={format_perm(pi)}: balanced={is_balanced(pi)} families={via_families}"
        return None

    c, f = sweep_ranks(1, balanced_n, check_balanced, jobs)
    checked += c
    fails.extend(f)

    return _result("corners", checked, fails, notes)


def suite_hierarchy(max_n: int | None = None, seed: int = 0, jobs: int = 1) -> SuiteResult:
    max_n = max_n or DEFAULT_N["hierarchy"]

    def check(pi: Perm) -> str | None:
        smooth = is_smooth(pi)
        factorial = is_factorial(pi, "patterns")
        if factorial != is_factorial(pi, "forest"):
            return f"pi={format_perm(pi)}: factorial methods disagree"
        gorenstein = is_gorenstein(pi, "bivincular")
        if smooth and not factorial:
            return f"pi={format_perm(pi)}: smooth but not factorial"
        if factorial and not gorenstein:
            return f"pi={format_perm(pi)}: factorial but not gorenstein"
        if smooth and not is_dbi(pi, "classical"):
            return f"pi={format_perm(pi)}: smooth but not dbi"
        if is_boolean(pi) and not is_123_hexagon_avoiding(pi, "classical"):
            return f"pi={format_perm(pi)}: boolean but not hexagon-avoiding"
        return None

    checked, fails = sweep_ranks(1, max_n, check, jobs)
    return _result("hierarchy", checked, fails)


SUITES = {
    "figure1": suite_figure1,
    "symmetries": suite_symmetries,
    "translations": suite_translations,
    "gorenstein-methods": suite_gorenstein,
    "dbi-methods": suite_dbi,
    "hexagon-methods": suite_hexagon,
    "families": suite_families,
    "corners": suite_corners,
    "hierarchy": suite_hierarchy,
}


def run_suite(name: str, max_n: int | None = None, seed: int = 0, jobs: int = 1) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](max_n=max_n, seed=seed, jobs=jobs)

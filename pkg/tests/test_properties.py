"""Randomized invariants, mostly via hypothesis."""

from hypothesis import given, settings
from hypothesis import strategies as st

from permpat import (
    ClassicalPattern,
    MeshPattern,
    all_perms,
    apply_symmetry,
    avoids,
    bruhat_leq,
    contains,
    count_occurrences,
    insert,
    inversions,
    non_inversions,
    occurrences,
    parse_pattern,
)
from permpat.patterns import symmetry_bivincular
from permpat.perms import bruhat_leq_fast, flatten


def perms(max_n=7):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(tuple)
    )


@given(perms())
def test_symmetries_are_involutions(pi):
    for op in ("reverse", "complement", "inverse"):
        assert apply_symmetry(apply_symmetry(pi, op), op) == pi


@given(perms())
def test_reverse_complement_commute(pi):
    assert apply_symmetry(apply_symmetry(pi, "reverse"), "complement") == apply_symmetry(
        apply_symmetry(pi, "complement"), "reverse"
    )


@given(perms(), st.sampled_from(["reverse", "complement", "inverse"]))
def test_classical_containment_transports(pi, op):
    for text in ("cl:132", "cl:2143", "cl:321"):
        pat = parse_pattern(text)
        image = ClassicalPattern(apply_symmetry(pat.p, op))
        assert contains(pat, pi) == contains(image, apply_symmetry(pi, op))


@given(perms(6), st.sampled_from(["reverse", "complement", "inverse"]))
def test_bivincular_containment_transports(pi, op):
    pat = parse_pattern("bv:231;x={1};y={2}")
    image = symmetry_bivincular(pat, op)
    assert contains(pat, pi) == contains(image, apply_symmetry(pi, op))


@given(perms(6), st.integers(1, 7), st.integers(1, 7))
def test_insert_places_value_and_preserves_rest(pi, j, k):
    n = len(pi)
    j = min(j, n + 1)
    k = min(k, n + 1)
    out = insert(pi, j, k)
    assert len(out) == n + 1 and sorted(out) == list(range(1, n + 2))
    assert out[j - 1] == k
    assert flatten(out[: j - 1] + out[j:]) == flatten(pi)


@given(perms())
def test_occurrences_are_coherent(pi):
    for text in ("cl:132", "cl:21", "m:12;r={(1,1)}", "bv:123;x={2};y={}"):
        pat = parse_pattern(text)
        occs = occurrences(pat, pi)
        assert count_occurrences(pat, pi) == len(occs)
        assert avoids(pat, pi) == (not occs)
        for occ in occs:
            assert all(a < b for a, b in zip(occ.positions, occ.positions[1:]))
            assert occ.values == tuple(pi[i - 1] for i in occ.positions)
            assert flatten(occ.values) == pat.p


@given(perms(6), st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2))))
def test_mesh_shading_is_monotone(pi, cells):
    # Every occurrence under a shading survives the removal of any shaded cell.
    wide = MeshPattern((1, 2), frozenset(cells))
    for cell in cells:
        narrow = MeshPattern((1, 2), frozenset(cells) - {cell})
        wide_pos = {occ.positions for occ in occurrences(wide, pi)}
        narrow_pos = {occ.positions for occ in occurrences(narrow, pi)}
        assert wide_pos <= narrow_pos


@settings(max_examples=40)
@given(perms(6), perms(6))
def test_bruhat_routes_agree_on_samples(rho, pi):
    if len(rho) != len(pi):
        return
    assert bruhat_leq(rho, pi) == bruhat_leq_fast(rho, pi)


@given(perms())
def test_rank_function_is_split(pi):
    n = len(pi)
    assert non_inversions(pi) + inversions(pi) == n * (n - 1) // 2


def test_single_rank3_avoidance_is_catalan():
    catalan = [1, 2, 5, 14, 42, 132]
    for text in ("cl:123", "cl:132", "cl:213", "cl:231", "cl:312", "cl:321"):
        pat = parse_pattern(text)
        got = [sum(avoids(pat, p) for p in all_perms(n)) for n in range(1, 7)]
        assert got == catalan


def test_flatten_preserves_relative_order():
    word = (9, 2, 40, 11)
    out = flatten(word)
    assert sorted(out) == [1, 2, 3, 4]
    for i in range(4):
        for j in range(i + 1, 4):
            assert (word[i] < word[j]) == (out[i] < out[j])

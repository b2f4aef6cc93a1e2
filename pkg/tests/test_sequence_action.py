from itertools import product

import pytest
from hypothesis import given, strategies as st

from leftnormed.permutations import (
    Permutation, all_permutations, compose, identity, reverse_perm,
)
from leftnormed.sequence_action import (
    INFINITY, CoincidencePair, SpectrumSequence, act, classify_symbol,
    e_term, find_coincidence, is_special_pair, level_values, m_levels,
    mirror_witnesses, mirrored_bruteforce, mirrored_fast, occurrence_index,
    occurrence_profile, parse_sequence, project, restrict, rev, spectrum,
    tm_orbit,
)
from leftnormed.tm_set import enumerate_tm, fixed_block_subset

from oracles import orbit_images, tm_by_filter


def S(text):
    return tuple(text)


sequences = st.integers(1, 8).flatmap(
    lambda m: st.lists(st.sampled_from("ABC"), min_size=m, max_size=m).map(tuple))


def test_act_examples():
    assert act(identity(3), S("ABC")) == S("ABC")
    assert act(Permutation((2, 1, 3)), S("ABC")) == S("BAC")
    assert act(reverse_perm(5, 5), S("AABCD")) == S("DCBAA")
    with pytest.raises(ValueError):
        act(identity(2), S("ABC"))


def test_act_is_a_left_action():
    s = S("ABCD")
    perms = list(all_permutations(4))
    for a, b in product(perms, repeat=2):
        assert act(compose(a, b), s) == act(a, act(b, s))


def test_act_reads_at_inverse_images():
    s = S("PQRS")
    for p in all_permutations(4):
        out = act(p, s)
        assert all(out[p(j) - 1] == s[j - 1] for j in range(1, 5))


def test_rev():
    assert rev(S("AABCD")) == S("DCBAA")
    assert rev(S("ABA")) == S("ABA")
    for m in range(1, 7):
        s = tuple(range(m))
        assert rev(s) == act(reverse_perm(m, m), s)
        assert rev(rev(s)) == s


def test_parse_sequence():
    assert parse_sequence("A,A,B,C,D") == ("A", "A", "B", "C", "D")
    assert parse_sequence("foo, bar") == ("foo", "bar")
    with pytest.raises(ValueError):
        parse_sequence("A,,B")


@pytest.mark.parametrize("m", range(1, 7))
def test_orbit_matches_independent_reference(m):
    s = tuple("ABCAB"[:m] + "C" * max(0, m - 5))
    assert tm_orbit(s) == orbit_images(s, tm_by_filter(m))


def test_mirrored_examples():
    for s in (S("A"), S("AB"), S("AABCD"), S("ABCDC")):
        assert mirrored_bruteforce(s, s)
        assert mirrored_bruteforce(s, rev(s))
    assert not mirrored_bruteforce(S("AABCD"), S("ABCDA"))
    assert mirrored_fast(S("AB"), S("BA"))
    assert not mirrored_fast(S("ABCDC"), S("ADCBC"))
    assert not mirrored_bruteforce(S("ABCDC"), S("ADCBC"))
    assert mirrored_bruteforce((), ())


def test_mirrored_identity_image_has_no_partner():
    # s itself is not an image of (A,B,C,D,A) under T_5
    assert S("AABCD") not in tm_orbit(S("ABCDA"))


def test_mirrored_guards():
    with pytest.raises(ValueError):
        mirrored_bruteforce(S("AB"), S("ABC"))
    with pytest.raises(ValueError):
        mirrored_fast(S("AB"), S("ABC"))
    with pytest.raises(ValueError):
        mirrored_bruteforce(S("AB") * 9, S("AB") * 9)
    assert mirrored_bruteforce(S("AB") * 9, S("AB") * 9, max_length=18)


@given(sequences, st.data())
def test_fast_agrees_with_bruteforce(s, data):
    s2 = data.draw(st.sampled_from([s, rev(s)]) | st.lists(
        st.sampled_from("ABC"), min_size=len(s), max_size=len(s)).map(tuple))
    assert mirrored_fast(s, s2) == mirrored_bruteforce(s, s2)


def test_mirror_witnesses():
    s = S("AABAB")
    forward, backward = mirror_witnesses(s, rev(s))
    assert len(forward) == len(backward) == 16
    for a, b in forward:
        assert act(a, s) == act(b, rev(s))
    for a, b in backward:
        assert act(a, rev(s)) == act(b, s)
    assert mirror_witnesses(S("AABCD"), S("ABCDA")) is None


def test_find_coincidence_examples():
    assert find_coincidence(S("AABCA"), S("AACBA")) == CoincidencePair(2, 1)
    assert find_coincidence(S("AB"), S("BA")) is None
    assert find_coincidence(S("ABA"), S("ABA")) == (1, 1)
    assert find_coincidence(S("AAA"), S("AAA")) == (3, 0)
    assert find_coincidence(S("AAB"), S("ABB")) is None
    assert find_coincidence(S("ABA"), S("ABB")) is None


def _satisfies_definition(s, s2, m1, m2):
    m = len(s)
    a = s[0]
    ends = list(range(1, m1 + 1)) + list(range(m - m2 + 1, m + 1))
    if not all(s[i - 1] == a and s2[i - 1] == a for i in ends):
        return False
    bounds = [m1 + 1, m - m2]
    if m1 + m2 == m:
        # empty middle: the boundary conditions are vacuous, (m, 0) is the canonical choice
        return m2 == 0
    return all(s[i - 1] != a and s2[i - 1] != a for i in bounds)


@pytest.mark.parametrize("m", range(1, 6))
def test_coincidence_is_the_unique_solution(m):
    for s, s2 in product(product("ABC", repeat=m), repeat=2):
        solutions = [(m1, m2) for m1 in range(1, m + 1) for m2 in range(0, m - m1 + 1)
                     if _satisfies_definition(s, s2, m1, m2)]
        c = find_coincidence(s, s2)
        if c is None:
            assert solutions == []
        else:
            assert solutions == [tuple(c)]
            assert find_coincidence(s2, s) == c


def test_restrict():
    assert restrict(S("AABCA"), CoincidencePair(2, 1)) == S("BC")
    assert restrict(S("ABCD"), CoincidencePair(1, 0)) == S("BCD")
    assert restrict(S("AAA"), CoincidencePair(3, 0)) == ()
    s = S("AAXYZAA")
    assert restrict(s, find_coincidence(s, s)) == S("XYZ")
    with pytest.raises(ValueError):
        restrict(S("AB"), CoincidencePair(2, 1))


def test_block_form_action():
    # members fixing the A-blocks push every A of s to the end
    for m1, mid, m2 in [(2, "BCB", 1), (1, "BC", 2), (3, "D", 0), (1, "BCDB", 1)]:
        s = tuple("A" * m1 + mid + "A" * m2)
        m = len(s)
        for sigma in fixed_block_subset(m, m1, m2):
            out = act(sigma, s)
            assert out[len(mid):] == tuple("A" * (m1 + m2))
            assert out[len(mid) - 1] != "A"


def test_occurrence_index_examples():
    assert occurrence_index(S("AABCD"), S("AA")) == 1
    assert occurrence_index(S("ABCDA"), S("AA")) == 4
    s = S("ABCAB")
    assert occurrence_index(s, s) == 1
    assert occurrence_index(s, S("Z")) == INFINITY
    assert occurrence_index(s, S("AZ")) > 10 ** 9
    with pytest.raises(ValueError):
        occurrence_index(S("AB"), S("ABA"))


@pytest.mark.parametrize("m", range(1, 6))
def test_profile_matches_pointwise_index(m):
    for s in product("AB", repeat=m):
        profile = occurrence_profile(s)
        for d in range(1, m + 1):
            for w in product("AB", repeat=d):
                assert occurrence_index(s, w) == profile.get(w, INFINITY)


def test_spectrum_examples():
    assert spectrum(S("AAABBBAAAB"), "A", "B").runs == (3, 3, 3, 1)
    assert spectrum(S("BB"), "A", "B").runs == (0, 2)
    assert spectrum(S("AA"), "A", "B").runs == (2, 0)
    assert spectrum(S("AAABBBAAAB"), "B", "A").runs == (0, 3, 3, 3, 1, 0)
    with pytest.raises(ValueError):
        spectrum(S("ABC"), "A", "B")
    with pytest.raises(ValueError):
        spectrum(S("AA"), "A", "A")


@given(st.lists(st.sampled_from("AB"), min_size=1, max_size=12))
def test_spectrum_invariants(s):
    sig = spectrum(s, "A", "B")
    runs = sig.runs
    assert len(runs) % 2 == 0
    assert sum(runs) == len(s)
    assert all(n > 0 for n in runs[1:-1])
    rebuilt = "".join(("A" if i % 2 == 0 else "B") * n for i, n in enumerate(runs))
    assert rebuilt == "".join(s)


def test_e_term():
    sig = SpectrumSequence((3, 3, 3, 1), "A", "B")
    assert e_term(sig, 1, 0) == 3
    assert e_term(sig, 3, 1) == 4
    assert e_term(sig, 1, 5) == 0
    with pytest.raises(ValueError):
        e_term(sig, 5, 0)


def test_m_levels_examples():
    s = tuple("AAABBBAAAB")
    s2 = tuple("AAABAAABBB")
    assert [v for v, _ in m_levels(s, "A", "B")] == [3, 4, 3, 0]
    assert [v for v, _ in m_levels(s2, "A", "B")] == [3, 4, 3, 0]
    assert m_levels(s, "A", "B")[-1] == (0, frozenset())
    assert level_values(s, "B", "A")[1] == 6
    assert level_values(s2, "B", "A")[1] == 3
    assert [v for v, _ in m_levels(tuple("AAAAA"), "A", "B")][:2] == [5, 0]


def test_m_levels_index_sets_shrink():
    for m in range(1, 9):
        for s in product("AB", repeat=m):
            levels = m_levels(s, "A", "B")
            for (_, a), (_, b) in zip(levels, levels[1:]):
                assert b <= a
            assert levels[-1][1] == frozenset()


def test_project():
    assert project(S("ABCDC"), {"A"}, "Y") == S("AYYYY")
    assert project(S("ABC"), {"A", "B", "C", "D"}, "Y") == S("ABC")


def test_project_commutes_with_every_permutation():
    for s in product("ABC", repeat=4):
        for keep in ({"A"}, {"A", "B"}, {"C"}):
            for p in all_permutations(4):
                assert project(act(p, s), keep, "R") == act(p, project(s, keep, "R"))


def test_classify_examples():
    s, s2 = S("ABCDC"), S("ADCBC")
    assert {a: classify_symbol(s, s2, a) for a in "ABCD"} == {
        "A": "direct", "B": "reverse", "C": "direct", "D": "reverse"}
    t = S("AABCD")
    assert all(classify_symbol(t, t, a) in ("direct", "both") for a in set(t))
    assert all(classify_symbol(t, rev(t), a) in ("reverse", "both") for a in set(t))
    with pytest.raises(ValueError):
        classify_symbol(s, s2, "Z")


def test_special_pair_examples():
    assert is_special_pair(S("ABCDC"), S("ABCDC"))
    assert is_special_pair(S("ABCDC"), S("ADCBC"))
    assert not is_special_pair(S("ABB"), S("BAB"))


@given(sequences, st.data())
def test_special_pair_symmetries(s, data):
    s2 = data.draw(st.lists(st.sampled_from("ABC"), min_size=len(s), max_size=len(s)).map(tuple))
    sp = is_special_pair(s, s2)
    assert sp == is_special_pair(s2, s)
    assert sp == is_special_pair(s, rev(s2)) == is_special_pair(rev(s), s2)


def test_all_direct_means_equal():
    for s, s2 in product(product("AB", repeat=4), repeat=2):
        classes = {classify_symbol(s, s2, a) for a in set(s)}
        if classes <= {"direct", "both"}:
            assert s == s2
        if classes <= {"reverse", "both"}:
            assert s == rev(s2)


def test_tm_orbit_of_empty():
    assert tm_orbit(()) == {()}
    assert enumerate_tm(1) and tm_orbit(("A",)) == {("A",)}

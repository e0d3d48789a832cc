import pytest

from cayleyrank import corpus
from cayleyrank.core import InputError, Parenthesization, balanced_parenthesization, parenthesizations
from cayleyrank.iso import (
    brute_force_isomorphic,
    find_cube_generating_sequence,
    product_equality,
    quasigroup_isomorphic,
)
from cayleyrank.ranks import quasigroup_cube_rank
from cayleyrank.variants import check_chain

A, B, C = 0, 1, 2


def assert_is_isomorphism(tg, th, mapping):
    n = tg.n
    assert sorted(mapping) == list(range(n))
    for x in range(n):
        for y in range(n):
            assert mapping[tg.rows[x][y]] == th.rows[mapping[x]][mapping[y]]


class TestProductEquality:
    def test_identical_inputs(self, c3):
        p = balanced_parenthesization(3)
        assert product_equality(c3, (0, 1, 2), p, (0, 1, 2), p)

    def test_paper_quasigroup_association_differs(self, paper_qg):
        # b*(a*b) = a versus (b*a)*b = c
        right = Parenthesization((0, (1, 2)))
        left = Parenthesization(((0, 1), 2))
        assert not product_equality(paper_qg, (B, A, B), right, (B, A, B), left)

    def test_associative_tables_agree_across_shapes(self, c3):
        seq = (1, 2, 1, 0)
        shapes = parenthesizations(4)
        for p1 in shapes:
            for p2 in shapes:
                assert product_equality(c3, seq, p1, seq, p2)


class TestFindCubeGeneratingSequence:
    def test_trivial(self):
        found = find_cube_generating_sequence(corpus.gen_cyclic(1), 1, tries=1)
        assert found is not None

    def test_exhaustive_mode_finds_length_three(self, paper_qg):
        found = find_cube_generating_sequence(paper_qg, 3, tries=None)
        assert found is not None
        seq, p = found
        from cayleyrank.core import cube_set

        assert cube_set(paper_qg, seq, p).is_full

    def test_length_two_impossible(self, paper_qg):
        # a cube of two elements has at most 2 values, the quasigroup has 3
        assert find_cube_generating_sequence(paper_qg, 2, tries=None) is None

    def test_non_latin_rejected(self):
        with pytest.raises(InputError):
            find_cube_generating_sequence(corpus.gen_right_zero(3), 2)


class TestBruteForce:
    def test_identical_tables(self, c6):
        verdict = brute_force_isomorphic(c6, c6)
        assert verdict.result == "isomorphic"
        assert verdict.mapping == tuple(range(6))  # identity comes first

    def test_different_sizes(self, c3, c6):
        assert brute_force_isomorphic(c3, c6).result == "not-isomorphic"

    def test_shuffled_cyclic_five(self):
        t = corpus.gen_cyclic(5)
        s = corpus.gen_shuffled(t, seed=13)
        verdict = brute_force_isomorphic(t, s)
        assert verdict.result == "isomorphic"
        assert_is_isomorphism(t, s, verdict.mapping)

    def test_too_large_rejected(self):
        big = corpus.gen_cyclic(9)
        with pytest.raises(InputError):
            brute_force_isomorphic(big, big)


class TestQuasigroupIsomorphic:
    def test_same_table(self, paper_qg):
        verdict = quasigroup_isomorphic(paper_qg, paper_qg)
        assert verdict.result == "isomorphic"
        assert_is_isomorphism(paper_qg, paper_qg, verdict.mapping)

    def test_paper_quasigroup_vs_group(self, paper_qg, c3):
        # one associative, one not
        assert quasigroup_isomorphic(paper_qg, c3, mode="brute").result == "not-isomorphic"
        assert quasigroup_isomorphic(paper_qg, c3, mode="cube").result == "not-isomorphic"

    def test_c4_vs_klein(self):
        c4 = corpus.gen_cyclic(4)
        klein = corpus.gen_elementary_abelian(2)
        assert quasigroup_isomorphic(c4, klein, mode="brute").result == "not-isomorphic"
        verdict = quasigroup_isomorphic(c4, klein, mode="cube")
        assert verdict.result == "not-isomorphic"

    def test_shuffled_positive_with_certificate(self):
        t = corpus.gen_random_latin_square(5, seed=0)
        s = corpus.gen_shuffled(t, seed=7)
        verdict = quasigroup_isomorphic(t, s, mode="cube")
        assert verdict.result == "isomorphic"
        assert_is_isomorphism(t, s, verdict.mapping)
        g_seq, h_seq, p = verdict.certificate
        from cayleyrank.core import cube_set

        assert cube_set(t, g_seq, p).is_full
        assert cube_set(s, h_seq, p).is_full

    def test_modes_agree_on_corpus_pairs(self):
        quasigroups = [(name, t) for name, t in corpus.corpus_quasigroups(6) if t.n <= 6]
        pairs = []
        for i, (name_a, a) in enumerate(quasigroups):
            for name_b, b in quasigroups[i + 1 :]:
                if a.n == b.n:
                    pairs.append((name_a, a, name_b, b))
        assert len(pairs) >= 20
        for name_a, a, name_b, b in pairs:
            cube = quasigroup_isomorphic(a, b, mode="cube")
            brute = quasigroup_isomorphic(a, b, mode="brute")
            assert cube.result == brute.result, (name_a, name_b)
            if cube.result == "isomorphic":
                assert_is_isomorphism(a, b, cube.mapping)

    def test_sampling_mode_returns_exhausted(self):
        a = corpus.gen_random_latin_square(6, seed=1)
        b = corpus.gen_random_latin_square(6, seed=2)
        verdict = quasigroup_isomorphic(a, b, mode="cube", budget=3, seed=0)
        assert verdict.result in ("exhausted", "isomorphic", "not-isomorphic")
        if verdict.result == "isomorphic":
            assert_is_isomorphism(a, b, verdict.mapping)

    def test_order_mismatch_fast_reject(self, c3, c6):
        assert quasigroup_isomorphic(c3, c6).result == "not-isomorphic"

    def test_non_latin_rejected(self, rz3, c3):
        with pytest.raises(InputError):
            quasigroup_isomorphic(rz3, c3)

    def test_determinism_with_seed(self):
        a = corpus.gen_random_latin_square(7, seed=3)
        b = corpus.gen_shuffled(a, seed=4)
        v1 = quasigroup_isomorphic(a, b, mode="cube", seed=11)
        v2 = quasigroup_isomorphic(a, b, mode="cube", seed=11)
        assert v1 == v2


class TestIsomorphismInvariance:
    def test_shuffle_preserves_cube_rank_and_chain(self):
        t = corpus.gen_random_latin_square(5, seed=8)
        s = corpus.gen_shuffled(t, seed=21)
        assert quasigroup_cube_rank(t).rank == quasigroup_cube_rank(s).rank
        assert check_chain(t).as_tuple() == check_chain(s).as_tuple()

import random

import pytest
from hypothesis import given, settings, strategies as st

from cayleyrank import bruteforce, corpus
from cayleyrank.core import (
    BudgetError,
    CayleyTable,
    ElementSet,
    InputError,
    Parenthesization,
    balanced_parenthesization,
    classify,
    cube_eval,
    cube_set,
    eval_parenthesized,
    is_associative,
    is_latin_square,
    log2_ceil,
    parenthesizations,
    product,
    validate_ring,
)

A, B, C = 0, 1, 2


class TestCayleyTable:
    def test_rejects_empty(self):
        with pytest.raises(InputError):
            CayleyTable(())

    def test_rejects_non_square(self):
        with pytest.raises(InputError):
            CayleyTable(((0, 1), (0,)))

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            CayleyTable(((0, 2), (1, 0)))

    def test_singleton(self):
        t = CayleyTable(((0,),))
        assert t.n == 1 and product(t, 0, 0) == 0


class TestProduct:
    def test_paper_quasigroup_ba(self, paper_qg):
        # first step of (b*a)*b = c*b = c
        assert product(paper_qg, B, A) == C

    def test_right_zero(self):
        t = corpus.gen_right_zero(4)
        assert all(product(t, x, y) == y for x in range(4) for y in range(4))

    def test_out_of_range(self, paper_qg):
        with pytest.raises(InputError):
            product(paper_qg, 0, 3)


class TestLatinSquare:
    def test_paper_quasigroup(self, paper_qg):
        assert is_latin_square(paper_qg)

    def test_right_zero_columns_constant(self, rz3):
        assert not is_latin_square(rz3)

    def test_singleton(self):
        assert is_latin_square(CayleyTable(((0,),)))


class TestAssociativity:
    def test_paper_quasigroup_witness(self, paper_qg):
        # b*(a*b) = b*b = a  but  (b*a)*b = c*b = c
        lhs = product(paper_qg, B, product(paper_qg, A, B))
        rhs = product(paper_qg, product(paper_qg, B, A), B)
        assert lhs == A and rhs == C
        assert not is_associative(paper_qg)

    def test_right_zero(self, rz3):
        assert is_associative(rz3)

    def test_cyclic(self, c3):
        assert is_associative(c3)


class TestClassify:
    def test_paper_quasigroup(self, paper_qg):
        kind = classify(paper_qg)
        assert kind.kind == "quasigroup"
        assert kind.has_left_identity and not kind.has_right_identity
        assert not kind.is_associative

    def test_right_zero(self, rz3):
        kind = classify(rz3)
        assert kind.kind == "semigroup"
        assert kind.has_left_identity and not kind.has_right_identity

    def test_cyclic_group(self, c3):
        assert classify(c3).kind == "group"

    def test_trivial_group(self):
        assert classify(CayleyTable(((0,),))).kind == "group"

    def test_latin_iff_quasigroup_or_stronger(self):
        for _, t in corpus.corpus_structures(8):
            kind = classify(t)
            latinish = kind.kind in ("quasigroup", "loop", "group")
            assert latinish == is_latin_square(t)


class TestParenthesization:
    def test_leaf_order_enforced(self):
        with pytest.raises(InputError):
            Parenthesization((1, 0))

    def test_balanced_k4_shape(self):
        p = balanced_parenthesization(4)
        assert p.shape == ((0, 1), (2, 3))
        assert p.depth == 2

    def test_balanced_k1(self):
        p = balanced_parenthesization(1)
        assert p.shape == 0 and p.depth == 0

    def test_balanced_k5_depth(self):
        # splits 3|2, depth ceil(log2 5) = 3
        assert balanced_parenthesization(5).depth == 3

    @given(st.integers(min_value=1, max_value=2**16))
    @settings(max_examples=200, deadline=None)
    def test_balanced_depth_is_log_ceiling(self, k):
        assert balanced_parenthesization(k).depth == log2_ceil(k)

    def test_catalog_counts_are_catalan(self):
        catalan = [1, 1, 2, 5, 14, 42]
        for m in range(1, 7):
            assert len(parenthesizations(m)) == catalan[m - 1]

    def test_catalog_depth_filter(self):
        for p in parenthesizations(5, max_depth=3):
            assert p.depth <= 3
        assert parenthesizations(5, max_depth=2) == ()  # 5 leaves need depth 3

    def test_str_and_nested(self):
        p = Parenthesization((0, ((1, 2), 3)))
        assert str(p) == "(0 ((1 2) 3))"
        assert p.to_nested() == [0, [[1, 2], 3]]


class TestEvalParenthesized:
    def test_worked_example(self, paper_qg):
        # a*((c*a)*b) evaluates to a
        p = Parenthesization((0, ((1, 2), 3)))
        assert eval_parenthesized(paper_qg, (A, C, A, B), p) == A

    def test_singleton(self, paper_qg):
        p = Parenthesization(0)
        assert eval_parenthesized(paper_qg, (C,), p) == C

    def test_left_comb_cyclic(self, c3):
        # (b+b)+b = 1+1+1 = 0 = a
        p = Parenthesization(((0, 1), 2))
        assert eval_parenthesized(c3, (B, B, B), p) == A

    def test_leaf_mismatch(self, c3):
        with pytest.raises(InputError):
            eval_parenthesized(c3, (0, 1), Parenthesization(0))

    def test_associative_tables_ignore_shape(self):
        tables = [corpus.gen_cyclic(5), corpus.gen_right_zero(4),
                  corpus.gen_direct_product(corpus.gen_cyclic(2), corpus.gen_cyclic(3))]
        for t in tables:
            assert is_associative(t)
            seqs = [(0,) * 4, tuple(x % t.n for x in (1, 2, 0, 1, 2)), tuple(range(min(t.n, 6)))]
            for s in seqs:
                values = {eval_parenthesized(t, s, p) for p in parenthesizations(len(s))}
                assert len(values) == 1


class TestCube:
    def test_all_zero_index_returns_head(self, paper_qg):
        p = Parenthesization((0, ((1, 2), 3)))
        assert cube_eval(paper_qg, (A, C, A, B), p, (0, 0, 0)) == A

    def test_all_ones_equals_full_product(self, paper_qg):
        p = Parenthesization((0, ((1, 2), 3)))
        s = (A, C, A, B)
        assert cube_eval(paper_qg, s, p, (1, 1, 1)) == eval_parenthesized(paper_qg, s, p)

    def test_worked_deletion(self, paper_qg):
        # delete b: a*(c*a) = a*b = b
        p = Parenthesization((0, ((1, 2), 3)))
        assert cube_eval(paper_qg, (A, C, A, B), p, (1, 1, 0)) == B

    def test_index_length_checked(self, paper_qg):
        p = Parenthesization((0, 1))
        with pytest.raises(InputError):
            cube_eval(paper_qg, (A, B), p, (1, 0))

    def test_cube_set_singleton(self, paper_qg):
        assert cube_set(paper_qg, (B,), Parenthesization(0)).members() == [B]

    def test_cube_set_pair(self, paper_qg):
        # {a, a*b} = {a, b}
        got = cube_set(paper_qg, (A, B), Parenthesization((0, 1)))
        assert got.members() == [A, B]

    def test_cube_set_cardinality_bound(self):
        t = corpus.gen_random_latin_square(6, seed=3)
        p = balanced_parenthesization(4)
        for seed in range(5):
            s = tuple(random.Random(seed).randrange(6) for _ in range(4))
            assert len(cube_set(t, s, p)) <= 8

    def test_budget_error(self, c3):
        s = (0,) * 26
        with pytest.raises(BudgetError):
            cube_set(c3, s, balanced_parenthesization(26))

    def test_matches_enumeration_oracle(self):
        # the value-set recursion must agree with direct 2^k enumeration
        tables = [corpus.gen_paper_quasigroup(), corpus.gen_cyclic(5),
                  corpus.gen_random_latin_square(7, seed=1), corpus.gen_right_zero(4)]
        for t in tables:
            n = t.n
            rng = random.Random(42)
            for m in (1, 2, 3, 5, 8):
                for p in (balanced_parenthesization(m), *parenthesizations(m)[:3]):
                    s = tuple(rng.randrange(n) for _ in range(m))
                    fast = set(cube_set(t, s, p))
                    slow = set(bruteforce.enumerate_cube(t, s, p))
                    assert fast == slow

    @given(st.data())
    @settings(max_examples=100, deadline=None)
    def test_cube_eval_stays_in_range(self, data):
        n = data.draw(st.integers(min_value=1, max_value=6))
        rows = data.draw(
            st.lists(
                st.lists(st.integers(min_value=0, max_value=n - 1), min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            )
        )
        t = CayleyTable.from_rows(rows)
        m = data.draw(st.integers(min_value=1, max_value=5))
        s = tuple(data.draw(st.integers(min_value=0, max_value=n - 1)) for _ in range(m))
        eps = tuple(data.draw(st.integers(min_value=0, max_value=1)) for _ in range(m - 1))
        p = balanced_parenthesization(m)
        assert 0 <= cube_eval(t, s, p, eps) < n


class TestElementSet:
    def test_roundtrip(self):
        s = ElementSet.of(6, [4, 2, 2])
        assert s.members() == [2, 4] and len(s) == 2 and 4 in s and 1 not in s

    def test_without_and_add(self):
        s = ElementSet.of(4, [1, 3])
        assert s.without(3).members() == [1]
        assert s.add(0).members() == [0, 1, 3]

    def test_out_of_range(self):
        with pytest.raises(InputError):
            ElementSet.of(3, [3])


class TestValidateRing:
    def test_modular_six(self):
        r = corpus.gen_ring_modular(6)
        assert (r.zero, r.one) == (0, 1)
        assert r.neg[2] == 4

    def test_boolean_cube(self):
        r = corpus.gen_ring_boolean_cube(3)
        assert r.zero == 0 and r.one == 7  # (1,1,1)

    def test_right_zero_add_rejected(self, rz3):
        with pytest.raises(InputError, match="additive"):
            validate_ring(rz3, corpus.gen_cyclic(3))

    def test_no_multiplicative_identity(self):
        add = corpus.gen_cyclic(2)
        mul = CayleyTable(((0, 0), (0, 0)))
        with pytest.raises(InputError, match="no-one"):
            validate_ring(add, mul)

    def test_distributivity_witness(self):
        add = corpus.gen_cyclic(3)
        with pytest.raises(InputError, match="distributivity-fail"):
            validate_ring(add, add)  # x*(y+z) != x*y + x*z when * is +

    def test_size_mismatch(self):
        with pytest.raises(InputError):
            validate_ring(corpus.gen_cyclic(2), corpus.gen_cyclic(3))

    def test_distributivity_recheck_on_random_triples(self):
        r = corpus.gen_ring_modular(8)
        rng = random.Random(0)
        for _ in range(100):
            a, b, c = (rng.randrange(8) for _ in range(3))
            assert r.mul.rows[a][r.add.rows[b][c]] == r.add.rows[r.mul.rows[a][b]][r.mul.rows[a][c]]
            assert r.mul.rows[r.add.rows[b][c]][a] == r.add.rows[r.mul.rows[b][a]][r.mul.rows[c][a]]

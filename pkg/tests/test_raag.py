import itertools
import random

import pytest

from graphgroups import (
    Graph,
    GroupElement,
    Word,
    centralizer_witness,
    commutes_totally,
    cyclic_reduce,
    group_commute,
    group_equal,
    group_reduce,
    is_cyclically_reduced,
    multiply_factorize,
    pure_factors,
    support,
)
from oracles import (
    bfs_geodesic_length,
    free_reduce,
    signed_alphabet,
    words_equivalent,
)


def C4():
    return Graph("a b c d".split(), [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


def L3():
    return Graph("w x y z".split(), [("w", "x"), ("x", "y"), ("y", "z")])


def el(graph, text):
    return group_reduce(Word.parse(graph, text))


def random_word(rng, graph, max_len):
    alphabet = signed_alphabet(graph)
    return tuple(rng.choice(alphabet) for _ in range(rng.randrange(max_len + 1)))


class TestGroupReduce:
    def test_commuting_conjugation_cancels(self):
        assert str(el(C4(), "a b a'")) == "b"

    def test_non_commuting_conjugation_stays(self):
        g = L3()
        assert el(g, "x z x'").length == 3

    def test_empty_word_is_identity(self):
        e = el(C4(), "")
        assert e.is_identity
        assert e.length == 0

    def test_geodesic_lengths_match_bfs_oracle_small(self):
        g = C4()
        alphabet = signed_alphabet(g)
        for length in range(4):
            for combo in itertools.product(alphabet, repeat=length):
                assert GroupElement(g, combo).length == bfs_geodesic_length(g, combo)

    def test_canonical_form_orders_by_vertex_then_sign(self):
        g = C4()
        # a and b commute in the square, so both spellings share one class.
        assert str(el(g, "b a'")) == "a' b"
        assert str(el(g, "b' a")) == "a b'"

    def test_canonical_form_independent_of_representative(self):
        rng = random.Random(20240)
        g = L3()
        for _ in range(200):
            letters = random_word(rng, g, 5)
            e = GroupElement(g, letters)
            # shuffle by random commuting swaps, then re-reduce
            word = list(letters)
            for _ in range(10):
                i = rng.randrange(max(1, len(word) - 1)) if len(word) > 1 else 0
                if len(word) > 1:
                    a, b = word[i], word[i + 1]
                    if a[0] != b[0] and g.adjacent(a[0], b[0]):
                        word[i], word[i + 1] = b, a
            assert GroupElement(g, tuple(word)) == e


class TestGroupEqual:
    def test_defining_relation(self):
        g = C4()
        assert group_equal(Word.parse(g, "a b"), Word.parse(g, "b a"))

    def test_inverse_law_random(self):
        rng = random.Random(5150)
        g = C4()
        for _ in range(100):
            word = Word(g, random_word(rng, g, 6))
            assert group_equal(word * word.inverse(), Word(g, ()))

    def test_matches_rewriting_reachability_oracle(self):
        g = C4()
        alphabet = signed_alphabet(g)
        words = [
            combo
            for length in range(3)
            for combo in itertools.product(alphabet, repeat=length)
        ]
        for u in words:
            for v in words:
                assert group_equal(GroupElement(g, u), GroupElement(g, v)) == (
                    words_equivalent(g, u, v)
                )

    def test_matches_rewriting_oracle_sampled_longer(self):
        rng = random.Random(31337)
        g = L3()
        for _ in range(150):
            u = random_word(rng, g, 4)
            v = random_word(rng, g, 4)
            assert group_equal(GroupElement(g, u), GroupElement(g, v)) == (
                words_equivalent(g, u, v)
            )

    def test_projection_equality_fails_for_groups(self):
        # Over the graph with one isolated vertex x and one edge y-z, this
        # word is non-trivial although every projection onto one or two
        # generators freely reduces to the empty word.
        g = Graph(["x", "y", "z"], [("y", "z")])
        word = Word.parse(g, "x y x' z x y' x' z'")
        assert not group_reduce(word).is_identity
        for keep in (("x",), ("y",), ("z",)) + g.non_adjacent_pairs():
            sub = tuple(l for l in word.letters if l[0] in keep)
            assert free_reduce(sub) == ()


class TestSupportAndTotalCommutation:
    def test_support_of_reduced_word(self):
        assert support(el(C4(), "a b a'")) == {"b"}

    def test_generators_on_edge(self):
        g = C4()
        assert commutes_totally(el(g, "a"), el(g, "b"))

    def test_non_adjacent_support_fails(self):
        g = C4()
        assert not commutes_totally(el(g, "a"), el(g, "a c"))

    def test_identity_commutes_totally_with_anything(self):
        g = C4()
        for text in ("", "a", "a c", "a b c d"):
            assert commutes_totally(el(g, text), el(g, ""))
            assert commutes_totally(el(g, ""), el(g, text))


class TestMultiplyFactorize:
    def test_already_reduced_product(self):
        g = C4()
        u, x, v = multiply_factorize(el(g, "a"), el(g, "b"))
        assert (str(u), x.is_identity, str(v)) == ("a", True, "b")

    def test_full_cancellation(self):
        g = C4()
        u, x, v = multiply_factorize(el(g, "a c"), el(g, "c' a'"))
        assert u.is_identity and v.is_identity
        assert group_equal(x, el(g, "a c"))

    def test_contract_on_random_pairs(self):
        rng = random.Random(86420)
        for graph in (C4(), L3()):
            for _ in range(500):
                u = GroupElement(graph, random_word(rng, graph, 5))
                v = GroupElement(graph, random_word(rng, graph, 5))
                up, x, vp = multiply_factorize(u, v)
                assert up * x == u
                assert x.inverse() * vp == v
                assert up.length + x.length == u.length
                assert x.length + vp.length == v.length
                product = up * vp
                assert product == u * v
                assert product.length == up.length + vp.length


class TestCyclicReduce:
    def test_strips_commuting_conjugator(self):
        g = C4()
        dec = cyclic_reduce(el(g, "a c a'"))
        assert (str(dec.p), str(dec.h)) == ("a", "c")

    def test_already_cyclically_reduced(self):
        g = C4()
        dec = cyclic_reduce(el(g, "a b"))
        assert dec.p.is_identity
        assert group_equal(dec.h, el(g, "a b"))

    def test_identity(self):
        dec = cyclic_reduce(el(C4(), ""))
        assert dec.p.is_identity and dec.h.is_identity

    def test_decomposition_contract_random(self):
        rng = random.Random(11211)
        for graph in (C4(), L3()):
            for _ in range(300):
                g_el = GroupElement(graph, random_word(rng, graph, 5))
                dec = cyclic_reduce(g_el)
                assert dec.element() == g_el
                assert 2 * dec.p.length + dec.h.length == g_el.length
                assert is_cyclically_reduced(dec.h)

    def test_h_shortest_in_conjugacy_class_small(self):
        # Oracle: BFS over conjugation by single generators.
        g = C4()
        alphabet = signed_alphabet(g)
        for length in range(4):
            for combo in itertools.product(alphabet, repeat=length):
                start = GroupElement(g, combo)
                dec = cyclic_reduce(start)
                best = start.length
                seen = {start}
                frontier = [start]
                while frontier:
                    cur = frontier.pop()
                    for t in alphabet:
                        conj = GroupElement(g, (t,) + cur.letters + ((t[0], -t[1]),))
                        if conj.length <= cur.length and conj not in seen:
                            seen.add(conj)
                            frontier.append(conj)
                            best = min(best, conj.length)
                assert dec.h.length == best

    def test_h_independent_of_representative(self):
        rng = random.Random(600)
        g = L3()
        for _ in range(100):
            letters = random_word(rng, g, 4)
            base = GroupElement(g, letters)
            padded = GroupElement(g, letters + (("w", 1), ("w", -1)))
            assert cyclic_reduce(base).h == cyclic_reduce(padded).h


class TestPureFactors:
    def test_two_singleton_blocks(self):
        g = C4()
        factorization = pure_factors(el(g, "a b"))
        rendered = [(str(root), exp) for root, exp in factorization.factors]
        assert rendered == [("a", 1), ("b", 1)]

    def test_free_group_square(self):
        free2 = Graph(["u", "v"])
        factorization = pure_factors(el(free2, "u v u v"))
        rendered = [(str(root), exp) for root, exp in factorization.factors]
        assert rendered == [("u v", 2)]

    def test_mixed_powers(self):
        g = C4()
        factorization = pure_factors(el(g, "a a b b b"))
        rendered = [(str(root), exp) for root, exp in factorization.factors]
        assert rendered == [("a", 2), ("b", 3)]

    def test_rejects_non_cyclically_reduced(self):
        g = C4()
        with pytest.raises(ValueError):
            pure_factors(el(g, "a c a'"))

    def test_reconstruction_and_block_invariants(self):
        rng = random.Random(424242)
        for graph in (C4(), L3()):
            for _ in range(200):
                h = cyclic_reduce(GroupElement(graph, random_word(rng, graph, 5))).h
                factorization = pure_factors(h)
                assert factorization.reconstruct(graph) == h
                supports = [root.support() for root, _ in factorization.factors]
                for s1, s2 in itertools.combinations(supports, 2):
                    assert not (s1 & s2)
                for root, exp in factorization.factors:
                    assert exp >= 1
                for (r1, e1), (r2, e2) in itertools.combinations(factorization.factors, 2):
                    assert group_commute(r1, r2)

    def brute_force_is_proper_power(self, element):
        # Independent oracle: scan every raw signed word of each dividing
        # length for an exact power.
        n = element.length
        alphabet = signed_alphabet(element.graph)
        for k in range(2, n + 1):
            if n % k:
                continue
            for combo in itertools.product(alphabet, repeat=n // k):
                candidate = GroupElement(element.graph, combo)
                if candidate**k == element:
                    return True
        return False

    def test_factors_are_primitive_by_independent_oracle(self):
        rng = random.Random(8888)
        for graph in (C4(), L3()):
            for _ in range(40):
                h = cyclic_reduce(GroupElement(graph, random_word(rng, graph, 4))).h
                for root, exp in pure_factors(h).factors:
                    if root.length <= 4:
                        assert not self.brute_force_is_proper_power(root)


class TestCentralizerWitness:
    def test_non_adjacent_generators_proved_non_commuting(self):
        g = C4()
        out = centralizer_witness(el(g, "a"), el(g, "c"))
        assert out.status == "proved-non-commuting"

    def test_witness_for_power_times_commuting_part(self):
        g = C4()
        out = centralizer_witness(el(g, "a"), el(g, "a a b"))
        assert out.found
        assert out.reconstruct() == el(g, "a a b")
        assert commutes_totally(out.witness.k2, out.decomposition.h)

    def test_witness_in_free_group(self):
        free2 = Graph(["u", "v"])
        out = centralizer_witness(el(free2, "u v"), el(free2, "u v u v"))
        assert out.found
        assert out.reconstruct() == el(free2, "u v u v")

    def test_agrees_with_commutation_exhaustively_small(self):
        g = L3()
        ball = set()
        alphabet = signed_alphabet(g)
        for length in range(3):
            for combo in itertools.product(alphabet, repeat=length):
                ball.add(GroupElement(g, combo))
        ball = sorted(ball, key=lambda e: (e.length, e.letters))
        for a in ball:
            for b in ball:
                out = centralizer_witness(a, b)
                assert out.found == group_commute(a, b)
                assert out.status != "no-witness-within-bound"
                if out.found:
                    assert out.reconstruct() == b

import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pseudopal import attractor, directive, words
from pseudopal.attractor import Attractor, SizeClass, attractor_of
from pseudopal.errors import ClassMismatchError
from pseudopal.words import ClosureKind

import oracles

R, E = ClosureKind.R, ClosureKind.E

binary_words = st.text(alphabet="01", min_size=1, max_size=14)


def fibonacci_chain(steps=5):
    return directive.generate(directive.parse("(01)", "(R)"), steps)


def rote_chain_one(steps=7):
    return directive.generate(directive.parse("0011001", "RRERERE"), steps)


def rote_chain_two(steps=9):
    return directive.generate(directive.parse("001100001", "RRERERRRE"), steps)


class TestAttractorType:
    def test_positions_must_fit_word(self):
        with pytest.raises(ValueError):
            Attractor((0, 6), 6)
        with pytest.raises(ValueError):
            Attractor((2, 1), 6)
        with pytest.raises(ValueError):
            Attractor((-1, 2), 6)
        with pytest.raises(ValueError):
            Attractor((), 0)

    def test_attractor_of_sorts_and_deduplicates(self):
        assert attractor_of([3, 1, 3], 6).positions == (1, 3)

    def test_json(self):
        assert attractor_of([3, 1], 6).to_json_obj() == [1, 3]


class TestVerify:
    def test_paper_example(self):
        assert attractor.verify("010010", attractor_of([1, 3], 6)).valid

    def test_invalid_with_witness(self):
        report = attractor.verify("010010", attractor_of([0, 1], 6))
        assert not report.valid
        assert report.witness == "00"

    def test_single_letter(self):
        assert attractor.verify("0", attractor_of([0], 1)).valid

    def test_word_length_mismatch(self):
        with pytest.raises(ValueError):
            attractor.verify("0101", attractor_of([1], 3))

    def test_empty_gamma_fails_with_lexicographic_letter_witness(self):
        report = attractor.verify("10", attractor_of([], 2))
        assert not report.valid and report.witness == "0"

    def test_empty_word_rejected(self):
        with pytest.raises(ValueError):
            attractor.verify("", Attractor((), 1))

    @settings(max_examples=400)
    @given(binary_words, st.data())
    def test_matches_naive_checker(self, word, data):
        size = data.draw(st.integers(min_value=0, max_value=min(3, len(word))))
        positions = tuple(sorted(data.draw(
            st.sets(st.integers(min_value=0, max_value=len(word) - 1), min_size=size, max_size=size)
        )))
        report = attractor.verify(word, Attractor(positions, len(word)))
        assert report.valid == oracles.naive_is_attractor(positions, word)
        assert report.witness == oracles.naive_witness(positions, word)

    def test_witness_is_recheckable(self):
        word = "0110100110010110"
        report = attractor.verify(word, attractor_of([0], len(word)))
        assert not report.valid
        occurrences = oracles.occurrence_sets(word)[report.witness]
        assert not any({0} & occ for occ in occurrences)


class TestMinimalAttractor:
    def test_known_words(self):
        # {1,2} beats the construction's {1,3} lexicographically (both valid)
        assert attractor.minimal_attractor("010010").positions == (1, 2)
        assert attractor.verify("010010", attractor_of([1, 3], 6)).valid
        assert attractor.minimal_attractor("0").positions == (0,)
        assert attractor.minimal_size("00") == 1
        assert attractor.minimal_size("010010") == 2

    def test_size_two_attractor_of_the_exceptional_word(self):
        assert attractor.minimal_attractor("011001").positions == (1, 3)
        assert attractor.verify("011001", attractor_of([2, 4], 6)).valid
        assert attractor.minimal_size("011001") == 2

    def test_thue_morse_prefix_sizes_ground_truth(self):
        # lengths 8 and 16; the length-8 prefix admits a size-3 attractor
        assert attractor.minimal_attractor("01101001").positions == (0, 2, 5)
        assert oracles.naive_minimal_attractor("01101001") == [0, 2, 5]
        w5 = directive.generate(directive.parse("0(1)", "(RE)"), 5).word(5)
        assert attractor.minimal_size(w5) == 4

    def test_empty_word_rejected(self):
        with pytest.raises(ValueError):
            attractor.minimal_attractor("")

    def test_matches_naive_search_randomized(self):
        rng = random.Random(2024)
        for _ in range(150):
            word = "".join(rng.choice("01") for _ in range(rng.randint(1, 11)))
            assert list(attractor.minimal_attractor(word).positions) == oracles.naive_minimal_attractor(word)

    @settings(max_examples=200)
    @given(binary_words)
    def test_lower_bound_distinct_letters(self, word):
        assert attractor.minimal_size(word) >= len(set(word))

    def test_long_word_routes_through_arbitrary_width_search(self):
        # 70 symbols exceeds the 64-bit kernel, exercising the pure path
        chain = rote_chain_two()
        word = chain.word(9)
        assert len(word) == 70
        assert attractor.minimal_size(word) == 2


class TestSturmian:
    def test_fibonacci_attractors(self):
        chain = fibonacci_chain()
        got = [attractor.sturmian_attractor(chain, n).positions for n in range(1, 6)]
        assert got == [(0,), (0, 1), (1, 3), (3, 6), (6, 11)]

    def test_single_letter_prefixes(self):
        chain = directive.generate(directive.parse("(0)", "(R)"), 4)
        assert attractor.sturmian_attractor(chain, 4).positions == (3,)

    def test_class_gate(self):
        chain = directive.generate(directive.parse("0(1)", "(RE)"), 4)
        with pytest.raises(ClassMismatchError):
            attractor.sturmian_attractor(chain, 4)

    def test_minimality_across_all_directive_prefixes(self):
        for value in range(1 << 6):
            deltas = format(value, "06b")
            chain = directive.generate(directive.parse(deltas, "R" * 6), 6)
            for n in range(1, 7):
                word = chain.word(n)
                if len(word) > 60:
                    break
                gamma = attractor.sturmian_attractor(chain, n)
                assert attractor.verify(word, gamma).valid
                assert len(gamma.positions) == attractor.minimal_size(word)


class TestPseudostandard:
    def test_example_chain(self):
        chain = directive.generate(directive.parse("01001", "(E)"), 5)
        expected = [(0, 1), (0, 2, 3), (2, 6, 9), (2, 12, 15), (12, 15, 18)]
        for n, gamma in enumerate(expected, start=1):
            verdict = attractor.pseudostandard_attractor(chain, n)
            assert verdict.gamma.positions == gamma
            assert attractor.verify(chain.word(n), verdict.gamma).valid

    def test_example_chain_verdicts(self):
        chain = directive.generate(directive.parse("01001", "(E)"), 5)
        first = attractor.pseudostandard_attractor(chain, 1)
        assert first.size_class is SizeClass.TWO and first.is_minimal
        second = attractor.pseudostandard_attractor(chain, 2)
        assert second.size_class is SizeClass.NOT_MINIMAL_EXCEPTION
        assert second.is_minimal is False
        assert second.size_two_attractor is not None
        assert second.size_two_attractor.positions == (2, 4)
        assert attractor.verify(chain.word(2), second.size_two_attractor).valid
        third = attractor.pseudostandard_attractor(chain, 3)
        assert third.size_class is SizeClass.THREE and third.is_minimal
        assert third.size_two_attractor is None

    def test_constant_directive_collapses_to_size_two(self):
        chain = directive.generate(directive.parse("(0)", "(E)"), 6)
        for n in range(1, 7):
            verdict = attractor.pseudostandard_attractor(chain, n)
            assert verdict.size_class is SizeClass.TWO
            assert verdict.gamma.positions == ((0, 1) if n == 1 else (1, 2 * n - 2))
            assert attractor.verify(chain.word(n), verdict.gamma).valid

    def test_first_letter_one_uses_complement_symmetry(self):
        zero = directive.generate(directive.parse("01001", "(E)"), 4)
        one = directive.generate(directive.parse("10110", "(E)"), 4)
        for n in range(1, 5):
            assert one.word(n) == words.complement(zero.word(n))
            a = attractor.pseudostandard_attractor(zero, n)
            b = attractor.pseudostandard_attractor(one, n)
            assert a.gamma.positions == b.gamma.positions
            assert a.size_class is b.size_class
            assert attractor.verify(one.word(n), b.gamma).valid

    def test_class_gate_and_step_zero(self):
        chain = fibonacci_chain()
        with pytest.raises(ClassMismatchError):
            attractor.pseudostandard_attractor(chain, 2)
        e_chain = directive.generate(directive.parse("(0)", "(E)"), 2)
        with pytest.raises(ClassMismatchError):
            attractor.pseudostandard_attractor(e_chain, 0)

    def test_trichotomy_against_brute_force(self):
        # all 4-step letter prefixes, words stay short enough to brute-force
        for value in range(1 << 4):
            deltas = format(value, "04b")
            chain = directive.generate(directive.parse(deltas, "(E)"), 4)
            for n in range(1, 5):
                word = chain.word(n)
                if len(word) > 60:
                    break
                verdict = attractor.pseudostandard_attractor(chain, n)
                assert attractor.verify(word, verdict.gamma).valid
                true_min = attractor.minimal_size(word)
                if verdict.size_class is SizeClass.TWO:
                    assert len(verdict.gamma.positions) == 2 == true_min
                elif verdict.size_class is SizeClass.NOT_MINIMAL_EXCEPTION:
                    assert len(verdict.gamma.positions) == 3 and true_min == 2
                else:
                    assert len(verdict.gamma.positions) == 3 == true_min


class TestRote:
    def test_first_example_chain(self):
        chain = rote_chain_one()
        got = [attractor.rote_attractor(chain, n).positions for n in range(3, 8)]
        assert got == [(0, 2), (1, 4), (4, 7), (2, 10), (10, 18)]

    def test_second_example_chain(self):
        chain = rote_chain_two()
        assert [attractor.rote_attractor(chain, n).positions for n in range(3, 7)] == [
            (0, 2),
            (1, 4),
            (4, 7),
            (2, 10),
        ]
        assert [attractor.rote_attractor(chain, n).positions for n in (7, 8, 9)] == [
            (2, 10),
            (2, 10),
            (10, 40),
        ]

    def test_single_letter_prefixes(self):
        chain = rote_chain_one()
        assert attractor.rote_attractor(chain, 1).positions == (0,)
        assert attractor.rote_attractor(chain, 2).positions == (0,)

    def test_class_gate(self):
        chain = directive.generate(directive.parse("01", "RR"), 2)
        with pytest.raises(ClassMismatchError):
            attractor.rote_attractor(chain, 2)

    def test_soundness_and_minimality_all_valid_prefixes_to_6(self):
        pair_options = [(d, k) for d in "01" for k in (R, E)]
        for combo in product(pair_options, repeat=6):
            deltas = "".join(d for d, _ in combo)
            kinds = tuple(k for _, k in combo)
            if not directive.is_rote_valid_prefix(deltas, kinds):
                continue
            thetas = "".join(k.value for k in kinds)
            chain = directive.generate(directive.parse(deltas, thetas), 6)
            for n in range(1, 7):
                word = chain.word(n)
                gamma = attractor.rote_attractor(chain, n)
                assert attractor.verify(word, gamma).valid, (deltas, thetas, n)
                assert len(gamma.positions) == len(set(word))
                if len(word) <= 60:
                    assert attractor.minimal_size(word) == len(set(word))


class TestMirror:
    def test_arithmetic(self):
        assert attractor.mirror(attractor_of([1, 3], 6)).positions == (2, 4)
        assert attractor.mirror(attractor_of([0, 2], 4)).positions == (1, 3)
        assert attractor.mirror(attractor_of([2, 10], 20)).positions == (9, 17)

    def test_mirrored_attractors_stay_valid_on_pseudopalindromes(self):
        chain = rote_chain_one()
        for n in range(3, 8):
            gamma = attractor.rote_attractor(chain, n)
            assert attractor.verify(chain.word(n), attractor.mirror(gamma)).valid

import math
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prefseq.words import (
    Word,
    alternating_word,
    decode,
    encode,
    format_digits,
    is_alternating,
    parse_digits,
    translate,
)


def all_words(q, length):
    return [Word(w, q) for w in product(range(q), repeat=length)]


words_strategy = st.integers(min_value=2, max_value=6).flatmap(
    lambda q: st.tuples(
        st.just(q),
        st.lists(st.integers(min_value=0, max_value=q - 1), min_size=1, max_size=8),
    )
)


class TestEncodeDecode:
    def test_zero_word(self):
        assert encode(Word((0, 0, 0), 3)) == 0

    def test_positional_arithmetic(self):
        assert encode(Word((2, 1), 3)) == 7

    def test_decode_examples(self):
        assert decode(0, 3, 3) == Word((0, 0, 0), 3)
        assert decode(7, 3, 2) == Word((2, 1), 3)

    def test_roundtrip_exhaustive_q3_len4(self):
        # independent oracle: base-3 int parsing of the digit string
        for w in all_words(3, 4):
            idx = int("".join(map(str, w.digits)), 3)
            assert encode(w) == idx
            assert decode(idx, 3, 4) == w

    @pytest.mark.parametrize("q", [2, 3, 4])
    @pytest.mark.parametrize("length", [1, 2, 3, 4, 5])
    def test_bijection_exhaustive(self, q, length):
        seen = {encode(w) for w in all_words(q, length)}
        assert seen == set(range(q**length))
        for idx in range(q**length):
            assert encode(decode(idx, q, length)) == idx

    @given(words_strategy)
    def test_roundtrip_random(self, qw):
        q, digits = qw
        w = Word(tuple(digits), q)
        assert decode(encode(w), q, len(w)) == w

    def test_decode_out_of_range(self):
        with pytest.raises(ValueError):
            decode(27, 3, 3)
        with pytest.raises(ValueError):
            decode(-1, 3, 3)


class TestWordValidation:
    def test_rejects_small_alphabet(self):
        with pytest.raises(ValueError):
            Word((0,), 1)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Word((), 3)

    def test_rejects_out_of_range_digit(self):
        with pytest.raises(ValueError):
            Word((0, 3), 3)


class TestTranslate:
    def test_examples(self):
        assert translate(Word((0, 1, 2), 3), 1) == Word((1, 2, 0), 3)
        assert translate(Word((0, 0, 0, 0), 3), 2) == Word((2, 2, 2, 2), 3)

    def test_identity(self):
        w = Word((0, 2, 1), 3)
        assert translate(w, 0) == w

    @given(words_strategy, st.data())
    def test_group_action(self, qw, data):
        q, digits = qw
        w = Word(tuple(digits), q)
        a = data.draw(st.integers(min_value=0, max_value=q - 1))
        b = data.draw(st.integers(min_value=0, max_value=q - 1))
        assert translate(translate(w, a), b) == translate(w, (a + b) % q)

    def test_orbit_size_exhaustive_q3_len3(self):
        for w in all_words(3, 3):
            orbit = {translate(w, c) for c in range(3)}
            assert len(orbit) == 3


class TestAlternating:
    def test_binary_alternating(self):
        assert is_alternating(Word((0, 1, 0, 1), 2), 1)

    def test_constant_word_increment_zero(self):
        assert is_alternating(Word((0, 0, 0), 3), 0)
        assert not is_alternating(Word((0, 0, 0), 3), 1)

    def test_needs_two_digits(self):
        with pytest.raises(ValueError):
            is_alternating(Word((0,), 3), 1)

    def test_alternating_word_builder(self):
        assert alternating_word(3, 0, 2, 4) == Word((0, 2, 1, 0), 3)
        assert is_alternating(alternating_word(5, 2, 3, 6), 3)

    @pytest.mark.parametrize("q", [2, 3, 4, 5])
    @pytest.mark.parametrize("length", [2, 3, 4])
    def test_census_of_alternating_words(self, q, length):
        # for each nonzero increment: exactly q alternating words (one per
        # start), forming a single translate orbit, each cycling through
        # q/gcd(q, delta) distinct digits
        for delta in range(1, q):
            alts = [w for w in all_words(q, length) if is_alternating(w, delta)]
            assert len(alts) == q
            orbit = {translate(alts[0], c) for c in range(q)}
            assert set(alts) == orbit
            period = q // math.gcd(q, delta)
            for w in alts:
                assert len(set(w.digits)) == min(period, length)


class TestFormatting:
    def test_small_alphabet_concatenates(self):
        assert format_digits((0, 2, 1), 3) == "021"
        assert parse_digits("021", 3) == (0, 2, 1)

    def test_large_alphabet_uses_commas(self):
        assert format_digits((0, 11, 4), 12) == "0,11,4"
        assert parse_digits("0,11,4", 12) == (0, 11, 4)

    def test_str_matches_format(self):
        assert str(Word((1, 0, 1), 2)) == "101"

    def test_parse_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            parse_digits("031", 3)
        with pytest.raises(ValueError):
            parse_digits("", 3)

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import words
from oracles import naive_is_piece
from trigroups.smallcancel import (
    Decomposition,
    PieceIndex,
    find_decomposition,
    interval_alphas,
    is_piece,
    locate,
    parse_decomposition,
    verify_decomposition,
    verify_table2,
)
from trigroups.tables import TABLE2, W13_HEX_ALPHAS, W13_NONPIECES, table1_row
from trigroups.words import Interval, Word, invert, parse_fragment, parse_interval, parse_word


def row_word(n):
    return parse_word(table1_row(n).text)


class TestPieces:
    def test_single_syllable_is_a_piece(self):
        w = row_word(13)
        assert is_piece(w, Interval(0, 0))

    def test_whole_word_is_not_a_piece(self):
        w = row_word(13)
        assert not PieceIndex(w).is_piece(w.alphas)

    def test_completions(self):
        w = Word((1, 1, 2))
        idx = PieceIndex(w)
        # W = (xy)^2xy^2, W^-1 ~ xy(xy^2)^2
        assert idx.completions((1, 1)) == {(2,)}
        assert idx.completions((1, 2)) == {(1,), (2,)}

    @given(words(min_len=2, max_len=10), st.data())
    @settings(max_examples=200)
    def test_agrees_with_letter_oracle(self, w, data):
        n = len(w)
        start = data.draw(st.integers(0, n - 1))
        length = data.draw(st.integers(1, n))
        frag = interval_alphas(w, Interval(start, (start + length - 1) % n))
        assert PieceIndex(w).is_piece(frag) == naive_is_piece(w.alphas, frag)

    @given(words(min_len=2, max_len=12))
    @settings(max_examples=100)
    def test_extending_a_non_piece(self, w):
        idx = PieceIndex(w)
        n = len(w)
        tripled = w.alphas * 3
        for i in range(n, 2 * n):
            for k in range(1, n):
                if not idx.is_piece(tripled[i:i + k]):
                    assert not idx.is_piece(tripled[i:i + k + 1])
                    assert not idx.is_piece(tripled[i - 1:i + k])

    def test_pieces_set(self):
        w = Word((1, 1, 2))
        assert PieceIndex(w).pieces() == {(1,), (2,), (1, 2), (2, 1)}

    def test_long_interval_rejected(self):
        # [0..C] on a 13-syllable word is the whole word; nothing longer exists
        assert len(interval_alphas(row_word(13), Interval(0, 12))) == 13


class TestWord13:
    def test_hex_word_is_the_table_word(self):
        w = Word(W13_HEX_ALPHAS)
        assert locate(row_word(13), [w.alphas]) is not None

    @pytest.mark.parametrize("text", W13_NONPIECES)
    def test_non_pieces(self, text):
        assert not is_piece(Word(W13_HEX_ALPHAS), parse_interval(text))

    def test_no_three_factor_split(self):
        assert find_decomposition(row_word(13)) is None


class TestDecompositions:
    def test_parse(self):
        d = parse_decomposition("[(xy)^4]·[xy^2xy]*[xy] . [xy^2]")
        assert d.factors == ((1, 1, 1, 1), (2, 1), (1,), (2,))
        assert str(Decomposition(d.factors[:2])) == "[(xy)^4]·[xy^2xy]"

    @pytest.mark.parametrize("text", ["", "[xy", "xy]", "[[xy]]", "a[xy]", "[x]"])
    def test_parse_errors(self, text):
        with pytest.raises(ValueError):
            parse_decomposition(text)

    @pytest.mark.parametrize("n", sorted(TABLE2))
    def test_listed(self, n):
        w = row_word(n)
        d = Decomposition(tuple(parse_fragment(t) for t in TABLE2[n]))
        v = verify_decomposition(w, d)
        assert v.passed, v.reasons
        assert all(2 * len(f) >= 8 for f in d.factors)

    @pytest.mark.parametrize("n", sorted(TABLE2))
    def test_found(self, n):
        w = row_word(n)
        d = find_decomposition(w)
        assert d is not None
        assert verify_decomposition(w, d)
        assert [iv.length(len(w)) for iv in d.intervals()] == [len(f) for f in d.factors]

    def test_row_nineteen_concatenates_to_the_word(self):
        d = Decomposition(tuple(parse_fragment(t) for t in TABLE2[19]))
        assert locate(row_word(19), d.factors) is not None

    def test_failure_reasons(self):
        w = row_word(9)
        good = [parse_fragment(t) for t in TABLE2[9]]
        bad = Decomposition((good[0] + good[1], good[2]))
        v = verify_decomposition(w, bad)
        assert not v and any("expected 3" in r for r in v.reasons)
        short = Decomposition(((1, 1), (1, 1)) + tuple(good[1:]))
        v = verify_decomposition(w, short)
        assert any("length 4 < 8" in r for r in v.reasons)
        assert any("piece" in r for r in v.reasons)
        wrong = Decomposition(tuple(good[::-1]))
        assert not verify_decomposition(w, wrong)

    def test_inverse_concatenation_is_not_accepted(self):
        w = row_word(9)
        inv = invert(w)
        d = Decomposition((inv.alphas[:4], inv.alphas[4:10], inv.alphas[10:]))
        if locate(w, d.factors) is None:
            assert not verify_decomposition(w, d)

    def test_verify_table2(self):
        out = verify_table2()
        assert len(out) == 16 and all(ok for _, ok, _ in out)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            find_decomposition(row_word(9), count=0)
        with pytest.raises(ValueError):
            verify_decomposition(row_word(9), Decomposition(((),)))
        assert find_decomposition(Word((1, 2)), count=3) is None

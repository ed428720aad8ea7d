"""
Tests for the base alphabet and fragment codebook
"""
import itertools

import pytest

from models.codebook import (
    ALPHABET, Base, Codebook, DEFAULT_CODEBOOK, Fragment, base_code, fragment_index, index_fragment,
)
from models.errors import CodebookError, InvalidBase


@pytest.mark.parametrize('symbol, digit, code', [('a', 0, '00'), ('g', 1, '01'), ('c', 2, '10'), ('t', 3, '11')])
def test_base_digits_and_codes(symbol, digit, code):
    base = Base.from_symbol(symbol)
    assert base.digit == digit
    assert base_code(base) == code
    assert Base.from_digit(digit) is base


def test_base_rejects_other_symbols():
    with pytest.raises(InvalidBase) as info:
        Base.from_symbol('n', offset=7)
    assert info.value.offset == 7


@pytest.mark.parametrize('text, index', [('aaaa', 0), ('tttt', 255), ('agct', 27), ('acgt', 39)])
def test_fragment_index_examples(text, index):
    assert fragment_index(Fragment(text)) == index
    assert index_fragment(index) == Fragment(text)


def test_fragment_code_is_printable_eight_bits():
    assert DEFAULT_CODEBOOK.fragment_code('aaaa') == '00000000'
    assert DEFAULT_CODEBOOK.fragment_code('agct') == '00011011'


def test_index_out_of_range_is_rejected():
    with pytest.raises(CodebookError):
        index_fragment(256)
    with pytest.raises(CodebookError):
        index_fragment(-1)


def test_fragment_requires_four_valid_bases():
    with pytest.raises(ValueError):
        Fragment('acg')
    with pytest.raises(InvalidBase):
        Fragment('acgn')


def test_bijection_over_all_indices_and_fragments():
    for i in range(256):
        assert fragment_index(index_fragment(i)) == i
    for letters in itertools.product(ALPHABET, repeat=4):
        fragment = Fragment(''.join(letters))
        assert index_fragment(fragment_index(fragment)) == fragment


def test_code_is_concatenation_of_base_codes():
    for i in range(256):
        fragment = index_fragment(i)
        assert format(i, '08b') == ''.join(base_code(b) for b in fragment.base_list)


def test_generation_loop_matches_digit_formula(loop_codebook):
    assert loop_codebook.fragments == DEFAULT_CODEBOOK.fragments
    assert loop_codebook.fragments[0] == 'aaaa'
    assert loop_codebook.fragments[-1] == 'tttt'
    assert loop_codebook.fragments[27] == 'agct'


def test_alphabetical_order_would_give_another_table():
    alphabetical = Codebook.from_digit_formula('acgt')
    assert alphabetical.fragment_index('agct') == 0b00100111
    assert alphabetical != DEFAULT_CODEBOOK


def test_verify_accepts_default_and_rejects_duplicates():
    DEFAULT_CODEBOOK.verify()
    broken = list(DEFAULT_CODEBOOK.fragments)
    broken[1] = broken[0]
    with pytest.raises(CodebookError):
        Codebook(broken).verify()


def test_verify_rejects_swapped_entries():
    swapped = list(DEFAULT_CODEBOOK.fragments)
    swapped[0], swapped[1] = swapped[1], swapped[0]
    with pytest.raises(CodebookError):
        Codebook(swapped).verify()


def test_swapped_entries_keep_the_bijection_but_break_concatenation():
    swapped = list(DEFAULT_CODEBOOK.fragments)
    swapped[0], swapped[255] = swapped[255], swapped[0]
    book = Codebook(swapped)
    book.verify_bijection()
    with pytest.raises(CodebookError, match='base codes'):
        book.verify_concatenation()

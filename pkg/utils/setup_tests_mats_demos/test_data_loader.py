"""
Tests for FASTA parsing and sequence normalization
"""
import io

import pytest
from hypothesis import given
import hypothesis.strategies as st

from models.codebook import Base
from models.errors import InvalidBase, ParseError
from models.records import FastaRecord, NormalizationPolicy, PolicyMode
from utils.data_loader import DataLoader, normalize, parse_fasta

POLICIES = [NormalizationPolicy.strict(), NormalizationPolicy.skip(), NormalizationPolicy.replace_with(Base.C)]


def test_parse_fasta_single_record():
    assert parse_fasta(">s1 demo\nACGT\nAC\n") == [FastaRecord('s1', 'demo', 'ACGTAC')]


def test_parse_fasta_empty_and_raw():
    assert parse_fasta("") == []
    assert parse_fasta("acgt") == [FastaRecord('', '', 'acgt')]
    assert parse_fasta("ac gt\nac\n") == [FastaRecord('', '', 'acgtac')]


def test_parse_fasta_multiple_records_and_blank_lines():
    records = parse_fasta(">a first\nAC\n\n  GT  \n>b\n\nTTTT\n")
    assert records == [FastaRecord('a', 'first', 'ACGT'), FastaRecord('b', '', 'TTTT')]


def test_parse_fasta_empty_id_reports_line():
    with pytest.raises(ParseError) as info:
        parse_fasta(">ok\nACGT\n>   \nAC\n")
    assert info.value.line == 3


def test_parse_fasta_sequence_before_header():
    with pytest.raises(ParseError):
        parse_fasta("ACGT\n>s1\nAC\n")


def test_normalize_case_folding():
    assert normalize("ACGT").text == 'acgt'


def test_normalize_strict_reports_offset():
    with pytest.raises(InvalidBase) as info:
        normalize("acngt")
    assert info.value.offset == 2
    assert info.value.character == 'n'


def test_normalize_strict_keeps_original_case_in_error():
    with pytest.raises(InvalidBase) as info:
        normalize("ACNGT")
    assert info.value.character == 'N'


def test_normalize_skip_and_substitute():
    assert normalize("acngt", NormalizationPolicy.skip()).text == 'acgt'
    assert normalize("acngt", NormalizationPolicy.replace_with(Base.A)).text == 'acagt'
    assert normalize("RYacgt-", NormalizationPolicy.replace_with(Base.T)).text == 'ttacgtt'


def test_whitespace_and_digits_always_dropped():
    genbank_block = "        1 gatcctccat atacaacggt\n       61 acgt\n"
    assert normalize(genbank_block).text == 'gatcctccatatacaacggtacgt'


@pytest.mark.parametrize('text, expected', [
    ('strict', NormalizationPolicy.strict()),
    ('skip', NormalizationPolicy.skip()),
    ('substitute=G', NormalizationPolicy.replace_with(Base.G)),
])
def test_policy_parse(text, expected):
    assert NormalizationPolicy.parse(text) == expected
    assert NormalizationPolicy.parse(str(expected)) == expected


@pytest.mark.parametrize('text', ['lenient', 'substitute', 'substitute=n', 'skip=a'])
def test_policy_parse_rejects(text):
    with pytest.raises(ValueError):
        NormalizationPolicy.parse(text)


def test_policy_requires_base_for_substitute():
    with pytest.raises(ValueError):
        NormalizationPolicy(PolicyMode.SUBSTITUTE)


@given(st.text(alphabet='acgtACGTnNryRY- \n0123', max_size=300), st.sampled_from(POLICIES[1:]))
def test_normalize_is_idempotent(text, policy):
    once = normalize(text, policy)
    assert normalize(once.text, policy) == once


@given(st.text(alphabet='acgtACGTnNryRY- \n0123', max_size=300), st.sampled_from(POLICIES[1:]))
def test_lenient_policies_never_grow(text, policy):
    letters = sum(1 for ch in text if not ch.isspace() and not ch.isdigit())
    assert len(normalize(text, policy)) <= letters


@given(st.text(alphabet='acgtACGT \n', max_size=300))
def test_strict_success_keeps_every_letter(text):
    letters = sum(1 for ch in text if ch.isalpha())
    assert len(normalize(text)) == letters


def test_read_records_from_file_and_stdin(tmp_path, monkeypatch):
    path = tmp_path / 'in.fa'
    path.write_text(">x\nacgt\n")
    assert DataLoader.read_records(str(path)) == [FastaRecord('x', '', 'acgt')]
    monkeypatch.setattr('sys.stdin', io.TextIOWrapper(io.BytesIO(b">x\nacgt\n")))
    assert DataLoader.read_records('-', 'raw') == [FastaRecord('', '', '>xacgt')]


def test_load_sample_sequences(sample_fasta_path):
    sequences = DataLoader.load_sequences(sample_fasta_path)
    assert [s.name for s in sequences] == ['case1', 'case2', 'case3', 'case4', 'best64', 'worst67']
    assert sequences[3].text == 'agctaaaatt'
    assert len(sequences[5]) == 67


def test_format_fasta_wraps_lines():
    text = DataLoader.format_fasta('r1', 'a' * 130, width=60)
    assert text == '>r1\n' + 'a' * 60 + '\n' + 'a' * 60 + '\n' + 'a' * 10 + '\n'
    assert DataLoader.format_fasta('empty', '') == '>empty\n'


def test_non_ascii_bytes_are_a_parse_error(tmp_path):
    path = tmp_path / 'bad.fa'
    path.write_bytes(b">s1\nacgt\xff\xfeacgt\n")
    with pytest.raises(ParseError, match='offset 8'):
        DataLoader.read_records(str(path))


def test_strict_error_reports_character_as_written():
    # 'İ'.lower() is two characters long
    with pytest.raises(InvalidBase) as info:
        normalize('aİn')
    assert (info.value.character, info.value.offset) == ('İ', 1)


def test_substitute_replaces_each_non_base_once():
    assert normalize('aİc', NormalizationPolicy.replace_with(Base.G)).text == 'agc'

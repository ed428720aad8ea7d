import logging
import re
import sys
from typing import List, Optional

from models.errors import InvalidBase, ParseError
from models.records import FastaRecord, NormalizationPolicy, PolicyMode
from models.sequence import NucleotideSequence
from utils.settings import FASTA_LINE_WIDTH

logger = logging.getLogger(__name__)

_WHITESPACE = re.compile(r'\s+')
_ALWAYS_DROPPED = re.compile(r'[\s0-9]+')
_STRICT_REJECT = re.compile(r'[^acgt\s0-9]')
_NON_BASE = re.compile(r'[^acgt]')
_FOLD_BASES = str.maketrans('ACGT', 'acgt')

FORMATS = ('fasta', 'raw')


class DataLoader:
    """
    Utility class for turning FASTA or raw text into validated sequences.
    """

    @staticmethod
    def parse_fasta(text: str) -> List[FastaRecord]:
        """
        Parse FASTA text into records.

        Body lines are concatenated with all whitespace removed. Text without
        any '>' header is treated as one raw record with an empty id.

        Args:
            text: FASTA or raw text

        Returns:
            One record per header, in input order

        Raises:
            ParseError: for a header with an empty id or sequence text
                before the first header
        """
        lines = text.splitlines()
        if not any(line.startswith('>') for line in lines):
            body = _WHITESPACE.sub('', text)
            return [FastaRecord('', '', body)] if body else []

        records = []
        header = None
        body: List[str] = []
        for number, line in enumerate(lines, start=1):
            if line.startswith('>'):
                if header is not None:
                    records.append(FastaRecord(header[0], header[1], ''.join(body)))
                fields = line[1:].strip().split(None, 1)
                if not fields:
                    raise ParseError("header has an empty id", number)
                header = (fields[0], fields[1].strip() if len(fields) > 1 else '')
                body = []
            elif header is None:
                if line.strip():
                    raise ParseError("sequence data before the first header", number)
            else:
                body.append(_WHITESPACE.sub('', line))
        records.append(FastaRecord(header[0], header[1], ''.join(body)))
        return records

    @staticmethod
    def normalize(text: str, policy: Optional[NormalizationPolicy] = None, name: str = '') -> NucleotideSequence:
        """
        Fold case, drop whitespace and digits, and apply the ambiguity policy.

        Args:
            text: Sequence text in any case
            policy: What to do with non-ACGT characters (strict by default)
            name: Optional label carried by the resulting sequence

        Returns:
            Validated lowercase sequence

        Raises:
            InvalidBase: under strict policy, naming the first offending
                character and its offset in ``text``
        """
        policy = policy or NormalizationPolicy.strict()
        # only ACGT are folded, so offsets and rejected characters match ``text``
        lowered = text.translate(_FOLD_BASES)
        if policy.mode is PolicyMode.STRICT:
            bad = _STRICT_REJECT.search(lowered)
            if bad:
                raise InvalidBase(bad.group(), bad.start())
        cleaned = _ALWAYS_DROPPED.sub('', lowered)
        if policy.mode is PolicyMode.SKIP:
            cleaned = _NON_BASE.sub('', cleaned)
        elif policy.mode is PolicyMode.SUBSTITUTE:
            cleaned = _NON_BASE.sub(policy.substitute.symbol, cleaned)
        return NucleotideSequence(cleaned, name)

    @staticmethod
    def read_text(source: str) -> str:
        """
        Read a whole file, or standard input when source is '-', as ASCII.

        Raises:
            ParseError: naming the byte offset of the first non-ASCII byte
        """
        if source == '-':
            data = sys.stdin.buffer.read()
        else:
            with open(source, 'rb') as file:
                data = file.read()
        try:
            return data.decode('ascii', errors='strict')
        except UnicodeDecodeError as e:
            raise ParseError(f"byte 0x{data[e.start]:02x} at offset {e.start} is not ASCII") from e

    @classmethod
    def read_records(cls, source: str, fmt: str = 'fasta') -> List[FastaRecord]:
        """
        Read records from a path or standard input.

        Args:
            source: File path, or '-' for standard input
            fmt: 'fasta' (raw fallback when there is no header) or 'raw'

        Returns:
            Parsed records; raw format always yields exactly one record
        """
        if fmt not in FORMATS:
            raise ValueError(f"unknown input format {fmt!r}")
        text = cls.read_text(source)
        if fmt == 'raw':
            records = [FastaRecord('', '', _WHITESPACE.sub('', text))]
        else:
            records = cls.parse_fasta(text)
        logger.info("read %d record(s) from %s", len(records), source)
        return records

    @classmethod
    def load_sequences(cls, source: str, fmt: str = 'fasta',
                       policy: Optional[NormalizationPolicy] = None) -> List[NucleotideSequence]:
        """Read and normalize every record of a source, keeping record ids as names."""
        return [cls.normalize(r.sequence_text, policy, r.id) for r in cls.read_records(source, fmt)]

    @staticmethod
    def format_fasta(record_id: str, sequence: str, width: int = FASTA_LINE_WIDTH) -> str:
        """
        Render one FASTA record with the body wrapped at ``width`` columns.

        Args:
            record_id: Header text after '>'
            sequence: Sequence body
            width: Line width for the body

        Returns:
            The record text, newline-terminated
        """
        lines = [sequence[i:i + width] for i in range(0, len(sequence), width)]
        return f">{record_id}\n" + ''.join(line + '\n' for line in lines)


def parse_fasta(text: str) -> List[FastaRecord]:
    return DataLoader.parse_fasta(text)


def normalize(text: str, policy: Optional[NormalizationPolicy] = None) -> NucleotideSequence:
    return DataLoader.normalize(text, policy)

"""
Sequence-side domain types: validated nucleotide runs, their fragment view,
and the encoded bit stream.
"""
import re
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

import numpy as np

from models.codebook import Base, Fragment, FRAGMENT_LENGTH
from models.errors import CorruptStream, InvalidBase

_VALID_RUN = re.compile(r'[acgt]*')
_INVALID_SYMBOL = re.compile(r'[^acgt]')


@dataclass(frozen=True)
class NucleotideSequence:
    """
    An ordered run of lowercase bases over {a, g, c, t}.

    Use ``DataLoader.normalize`` to build one from arbitrary text; the
    constructor only accepts already-normalized input.
    """
    text: str = ''
    name: str = field(default='', compare=False)

    def __post_init__(self):
        if not _VALID_RUN.fullmatch(self.text):
            bad = _INVALID_SYMBOL.search(self.text)
            raise InvalidBase(bad.group(), bad.start())

    @property
    def n(self) -> int:
        return len(self.text)

    @property
    def tau(self) -> int:
        return self.n % FRAGMENT_LENGTH

    @property
    def bases(self) -> List[Base]:
        return [Base(s) for s in self.text]

    def as_bytes(self) -> np.ndarray:
        """ASCII codes of the bases as a uint8 array."""
        return np.frombuffer(self.text.encode('ascii'), dtype=np.uint8)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class FragmentView:
    """Consecutive non-overlapping 4-base fragments plus the 0..3 leftover bases."""
    fragments: Tuple[Fragment, ...]
    tail: Tuple[Base, ...]

    @property
    def n(self) -> int:
        return FRAGMENT_LENGTH * len(self.fragments) + len(self.tail)

    @property
    def tail_text(self) -> str:
        return ''.join(b.symbol for b in self.tail)


class TokenStream:
    """
    Ordered bit sequence: 9-bit fragment tokens (8 code bits, then the repeat
    flag) followed by one 2-bit code per tail base.

    Bits are held as a uint8 numpy array of 0/1 values.
    """

    def __init__(self, bits: Optional[Iterable[int]] = None):
        array = np.array(bits if bits is not None else [], dtype=np.uint8).ravel()
        if array.size and array.max() > 1:
            raise CorruptStream("token stream bits must be 0 or 1")
        self.bits = array
        self.bits.setflags(write=False)

    @classmethod
    def from_string(cls, text: str) -> 'TokenStream':
        """Parse a literal "0"/"1" string; spaces are ignored."""
        cleaned = text.replace(' ', '')
        if set(cleaned) - {'0', '1'}:
            raise CorruptStream(f"not a bit string: {text!r}")
        return cls(np.frombuffer(cleaned.encode('ascii'), dtype=np.uint8) - ord('0'))

    def to_string(self) -> str:
        return (self.bits + ord('0')).astype(np.uint8).tobytes().decode('ascii')

    def grouped(self, n: int) -> str:
        """
        Render tokens separated by spaces with the tail codes as a final group,
        e.g. "000110110 000000000 1111" for a 10-base input.
        """
        text = self.to_string()
        tail_bits = 2 * (n % FRAGMENT_LENGTH)
        token_part = text[:len(text) - tail_bits] if tail_bits else text
        groups = [token_part[i:i + 9] for i in range(0, len(token_part), 9)]
        if tail_bits:
            groups.append(text[len(text) - tail_bits:])
        return ' '.join(groups)

    def __len__(self) -> int:
        return int(self.bits.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TokenStream):
            return NotImplemented
        return np.array_equal(self.bits, other.bits)

    __hash__ = None

    def __repr__(self) -> str:
        preview = self.to_string()
        if len(preview) > 40:
            preview = preview[:40] + '...'
        return f"TokenStream({len(self)} bits: {preview})"

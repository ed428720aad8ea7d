"""
Base alphabet, 2-bit base codes and the 256-entry fragment codebook.

The alphabet order is "agct": a=0, g=1, c=2, t=3. A fragment's index is the
base-4 number formed by its four digits, most significant first, which is
exactly the order produced by the period-64/16/4/1 generation loop of the
reference encoder. Because base codes use the same digits, every 8-bit fragment
code is the concatenation of its four 2-bit base codes.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from models.errors import CodebookError, InvalidBase

ALPHABET = "agct"
FRAGMENT_LENGTH = 4
FRAGMENT_COUNT = len(ALPHABET) ** FRAGMENT_LENGTH


class Base(Enum):
    """One nucleotide symbol. The value is the lowercase symbol."""
    A = 'a'
    G = 'g'
    C = 'c'
    T = 't'

    @property
    def symbol(self) -> str:
        return self.value

    @property
    def digit(self) -> int:
        return ALPHABET.index(self.value)

    @classmethod
    def from_symbol(cls, symbol: str, offset: int = 0) -> 'Base':
        """Look up a lowercase symbol, raising InvalidBase for anything else."""
        try:
            return cls(symbol)
        except ValueError:
            raise InvalidBase(symbol, offset) from None

    @classmethod
    def from_digit(cls, digit: int) -> 'Base':
        if not 0 <= digit < len(ALPHABET):
            raise CodebookError(f"base digit out of range: {digit}")
        return cls(ALPHABET[digit])


def base_code(base: Base) -> str:
    """Return the 2-bit big-endian code of a base ("a" -> "00", "t" -> "11")."""
    return format(base.digit, '02b')


@dataclass(frozen=True)
class Fragment:
    """Exactly four lowercase bases."""
    bases: str

    def __post_init__(self):
        if len(self.bases) != FRAGMENT_LENGTH:
            raise ValueError(f"a fragment has {FRAGMENT_LENGTH} bases, got {len(self.bases)}: {self.bases!r}")
        for offset, symbol in enumerate(self.bases):
            if symbol not in ALPHABET:
                raise InvalidBase(symbol, offset)

    @property
    def base_list(self) -> Tuple[Base, ...]:
        return tuple(Base(s) for s in self.bases)

    @property
    def digits(self) -> Tuple[int, ...]:
        return tuple(ALPHABET.index(s) for s in self.bases)

    def __str__(self) -> str:
        return self.bases


class Codebook:
    """
    Bijection between the 256 fragments and the code indices 0..255.

    Instances are immutable after construction. Besides the dictionary view,
    a codebook exposes numpy lookup tables the vectorised codec uses:

    - ``value_to_index``: maps the base-4 value of a fragment's digits to its
      code index (the identity for the standard codebook)
    - ``fragment_bytes``: (256, 4) uint8 array of ASCII bases per index
    """

    def __init__(self, fragments: Sequence[str], alphabet: str = ALPHABET):
        """
        Build a codebook from its ordered fragment table.

        Args:
            fragments: Fragment text for every index, in index order
            alphabet: Symbol order defining base digits
        """
        self.alphabet = alphabet
        self.fragments: Tuple[str, ...] = tuple(fragments)
        self._index: Dict[str, int] = {}
        for i, fragment in enumerate(self.fragments):
            self._index.setdefault(fragment, i)

        self.fragment_bytes = np.zeros((len(self.fragments), FRAGMENT_LENGTH), dtype=np.uint8)
        self.value_to_index = np.zeros(FRAGMENT_COUNT, dtype=np.int64)
        for i, fragment in enumerate(self.fragments):
            encoded = fragment.encode('ascii')[:FRAGMENT_LENGTH].ljust(FRAGMENT_LENGTH, b'a')
            self.fragment_bytes[i] = np.frombuffer(encoded, dtype=np.uint8)
        for fragment, i in self._index.items():
            if len(fragment) == FRAGMENT_LENGTH and all(s in alphabet for s in fragment):
                self.value_to_index[self._digit_value(fragment)] = i

    def _digit_value(self, fragment: str) -> int:
        value = 0
        for symbol in fragment:
            value = value * len(self.alphabet) + self.alphabet.index(symbol)
        return value

    @classmethod
    def from_digit_formula(cls, alphabet: str = ALPHABET) -> 'Codebook':
        """Index = 64*d(b0) + 16*d(b1) + 4*d(b2) + d(b3)."""
        fragments = []
        for i in range(FRAGMENT_COUNT):
            digits = [(i >> shift) & 0b11 for shift in (6, 4, 2, 0)]
            fragments.append(''.join(alphabet[d] for d in digits))
        return cls(fragments, alphabet)

    @classmethod
    def from_generation_loop(cls, alphabet: str = ALPHABET) -> 'Codebook':
        """
        Run the nested codebook generation loop literally.

        Four passes over the 256 slots each append one alphabet character; the
        character advances every ``period`` slots, with the period shrinking
        64, 16, 4, 1 from pass to pass and the cursor wrapping at 4.
        """
        table: List[str] = [''] * FRAGMENT_COUNT
        cursor = 0
        period = 64
        for _ in range(FRAGMENT_LENGTH):
            for i in range(FRAGMENT_COUNT):
                table[i] += alphabet[cursor]
                if (i + 1) % period == 0:
                    cursor += 1
                if cursor == len(alphabet):
                    cursor = 0
            period //= 4
        return cls(table, alphabet)

    def fragment_index(self, fragment: Union[Fragment, str]) -> int:
        """Return the code index (0..255) of a fragment."""
        text = str(fragment)
        if text not in self._index:
            Fragment(text)
            raise CodebookError(f"fragment {text!r} is missing from the codebook")
        return self._index[text]

    def index_fragment(self, index: int) -> Fragment:
        """Return the fragment stored at a code index."""
        if not 0 <= index < len(self.fragments):
            raise CodebookError(f"code index out of range 0..{len(self.fragments) - 1}: {index}")
        return Fragment(self.fragments[index])

    def fragment_code(self, fragment: Union[Fragment, str]) -> str:
        """Return the printable 8-bit code of a fragment ("aaaa" -> "00000000")."""
        return format(self.fragment_index(fragment), '08b')

    def verify_bijection(self) -> None:
        """Raise CodebookError unless the table holds 256 distinct fragments that round-trip."""
        if len(self.fragments) != FRAGMENT_COUNT:
            raise CodebookError(f"codebook has {len(self.fragments)} entries, expected {FRAGMENT_COUNT}")
        if len(self._index) != FRAGMENT_COUNT:
            raise CodebookError("codebook maps two indices to the same fragment")
        for i, text in enumerate(self.fragments):
            try:
                fragment = Fragment(text)
            except (InvalidBase, ValueError) as e:
                raise CodebookError(f"entry {i} is not a fragment: {e}") from e
            if self.fragment_index(fragment) != i:
                raise CodebookError(f"index {i} does not round-trip")

    def verify_concatenation(self) -> None:
        """Raise CodebookError unless every 8-bit code is its four 2-bit base codes."""
        for i, text in enumerate(self.fragments):
            expected = ''.join(base_code(b) for b in Fragment(text).base_list)
            if format(i, '08b') != expected:
                raise CodebookError(f"code of {text!r} is {i:08b}, base codes give {expected}")

    def verify(self) -> None:
        """
        Check the table is a 256-entry bijection whose codes concatenate base codes.

        Raises:
            CodebookError: naming the first violated property
        """
        self.verify_bijection()
        self.verify_concatenation()

    def __len__(self) -> int:
        return len(self.fragments)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Codebook):
            return NotImplemented
        return self.alphabet == other.alphabet and self.fragments == other.fragments

    def __hash__(self) -> int:
        return hash((self.alphabet, self.fragments))

    def __repr__(self) -> str:
        return f"Codebook(alphabet={self.alphabet!r}, entries={len(self.fragments)})"


DEFAULT_CODEBOOK = Codebook.from_digit_formula()


def fragment_index(fragment: Union[Fragment, str], codebook: Codebook = DEFAULT_CODEBOOK) -> int:
    return codebook.fragment_index(fragment)


def index_fragment(index: int, codebook: Codebook = DEFAULT_CODEBOOK) -> Fragment:
    return codebook.index_fragment(index)

"""
GenBit encoder and decoder.

A sequence is cut into 4-base fragments plus n mod 4 tail bases. Each
fragment becomes a 9-bit token: its 8-bit code followed by a repeat flag.
Scanning left to right, a fragment equal to the next one is emitted once with
flag 1 and both are consumed; otherwise it is emitted with flag 0. Tail bases
follow as 2-bit codes. Runs of three or more equal fragments therefore split
into pairs plus at most one single token.

All work is vectorised over numpy arrays so megabase inputs stay fast.
"""
import logging
from typing import List, Optional, Tuple

import numpy as np

from models.codebook import Codebook, DEFAULT_CODEBOOK, Base, Fragment, ALPHABET
from models.errors import CorruptStream
from models.sequence import FragmentView, NucleotideSequence, TokenStream
from utils.settings import CODE_BITS, TOKEN_BITS, TAIL_BITS, FRAGMENT_LENGTH

logger = logging.getLogger(__name__)

_PLACE_VALUES = np.array([64, 16, 4, 1], dtype=np.int64)
_TOKEN_SHIFTS = np.arange(TOKEN_BITS - 1, -1, -1, dtype=np.int64)
_TAIL_SHIFTS = np.arange(TAIL_BITS - 1, -1, -1, dtype=np.int64)
_CODE_WEIGHTS = 1 << np.arange(CODE_BITS - 1, -1, -1, dtype=np.int64)


class GenBitCodec:
    """
    Encoder/decoder bound to one codebook.

    The module-level ``DEFAULT_CODEC`` uses the standard "agct" codebook;
    other instances exist for verification (for example a deliberately
    corrupted table in self-test).
    """

    def __init__(self, codebook: Codebook = DEFAULT_CODEBOOK):
        self.codebook = codebook
        self._digit_table = np.full(256, 255, dtype=np.uint8)
        for digit, symbol in enumerate(ALPHABET):
            self._digit_table[ord(symbol)] = digit
        self._alphabet_bytes = np.frombuffer(ALPHABET.encode('ascii'), dtype=np.uint8)

    # ------------------------------------------------------------------
    # Fragment level
    # ------------------------------------------------------------------

    @staticmethod
    def fragmentize(sequence: NucleotideSequence) -> FragmentView:
        """
        Split a sequence into consecutive 4-base fragments and a 0..3 base tail.

        Args:
            sequence: Validated input

        Returns:
            FragmentView with len(fragments) * 4 + len(tail) == n
        """
        text = sequence.text
        cut = len(text) - sequence.tau
        fragments = tuple(Fragment(text[i:i + FRAGMENT_LENGTH]) for i in range(0, cut, FRAGMENT_LENGTH))
        tail = tuple(Base(s) for s in text[cut:])
        return FragmentView(fragments, tail)

    def _fragment_indices(self, sequence: NucleotideSequence) -> Tuple[np.ndarray, np.ndarray]:
        """Return (code index per fragment, digit per tail base)."""
        digits = self._digit_table[sequence.as_bytes()]
        cut = sequence.n - sequence.tau
        fragment_digits = digits[:cut].reshape(-1, FRAGMENT_LENGTH).astype(np.int64)
        values = fragment_digits @ _PLACE_VALUES
        return self.codebook.value_to_index[values], digits[cut:].astype(np.int64)

    @staticmethod
    def _runs(indices: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Start offsets and lengths of maximal runs of equal fragment indices."""
        if indices.size == 0:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty
        starts = np.concatenate(([0], np.flatnonzero(indices[1:] != indices[:-1]) + 1))
        lengths = np.diff(np.append(starts, indices.size))
        return starts, lengths

    def _pair_tokens(self, indices: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Greedy pairwise collapse: returns (code per token, flag per token)."""
        starts, lengths = self._runs(indices)
        pairs = lengths // 2
        singles = lengths % 2
        per_run = pairs + singles
        codes = np.repeat(indices[starts], per_run)
        flags = np.ones(codes.size, dtype=np.int64)
        run_ends = np.cumsum(per_run)
        flags[run_ends[singles == 1] - 1] = 0
        return codes, flags

    def count_collapsed_pairs(self, sequence: NucleotideSequence) -> int:
        """
        Count the flag-1 tokens the encoder emits for a sequence.

        Equals the sum over maximal runs of identical fragments of
        floor(run_length / 2).
        """
        indices, _ = self._fragment_indices(sequence)
        _, lengths = self._runs(indices)
        return int((lengths // 2).sum())

    # ------------------------------------------------------------------
    # Bit level
    # ------------------------------------------------------------------

    def encode(self, sequence: NucleotideSequence) -> TokenStream:
        """
        Encode a sequence into 9-bit tokens followed by 2-bit tail codes.

        Args:
            sequence: Validated input

        Returns:
            TokenStream of exactly 9*(n - tau)/4 - 9*upsilon + 2*tau bits
        """
        indices, tail_digits = self._fragment_indices(sequence)
        codes, flags = self._pair_tokens(indices)
        token_values = (codes << 1) | flags
        token_bits = ((token_values[:, None] >> _TOKEN_SHIFTS) & 1).ravel()
        tail_bits = ((tail_digits[:, None] >> _TAIL_SHIFTS) & 1).ravel()
        stream = TokenStream(np.concatenate([token_bits, tail_bits]).astype(np.uint8))
        logger.debug("encoded %d bases as %d tokens + %d tail codes (%d bits)",
                     sequence.n, codes.size, tail_digits.size, len(stream))
        return stream

    @staticmethod
    def required_bits(bits: np.ndarray, n: int) -> Optional[int]:
        """
        Length of the payload the token grammar demands for n bases.

        Reads 9-bit tokens until n - tau bases are accounted for, then adds
        2 * tau tail bits. Returns None when the bits run out first.

        Raises:
            CorruptStream: if a flag-1 token would overshoot n - tau bases
        """
        if n < 0:
            raise CorruptStream(f"negative base count: {n}")
        tau = n % FRAGMENT_LENGTH
        fragment_total = (n - tau) // FRAGMENT_LENGTH
        token_count = 0
        if fragment_total:
            available = bits.size // TOKEN_BITS
            flags = bits[TOKEN_BITS - 1:available * TOKEN_BITS:TOKEN_BITS].astype(np.int64)
            produced = np.cumsum(1 + flags)
            k = int(np.searchsorted(produced, fragment_total))
            if k == produced.size:
                return None
            if produced[k] != fragment_total:
                raise CorruptStream(
                    f"repeat token {k} overshoots {fragment_total} fragments for n={n}")
            token_count = k + 1
        return token_count * TOKEN_BITS + tau * TAIL_BITS

    def decode(self, stream: TokenStream, n: int) -> NucleotideSequence:
        """
        Decode a token stream back into exactly n bases.

        Args:
            stream: Bits produced by encode (possibly zero-padded)
            n: Declared base count

        Returns:
            The original sequence

        Raises:
            CorruptStream: bits exhausted, flag-1 overshoot, or nonzero
                bits after the declared payload
        """
        bits = stream.bits
        needed = self.required_bits(bits, n)
        if needed is None or bits.size < needed:
            raise CorruptStream(f"bit stream exhausted: {bits.size} bits cannot hold {n} bases")
        if bits[needed:].any():
            raise CorruptStream(f"nonzero bits after the {needed}-bit payload")

        tau = n % FRAGMENT_LENGTH
        token_bits = needed - tau * TAIL_BITS
        tokens = bits[:token_bits].reshape(-1, TOKEN_BITS).astype(np.int64)
        codes = tokens[:, :CODE_BITS] @ _CODE_WEIGHTS
        repeats = 1 + tokens[:, CODE_BITS]
        fragment_ascii = self.codebook.fragment_bytes[np.repeat(codes, repeats)].ravel()

        tail = bits[token_bits:needed].reshape(-1, TAIL_BITS).astype(np.int64)
        tail_ascii = self._alphabet_bytes[tail[:, 0] * 2 + tail[:, 1]]

        text = np.concatenate([fragment_ascii, tail_ascii]).astype(np.uint8).tobytes().decode('ascii')
        logger.debug("decoded %d bits into %d bases", needed, len(text))
        return NucleotideSequence(text)

    def token_breakdown(self, stream: TokenStream, n: int) -> List[Tuple[Fragment, int]]:
        """
        List the (fragment, repeat flag) pairs carried by a stream's tokens.

        Args:
            stream: Encoded bits
            n: Declared base count

        Returns:
            One entry per 9-bit token, in stream order
        """
        needed = self.required_bits(stream.bits, n)
        if needed is None:
            raise CorruptStream(f"bit stream exhausted before {n} bases")
        token_bits = needed - (n % FRAGMENT_LENGTH) * TAIL_BITS
        tokens = stream.bits[:token_bits].reshape(-1, TOKEN_BITS).astype(np.int64)
        codes = tokens[:, :CODE_BITS] @ _CODE_WEIGHTS
        return [(self.codebook.index_fragment(int(c)), int(f)) for c, f in zip(codes, tokens[:, CODE_BITS])]


DEFAULT_CODEC = GenBitCodec()


def fragmentize(sequence: NucleotideSequence) -> FragmentView:
    return GenBitCodec.fragmentize(sequence)


def encode(sequence: NucleotideSequence) -> TokenStream:
    return DEFAULT_CODEC.encode(sequence)


def decode(stream: TokenStream, n: int) -> NucleotideSequence:
    return DEFAULT_CODEC.decode(stream, n)


def count_collapsed_pairs(sequence: NucleotideSequence) -> int:
    return DEFAULT_CODEC.count_collapsed_pairs(sequence)

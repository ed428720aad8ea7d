"""
Closed-form bit count, compression rate, the named scenarios and measured
statistics for concrete sequences.

Total bits for n bases, tau = n mod 4 tail bases and upsilon collapsed pairs:

    R = 9 * (n - tau) / 4 + 2 * tau - 9 * upsilon
"""
import logging
from typing import Dict, Optional, Union

from models.errors import ScenarioError, UndefinedRate
from models.sequence import NucleotideSequence, TokenStream
from models.stats import CompressionStats, Scenario, MIN_RATE, MAX_RATE
from utils.codec import GenBitCodec, DEFAULT_CODEC
from utils.settings import FRAGMENT_LENGTH

logger = logging.getLogger(__name__)

# Published average-case totals that disagree with the formula
PRINTED_AVERAGE_TOTALS = {66: 114}


class MetricsCalculator:
    """Evaluates the bit-count formula and measures encoded sequences."""

    @staticmethod
    def theoretical_total_bits(n: int, tau: int, upsilon: int) -> int:
        """
        Evaluate R = 9/4 (n - tau) + 2 tau - 9 upsilon.

        Args:
            n: Base count
            tau: Tail length, must equal n mod 4
            upsilon: Collapsed pairs, 0 <= upsilon <= (n - tau) / 8

        Returns:
            Exact integer bit count

        Raises:
            ScenarioError: if tau or upsilon are inconsistent with n
        """
        if n < 0:
            raise ScenarioError(f"base count must be non-negative, got {n}")
        if tau != n % FRAGMENT_LENGTH:
            raise ScenarioError(f"tau must equal n mod 4 = {n % FRAGMENT_LENGTH}, got {tau}")
        max_pairs = (n - tau) // 8
        if not 0 <= upsilon <= max_pairs:
            raise ScenarioError(f"upsilon must lie in 0..{max_pairs} for n={n}, got {upsilon}")
        return 9 * (n - tau) // 4 + 2 * tau - 9 * upsilon

    @staticmethod
    def compression_rate(total_bits: int, n: int) -> float:
        """Bits per base; undefined for an empty sequence."""
        if n < 1:
            raise UndefinedRate(f"compression rate is undefined for n={n}")
        return total_bits / n

    @classmethod
    def scenario_stats(cls, kind: Union[Scenario, str], n: int) -> CompressionStats:
        """
        Statistics for one of the named cases at length n.

        - best: tau = 0, upsilon = n/8 (needs 8 | n)
        - average: tau = 2, upsilon = (n - 2)/16 (needs n mod 4 = 2 and 16 | n - 2)
        - worst: tau = n mod 4, upsilon = 0 (any n >= 1)

        Raises:
            ScenarioError: naming the divisibility requirement that failed
        """
        kind = Scenario(kind)
        if n < 1:
            raise ScenarioError(f"{kind.value} case needs n >= 1, got {n}")

        note = ''
        if kind is Scenario.BEST:
            if n % 8:
                raise ScenarioError(f"best case needs n divisible by 8, got {n}")
            tau, upsilon = 0, n // 8
        elif kind is Scenario.AVERAGE:
            if n % FRAGMENT_LENGTH != 2 or (n - 2) % 16:
                raise ScenarioError(f"average case needs n mod 4 = 2 and (n - 2) divisible by 16, got {n}")
            tau, upsilon = 2, (n - 2) // 16
            if n in PRINTED_AVERAGE_TOTALS:
                note = f"paper prints {PRINTED_AVERAGE_TOTALS[n]}"
        else:
            tau, upsilon = n % FRAGMENT_LENGTH, 0

        total = cls.theoretical_total_bits(n, tau, upsilon)
        return CompressionStats(n, tau, upsilon, total, cls.compression_rate(total, n), note)

    @classmethod
    def scenario_envelope(cls, n: int) -> Dict[Scenario, Optional[CompressionStats]]:
        """Best/average/worst statistics for n, with None where a case does not apply."""
        envelope = {}
        for kind in Scenario:
            try:
                envelope[kind] = cls.scenario_stats(kind, n)
            except ScenarioError:
                envelope[kind] = None
        return envelope

    @classmethod
    def measure(cls, sequence: NucleotideSequence, codec: GenBitCodec = DEFAULT_CODEC,
                stream: Optional[TokenStream] = None) -> CompressionStats:
        """
        Encode a sequence and report its measured statistics.

        Args:
            sequence: Non-empty input
            codec: Codec to measure with
            stream: Already-encoded bits for this sequence, to skip re-encoding

        Raises:
            UndefinedRate: for an empty sequence
        """
        if sequence.n < 1:
            raise UndefinedRate("cannot measure an empty sequence")
        upsilon = codec.count_collapsed_pairs(sequence)
        total = len(stream if stream is not None else codec.encode(sequence))
        expected = cls.theoretical_total_bits(sequence.n, sequence.tau, upsilon)
        assert total == expected, f"encoder emitted {total} bits, formula gives {expected}"
        rate = cls.compression_rate(total, sequence.n)
        assert MIN_RATE <= rate <= MAX_RATE, f"rate {rate} outside [{MIN_RATE}, {MAX_RATE}]"
        logger.debug("measured %s: %d bits for %d bases", sequence.name or '<unnamed>', total, sequence.n)
        return CompressionStats(sequence.n, sequence.tau, upsilon, total, rate)


def theoretical_total_bits(n: int, tau: int, upsilon: int) -> int:
    return MetricsCalculator.theoretical_total_bits(n, tau, upsilon)


def compression_rate(total_bits: int, n: int) -> float:
    return MetricsCalculator.compression_rate(total_bits, n)


def scenario_stats(kind: Union[Scenario, str], n: int) -> CompressionStats:
    return MetricsCalculator.scenario_stats(kind, n)


def measure(sequence: NucleotideSequence) -> CompressionStats:
    return MetricsCalculator.measure(sequence)

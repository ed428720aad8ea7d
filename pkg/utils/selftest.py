"""
Built-in verification run by ``genbit_compress.py selftest``.
"""
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from models.bench import BenchConfig
from models.codebook import Codebook, DEFAULT_CODEBOOK
from models.sequence import NucleotideSequence
from utils.benchmark import BenchmarkRunner
from utils.codec import GenBitCodec
from utils.container import ContainerIO
from utils.metrics import MetricsCalculator

logger = logging.getLogger(__name__)

BEST_CASE_SEQUENCE = ''.join(f * 2 for f in ('acgt', 'ttga', 'aaaa', 'gcgc', 'catg', 'tttt', 'agct', 'ccaa'))
WORST_CASE_SEQUENCE = ('acgtatgc' * 8) + 'gat'


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    label: str = ''
    detail: str = ''

    def render(self) -> str:
        title = f"{self.name} = {self.label}" if self.label else self.name
        line = f"{title}: {'ok' if self.passed else 'FAILED'}"
        if self.detail and not self.passed:
            line += f" ({self.detail})"
        return line


class SelfTest:
    """
    Runs the codebook checks, the best/worst/average values and a random
    round trip through codec and container.
    """

    def __init__(self, codebook: Codebook = DEFAULT_CODEBOOK, round_trips: int = 1000, seed: int = 0):
        """
        Args:
            codebook: Table under test
            round_trips: Number of random sequences for the round-trip check
            seed: Base seed for the random sequences
        """
        self.codebook = codebook
        self.codec = GenBitCodec(codebook)
        self.round_trips = round_trips
        self.seed = seed

    def _codebook_bijection(self) -> str:
        self.codebook.verify_bijection()
        return ''

    def _codebook_concatenation(self) -> str:
        self.codebook.verify_concatenation()
        return ''

    def _codebook_generation_loop(self) -> str:
        if self.codebook != Codebook.from_generation_loop():
            raise AssertionError("table differs from the generation loop")
        return ''

    def _measured(self, text: str) -> Tuple[int, float]:
        sequence = NucleotideSequence(text)
        bits = len(self.codec.encode(sequence))
        return bits, MetricsCalculator.compression_rate(bits, sequence.n)

    def _best_case(self) -> str:
        bits, rate = self._measured(BEST_CASE_SEQUENCE)
        scenario = MetricsCalculator.scenario_stats('best', 64)
        if bits != 72 or rate != 1.125 or scenario.rate != 1.125:
            raise AssertionError(f"measured {bits} bits, rate {rate}")
        return ''

    def _worst_case(self) -> str:
        bits, rate = self._measured(WORST_CASE_SEQUENCE)
        scenario = MetricsCalculator.scenario_stats('worst', 67)
        if bits != 150 or scenario.total_bits != 150 or abs(rate - 2.2388) > 0.0005:
            raise AssertionError(f"measured {bits} bits, rate {rate:.4f}")
        return ''

    def _average_case(self) -> str:
        total = MetricsCalculator.theoretical_total_bits(66, 2, 4)
        if total != 112:
            raise AssertionError(f"formula gives {total}")
        return "paper prints 114"

    def _round_trip(self) -> str:
        densities = (0.0, 0.25, 0.5, 1.0)
        for case in range(self.round_trips):
            config = BenchConfig(case % 1001, densities[case % len(densities)], self.seed)
            sequence = BenchmarkRunner.generate_synthetic(config, case)
            stream = self.codec.encode(sequence)
            n, restored = ContainerIO.read_container(ContainerIO.write_container(sequence.n, stream))
            if self.codec.decode(restored, n).text != sequence.text:
                raise AssertionError(f"case {case} (n={sequence.n}) did not round-trip")
        return ''

    def checks(self) -> List[Tuple[str, str, Callable[[], str]]]:
        return [
            ('codebook-bijection', '', self._codebook_bijection),
            ('codebook-concatenation', '', self._codebook_concatenation),
            ('codebook-generation-loop', '', self._codebook_generation_loop),
            ('best-case-64', '1.125', self._best_case),
            ('worst-case-67', '2.2388', self._worst_case),
            ('average-case-66', '112 bits', self._average_case),
            (f'round-trip-{self.round_trips}', '', self._round_trip),
        ]

    def run(self, report: Optional[Callable[[CheckResult], None]] = None) -> List[CheckResult]:
        """
        Run every check, calling ``report`` after each one.

        Returns:
            One result per check, in order
        """
        results = []
        for name, label, check in self.checks():
            try:
                detail = check()
                result = CheckResult(name, True, label, detail)
            except Exception as e:
                logger.debug("check %s failed", name, exc_info=True)
                result = CheckResult(name, False, label, f"{type(e).__name__}: {e}")
            results.append(result)
            if report:
                report(result)
        return results

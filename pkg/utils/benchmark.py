"""
Synthetic corpus generation and bits-per-base benchmarking.

Generator
---------
Sequences come from ``numpy.random.Generator(PCG64(seed))`` and the mapping
seed -> sequence is fixed by this draw order:

1. one integer in 0..255: the first fragment's code index
2. F - 1 uniforms in [0, 1): repeat decisions for fragments 2..F
3. F - 1 integers in 0..254: offsets for fragments that are not copies
4. tau integers in 0..3: tail base digits ("agct" order)

where F = length // 4 and tau = length % 4. Fragment i copies fragment i-1
when its uniform is below the repeat density and fragment i-1 was not itself
a copy. Any other fragment is ``(previous + 1 + offset) mod 256``, which is
uniform over the 255 fragments differing from its predecessor, so adjacent
equality only ever comes from a copy and the density tracks collapsed pairs.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from models.bench import BenchConfig, BenchEntry, BenchReport
from models.codebook import ALPHABET, DEFAULT_CODEBOOK, FRAGMENT_COUNT
from models.errors import EmptyCorpus, UndefinedRate
from models.sequence import NucleotideSequence
from utils.metrics import MetricsCalculator
from utils.settings import FRAGMENT_LENGTH

logger = logging.getLogger(__name__)

_ALPHABET_BYTES = np.frombuffer(ALPHABET.encode('ascii'), dtype=np.uint8)

SWEEP_DENSITIES = tuple(round(0.1 * i, 1) for i in range(11))


class BenchmarkRunner:
    """Builds synthetic corpora and summarises their compression rates."""

    @staticmethod
    def generate_synthetic(config: BenchConfig, trial_index: int = 0) -> NucleotideSequence:
        """
        Generate one deterministic sequence.

        Args:
            config: Length, repeat density and base seed
            trial_index: Offset added to the seed

        Returns:
            Sequence named "trial-<index>"
        """
        rng = np.random.Generator(np.random.PCG64(config.trial_seed(trial_index)))
        fragment_total = config.length // FRAGMENT_LENGTH
        tau = config.length % FRAGMENT_LENGTH

        indices = np.zeros(0, dtype=np.int64)
        if fragment_total:
            first = int(rng.integers(0, FRAGMENT_COUNT))
            wants_copy = rng.random(fragment_total - 1) < config.repeat_density
            offsets = rng.integers(0, FRAGMENT_COUNT - 1, fragment_total - 1)

            # a copy cannot follow a copy: inside each run of wanted copies
            # only every other position (starting with the first) is honoured
            positions = np.arange(wants_copy.size)
            run_start = np.maximum.accumulate(np.where(~wants_copy, positions + 1, 0))
            copies = wants_copy & ((positions - run_start) % 2 == 0)

            steps = np.where(copies, 0, offsets + 1)
            indices = (first + np.concatenate(([0], np.cumsum(steps)))) % FRAGMENT_COUNT

        tail_digits = rng.integers(0, len(ALPHABET), tau)
        body = DEFAULT_CODEBOOK.fragment_bytes[indices].ravel()
        text = np.concatenate([body, _ALPHABET_BYTES[tail_digits]]).astype(np.uint8).tobytes().decode('ascii')
        return NucleotideSequence(text, f"trial-{trial_index}")

    @classmethod
    def generate_corpus(cls, config: BenchConfig) -> List[NucleotideSequence]:
        return [cls.generate_synthetic(config, t) for t in range(config.trials)]

    @staticmethod
    def run_corpus(inputs: Sequence[NucleotideSequence]) -> BenchReport:
        """
        Measure every input and attach the scenario envelope for its length.

        Raises:
            EmptyCorpus: if there are no inputs
            UndefinedRate: if an input is empty
        """
        if not inputs:
            raise EmptyCorpus("benchmark corpus is empty")
        entries = []
        for i, sequence in enumerate(inputs):
            if sequence.n == 0:
                raise UndefinedRate(f"corpus input {i + 1} is empty")
            stats = MetricsCalculator.measure(sequence)
            envelope = {kind: (s.rate if s is not None else None)
                        for kind, s in MetricsCalculator.scenario_envelope(sequence.n).items()}
            entries.append(BenchEntry(sequence.name or f"input-{i + 1}", stats, envelope))
        report = BenchReport(entries)
        logger.info("benchmarked %d input(s), mean rate %.4f", len(entries), report.mean_rate)
        return report

    @classmethod
    def run(cls, config: BenchConfig) -> BenchReport:
        return cls.run_corpus(cls.generate_corpus(config))

    @classmethod
    def sweep_densities(cls, length: int, densities: Sequence[float] = SWEEP_DENSITIES,
                        seed: int = 0, trials: int = 1) -> List[Tuple[float, float]]:
        """
        Mean measured rate for each repeat density at a fixed length.

        Returns:
            (density, mean rate) pairs in the given density order
        """
        return [(density, cls.run(BenchConfig(length, density, seed, trials)).mean_rate)
                for density in densities]


def generate_synthetic(config: BenchConfig) -> NucleotideSequence:
    return BenchmarkRunner.generate_synthetic(config)


def run_corpus(inputs: Sequence[NucleotideSequence]) -> BenchReport:
    return BenchmarkRunner.run_corpus(inputs)

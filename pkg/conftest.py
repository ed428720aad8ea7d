"""
Shared pytest fixtures for GenBit Compress.
"""
import os
import sys

import numpy as np
import pytest

# Make sure local modules can be imported
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from models.bench import BenchConfig
from models.codebook import Codebook
from utils.benchmark import BenchmarkRunner

SAMPLE_FASTA = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'sample_sequences.fasta')

CORPUS_SIZE = 10_000
CORPUS_MAX_LENGTH = 2_000
CORPUS_DENSITIES = (0.0, 0.25, 0.5, 1.0)


@pytest.fixture(scope='session')
def sample_fasta_path():
    return SAMPLE_FASTA


@pytest.fixture(scope='session')
def loop_codebook():
    """Codebook built by literally running the nested generation loop."""
    return Codebook.from_generation_loop()


@pytest.fixture(scope='session')
def random_corpus():
    """10,000 seeded sequences, lengths 0..2000, densities cycling 0 / 0.25 / 0.5 / 1.0."""
    lengths = np.random.default_rng(2024).integers(0, CORPUS_MAX_LENGTH + 1, CORPUS_SIZE)
    return [
        BenchmarkRunner.generate_synthetic(
            BenchConfig(int(length), CORPUS_DENSITIES[i % len(CORPUS_DENSITIES)], seed=i))
        for i, length in enumerate(lengths)
    ]

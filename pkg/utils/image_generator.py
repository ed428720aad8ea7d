import logging
import os
import time
from typing import List, Optional, Sequence, Tuple

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import numpy as np

from models.bench import BenchReport
from models.stats import Scenario, MIN_RATE
from utils.metrics import MetricsCalculator

logger = logging.getLogger(__name__)

TWO_BIT_BASELINE = 2.0


class ImageGenerator:
    """Generates benchmark plots for GenBit Compress."""

    @staticmethod
    def ensure_dir(directory: str) -> None:
        """Ensure directory exists."""
        if directory and not os.path.exists(directory):
            os.makedirs(directory)

    @staticmethod
    def default_path(prefix: str, length: int) -> str:
        """Timestamped PNG path under data/images."""
        return os.path.join('data', 'images', f"{prefix}_{length}_{int(time.time())}.png")

    @staticmethod
    def _envelope_lines(length: int) -> List[Tuple[str, float, str]]:
        lines = [("2-bit baseline", TWO_BIT_BASELINE, 'gray')]
        envelope = MetricsCalculator.scenario_envelope(length) if length > 0 else {}
        colours = {Scenario.BEST: 'green', Scenario.AVERAGE: 'orange', Scenario.WORST: 'red'}
        for kind, stats in envelope.items():
            if stats is not None:
                lines.append((f"{kind.value} case", stats.rate, colours[kind]))
        if not envelope.get(Scenario.BEST):
            lines.append(("best case floor", MIN_RATE, 'green'))
        return lines

    @classmethod
    def plot_rate_sweep(cls, sweep: Sequence[Tuple[float, float]], length: int,
                        path: Optional[str] = None) -> str:
        """
        Plot mean bits/base against repeat density.

        Args:
            sweep: (density, mean rate) pairs from BenchmarkRunner.sweep_densities
            length: Sequence length the sweep used
            path: Output PNG; a timestamped file under data/images by default

        Returns:
            Path to generated image file
        """
        filepath = path or cls.default_path('rate_sweep', length)
        cls.ensure_dir(os.path.dirname(filepath))

        densities = np.array([d for d, _ in sweep])
        rates = np.array([r for _, r in sweep])

        plt.figure(figsize=(8, 5))
        plt.plot(densities, rates, marker='o', color='navy', label='measured mean')
        for label, rate, colour in cls._envelope_lines(length):
            plt.axhline(rate, linestyle='--', color=colour, linewidth=1, label=f"{label} ({rate:.4f})")
        plt.title(f'GenBit rate vs repeat density (n={length})')
        plt.xlabel('Repeat density')
        plt.ylabel('Rate (bits/base)')
        plt.ylim(1.0, 2.4)
        plt.grid(True)
        plt.legend(loc='lower left', fontsize=8)

        plt.savefig(filepath, dpi=100, bbox_inches='tight')
        plt.close()
        logger.info("rate sweep plot written to %s", filepath)
        return filepath

    @classmethod
    def plot_corpus_rates(cls, report: BenchReport, path: Optional[str] = None) -> str:
        """
        Bar chart of per-input rates with the envelope for the first input's length.

        Returns:
            Path to generated image file
        """
        length = report.entries[0].stats.n
        filepath = path or cls.default_path('corpus_rates', length)
        cls.ensure_dir(os.path.dirname(filepath))

        names = [e.name for e in report.entries]
        rates = [e.stats.rate for e in report.entries]

        plt.figure(figsize=(max(6, len(names) * 0.5), 5))
        plt.bar(range(len(names)), rates, color='steelblue')
        plt.xticks(range(len(names)), names, rotation=45, ha='right', fontsize=8)
        for label, rate, colour in cls._envelope_lines(length):
            plt.axhline(rate, linestyle='--', color=colour, linewidth=1, label=f"{label} ({rate:.4f})")
        plt.axhline(report.mean_rate, color='black', linewidth=1, label=f"mean ({report.mean_rate:.4f})")
        plt.title('GenBit rate per corpus input')
        plt.ylabel('Rate (bits/base)')
        plt.ylim(1.0, 2.4)
        plt.legend(loc='lower left', fontsize=8)

        plt.savefig(filepath, dpi=100, bbox_inches='tight')
        plt.close()
        logger.info("corpus plot written to %s", filepath)
        return filepath

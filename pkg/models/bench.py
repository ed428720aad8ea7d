"""
Benchmark configuration and report models.
"""
import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from models.stats import CompressionStats, Scenario
from utils.settings import RATE_DECIMALS


@dataclass(frozen=True)
class BenchConfig:
    """
    Synthetic corpus parameters.

    Args:
        length: Bases per generated sequence
        repeat_density: Probability that a fragment copies its predecessor
        seed: Base seed; trial t uses seed + t
        trials: Number of sequences to generate
    """
    length: int
    repeat_density: float
    seed: int = 0
    trials: int = 1

    def __post_init__(self):
        if self.length < 0:
            raise ValueError(f"length must be >= 0, got {self.length}")
        if not 0.0 <= self.repeat_density <= 1.0:
            raise ValueError(f"repeat density must lie in [0, 1], got {self.repeat_density}")
        if self.seed < 0:
            raise ValueError(f"seed must be unsigned, got {self.seed}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")

    def trial_seed(self, trial_index: int) -> int:
        return self.seed + trial_index


@dataclass(frozen=True)
class BenchEntry:
    """Measured statistics for one corpus input plus the scenario rates at its length."""
    name: str
    stats: CompressionStats
    envelope: Dict[Scenario, Optional[float]] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        result = {'name': self.name}
        result.update(self.stats.to_dict())
        result['envelope'] = {
            kind.value: (round(rate, RATE_DECIMALS) if rate is not None else None)
            for kind, rate in self.envelope.items()
        }
        return result


def _format_rate(rate: Optional[float]) -> str:
    return f"{rate:.{RATE_DECIMALS}f}" if rate is not None else "n/a"


@dataclass
class BenchReport:
    """Per-input statistics, their mean rate and the best/worst envelope."""
    entries: List[BenchEntry]

    @property
    def mean_rate(self) -> float:
        return float(np.mean([e.stats.rate for e in self.entries]))

    def render_table(self) -> str:
        """Aligned text table (name, n, tau, upsilon, bits, rate) plus summary lines."""
        header = ('name', 'n', 'tau', 'upsilon', 'bits', 'rate')
        rows = [(e.name, str(e.stats.n), str(e.stats.tau), str(e.stats.upsilon),
                 str(e.stats.total_bits), _format_rate(e.stats.rate)) for e in self.entries]
        widths = [max(len(row[i]) for row in [header] + rows) for i in range(len(header))]

        def line(cells):
            first = cells[0].ljust(widths[0])
            rest = [cell.rjust(width) for cell, width in zip(cells[1:], widths[1:])]
            return '  '.join([first] + rest)

        out = [line(header), line(['-' * w for w in widths])]
        out.extend(line(row) for row in rows)
        out.append(f"mean rate: {_format_rate(self.mean_rate)} bits/base")
        seen = set()
        for entry in self.entries:
            if entry.stats.n in seen:
                continue
            seen.add(entry.stats.n)
            bounds = ' '.join(f"{kind.value}={_format_rate(rate)}" for kind, rate in entry.envelope.items())
            out.append(f"envelope n={entry.stats.n}: {bounds}")
        return '\n'.join(out)

    def to_dict(self) -> Dict:
        return {
            'entries': [e.to_dict() for e in self.entries],
            'mean_rate': round(self.mean_rate, RATE_DECIMALS),
            'unit': 'bits/base',
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from utils.settings import RATE_DECIMALS

# Rate envelope in bits per base: every collapsed pair reaches the floor,
# and only tau = 0 with no collapses reaches the ceiling.
MIN_RATE = 1.125
MAX_RATE = 2.25


class Scenario(Enum):
    """The three named cases of the closed-form analysis."""
    BEST = 'best'
    AVERAGE = 'average'
    WORST = 'worst'


@dataclass(frozen=True)
class CompressionStats:
    """
    Measurement record: base count, tail length, collapsed pairs, total bits
    and bits per base.
    """
    n: int
    tau: int
    upsilon: int
    total_bits: int
    rate: Optional[float]
    note: str = ''

    def summary(self) -> str:
        """One-line form, e.g. "n=8 tau=0 upsilon=1 bits=9 rate=1.1250"."""
        rate = f"{self.rate:.{RATE_DECIMALS}f}" if self.rate is not None else "n/a"
        line = f"n={self.n} tau={self.tau} upsilon={self.upsilon} bits={self.total_bits} rate={rate}"
        if self.note:
            line += f" ({self.note})"
        return line

    def to_dict(self) -> Dict:
        """Convert to a JSON-ready dictionary; the rate is rounded to 4 decimals."""
        result = {
            'n': self.n,
            'tau': self.tau,
            'upsilon': self.upsilon,
            'bits': self.total_bits,
            'rate': round(self.rate, RATE_DECIMALS) if self.rate is not None else None,
            'unit': 'bits/base',
        }
        if self.note:
            result['note'] = self.note
        return result

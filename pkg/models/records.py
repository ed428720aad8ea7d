"""
Ingestion-side domain types: parsed FASTA records and the policy deciding
what happens to characters outside {a, c, g, t}.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from models.codebook import Base
from models.errors import InvalidBase


@dataclass(frozen=True)
class FastaRecord:
    """
    One sequence record.

    Raw (headerless) input produces a single record whose id and
    description are empty.
    """
    id: str
    description: str
    sequence_text: str


class PolicyMode(Enum):
    STRICT = 'strict'
    SKIP = 'skip'
    SUBSTITUTE = 'substitute'


@dataclass(frozen=True)
class NormalizationPolicy:
    """
    strict rejects any non-ACGT letter, skip drops it, substitute replaces it
    with a fixed base.
    """
    mode: PolicyMode = PolicyMode.STRICT
    substitute: Optional[Base] = None

    def __post_init__(self):
        if self.mode is PolicyMode.SUBSTITUTE and not isinstance(self.substitute, Base):
            raise ValueError("substitute policy needs a replacement base")
        if self.mode is not PolicyMode.SUBSTITUTE and self.substitute is not None:
            raise ValueError(f"{self.mode.value} policy takes no replacement base")

    @classmethod
    def strict(cls) -> 'NormalizationPolicy':
        return cls(PolicyMode.STRICT)

    @classmethod
    def skip(cls) -> 'NormalizationPolicy':
        return cls(PolicyMode.SKIP)

    @classmethod
    def replace_with(cls, base: Base) -> 'NormalizationPolicy':
        return cls(PolicyMode.SUBSTITUTE, base)

    @classmethod
    def parse(cls, text: str) -> 'NormalizationPolicy':
        """
        Parse the command-line spelling: "strict", "skip" or "substitute=<base>".

        Raises:
            ValueError: for an unknown mode or replacement base
        """
        mode, _, argument = text.strip().lower().partition('=')
        if mode == PolicyMode.SUBSTITUTE.value:
            try:
                return cls.replace_with(Base.from_symbol(argument))
            except InvalidBase:
                raise ValueError(f"substitute needs one of a, c, g, t, got {argument!r}") from None
        if argument:
            raise ValueError(f"policy {mode!r} takes no argument")
        try:
            return cls(PolicyMode(mode))
        except ValueError:
            raise ValueError(f"unknown policy {text!r}; use strict, skip or substitute=<base>") from None

    def __str__(self) -> str:
        if self.mode is PolicyMode.SUBSTITUTE:
            return f"substitute={self.substitute.symbol}"
        return self.mode.value

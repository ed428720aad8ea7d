"""
Exception hierarchy for GenBit Compress.

Class names are what the command line prints, so they follow the names used
for each failure rather than the usual ``...Error`` suffix.
"""
from typing import Optional


class GenBitError(Exception):
    """Base class for every failure raised by the codec, container and ingest layers."""


class CodebookError(GenBitError, ValueError):
    """The fragment table is not a valid 256-entry bijection."""


class InvalidBase(GenBitError):
    """A character outside {a, c, g, t} reached a strict normalization."""

    def __init__(self, character: str, offset: int):
        self.character = character
        self.offset = offset
        super().__init__(f"invalid base {character!r} at offset {offset}")


class ParseError(GenBitError):
    """Malformed FASTA input."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CorruptStream(GenBitError):
    """The bit stream does not follow the token grammar for the declared length."""


class TruncatedFile(CorruptStream):
    """A container ended before its header or payload was complete."""


class FramingError(GenBitError, ValueError):
    """A bit count does not fit the byte buffer it is supposed to describe."""


class BadMagic(GenBitError):
    """The file does not start with the GBC1 magic."""


class UnsupportedVersion(GenBitError):
    """The container declares a format version this build cannot read."""


class UndefinedRate(GenBitError, ZeroDivisionError):
    """A compression rate was requested for an empty sequence."""


class EmptyCorpus(GenBitError):
    """A benchmark was asked to summarise zero inputs."""


class ScenarioError(GenBitError, ValueError):
    """Arguments violate the preconditions of the closed-form bit count."""

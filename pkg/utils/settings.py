"""
Constants and environment overrides for GenBit Compress.

There are no config files; anything tunable is read from the environment
with a built-in fallback.
"""
import logging
import os

# GBC1 container layout: magic, version byte, 8-byte big-endian base count
CONTAINER_MAGIC = b"GBC1"
CONTAINER_VERSION = 0x01
HEADER_FORMAT = ">4sBQ"
HEADER_SIZE = 13

# Token grammar
CODE_BITS = 8
TOKEN_BITS = CODE_BITS + 1
TAIL_BITS = 2
FRAGMENT_LENGTH = 4

# Reporting
RATE_DECIMALS = 4
DEFAULT_POLICY = "strict"
FASTA_LINE_WIDTH = int(os.environ.get('GENBIT_FASTA_WIDTH', '60'))
LOG_LEVEL = os.environ.get('GENBIT_LOG_LEVEL', 'WARNING').upper()

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(verbose: bool = False) -> None:
    """
    Configure the root logger for command-line use.

    Args:
        verbose: Force DEBUG output regardless of GENBIT_LOG_LEVEL
    """
    level = logging.DEBUG if verbose else getattr(logging, LOG_LEVEL, logging.WARNING)
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)

"""
GBC1 on-disk framing.

    offset  size  field
    0       4     magic "GBC1"
    4       1     version (0x01)
    5       8     base count n, big-endian unsigned
    13      ...   payload bits packed MSB-first, zero-padded to a byte

The payload length is not stored: n and the token grammar determine it.
"""
import logging
import struct
from typing import Tuple

import numpy as np

from models.errors import BadMagic, CorruptStream, FramingError, TruncatedFile, UnsupportedVersion
from models.sequence import TokenStream
from utils.codec import GenBitCodec
from utils.settings import CONTAINER_MAGIC, CONTAINER_VERSION, HEADER_FORMAT, HEADER_SIZE

logger = logging.getLogger(__name__)


class ContainerIO:
    """Pack, unpack, write and read GBC1 containers."""

    @staticmethod
    def pack_bits(stream: TokenStream) -> bytes:
        """Pack bits MSB-first; the final partial byte is zero-padded on the right."""
        return np.packbits(stream.bits).tobytes()

    @staticmethod
    def unpack_bits(data: bytes, bit_count: int) -> TokenStream:
        """
        Recover the first ``bit_count`` bits of a packed buffer.

        Args:
            data: Packed bytes
            bit_count: Number of meaningful bits; must end inside the last byte

        Returns:
            The unpacked bits

        Raises:
            FramingError: if bit_count does not fit the buffer
            CorruptStream: if any padding bit is set
        """
        size = len(data)
        if bit_count < 0 or bit_count > 8 * size or (size and bit_count <= 8 * (size - 1)):
            raise FramingError(f"{bit_count} bits do not frame a {size}-byte buffer")
        bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
        if bits[bit_count:].any():
            raise CorruptStream(f"padding bits after bit {bit_count} are not zero")
        return TokenStream(bits[:bit_count])

    @classmethod
    def write_container(cls, n: int, stream: TokenStream) -> bytes:
        """
        Serialize an encoded stream.

        Args:
            n: Base count of the encoded sequence
            stream: Encoded bits

        Returns:
            Header followed by the packed payload
        """
        return struct.pack(HEADER_FORMAT, CONTAINER_MAGIC, CONTAINER_VERSION, n) + cls.pack_bits(stream)

    @classmethod
    def read_container(cls, data: bytes) -> Tuple[int, TokenStream]:
        """
        Parse a container back into (n, bits).

        Raises:
            BadMagic: the first bytes are not "GBC1"
            UnsupportedVersion: the version byte is not 0x01
            TruncatedFile: header or payload ends early
            CorruptStream: grammar violation, set padding bits or trailing bytes
        """
        magic = data[:len(CONTAINER_MAGIC)]
        if magic != CONTAINER_MAGIC[:len(magic)]:
            raise BadMagic(f"expected magic {CONTAINER_MAGIC!r}, found {bytes(magic)!r}")
        if len(data) < HEADER_SIZE:
            if len(data) > len(CONTAINER_MAGIC) and data[len(CONTAINER_MAGIC)] != CONTAINER_VERSION:
                raise UnsupportedVersion(f"container version {data[len(CONTAINER_MAGIC)]} is not supported")
            raise TruncatedFile(f"header needs {HEADER_SIZE} bytes, file has {len(data)}")

        _, version, n = struct.unpack_from(HEADER_FORMAT, data)
        if version != CONTAINER_VERSION:
            raise UnsupportedVersion(f"container version {version} is not supported")

        payload = bytes(data[HEADER_SIZE:])
        available = np.unpackbits(np.frombuffer(payload, dtype=np.uint8))
        needed = GenBitCodec.required_bits(available, n)
        if needed is None or needed > available.size:
            raise TruncatedFile(f"payload of {len(payload)} bytes is too short for {n} bases")
        expected_bytes = (needed + 7) // 8
        if len(payload) > expected_bytes:
            raise CorruptStream(f"{len(payload) - expected_bytes} unexpected trailing byte(s)")
        logger.debug("container: n=%d, %d payload bits", n, needed)
        return n, cls.unpack_bits(payload, needed)

    @classmethod
    def save(cls, path: str, n: int, stream: TokenStream) -> int:
        """Write a container file and return its size in bytes."""
        data = cls.write_container(n, stream)
        with open(path, 'wb') as file:
            file.write(data)
        return len(data)

    @classmethod
    def load(cls, path: str) -> Tuple[int, TokenStream]:
        """Read a container file."""
        with open(path, 'rb') as file:
            return cls.read_container(file.read())


def pack_bits(stream: TokenStream) -> bytes:
    return ContainerIO.pack_bits(stream)


def unpack_bits(data: bytes, bit_count: int) -> TokenStream:
    return ContainerIO.unpack_bits(data, bit_count)


def write_container(n: int, stream: TokenStream) -> bytes:
    return ContainerIO.write_container(n, stream)


def read_container(data: bytes) -> Tuple[int, TokenStream]:
    return ContainerIO.read_container(data)

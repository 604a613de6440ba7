"""Bit-exact LIN 2.x data-link codec.

Frames are serialized to bit cells (one entry per bit period, 0 = dominant,
1 = recessive) in UART 8N1 framing: start bit, eight data bits LSB first,
stop bit. The protected identifier carries the LIN 2.x parity bits
P0 = ID0^ID1^ID2^ID4 and P1 = ~(ID1^ID3^ID4^ID5); the trailing checksum is
the inverted add-with-carry sum (classic over data only, enhanced seeded
with the PID). Diagnostic identifiers 0x3C/0x3D always use the classic model.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SYNC_BYTE = 0x55
MIN_BREAK_BITS = 13
DIAGNOSTIC_IDS = (0x3C, 0x3D)

CLASSIC = "classic"
ENHANCED = "enhanced"


class LinDecodeError(Exception):
    """Base for response-decoding diagnostics; carries the failing byte index."""

    def __init__(self, byte_index: int, message: str):
        self.byte_index = byte_index
        super().__init__(message)


class FramingError(LinDecodeError):
    """Start bit not dominant or stop bit not recessive."""


class ChecksumMismatch(LinDecodeError):
    """Decoded checksum byte disagrees with the recomputed checksum."""

    def __init__(self, byte_index: int, expected: int, received: int):
        self.expected = expected
        self.received = received
        super().__init__(byte_index,
                         f"checksum mismatch at byte {byte_index}: "
                         f"expected 0x{expected:02X}, got 0x{received:02X}")


def compute_pid(frame_id: int) -> int:
    """Protected identifier: two parity bits over the 6-bit frame id."""
    if not 0 <= frame_id <= 63:
        raise ValueError(f"frame id {frame_id} outside 0..63")
    b = [(frame_id >> i) & 1 for i in range(6)]
    p0 = b[0] ^ b[1] ^ b[2] ^ b[4]
    p1 = ~(b[1] ^ b[3] ^ b[4] ^ b[5]) & 1
    return frame_id | (p0 << 6) | (p1 << 7)


def frame_id_of(pid: int) -> int:
    return pid & 0x3F


def default_checksum_model(frame_id: int) -> str:
    return CLASSIC if frame_id in DIAGNOSTIC_IDS else ENHANCED


def checksum(data: bytes | list[int], model: str, pid: int = 0) -> int:
    """LIN checksum: add-with-carry sum of the bytes, inverted.

    The enhanced model seeds the sum with the PID; classic ignores it.
    """
    if len(data) < 1 or len(data) > 8:
        raise ValueError(f"data length {len(data)} outside 1..8")
    if model not in (CLASSIC, ENHANCED):
        raise ValueError(f"unknown checksum model {model!r}")
    total = pid & 0xFF if model == ENHANCED else 0
    for b in data:
        total += b & 0xFF
        if total > 0xFF:
            total = (total & 0xFF) + 1
    return (~total) & 0xFF


@dataclass(frozen=True)
class HeaderFrame:
    """Master header: break field, sync byte 0x55, protected identifier."""

    frame_id: int
    break_bits: int = MIN_BREAK_BITS

    def __post_init__(self) -> None:
        compute_pid(self.frame_id)  # range check
        if self.break_bits < MIN_BREAK_BITS:
            raise ValueError(f"break field needs >= {MIN_BREAK_BITS} bits, "
                             f"got {self.break_bits}")

    @property
    def pid(self) -> int:
        return compute_pid(self.frame_id)

    @property
    def sync(self) -> int:
        return SYNC_BYTE


@dataclass(frozen=True)
class ResponseFrame:
    """Slave response: 1..8 data bytes plus the trailing checksum byte."""

    data: bytes
    pid: int
    checksum_model: str = ENHANCED
    checksum: int = field(default=-1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "data", bytes(self.data))
        expected = checksum(self.data, self.checksum_model, self.pid)
        if self.checksum < 0:
            object.__setattr__(self, "checksum", expected)
        elif self.checksum != expected:
            raise ValueError(
                f"checksum 0x{self.checksum:02X} inconsistent with data "
                f"(expected 0x{expected:02X})")

    @classmethod
    def build(cls, data: bytes, frame_id: int, model: str | None = None) -> "ResponseFrame":
        """Frame for a 6-bit id; checksum model defaults by id class."""
        if model is None:
            model = default_checksum_model(frame_id)
        return cls(data=bytes(data), pid=compute_pid(frame_id), checksum_model=model)


def _byte_cells(value: int) -> list[int]:
    return [0] + [(value >> i) & 1 for i in range(8)] + [1]


def serialize_byte(value: int) -> np.ndarray:
    """UART 8N1 framing: 10 cells per byte."""
    return np.array(_byte_cells(value & 0xFF), dtype=np.uint8)


def serialize_response(frame: ResponseFrame, inter_byte_bits: int = 0) -> np.ndarray:
    """Data bytes then checksum, each in UART framing, back to back."""
    cells: list[int] = []
    gap = [1] * inter_byte_bits
    for i, b in enumerate(frame.data):
        if i:
            cells += gap
        cells += _byte_cells(b)
    cells += gap
    cells += _byte_cells(frame.checksum)
    return np.array(cells, dtype=np.uint8)


def serialize_header(header: HeaderFrame, delimiter_bits: int = 1,
                     inter_byte_bits: int = 0) -> np.ndarray:
    """Break field, recessive delimiter, sync byte, PID byte."""
    if delimiter_bits < 1:
        raise ValueError("break delimiter needs at least one recessive bit")
    cells = [0] * header.break_bits + [1] * delimiter_bits
    cells += _byte_cells(SYNC_BYTE)
    cells += [1] * inter_byte_bits
    cells += _byte_cells(header.pid)
    return np.array(cells, dtype=np.uint8)


def header_cell_count(header: HeaderFrame, delimiter_bits: int = 1,
                      inter_byte_bits: int = 0) -> int:
    return header.break_bits + delimiter_bits + 20 + inter_byte_bits


def deframe_bytes(bits, n_bytes: int, inter_byte_bits: int = 0) -> list[int]:
    """Recover n_bytes from UART cells; raises FramingError with byte index."""
    bits = np.asarray(bits)
    stride = 10 + inter_byte_bits
    needed = n_bytes * 10 + (n_bytes - 1) * inter_byte_bits
    if len(bits) < needed:
        raise FramingError(0, f"bitstream too short: {len(bits)} cells for "
                              f"{n_bytes} bytes")
    out = []
    for i in range(n_bytes):
        cell = bits[i * stride:i * stride + 10]
        if cell[0] != 0:
            raise FramingError(i, f"byte {i}: start bit not dominant")
        if cell[9] != 1:
            raise FramingError(i, f"byte {i}: stop bit not recessive")
        value = 0
        for k in range(8):
            value |= int(cell[1 + k]) << k
        out.append(value)
    return out


def parse_response(bits, expected_len: int, model: str, pid: int,
                   inter_byte_bits: int = 0) -> ResponseFrame:
    """Inverse of serialize_response; framing and checksum are checked
    separately and reported with the failing byte index."""
    raw = deframe_bytes(bits, expected_len + 1, inter_byte_bits)
    data, received = bytes(raw[:-1]), raw[-1]
    expected = checksum(data, model, pid)
    if received != expected:
        raise ChecksumMismatch(expected_len, expected, received)
    return ResponseFrame(data=data, pid=pid, checksum_model=model, checksum=received)

"""Sample-accurate simulator of a LIN 2.x bus that multiplexes a 64-bit
CMAC onto slave response frames via an on-off-keyed 100 kHz carrier.

Subpackages:
    frames  - bit-exact LIN data-link codec (PID parity, checksums, UART cells)
    mac     - CMAC-AES128 computation, truncation and verification
    phy     - electrical configuration and sampled waveforms
    synth   - slave-side transmitter: LIN levels plus OOK carrier
    demod   - master-side receiver: band-pass, comparator, pulse counter
    bus     - wired-AND multi-node bus model, attack scenarios, noise sweeps
    cli     - command-line front end (simulate / figures / sweep)
"""

__version__ = "0.1.0"

from .phy import ConfigError, PhyConfig, Waveform
from .frames import (
    ChecksumMismatch,
    FramingError,
    HeaderFrame,
    ResponseFrame,
    checksum,
    compute_pid,
    parse_response,
    serialize_header,
    serialize_response,
)
from .mac import auth_message, cmac_subkeys, cmac_tag, truncate_tag, verify_tag

__all__ = [
    "ConfigError",
    "PhyConfig",
    "Waveform",
    "ChecksumMismatch",
    "FramingError",
    "HeaderFrame",
    "ResponseFrame",
    "checksum",
    "compute_pid",
    "parse_response",
    "serialize_header",
    "serialize_response",
    "auth_message",
    "cmac_subkeys",
    "cmac_tag",
    "truncate_tag",
    "verify_tag",
    "__version__",
]

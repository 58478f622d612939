"""Length-prefixed binary framing and payload codecs for the TCP pair.

Frame layout: 4-byte big-endian length (payload length + 1 for the type
byte), then the type byte, then the payload. Types::

    0x01 HELLO      scheme:1 | n:2 | exp1:4 | exp2:4 | X | [base, scheme 2]
    0x02 CHALLENGE  serialized challenge braid
    0x03 RESPONSE   32-byte digest
    0x04 VERDICT    accept:1 | round:2
    0x05 ERROR      code:1

Braids travel in the canonical encoding of :mod:`braidauth.hashing`, which is
self-delimiting. All integers are big endian.
"""

from __future__ import annotations

import socket
import struct

from .errors import EncodingError, FrameError
from .hashing import deserialize, serialize
from .protocol import SchemeIPublic, SchemeIIPublic

MSG_HELLO = 0x01
MSG_CHALLENGE = 0x02
MSG_RESPONSE = 0x03
MSG_VERDICT = 0x04
MSG_ERROR = 0x05

KNOWN_TYPES = (MSG_HELLO, MSG_CHALLENGE, MSG_RESPONSE, MSG_VERDICT, MSG_ERROR)

ERR_UNKNOWN_TYPE = 0x01
ERR_BAD_LENGTH = 0x02
ERR_MALFORMED = 0x03
ERR_PROTOCOL = 0x04

MAX_FRAME = 1 << 20

_LEN = struct.Struct(">I")
_HELLO_HEAD = struct.Struct(">BHII")
_VERDICT = struct.Struct(">BH")


def recv_exact(sock: socket.socket, count: int) -> bytes | None:
    """Read exactly ``count`` bytes, or None on a clean EOF at a boundary."""
    chunks = []
    got = 0
    while got < count:
        chunk = sock.recv(count - got)
        if not chunk:
            return None
        chunks.append(chunk)
        got += len(chunk)
    return b"".join(chunks)


def send_frame(sock: socket.socket, msg_type: int, payload: bytes = b"") -> None:
    sock.sendall(_LEN.pack(len(payload) + 1) + bytes([msg_type]) + payload)


def recv_frame(sock: socket.socket) -> tuple[int, bytes] | None:
    """Read one frame. None on clean EOF before a frame starts.

    Raises :class:`FrameError` for zero or oversized lengths, truncated
    bodies, and unknown message types.
    """
    head = recv_exact(sock, _LEN.size)
    if head is None:
        return None
    (length,) = _LEN.unpack(head)
    if length < 1 or length > MAX_FRAME:
        raise FrameError(ERR_BAD_LENGTH, f"frame length {length} outside [1, {MAX_FRAME}]")
    body = recv_exact(sock, length)
    if body is None:
        raise FrameError(ERR_BAD_LENGTH, "connection closed mid-frame")
    msg_type = body[0]
    if msg_type not in KNOWN_TYPES:
        raise FrameError(ERR_UNKNOWN_TYPE, f"unknown message type 0x{msg_type:02x}")
    return msg_type, body[1:]


def pack_hello(pub: "SchemeIPublic | SchemeIIPublic") -> bytes:
    if isinstance(pub, SchemeIPublic):
        return _HELLO_HEAD.pack(1, pub.n, pub.r, pub.s_exp) + serialize(pub.X)
    return _HELLO_HEAD.pack(2, pub.n, pub.e, pub.f) + serialize(pub.X) + serialize(pub.base)


def _split_braid(blob: bytes) -> tuple[bytes, bytes]:
    """Cut one self-delimiting braid encoding off the front of ``blob``."""
    if len(blob) < 14:
        raise FrameError(ERR_MALFORMED, "braid encoding truncated")
    n = int.from_bytes(blob[4:6], "big")
    count = int.from_bytes(blob[10:14], "big")
    size = 14 + count * 2 * n
    if len(blob) < size:
        raise FrameError(ERR_MALFORMED, "braid encoding truncated")
    return blob[:size], blob[size:]


def unpack_hello(payload: bytes) -> "SchemeIPublic | SchemeIIPublic":
    if len(payload) < _HELLO_HEAD.size:
        raise FrameError(ERR_BAD_LENGTH, "hello payload too short")
    scheme, n, exp1, exp2 = _HELLO_HEAD.unpack_from(payload)
    rest = payload[_HELLO_HEAD.size :]
    try:
        if scheme == 1:
            x_blob, rest = _split_braid(rest)
            if rest:
                raise FrameError(ERR_MALFORMED, "trailing bytes after hello")
            pub: SchemeIPublic | SchemeIIPublic = SchemeIPublic(n, exp1, exp2, deserialize(x_blob))
        elif scheme == 2:
            x_blob, rest = _split_braid(rest)
            base_blob, rest = _split_braid(rest)
            if rest:
                raise FrameError(ERR_MALFORMED, "trailing bytes after hello")
            pub = SchemeIIPublic(n, exp1, exp2, deserialize(base_blob), deserialize(x_blob))
        else:
            raise FrameError(ERR_MALFORMED, f"unknown scheme byte {scheme}")
    except EncodingError as exc:
        raise FrameError(ERR_MALFORMED, f"bad braid in hello: {exc}") from exc
    if pub.X.n != n or (scheme == 2 and pub.base.n != n):
        raise FrameError(ERR_MALFORMED, "strand count mismatch inside hello")
    if exp1 < 2 or exp2 < 2:
        raise FrameError(ERR_MALFORMED, f"exponents must be >= 2, got {exp1}, {exp2}")
    return pub


def pack_verdict(accept: bool, round_index: int) -> bytes:
    return _VERDICT.pack(int(accept), round_index)


def unpack_verdict(payload: bytes) -> tuple[bool, int]:
    if len(payload) != _VERDICT.size:
        raise FrameError(ERR_BAD_LENGTH, f"verdict payload must be {_VERDICT.size} bytes")
    accept, round_index = _VERDICT.unpack(payload)
    return bool(accept), round_index


def unpack_challenge(payload: bytes):
    try:
        return deserialize(payload)
    except EncodingError as exc:
        raise FrameError(ERR_MALFORMED, f"bad challenge braid: {exc}") from exc

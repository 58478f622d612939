"""Collision-resistant hashing of braids via a bit-exact canonical encoding.

Because the canonical form is unique per group element, hashing its
serialization gives a hash function on the group itself: words related by the
braid relations collide exactly, unrelated braids collide only if SHA-256
does. The encoding is also the wire and on-disk format for braids everywhere
in the package.

Layout (big endian throughout)::

    magic "BCF1" | n:2 bytes | inf:4 bytes signed | l:4 bytes | l factor tables

Each factor table is n entries of 2 bytes.
"""

from __future__ import annotations

import hashlib
import struct

from . import permutations as perms
from .braid import MAX_STRANDS, CanonicalForm, is_left_weighted_pair
from .errors import EncodingError

MAGIC = b"BCF1"
_HEADER = struct.Struct(">4sHiI")

DIGEST_SIZE = 32


def serialize(x: CanonicalForm) -> bytes:
    """Encode a canonical form. Injective: distinct forms give distinct bytes."""
    if not -(2**31) <= x.inf < 2**31:
        raise EncodingError("inf-overflow", f"inf {x.inf} does not fit 4 signed bytes")
    parts = [_HEADER.pack(MAGIC, x.n, x.inf, len(x.factors))]
    entry = struct.Struct(f">{x.n}H")
    for f in x.factors:
        parts.append(entry.pack(*f))
    return b"".join(parts)


def deserialize(data: bytes) -> CanonicalForm:
    """Decode and fully re-validate a canonical form.

    Raises :class:`EncodingError` with a distinct code for each failure mode;
    see the class docstring for the code list.
    """
    if len(data) < _HEADER.size:
        raise EncodingError("truncated", f"need {_HEADER.size} header bytes, got {len(data)}")
    magic, n, inf, count = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise EncodingError("bad-magic", f"expected {MAGIC!r}, got {magic!r}")
    if n < 2 or n > MAX_STRANDS:
        raise EncodingError("bad-strand-count", f"strand count {n} outside [2, {MAX_STRANDS}]")
    body = len(data) - _HEADER.size
    expected = count * 2 * n
    if body < expected:
        raise EncodingError("truncated", f"need {expected} factor bytes, got {body}")
    if body > expected:
        raise EncodingError("trailing-data", f"{body - expected} bytes past the last factor")
    entry = struct.Struct(f">{n}H")
    factors = []
    for k in range(count):
        table = entry.unpack_from(data, _HEADER.size + k * entry.size)
        if not perms.is_permutation(table):
            raise EncodingError("not-bijective", f"factor {k} is not a permutation: {table}")
        if perms.is_identity(table) or perms.is_reversal(table):
            raise EncodingError("not-canonical", f"factor {k} must not be identity or half twist")
        factors.append(table)
    for k in range(count - 1):
        if not is_left_weighted_pair(factors[k], factors[k + 1]):
            raise EncodingError("not-canonical", f"factors {k}, {k + 1} are not left weighted")
    return CanonicalForm(n, inf, tuple(factors))


def hash_braid(x: CanonicalForm) -> bytes:
    """SHA-256 of the canonical encoding; a 32-byte digest, well defined on
    group elements."""
    return hashlib.sha256(serialize(x)).digest()

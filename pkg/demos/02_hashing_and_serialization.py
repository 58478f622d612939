"""A hash function on braids, via a bit-exact canonical encoding.

A digest on group elements has to ignore how an element was spelled. The
canonical form is unique, so hashing its serialization gives exactly that;
the same bytes also serve as the wire and key-file encoding of braids.
"""

import braidauth as ba
from braidauth import deserialize, hash_braid, serialize

# The encoding of the identity on 3 strands, byte for byte:
# magic 'BCF1', strand count, twist power, factor count.
blob = serialize(ba.identity(3))
print("identity(3) encodes as:", blob.hex())

# Spellings differ, elements agree, digests agree.
u = ba.normalize(ba.word(3, "s1 s2 s1"))
v = ba.normalize(ba.word(3, "s2 s1 s2"))
print("\ndigest of s1 s2 s1:", hash_braid(u).hex()[:32], "...")
print("digest of s2 s1 s2:", hash_braid(v).hex()[:32], "...")
print("equal digests:", hash_braid(u) == hash_braid(v))

w = ba.normalize(ba.word(3, "s2"))
print("digest of s2 differs:", hash_braid(w) != hash_braid(u))

# Round trips are exact, and the decoder re-validates everything.
x = ba.normalize(ba.word(6, "s1 S3 s5 s2 S4 s1"))
print("\nround trip exact:", deserialize(serialize(x)) == x)

broken = bytearray(serialize(ba.normalize(ba.word(3, "s1"))))
broken[14:20] = b"\x00\x00\x00\x00\x00\x02"  # factor table [0, 0, 2]
try:
    deserialize(bytes(broken))
except ba.EncodingError as exc:
    print("tampered factor table rejected with code:", exc.code)

truncated = serialize(x)[:10]
try:
    deserialize(truncated)
except ba.EncodingError as exc:
    print("truncated blob rejected with code:", exc.code)

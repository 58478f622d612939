"""Challenge-response identification on braids, both schemes.

Scheme 1: the prover holds commuting secrets, one per strand block, and
publishes X = a^r * b^s. A challenge is Y = c^r * d^s with the verifier's own
block elements crossed over (c upper, d lower); the response digest of
a^r * Y * b^s matches the verifier's digest of c^r * X * d^s precisely because
the blocks commute.

Scheme 2: the prover publishes a base braid and X = a^e * base * a^f with a
single lower-block secret; challenges sandwich the base with an upper-block
element the same way.

Verification functions take only public values and the verifier's own
ephemeral secrets; prover secrets never cross that boundary. The transcript
simulator draws verifier randomness through the identical code path, so under
a shared coin stream simulated and real transcripts agree byte for byte.
"""

from __future__ import annotations

import dataclasses
import hmac

from .braid import CanonicalForm, identity, multiply, power
from .errors import InvalidParameterError, SamplingFailure
from .hashing import DIGEST_SIZE, deserialize, hash_braid, serialize
from .rng import DeterministicRng
from .sampling import (
    SamplerConfig,
    SubgroupSide,
    generator_indices,
    is_hard_instance,
    sample_subgroup_word,
    sample_word,
)
from . import braid as braid_ops

MAX_SAMPLING_REJECTS = 100


# ---------------------------------------------------------------------------
# Key and message types
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class SchemeIPublic:
    n: int
    r: int
    s_exp: int
    X: CanonicalForm


@dataclasses.dataclass(frozen=True)
class SchemeIKeyPair:
    public: SchemeIPublic
    a: CanonicalForm
    b: CanonicalForm


@dataclasses.dataclass(frozen=True)
class SchemeIIPublic:
    n: int
    e: int
    f: int
    base: CanonicalForm
    X: CanonicalForm


@dataclasses.dataclass(frozen=True)
class SchemeIIKeyPair:
    public: SchemeIIPublic
    a: CanonicalForm


@dataclasses.dataclass(frozen=True)
class ChallengeI:
    """Challenge braid plus the verifier's retained ephemerals (kept in memory
    only, never persisted)."""

    Y: CanonicalForm
    c: CanonicalForm
    d: CanonicalForm


@dataclasses.dataclass(frozen=True)
class ChallengeII:
    Y: CanonicalForm
    b: CanonicalForm


@dataclasses.dataclass(frozen=True)
class Response:
    digest: bytes

    def __post_init__(self):
        if len(self.digest) != DIGEST_SIZE:
            raise InvalidParameterError(
                f"response digest must be {DIGEST_SIZE} bytes, got {len(self.digest)}"
            )


@dataclasses.dataclass(frozen=True)
class SessionConfig:
    scheme: int
    rounds: int
    sampler: SamplerConfig

    def __post_init__(self):
        if self.scheme not in (1, 2):
            raise InvalidParameterError(f"scheme must be 1 or 2, got {self.scheme!r}")
        if not isinstance(self.rounds, int) or self.rounds < 1:
            raise InvalidParameterError(f"rounds must be >= 1, got {self.rounds!r}")


@dataclasses.dataclass(frozen=True)
class RoundRecord:
    challenge: CanonicalForm
    digest: bytes
    accepted: bool


@dataclasses.dataclass(frozen=True)
class Transcript:
    rounds: tuple[RoundRecord, ...]
    accepted: bool


def transcript_text(t: Transcript) -> str:
    """One line per round: ``Y=<hex> Z=<hex> verdict=<0|1>``."""
    return "\n".join(
        f"Y={serialize(r.challenge).hex()} Z={r.digest.hex()} verdict={int(r.accepted)}"
        for r in t.rounds
    )


# ---------------------------------------------------------------------------
# Key generation
# ---------------------------------------------------------------------------

def _check_exponent(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 2:
        raise InvalidParameterError(f"{name} must be an integer >= 2, got {value!r}")


def _sample_key_braid(
    cfg: SamplerConfig,
    rng: DeterministicRng,
    side: SubgroupSide | None,
) -> CanonicalForm:
    """Sample from one block (or all of the group when side is None) until the
    hardness floor passes. An empty block admits only the identity, which is
    returned as is; that only happens at the degenerate toy sizes."""
    if side is not None and not generator_indices(side, cfg.n):
        return identity(cfg.n)
    for _ in range(MAX_SAMPLING_REJECTS):
        if side is None:
            w = sample_word(cfg, rng)
        else:
            w = sample_subgroup_word(side, cfg, rng)
        x = braid_ops.normalize(w)
        if is_hard_instance(x, cfg):
            return x
    raise SamplingFailure(
        MAX_SAMPLING_REJECTS,
        f"no hard instance after {MAX_SAMPLING_REJECTS} samples ({cfg.echo()})",
    )


def keygen1(
    cfg: SamplerConfig, r: int, s_exp: int, rng: DeterministicRng
) -> SchemeIKeyPair:
    """Scheme 1 keys: secrets a (lower block) and b (upper block), public
    X = a^r * b^s."""
    _check_exponent("r", r)
    _check_exponent("s", s_exp)
    a = _sample_key_braid(cfg, rng, SubgroupSide.LOWER)
    b = _sample_key_braid(cfg, rng, SubgroupSide.UPPER)
    X = multiply(power(a, r), power(b, s_exp))
    return SchemeIKeyPair(SchemeIPublic(cfg.n, r, s_exp, X), a, b)


def keygen2(cfg: SamplerConfig, e: int, f: int, rng: DeterministicRng) -> SchemeIIKeyPair:
    """Scheme 2 keys: public base braid sampled from the whole group, secret a
    in the lower block, public X = a^e * base * a^f."""
    _check_exponent("e", e)
    _check_exponent("f", f)
    base = _sample_key_braid(cfg, rng, None)
    a = _sample_key_braid(cfg, rng, SubgroupSide.LOWER)
    X = multiply(multiply(power(a, e), base), power(a, f))
    return SchemeIIKeyPair(SchemeIIPublic(cfg.n, e, f, base, X), a)


# ---------------------------------------------------------------------------
# Rounds
# ---------------------------------------------------------------------------

def challenge1(pub: SchemeIPublic, cfg: SamplerConfig, rng: DeterministicRng) -> ChallengeI:
    """Fresh verifier challenge: c from the upper block, d from the lower,
    Y = c^r * d^s."""
    c = braid_ops.normalize(sample_subgroup_word(SubgroupSide.UPPER, cfg, rng))
    d = braid_ops.normalize(sample_subgroup_word(SubgroupSide.LOWER, cfg, rng))
    Y = multiply(power(c, pub.r), power(d, pub.s_exp))
    return ChallengeI(Y, c, d)


def respond1(keys: SchemeIKeyPair, Y: CanonicalForm) -> Response:
    """Prover response: digest of a^r * Y * b^s."""
    pub = keys.public
    if Y.n != pub.n:
        raise InvalidParameterError(f"challenge has {Y.n} strands, key has {pub.n}")
    inner = multiply(multiply(power(keys.a, pub.r), Y), power(keys.b, pub.s_exp))
    return Response(hash_braid(inner))


def _expected_digest1(pub: SchemeIPublic, c: CanonicalForm, d: CanonicalForm) -> bytes:
    return hash_braid(multiply(multiply(power(c, pub.r), pub.X), power(d, pub.s_exp)))


def verify1(pub: SchemeIPublic, c: CanonicalForm, d: CanonicalForm, response: Response) -> bool:
    """Accept iff the response digest equals the digest of c^r * X * d^s."""
    return hmac.compare_digest(_expected_digest1(pub, c, d), response.digest)


def challenge2(pub: SchemeIIPublic, cfg: SamplerConfig, rng: DeterministicRng) -> ChallengeII:
    """Fresh verifier challenge: b from the upper block, Y = b^e * base * b^f."""
    b = braid_ops.normalize(sample_subgroup_word(SubgroupSide.UPPER, cfg, rng))
    Y = multiply(multiply(power(b, pub.e), pub.base), power(b, pub.f))
    return ChallengeII(Y, b)


def respond2(keys: SchemeIIKeyPair, Y: CanonicalForm) -> Response:
    """Prover response: digest of a^e * Y * a^f."""
    pub = keys.public
    if Y.n != pub.n:
        raise InvalidParameterError(f"challenge has {Y.n} strands, key has {pub.n}")
    inner = multiply(multiply(power(keys.a, pub.e), Y), power(keys.a, pub.f))
    return Response(hash_braid(inner))


def _expected_digest2(pub: SchemeIIPublic, b: CanonicalForm) -> bytes:
    return hash_braid(multiply(multiply(power(b, pub.e), pub.X), power(b, pub.f)))


def verify2(pub: SchemeIIPublic, b: CanonicalForm, response: Response) -> bool:
    """Accept iff the response digest equals the digest of b^e * X * b^f."""
    return hmac.compare_digest(_expected_digest2(pub, b), response.digest)


# ---------------------------------------------------------------------------
# Sessions and the transcript simulator
# ---------------------------------------------------------------------------

def run_session(
    keys: "SchemeIKeyPair | SchemeIIKeyPair",
    cfg: SessionConfig,
    verifier_rng: DeterministicRng,
) -> Transcript:
    """Run the configured number of rounds between an honest prover and an
    honest verifier; accepted iff every round verifies.

    Verifier randomness comes only from ``verifier_rng`` and only through the
    challenge samplers, which is what makes the simulator comparison exact.
    """
    scheme = 1 if isinstance(keys, SchemeIKeyPair) else 2
    if scheme != cfg.scheme:
        raise InvalidParameterError(f"key is for scheme {scheme}, session for {cfg.scheme}")
    rounds = []
    for _ in range(cfg.rounds):
        if scheme == 1:
            ch = challenge1(keys.public, cfg.sampler, verifier_rng)
            resp = respond1(keys, ch.Y)
            ok = verify1(keys.public, ch.c, ch.d, resp)
        else:
            ch2 = challenge2(keys.public, cfg.sampler, verifier_rng)
            resp = respond2(keys, ch2.Y)
            ok = verify2(keys.public, ch2.b, resp)
            ch = ch2
        rounds.append(RoundRecord(ch.Y, resp.digest, ok))
    return Transcript(tuple(rounds), all(r.accepted for r in rounds))


def simulate_transcript(
    pub: "SchemeIPublic | SchemeIIPublic",
    cfg: SessionConfig,
    rng: DeterministicRng,
) -> Transcript:
    """Produce an accepting transcript from public data alone.

    Draws the verifier ephemerals with the same sampler calls as a live
    session, then emits the digest the verifier would accept. No secret key
    is a parameter, so none can be consulted.
    """
    scheme = 1 if isinstance(pub, SchemeIPublic) else 2
    if scheme != cfg.scheme:
        raise InvalidParameterError(f"public key is for scheme {scheme}, session for {cfg.scheme}")
    rounds = []
    for _ in range(cfg.rounds):
        if scheme == 1:
            ch = challenge1(pub, cfg.sampler, rng)
            digest = _expected_digest1(pub, ch.c, ch.d)
            rounds.append(RoundRecord(ch.Y, digest, True))
        else:
            ch2 = challenge2(pub, cfg.sampler, rng)
            digest = _expected_digest2(pub, ch2.b)
            rounds.append(RoundRecord(ch2.Y, digest, True))
    return Transcript(tuple(rounds), True)


# ---------------------------------------------------------------------------
# Key files: line-based "field = value" text, braids as lowercase hex
# ---------------------------------------------------------------------------

def format_public_key(pub: "SchemeIPublic | SchemeIIPublic") -> str:
    if isinstance(pub, SchemeIPublic):
        lines = [
            "scheme = 1",
            f"n = {pub.n}",
            f"r = {pub.r}",
            f"s = {pub.s_exp}",
            f"X = {serialize(pub.X).hex()}",
        ]
    else:
        lines = [
            "scheme = 2",
            f"n = {pub.n}",
            f"e = {pub.e}",
            f"f = {pub.f}",
            f"base = {serialize(pub.base).hex()}",
            f"X = {serialize(pub.X).hex()}",
        ]
    return "\n".join(lines) + "\n"


def format_secret_key(keys: "SchemeIKeyPair | SchemeIIKeyPair") -> str:
    if isinstance(keys, SchemeIKeyPair):
        lines = [
            "scheme = 1",
            f"n = {keys.public.n}",
            f"a = {serialize(keys.a).hex()}",
            f"b = {serialize(keys.b).hex()}",
        ]
    else:
        lines = [
            "scheme = 2",
            f"n = {keys.public.n}",
            f"a = {serialize(keys.a).hex()}",
        ]
    return "\n".join(lines) + "\n"


def _parse_fields(text: str) -> dict[str, str]:
    fields = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InvalidParameterError(f"bad key-file line {raw!r}")
        key, _, value = line.partition("=")
        fields[key.strip()] = value.strip()
    return fields


def _field(fields: dict[str, str], name: str) -> str:
    if name not in fields:
        raise InvalidParameterError(f"key file is missing field {name!r}")
    return fields[name]


def parse_public_key(text: str) -> "SchemeIPublic | SchemeIIPublic":
    fields = _parse_fields(text)
    scheme = int(_field(fields, "scheme"))
    if scheme not in (1, 2):
        raise InvalidParameterError(f"unknown scheme {scheme}")
    n = int(_field(fields, "n"))
    X = deserialize(bytes.fromhex(_field(fields, "X")))
    if X.n != n:
        raise InvalidParameterError(f"X has {X.n} strands, file says {n}")
    if scheme == 1:
        return SchemeIPublic(n, int(_field(fields, "r")), int(_field(fields, "s")), X)
    base = deserialize(bytes.fromhex(_field(fields, "base")))
    if base.n != n:
        raise InvalidParameterError(f"base has {base.n} strands, file says {n}")
    return SchemeIIPublic(n, int(_field(fields, "e")), int(_field(fields, "f")), base, X)


def parse_keypair(public_text: str, secret_text: str) -> "SchemeIKeyPair | SchemeIIKeyPair":
    """Combine a public and a secret key file. Scheme and strand count must
    agree; whether the secret actually matches the public key is decided by
    the protocol itself, not at parse time."""
    pub = parse_public_key(public_text)
    fields = _parse_fields(secret_text)
    scheme = int(_field(fields, "scheme"))
    n = int(_field(fields, "n"))
    expected_scheme = 1 if isinstance(pub, SchemeIPublic) else 2
    if scheme != expected_scheme or n != pub.n:
        raise InvalidParameterError(
            f"secret file (scheme {scheme}, n {n}) does not match public file "
            f"(scheme {expected_scheme}, n {pub.n})"
        )
    a = deserialize(bytes.fromhex(_field(fields, "a")))
    if isinstance(pub, SchemeIPublic):
        b = deserialize(bytes.fromhex(_field(fields, "b")))
        return SchemeIKeyPair(pub, a, b)
    return SchemeIIKeyPair(pub, a)

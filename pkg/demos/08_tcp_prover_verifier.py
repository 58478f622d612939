"""The protocol between two processes: a framed TCP verifier and prover.

The verifier listens; each connection is one session. The client opens with
HELLO carrying its public key, then answers CHALLENGE frames with RESPONSE
digests and collects a VERDICT per round. This demo runs the server on a
thread in this process; the `braidauth prove` and `braidauth verify-serve`
commands run the same code across real processes.
"""

import braidauth as ba
from braidauth import DeterministicRng, SamplerConfig
import braidauth.protocol as P
from braidauth.netpair import VerifierServer, run_prover

cfg = SamplerConfig(n=8, word_length=24, min_canonical_length=3, seed=51)
keys = P.keygen1(cfg, 2, 3, DeterministicRng(cfg.seed, "kg"))

server = VerifierServer(rounds=3, word_length=24, seed=7,
                        log=lambda m: print("  [verifier]", m))
server.start()
host, port = server.address
print(f"verifier listening on {host}:{port}")

print("\nhonest prover dials in:")
verdicts = run_prover(host, port, keys, log=lambda m: print("  [prover]  ", m))
print("all rounds accepted:", all(v.accepted for v in verdicts))

print("\na prover with someone else's secret:")
other = P.keygen1(cfg, 2, 3, DeterministicRng(999, "kg"))
mixed = P.SchemeIKeyPair(keys.public, other.a, other.b)
verdicts = run_prover(host, port, mixed, log=lambda m: print("  [prover]  ", m))
print("any round accepted:", any(v.accepted for v in verdicts))

server.stop()
print("\nserver stopped")

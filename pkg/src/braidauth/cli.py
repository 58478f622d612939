"""Command-line front end: braidauth <keygen|prove|verify-serve|run-local|attack|selftest>.

Exit codes: 0 accept/success, 1 reject or failed selftest, 2 usage error,
3 file I/O error, 4 network or protocol error. The environment variable
BRAIDAUTH_SEED overrides --seed everywhere.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import oracle
from . import protocol as P
from .errors import BraidAuthError, InvalidParameterError
from .netpair import ProverError, VerifierServer, run_prover
from .rng import DeterministicRng
from .sampling import SamplerConfig
from .selftest import DEFAULT_SIZES, run_selftest

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NET = 4

DEFAULT_DEMO_LENGTH = 128
DEFAULT_MIN_CANONICAL = 8


def _fail(message: str, code: int) -> int:
    print(f"braidauth: {message}", file=sys.stderr)
    return code


def _seed_of(args) -> int:
    env = os.environ.get("BRAIDAUTH_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InvalidParameterError(f"BRAIDAUTH_SEED must be an integer, got {env!r}")
    return args.seed


def _sampler_of(args, n: int) -> SamplerConfig:
    length = args.len
    minlen = args.minlen if args.minlen is not None else min(DEFAULT_MIN_CANONICAL, max(length, 1))
    return SamplerConfig(
        n=n, word_length=length, min_canonical_length=minlen, seed=_seed_of(args)
    )


def _check_scheme_params(args) -> tuple[int, int]:
    """Validate and return the exponent pair for the selected scheme."""
    if args.scheme == 1:
        exps = (args.r, args.s)
        names = ("r", "s")
    else:
        exps = (args.e, args.f)
        names = ("e", "f")
    for name, value in zip(names, exps):
        if value < 2:
            raise InvalidParameterError(f"{name} must be >= 2")
    return exps


def _keygen(args, rng: DeterministicRng):
    cfg = _sampler_of(args, args.n)
    exp1, exp2 = _check_scheme_params(args)
    if args.scheme == 1:
        return P.keygen1(cfg, exp1, exp2, rng)
    return P.keygen2(cfg, exp1, exp2, rng)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_keygen(args) -> int:
    if args.n % 2 != 0:
        return _fail("n must be even", EXIT_USAGE)
    try:
        print(_sampler_of(args, args.n).echo())
        keys = _keygen(args, DeterministicRng(_seed_of(args), "keygen"))
    except BraidAuthError as exc:
        return _fail(str(exc), EXIT_USAGE)
    pub_path = args.out + ".pub"
    sec_path = args.out + ".sec"
    try:
        with open(pub_path, "w") as fh:
            fh.write(P.format_public_key(keys.public))
        with open(sec_path, "w") as fh:
            fh.write(P.format_secret_key(keys))
    except OSError as exc:
        return _fail(f"cannot write key files: {exc}", EXIT_IO)
    print(f"wrote {pub_path} and {sec_path}")
    return EXIT_OK


def _load_keypair(pub_path: str, sec_path: str):
    with open(pub_path) as fh:
        pub_text = fh.read()
    with open(sec_path) as fh:
        sec_text = fh.read()
    return P.parse_keypair(pub_text, sec_text)


def cmd_prove(args) -> int:
    try:
        keys = _load_keypair(args.pub, args.sec)
    except OSError as exc:
        return _fail(f"cannot read key files: {exc}", EXIT_IO)
    except BraidAuthError as exc:
        return _fail(str(exc), EXIT_USAGE)
    try:
        verdicts = run_prover(args.host, args.port, keys, log=lambda m: print(m))
    except ProverError as exc:
        return _fail(str(exc), EXIT_NET)
    if all(v.accepted for v in verdicts):
        print("ACCEPTED")
        return EXIT_OK
    print("REJECTED")
    return EXIT_REJECT


def cmd_verify_serve(args) -> int:
    try:
        server = VerifierServer(
            host=args.host,
            port=args.port,
            rounds=args.rounds,
            word_length=args.len,
            min_canonical_length=args.minlen if args.minlen is not None else 3,
            seed=_seed_of(args),
            expect_scheme=args.scheme,
            max_sessions=args.max_sessions,
            log=lambda m: print(m),
        )
    except (BraidAuthError, OSError) as exc:
        return _fail(str(exc), EXIT_NET)
    host, port = server.address
    print(f"verifier listening on {host}:{port} (rounds={args.rounds})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.stop()
    return EXIT_OK


def cmd_run_local(args) -> int:
    if args.n % 2 != 0:
        return _fail("n must be even", EXIT_USAGE)
    if args.rounds < 1:
        return _fail("rounds must be >= 1", EXIT_USAGE)
    try:
        keys = _keygen(args, DeterministicRng(_seed_of(args), "keygen"))
        cfg = _sampler_of(args, args.n)
        session = P.SessionConfig(args.scheme, args.rounds, cfg)
        transcript = P.run_session(keys, session, DeterministicRng(_seed_of(args), "verifier"))
    except BraidAuthError as exc:
        return _fail(str(exc), EXIT_USAGE)
    print(P.transcript_text(transcript))
    print("ACCEPTED" if transcript.accepted else "REJECTED")
    return EXIT_OK if transcript.accepted else EXIT_REJECT


_STRATEGY_ALIASES = {
    "random": oracle.STRATEGY_RANDOM,
    "random-digest": oracle.STRATEGY_RANDOM,
    "replay": oracle.STRATEGY_REPLAY,
    "root": oracle.STRATEGY_ROOT,
    "root-attack": oracle.STRATEGY_ROOT,
}


def cmd_attack(args) -> int:
    if args.trials < 1:
        return _fail("trials must be >= 1", EXIT_USAGE)
    strategy = _STRATEGY_ALIASES[args.strategy]
    try:
        cfg = _sampler_of(args, args.n)
        keys = _keygen(args, DeterministicRng(_seed_of(args), "keygen"))
        report = oracle.impersonation_experiment(
            keys,
            strategy,
            args.trials,
            DeterministicRng(_seed_of(args), "attack"),
            rounds=args.rounds,
            sampler=cfg,
            root_bound=args.bound,
        )
    except BraidAuthError as exc:
        return _fail(str(exc), EXIT_USAGE)
    print(cfg.echo())
    print(oracle.report_table([report]))
    if report.note:
        print(f"note: {report.note}")
    if args.report_out:
        try:
            with open(args.report_out, "w") as fh:
                fh.write(oracle.report_text(report))
        except OSError as exc:
            return _fail(f"cannot write report: {exc}", EXIT_IO)
    return EXIT_OK


def cmd_selftest(args) -> int:
    sizes = tuple(int(part) for part in args.n.split(","))
    failed = None
    for name, ok, detail in run_selftest(sizes, _seed_of(args)):
        print(f"{'ok  ' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
        if not ok and failed is None:
            failed = name
    if failed is not None:
        print(f"selftest failed: {failed}", file=sys.stderr)
        return EXIT_REJECT
    print("selftest passed")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _add_scheme_flags(sub) -> None:
    sub.add_argument("--scheme", type=int, choices=(1, 2), default=1)
    sub.add_argument("--n", type=int, default=16, help="strand count (even)")
    sub.add_argument("--r", type=int, default=2, help="scheme 1 first exponent")
    sub.add_argument("--s", type=int, default=2, help="scheme 1 second exponent")
    sub.add_argument("--e", type=int, default=2, help="scheme 2 first exponent")
    sub.add_argument("--f", type=int, default=2, help="scheme 2 second exponent")
    sub.add_argument("--len", type=int, default=DEFAULT_DEMO_LENGTH, help="sampled word length")
    sub.add_argument("--minlen", type=int, default=None, help="canonical-length floor for keys")
    sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidauth",
        description="Braid-group identification schemes: keys, sessions, attacks, selftest.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    kg = subs.add_parser("keygen", help="write public and secret key files")
    _add_scheme_flags(kg)
    kg.add_argument("--out", required=True, help="path prefix for <out>.pub and <out>.sec")
    kg.set_defaults(func=cmd_keygen)

    pv = subs.add_parser("prove", help="authenticate against a verifier server")
    pv.add_argument("--pub", required=True)
    pv.add_argument("--sec", required=True)
    pv.add_argument("--host", default="127.0.0.1")
    pv.add_argument("--port", type=int, required=True)
    pv.set_defaults(func=cmd_prove)

    vs = subs.add_parser("verify-serve", help="run the verifier as a TCP listener")
    vs.add_argument("--host", default="127.0.0.1")
    vs.add_argument("--port", type=int, default=0)
    vs.add_argument("--rounds", type=int, default=1)
    vs.add_argument("--len", type=int, default=32, help="challenge word length")
    vs.add_argument("--minlen", type=int, default=None)
    vs.add_argument("--scheme", type=int, choices=(1, 2), default=None,
                    help="refuse clients offering the other scheme")
    vs.add_argument("--max-sessions", type=int, default=None)
    vs.add_argument("--seed", type=int, default=0)
    vs.set_defaults(func=cmd_verify_serve)

    rl = subs.add_parser("run-local", help="run an honest in-process session")
    _add_scheme_flags(rl)
    rl.add_argument("--rounds", type=int, default=1)
    rl.set_defaults(func=cmd_run_local)

    at = subs.add_parser("attack", help="run an impersonation experiment")
    _add_scheme_flags(at)
    at.add_argument("--strategy", choices=sorted(_STRATEGY_ALIASES), required=True)
    at.add_argument("--trials", type=int, default=100)
    at.add_argument("--rounds", type=int, default=1)
    at.add_argument("--bound", type=int, default=None, help="root-search word length bound")
    at.add_argument("--report-out", default=None, help="also write the key=value report here")
    at.set_defaults(func=cmd_attack)

    st = subs.add_parser("selftest", help="run the invariant battery")
    st.add_argument("--n", default=",".join(str(n) for n in DEFAULT_SIZES),
                    help="comma-separated strand counts")
    st.add_argument("--seed", type=int, default=0)
    st.set_defaults(func=cmd_selftest)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidParameterError as exc:
        return _fail(str(exc), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())

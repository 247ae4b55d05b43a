"""Command-line front end.

Exit codes: 0 success, 1 decode or verification failure, 2 usage error
(including out-of-domain arguments and refused enumerations).  Payload goes
to stdout, diagnostics to stderr; ``--json`` payloads contain nothing else.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stdout
from dataclasses import dataclass

from . import kernels
from ._version import TOOL_ID
from .alphabet import Alphabet, parse_word
from .analysis import format_table, rates_table, reports_to_json
from .channel import (
    DEFAULT_LIMIT,
    apply_trace,
    enumerate_ct_descendants,
    enumerate_noisy_descendants,
    sample_noisy_trace,
)
from .codebook import FAMILIES, Codebook, _param_names, build_codebook, params_from_key, scan_best
from .codes import (
    MEMBER,
    burst_decode_insertion,
    compsub_decode,
    qvt_decode_insertion,
    svt_decode_deletion,
    svt_decode_insertion,
)
from .errors import DecodeError, DomainError, EnumerationLimitError
from .final import decode, decode_by_search, final_member, verify_disjoint_cones
from .signature import compute_signature, count_irr

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
PARAM_FLAGS = ("a", "b", "c", "d", "h", "w", "e", "f", "g")


@dataclass
class CommandResult:
    exit_code: int
    stdout: str


class _Failure(Exception):
    """Raised by a handler to exit 1 after printing its payload."""


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(text)


# ----------------------------------------------------------------- handlers


def cmd_sig_compute(args):
    sig = compute_signature(parse_word(args.word, args.q))
    _emit(
        args,
        {"signature": str(sig.word), "block_lengths": list(sig.block_lengths)},
        f"{sig.word}\n{' '.join(map(str, sig.block_lengths))}",
    )


def cmd_sig_count(args):
    count = count_irr(args.q, args.n)
    _emit(args, {"q": args.q, "n": args.n, "count": count}, str(count))


def cmd_channel_corrupt(args):
    x = parse_word(args.word, args.q)
    trace = sample_noisy_trace(x, args.ct, bool(args.random), args.seed)
    y = apply_trace(x, trace)
    if args.json:
        print(json.dumps({
            "seed": args.seed,
            "events": [
                {"kind": ev.kind, "position": ev.position, "symbol": ev.symbol}
                for ev in trace.events
            ],
            "word": str(y),
        }))
        return
    print(f"# seed={args.seed}")
    for ev in trace.events:
        print(ev)
    print(y)


def cmd_channel_cone(args):
    x = parse_word(args.word, args.q)
    if args.noisy:
        cone = enumerate_noisy_descendants(x, args.budget, args.limit)
    else:
        cone = enumerate_ct_descendants(x, args.budget, args.limit)
    words = sorted(cone)
    payload = {"size": len(words)}
    if args.words:
        payload["words"] = [str(w) for w in words]
    _emit(args, payload, "\n".join([str(len(words))] + ([str(w) for w in words] if args.words else [])))


def _params_from_flags(family: str, args):
    key = []
    for name in _param_names(family):
        value = getattr(args, name, None)
        if value is None:
            raise DomainError(f"family {family} needs --{name}")
        key.append(value)
    P = getattr(args, "P", None)
    if family == "svt" and P is None:
        raise DomainError("family svt needs --P")
    return params_from_key(family, args.q, args.n, key, P)


def cmd_code_member(args):
    params = _params_from_flags(args.family, args)
    x = parse_word(args.word, args.q)
    member = final_member if args.family == "final" else MEMBER[args.family]
    ok = member(x, params)
    _emit(args, {"member": ok}, "true" if ok else "false")


def cmd_code_decode(args):
    params = _params_from_flags(args.family, args)
    y = parse_word(args.word, args.q)
    fam = args.family
    if fam == "compsub":
        x = compsub_decode(y, params)
    elif fam == "qvt":
        x = qvt_decode_insertion(y, params)
    elif fam == "burst":
        x = burst_decode_insertion(y, params)
    elif fam == "final":
        x = decode(y, params)
    else:
        if args.window is None:
            raise DomainError("svt decoding needs --window")
        if len(y) == params.n - 1:
            x = svt_decode_deletion(y, params, args.window)
        else:
            x = svt_decode_insertion(y, params, args.window)
    _emit(args, {"word": str(x)}, str(x))


def cmd_codebook_build(args):
    book = build_codebook(_params_from_flags(args.family, args), args.limit)
    _write_book(book, args.out)


def cmd_codebook_scan(args):
    params, size = scan_best(args.family, args.q, args.n, getattr(args, "P", None), args.limit)
    if args.out:
        build_codebook(params, args.limit).write(args.out)
    fields = {name: getattr(params, name) for name in _param_names(args.family)}
    _emit(
        args,
        {"family": args.family, "q": args.q, "n": args.n, "params": fields, "size": size},
        " ".join(f"{k}={v}" for k, v in fields.items()) + f"\nsize={size}",
    )


def _write_book(book: Codebook, out):
    if out:
        book.write(out)
    else:
        sys.stdout.write(book.to_text())


def cmd_decode(args):
    if args.codebook:
        book = Codebook.read(args.codebook)
        if book.family != "final":
            raise DomainError(f"decode needs a final-code codebook, got family {book.family}")
        params = book.params
    else:
        if args.q is None or args.n is None:
            raise DomainError("decode needs --codebook or --q/--n and all code parameters")
        params, book = _params_from_flags("final", args), None
    y = parse_word(args.word, params.q)
    if args.search:
        if book is None:
            book = build_codebook(params, args.limit)
        x = decode_by_search(y, params, book)
    else:
        x = decode(y, params)
    _emit(args, {"word": str(x)}, str(x))


def cmd_verify_disjoint(args):
    book = Codebook.read(args.codebook, check=not args.no_check)
    report = verify_disjoint_cones(book, args.budget, args.limit)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(f"codewords={report.words} pairs={report.pair_count} "
              f"max_cone={report.max_cone_size} violations={len(report.violations)} "
              f"complete={str(report.complete).lower()} elapsed_s={report.elapsed_s:.3f}")
        for x, y, w in report.violations:
            print(f"violation {x} {y} witness {w}")
    if not report.ok:
        raise _Failure()


def cmd_report_rates(args):
    ns = [int(tok) for tok in args.n.split(",") if tok.strip()]
    reports = rates_table(args.q, ns)
    if args.json:
        with open(args.json, "w", encoding="ascii") as fh:
            fh.write(reports_to_json(reports) + "\n")
    print(format_table(reports))


# ------------------------------------------------------------------- parser


def _add_params(p, with_family=True, default_family=None):
    if with_family:
        p.add_argument("--family", choices=sorted(FAMILIES), default=default_family,
                       required=default_family is None)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    for name in PARAM_FLAGS:
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--P", type=int, help="svt window size")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="noisyins", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=TOOL_ID)
    parser.add_argument("--threads", type=int, default=0, help="numba worker threads")
    sub = parser.add_subparsers(dest="command", required=True)

    sig = sub.add_parser("sig").add_subparsers(dest="action", required=True)
    p = sig.add_parser("compute")
    p.add_argument("word")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sig_compute)
    p = sig.add_parser("count")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sig_count)

    ch = sub.add_parser("channel").add_subparsers(dest="action", required=True)
    p = ch.add_parser("corrupt")
    p.add_argument("word")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ct", type=int, default=0)
    p.add_argument("--random", type=int, choices=(0, 1), default=0)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_channel_corrupt)
    p = ch.add_parser("cone")
    p.add_argument("word")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--noisy", action="store_true")
    p.add_argument("--words", action="store_true", help="also list the words")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_channel_cone)

    code = sub.add_parser("code").add_subparsers(dest="action", required=True)
    p = code.add_parser("member")
    _add_params(p)
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_code_member)
    p = code.add_parser("decode")
    _add_params(p)
    p.add_argument("word")
    p.add_argument("--window", type=int, help="1-based start of the svt window")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_code_decode)

    cb = sub.add_parser("codebook").add_subparsers(dest="action", required=True)
    p = cb.add_parser("build")
    _add_params(p, default_family="final")
    p.add_argument("--out")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=cmd_codebook_build)
    p = cb.add_parser("scan")
    p.add_argument("--family", choices=sorted(FAMILIES), default="final")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--P", type=int, help="svt window size")
    p.add_argument("--out")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_codebook_scan)

    p = sub.add_parser("decode")
    p.add_argument("word")
    p.add_argument("--codebook")
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    for name in _param_names("final"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--search", action="store_true", help="use the exhaustive reference decoder")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decode)

    vf = sub.add_parser("verify").add_subparsers(dest="action", required=True)
    p = vf.add_parser("disjoint")
    p.add_argument("--codebook", required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--no-check", action="store_true",
                   help="accept word lists that are not codewords (negative controls)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_disjoint)

    rp = sub.add_parser("report").add_subparsers(dest="action", required=True)
    p = rp.add_parser("rates")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", required=True, help="comma-separated lengths, e.g. 4,6,8")
    p.add_argument("--json", metavar="FILE")
    p.set_defaults(func=cmd_report_rates)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads:
        kernels.set_threads(args.threads)
    try:
        args.func(args)
    except _Failure:
        return EXIT_FAIL
    except DecodeError as exc:
        print(f"noisyins: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (DomainError, EnumerationLimitError) as exc:
        print(f"noisyins: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def run(argv) -> CommandResult:
    """Run one command and capture its stdout."""
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return CommandResult(code, buf.getvalue())


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface. Exit codes: 0 ok, 1 certification refused, 2 input error."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .bound import BoundConfig, BoundInput, full_report
from .corpus import load_corpus, resolve_curve
from .errors import ECBoundError
from .galois import DEFAULT_SAMPLE_BOUND, prove_surjective
from .numth import is_prime
from .reduction import local_data_all, tate_local_data
from .torsion import check_tor, scan_local_torsion
from .weierstrass import minimal_model

EXIT_OK, EXIT_REFUSED, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _prime(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"{v} is not prime")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ecbound", description="Local data, (Full)/(Tor) certificates and "
                 "class-number exponent bounds for elliptic curves over Q.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def curve_arg(p):
        p.add_argument("curve", help='"[a1,a2,a3,a4,a6]" or a label from the bundled corpus')
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("reduction", help="local reduction data at bad primes")
    curve_arg(p)
    p.add_argument("-l", type=_prime, help="a single prime")

    p = sub.add_parser("image", help="try to prove the mod-p image is GL_2")
    curve_arg(p)
    p.add_argument("-p", type=_prime, required=True)
    p.add_argument("--samples", type=_positive, default=DEFAULT_SAMPLE_BOUND)

    p = sub.add_parser("tor", help="decide E(Q_p)[p] = 0")
    curve_arg(p)
    p.add_argument("-p", type=_prime, required=True)
    p.add_argument("--deep", action="store_true")

    p = sub.add_parser("scan", help="list primes where (Tor) fails or is undecided")
    curve_arg(p)
    p.add_argument("--pmin", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--deep", action="store_true")
    p.add_argument("--jobs", type=_positive, default=1)

    p = sub.add_parser("bound", help="certified lower bound on the class-number exponent")
    curve_arg(p)
    p.add_argument("-p", type=_prime, required=True)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("-r", type=_nonneg, help="Mordell-Weil rank (default: corpus value)")
    p.add_argument("--deep", action="store_true")
    p.add_argument("--samples", type=_positive, default=DEFAULT_SAMPLE_BOUND)

    p = sub.add_parser("corpus", help="run a subcommand on every curve of a JSON-lines file")
    p.add_argument("file")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("rest", nargs=argparse.REMAINDER,
                   help="subcommand and its options, without the curve")
    return ap


def _cmd_reduction(args, E, rec):
    rows = [tate_local_data(E, args.l)] if args.l else local_data_all(E)
    if args.json:
        out = [{"l": d.prime, "type": d.type.value, "kodaira": d.kodaira,
                "c": d.tamagawa, "ord_delta": d.ord_delta} for d in rows]
        return EXIT_OK, json.dumps({"curve": str(E), "local": out})
    return EXIT_OK, "\n".join(d.report_line() for d in rows)


def _cmd_image(args, E, rec):
    v = prove_surjective(E, args.p, args.samples)
    if args.json:
        return EXIT_OK, json.dumps({"curve": str(E), "p": args.p, **v.as_json()})
    return EXIT_OK, v.report_line()


def _cmd_tor(args, E, rec):
    v = check_tor(E, args.p, args.deep)
    if args.json:
        return EXIT_OK, json.dumps({"curve": str(E), "p": args.p, **v.as_json()})
    return EXIT_OK, v.scan_line(args.p)


def _cmd_scan(args, E, rec):
    if args.pmin < 3 or args.pmax < args.pmin:
        raise ValueError("need 3 <= pmin <= pmax")
    hits = scan_local_torsion(E, args.pmin, args.pmax, args.deep, args.jobs)
    if args.json:
        return EXIT_OK, json.dumps([{"p": p, **v.as_json()} for p, v in hits])
    return EXIT_OK, "\n".join(v.scan_line(p) for p, v in hits)


def _cmd_bound(args, E, rec):
    rank = args.r
    if rank is None:
        if rec is None or rec.rank is None:
            raise ValueError("rank unknown: pass -r")
        rank = rec.rank
    report = full_report(BoundInput(E, args.p, args.n, rank),
                         BoundConfig(deep=args.deep, sample_bound=args.samples))
    text = json.dumps(report.as_json()) if args.json else report.render()
    return (EXIT_OK if report.certified else EXIT_REFUSED), text


_COMMANDS = {
    "reduction": _cmd_reduction,
    "image": _cmd_image,
    "tor": _cmd_tor,
    "scan": _cmd_scan,
    "bound": _cmd_bound,
}


def _run_one(argv: list[str], records=()) -> tuple[int, str, str]:
    """(exit code, stdout text, stderr text) for one non-corpus invocation."""
    try:
        args = build_parser().parse_args(argv)
        E, rec = resolve_curve(args.curve, records)
        E, _ = minimal_model(E)
        code, out = _COMMANDS[args.command](args, E, rec)
        return code, out, ""
    except _UsageError as e:
        return EXIT_INPUT, "", str(e)
    except (ECBoundError, ValueError) as e:
        return EXIT_INPUT, "", f"ecbound: error: {e}"


def _corpus_task(task):
    argv, record = task
    return _run_one(argv, [record])


def _run_corpus(args) -> tuple[int, str, str]:
    records = load_corpus(args.file)
    rest = list(args.rest)
    jobs = args.jobs
    # REMAINDER also swallows a --jobs written after the file name
    while rest and (rest[0] in ("--", "--jobs") or rest[0].startswith("--jobs=")):
        head = rest.pop(0)
        if head == "--jobs":
            if not rest:
                return EXIT_INPUT, "", "ecbound corpus: --jobs needs a value"
            jobs = _positive(rest.pop(0))
        elif head.startswith("--jobs="):
            jobs = _positive(head.split("=", 1)[1])
    if not rest or rest[0] not in _COMMANDS:
        return EXIT_INPUT, "", "ecbound corpus: expected a subcommand after the file"
    tasks = [([rest[0], r.label, *rest[1:]], r) for r in records]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_corpus_task, tasks))
    else:
        results = [_corpus_task(t) for t in tasks]
    out, err, code = [], [], EXIT_OK
    for r, (c, o, e) in zip(records, results):
        out.append(f"# {r.label} {r.curve}")
        if o:
            out.append(o)
        if e:
            err.append(f"{r.label}: {e}")
        code = max(code, c)
    return code, "\n".join(out), "\n".join(err)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "corpus":
        try:
            args = build_parser().parse_args(argv)
            code, out, err = _run_corpus(args)
        except _UsageError as e:
            code, out, err = EXIT_INPUT, "", str(e)
        except (ECBoundError, ValueError, OSError, argparse.ArgumentTypeError) as e:
            code, out, err = EXIT_INPUT, "", f"ecbound: error: {e}"
    else:
        code, out, err = _run_one(argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code

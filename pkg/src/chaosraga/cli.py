"""Command-line front end: ``chaosraga <command> ...``."""

import argparse
import json
import os
import sys

from . import __version__
from .chaos import LogisticParams, iterate
from .compose import DEFAULT_LAMBDA_RANGE, DEFAULT_POOL, MODES, SearchConfig, search
from .correlate import correlation
from .errors import ChaosRagaError, MismatchError
from .formats import (
    atomic_write,
    build_report,
    dumps_report,
    format_notes_file,
    read_notes_file,
    write_notes_file,
)
from .fractal import FractalConfig, dimension
from .plotting import render_report_figure, svg_graph
from .raga import builtin_raga, decode_amplitudes, encode, load_raga_file, register_raga, registered_ragas
from .synth import DEFAULT_DURATION, DEFAULT_SA_HZ, render, wav_bytes


def _seed(text):
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _float_or_none(text):
    return None if text is None else float(text)


def cmd_generate(args):
    raga = builtin_raga(args.raga)
    params = LogisticParams(args.lam, args.x0, args.length)
    notes = encode(iterate(params), raga)
    if args.out:
        write_notes_file(args.out, notes, **{"lambda": params.lam, "x0": params.x0})
    else:
        sys.stdout.write(str(notes) + "\n")
    return 0


def _stderr_progress(done, total):
    sys.stderr.write(f"\rscored {done}/{total}")
    if done == total:
        sys.stderr.write("\n")
    sys.stderr.flush()


def cmd_compose(args):
    p1, _ = read_notes_file(args.a, args.raga)
    p2, _ = read_notes_file(args.b, args.raga)
    if p1.raga != p2.raga:
        raise MismatchError(f"raga mismatch: {p1.raga.name!r} vs {p2.raga.name!r}")
    if len(p1) != len(p2):
        raise MismatchError(f"length mismatch: {len(p1)} vs {len(p2)}")
    cfg = SearchConfig(
        raga=p1.raga,
        length=len(p1),
        pool_size=args.pool,
        mode=args.mode,
        lambda_range=(args.lambda_min, args.lambda_max),
        seed=args.seed,
    )
    progress = None if args.quiet else _stderr_progress
    result = search(p1, p2, cfg, threads=args.threads, progress=progress)
    best = result.best.to_levels()
    gp = result.generator_params
    report = build_report(
        best,
        lam=gp.lam if gp else None,
        x0=gp.x0 if gp else None,
        correlations={"c1": result.c1, "c2": result.c2, "score": result.score},
        fractal=dimension(best),
        seed=cfg.seed,
        pool_size=cfg.pool_size,
        mode=cfg.mode,
        candidate_index=result.candidate_index,
    )
    meta = {"lambda": gp.lam, "x0": gp.x0} if gp else {}
    text = format_notes_file(result.best, **meta)
    report_text = dumps_report(report)
    # both outputs are rendered before either is written
    if args.out:
        atomic_write(args.out, text)
    else:
        sys.stdout.write(str(result.best) + "\n")
    if args.report:
        atomic_write(args.report, report_text)
    elif args.out:
        sys.stdout.write(report_text)
    return 0


def cmd_analyze(args):
    ls, headers = read_notes_file(args.input, args.raga)
    frac = dimension(ls, FractalConfig(args.m_min, args.m_max))
    correlations = None
    if args.ref:
        r1, _ = read_notes_file(args.ref[0], ls.raga.name)
        r2, _ = read_notes_file(args.ref[1], ls.raga.name)
        for r in (r1, r2):
            if r.raga != ls.raga or len(r) != len(ls):
                raise MismatchError("reference strings must share the input's raga and length")
        x = decode_amplitudes(ls)
        c1 = correlation(x, decode_amplitudes(r1))
        c2 = correlation(x, decode_amplitudes(r2))
        correlations = {"c1": c1, "c2": c2, "score": c1 + c2}
    report = build_report(
        ls,
        lam=_float_or_none(headers.get("lambda")),
        x0=_float_or_none(headers.get("x0")),
        correlations=correlations,
        fractal=frac,
    )
    text = dumps_report(report)
    if args.compare is not None:
        sys.stderr.write(
            f"dimension {frac.dimension:.5f} (reference {args.compare:.5f}, "
            f"difference {frac.dimension - args.compare:+.5f})\n"
        )
    if args.figure:
        render_report_figure(ls, frac, args.figure, paper_dimension=args.compare)
    if args.report:
        atomic_write(args.report, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_plot(args):
    ls, _ = read_notes_file(args.input, args.raga)
    atomic_write(args.out, svg_graph(ls, title=os.path.basename(args.input)))
    return 0


def cmd_synth(args):
    ls, _ = read_notes_file(args.input, args.raga)
    samples = render(ls.to_notes(), sa_hz=args.sa_hz, duration=args.duration)
    atomic_write(args.out, wav_bytes(samples))
    return 0


def cmd_list_ragas(args):
    ragas = registered_ragas()
    if args.json:
        doc = [
            {
                "name": r.name,
                "n_levels": r.n_levels,
                "alphabet": "".join(r.alphabet),
                "bin_width": 1.0 / r.n_levels,
            }
            for r in ragas
        ]
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        for r in ragas:
            sys.stdout.write(
                f"{r.name}\t{r.n_levels}\t{''.join(r.alphabet)}\t1/{r.n_levels}\n"
            )
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chaosraga",
        description="Logistic-map raga strings, correlation search and box-counting dimension.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--raga-file", action="append", default=[], metavar="PATH",
        help="register a custom raga (line 1 name, line 2 alphabet); repeatable",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="quantize a logistic-map orbit into a note string")
    p.add_argument("--raga", default="bhupali")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--x0", type=float, required=True)
    p.add_argument("--length", type=int, default=1000)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("compose", help="search a random pool for a close relative of two strings")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--raga", help="raga for files without a header")
    p.add_argument("--pool", type=_positive_int, default=DEFAULT_POOL)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--mode", choices=MODES, default="logistic")
    p.add_argument("--lambda-min", type=float, default=DEFAULT_LAMBDA_RANGE[0])
    p.add_argument("--lambda-max", type=float, default=DEFAULT_LAMBDA_RANGE[1])
    p.add_argument("--threads", type=_positive_int, default=os.cpu_count() or 1)
    p.add_argument("-o", "--out")
    p.add_argument("--report")
    p.add_argument("-q", "--quiet", action="store_true", help="no progress on stderr")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("analyze", help="box-counting dimension, optionally correlations to two references")
    p.add_argument("input")
    p.add_argument("--raga")
    p.add_argument("--ref", nargs=2, metavar=("A", "B"))
    p.add_argument("--m-min", type=int, default=1)
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--report")
    p.add_argument("--figure", help="also write a PNG of the graph and the box-count fit")
    p.add_argument("--compare", type=float, metavar="D",
                   help="reference dimension to log next to the computed one")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("plot", help="write the string graph as SVG")
    p.add_argument("input")
    p.add_argument("--raga")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("synth", help="render a note string as a WAV file")
    p.add_argument("input")
    p.add_argument("--raga")
    p.add_argument("--sa-hz", type=float, default=DEFAULT_SA_HZ)
    p.add_argument("--duration", type=float, default=DEFAULT_DURATION, help="seconds per note")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("list-ragas", help="list registered ragas")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_list_ragas)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        for path in args.raga_file:
            register_raga(load_raga_file(path))
        return args.func(args)
    except (ChaosRagaError, OSError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        sys.stderr.write(f"chaosraga: error: {msg}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""bwac command-line interface.

Exit codes: 0 success, 1 usage, 2 I/O, 3 corrupt input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .bench import load_baseline, run_bench
from .eah import eah_encode_codes
from .errors import CorruptionError, GuardError
from .pipeline import PipelineConfig, bits_per_symbol, compress, decompress, split_blocks

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_CORRUPT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_size(text: str) -> int:
    """``4096``, ``4K``, ``1M`` or ``0``."""
    units = {"K": 1 << 10, "M": 1 << 20, "G": 1 << 30}
    text = text.strip().upper().removesuffix("IB").removesuffix("B")
    try:
        if text and text[-1] in units:
            return int(text[:-1]) * units[text[-1]]
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid size {text!r}") from None


def _config(args) -> PipelineConfig:
    try:
        return PipelineConfig(order=args.order, block_size=args.block_size)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _show_symbol(value: int, raw: bool) -> str:
    if not raw:
        return str(value)
    ch = chr(value)
    return ch if ch.isprintable() and not ch.isspace() else f"\\x{value:02x}"


def _escape(data: bytes) -> str:
    return repr(bytes(data))[2:-1]


def _clip(items: list[str], limit: int, sep: str = ",") -> str:
    if limit and len(items) > limit:
        return sep.join(items[:limit]) + f"{sep}... ({len(items)} total)"
    return sep.join(items)


def _print_eah(out, labels: list[str], order: int, limit: int) -> None:
    p = len(labels)
    sep = "" if all(len(s) == 1 for s in labels) else ","
    print("  prefix=" + sep.join(labels[s] for s in out.prefix))
    nctx = p ** order
    if p <= 16 and nctx <= 64:
        ctx_labels = []
        for j in range(nctx):
            digits = []
            for _ in range(order):
                j, d = divmod(j, p)
                digits.append(labels[d])
            ctx_labels.append(sep.join(reversed(digits)))
        w = max(len(c) for c in ctx_labels + labels)
        print("  b:")
        print("    " + " " * w + " " + " ".join(c.rjust(w) for c in ctx_labels))
        for s in range(p):
            row = " ".join(str(int(v)).rjust(w) for v in out.b[s])
            print(f"    {labels[s].rjust(w)} {row}")
    else:
        print(f"  b: {out.bitmap.count} of {out.bitmap.size} bits set")
    print(f"  Y=({_clip(list(out.y), limit)})")
    print(f"  |Z|={len(out.z)}")
    if not limit or len(out.z) <= 16 * limit:
        print(f"  Z={out.z}")


def cmd_compress(args) -> int:
    cfg = _config(args)
    data = Path(args.input).read_bytes()
    blob = compress(data, cfg, jobs=args.jobs).to_bytes(cfg.bitmap_guard)
    Path(args.output).write_bytes(blob)
    print(f"{args.input}: {len(data)} -> {len(blob)} bytes, "
          f"{bits_per_symbol(len(data), len(blob)):.2f} bits/symbol")
    return EXIT_OK


def cmd_decompress(args) -> int:
    blob = Path(args.input).read_bytes()
    data = decompress(blob, jobs=args.jobs)
    Path(args.output).write_bytes(data)
    print(f"{args.input}: {len(blob)} -> {len(data)} bytes")
    return EXIT_OK


def cmd_inspect(args) -> int:
    cfg = _config(args)
    data = Path(args.input).read_bytes()
    limit = args.limit
    if args.raw:
        if args.stage != "eah":
            raise UsageError("--raw applies to --stage eah only")
        for k, chunk in enumerate(split_blocks(data, cfg.block_size)):
            symbols, codes = np.unique(np.frombuffer(chunk, dtype=np.uint8), return_inverse=True)
            out = eah_encode_codes(codes.ravel(), len(symbols), cfg.order, cfg.bitmap_guard)
            labels = [_show_symbol(s, True) for s in symbols.tolist()]
            print(f"block {k}: t={len(chunk)} p={len(symbols)} order={cfg.order} (raw input)")
            _print_eah(out, labels, cfg.order, limit)
        return EXIT_OK

    def show(trace):
        t = len(trace.ranks)
        print(f"block {trace.index}: t={t} p={len(trace.alphabet)} alphabet={_escape(trace.alphabet)}")
        if args.stage == "bwt":
            print(f"  I={trace.bwt.index}")
            s = trace.bwt.transformed
            clipped = s if not limit or len(s) <= 16 * limit else s[:16 * limit]
            print(f"  S'={_escape(clipped)}" + ("" if clipped is s else f"... ({len(s)} total)"))
        elif args.stage == "mtf":
            print(f"  R=({_clip([str(r) for r in trace.ranks.tolist()], limit)})")
        else:
            labels = [str(r) for r in range(len(trace.alphabet))]
            _print_eah(trace.eah, labels, cfg.order, limit)

    compress(data, cfg, inspect=show)
    return EXIT_OK


def cmd_bench(args) -> int:
    cfg = _config(args)
    baseline = load_baseline(args.baseline) if args.baseline else None
    corpus = Path(args.corpus_dir)
    if not corpus.is_dir():
        raise FileNotFoundError(f"{corpus} is not a directory")
    report = run_bench(corpus, cfg, baseline, verify=args.verify, jobs=args.jobs)
    print(report.format_table())
    if args.tsv == "-":
        print()
        sys.stdout.write(report.to_tsv())
    elif args.tsv:
        Path(args.tsv).write_text(report.to_tsv(), encoding="utf-8")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bwac", description="BWT + MTF + order-n adaptive Huffman compressor")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pipeline_opts(p):
        p.add_argument("-n", "--order", type=int, default=1, help="context order (default 1)")
        p.add_argument("-b", "--block-size", type=parse_size, default=1 << 20,
                       help="block size, e.g. 4K or 1M; 0 = whole file (default 1M)")

    def jobs_opt(p):
        p.add_argument("-j", "--jobs", type=int, default=1, help="worker processes (default 1)")

    p = sub.add_parser("compress", help="compress a file")
    p.add_argument("input")
    p.add_argument("output")
    pipeline_opts(p)
    jobs_opt(p)
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("decompress", help="decompress a container")
    p.add_argument("input")
    p.add_argument("output")
    jobs_opt(p)
    p.set_defaults(func=cmd_decompress)

    p = sub.add_parser("inspect", help="print intermediate values per block")
    p.add_argument("input")
    p.add_argument("--stage", choices=["bwt", "mtf", "eah"], required=True)
    p.add_argument("--raw", action="store_true",
                   help="feed the input bytes straight to the EAH stage (skip BWT and MTF)")
    p.add_argument("--limit", type=int, default=64,
                   help="max list items printed per block; 0 = all (default 64)")
    pipeline_opts(p)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("bench", help="benchmark every file of a corpus directory")
    p.add_argument("corpus_dir")
    p.add_argument("--baseline", help="TSV of 'name<TAB>bytes' reference sizes")
    p.add_argument("--tsv", help="also write machine-readable rows here ('-' = stdout)")
    p.add_argument("--verify", action="store_true", help="decompress and compare each file")
    pipeline_opts(p)
    jobs_opt(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GuardError) as exc:
        print(f"bwac: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CorruptionError as exc:
        print(f"bwac: corrupt input: {exc}", file=sys.stderr)
        return EXIT_CORRUPT
    except OSError as exc:
        print(f"bwac: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

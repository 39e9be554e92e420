"""Corpus benchmarking: per-file sizes, bits/symbol and optional baseline comparison."""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path

from .pipeline import PipelineConfig, bits_per_symbol, compress, decompress


@dataclass
class BenchRow:
    name: str
    original: int
    compressed: int
    seconds: float
    baseline: int | None = None

    @property
    def bits_per_symbol(self) -> float:
        return round(bits_per_symbol(self.original, self.compressed), 2)

    @property
    def saved(self) -> int | None:
        if self.baseline is None:
            return None
        return self.baseline - self.compressed

    @property
    def improvement(self) -> float | None:
        if self.baseline is None or self.baseline == 0:
            return None
        return round(100.0 * (self.baseline - self.compressed) / self.baseline, 2)


@dataclass
class BenchReport:
    rows: list[BenchRow]

    @property
    def has_baseline(self) -> bool:
        return any(r.baseline is not None for r in self.rows)

    def totals(self) -> BenchRow:
        baselines = [r.baseline for r in self.rows]
        return BenchRow(
            "Total",
            sum(r.original for r in self.rows),
            sum(r.compressed for r in self.rows),
            sum(r.seconds for r in self.rows),
            sum(baselines) if baselines and None not in baselines else None,
        )

    def _cells(self, row: BenchRow) -> list[str]:
        cells = [row.name, f"{row.original:,}", f"{row.compressed:,}",
                 f"{row.bits_per_symbol:.2f}", f"{row.seconds:.2f}"]
        if self.has_baseline:
            if row.baseline is None:
                cells += ["--", "--", "--"]
            else:
                cells += [f"{row.baseline:,}", f"{row.saved:,}", f"{row.improvement:.2f}"]
        return cells

    def format_table(self) -> str:
        header = ["File", "Size (bytes)", "Compressed", "bits/symbol", "Time (s)"]
        if self.has_baseline:
            header += ["Baseline", "Saved (bytes)", "Improvement %"]
        body = [self._cells(r) for r in self.rows]
        total = self._cells(self.totals())
        widths = [max(len(line[i]) for line in [header, *body, total]) for i in range(len(header))]

        def fmt(cells):
            return "  ".join(c.ljust(w) if i == 0 else c.rjust(w)
                             for i, (c, w) in enumerate(zip(cells, widths)))

        rule = "-" * len(fmt(header))
        return "\n".join([fmt(header), rule, *map(fmt, body), rule, fmt(total)])

    def to_tsv(self) -> str:
        cols = ["name", "original", "compressed", "bits_per_symbol", "seconds"]
        if self.has_baseline:
            cols += ["baseline", "saved", "improvement_pct"]
        lines = ["\t".join(cols)]
        for r in [*self.rows, self.totals()]:
            vals = [r.name, str(r.original), str(r.compressed), f"{r.bits_per_symbol:.2f}", f"{r.seconds:.3f}"]
            if self.has_baseline:
                vals += ["" if r.baseline is None else str(r.baseline),
                         "" if r.saved is None else str(r.saved),
                         "" if r.improvement is None else f"{r.improvement:.2f}"]
            lines.append("\t".join(vals))
        return "\n".join(lines) + "\n"


def load_baseline(path: str | Path) -> dict[str, int]:
    """Read ``name<TAB>bytes`` lines; blank lines and ``#`` comments are skipped."""
    sizes = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 'name size'")
        sizes[parts[0]] = int(parts[1].replace(",", ""))
    return sizes


def corpus_files(corpus_dir: str | Path) -> list[Path]:
    return sorted(p for p in Path(corpus_dir).iterdir() if p.is_file() and not p.name.startswith("."))


def run_bench(corpus_dir: str | Path, config: PipelineConfig | None = None,
              baseline: dict[str, int] | None = None, verify: bool = False,
              jobs: int = 1) -> BenchReport:
    files = corpus_files(corpus_dir)
    if not files:
        raise FileNotFoundError(f"no files in corpus directory {corpus_dir}")
    cfg = config or PipelineConfig()
    rows = []
    for path in files:
        data = path.read_bytes()
        start = time.perf_counter()
        blob = compress(data, cfg, jobs=jobs).to_bytes(cfg.bitmap_guard)
        seconds = time.perf_counter() - start
        if verify and decompress(blob, jobs=jobs, guard=cfg.bitmap_guard) != data:
            raise AssertionError(f"{path.name}: roundtrip mismatch")
        ref = None
        if baseline is not None:
            ref = baseline.get(path.name, baseline.get(path.stem))
        rows.append(BenchRow(path.name, len(data), len(blob), seconds, ref))
    return BenchReport(rows)

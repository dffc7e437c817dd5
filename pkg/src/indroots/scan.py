"""Exhaustive scan of graph6 corpora for purely imaginary independence roots.

Input is split into fixed-size chunks that a process pool works through;
results are merged by chunk index, so the report does not depend on the
number of workers.
"""
from __future__ import annotations

import gzip
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

from .certify import certify_imaginary, has_imaginary_roots
from .errors import Graph6Error, IndRootsError
from .graph6 import parse_graph6
from .indpoly import DEFAULT_MAX_ORDER, ind_poly

DEFAULT_CHUNK_SIZE = 4096


class ScanInputError(IndRootsError, ValueError):
    def __init__(self, line_index: int, message: str):
        self.line_index = line_index
        super().__init__(f"line {line_index}: {message}")


@dataclass
class ScanReport:
    input_count: int = 0
    flagged: list[tuple[int, str, dict]] = field(default_factory=list)
    max_order_seen: int = 0
    elapsed: float = 0.0
    malformed: list[tuple[int, str]] = field(default_factory=list)

    def comparable(self) -> dict:
        """Report body without timing, stable across runs and worker counts."""
        return {
            "input_count": self.input_count,
            "max_order_seen": self.max_order_seen,
            "flagged_count": len(self.flagged),
            "flagged": [
                {"line": i, "graph6": g6, "certificate": cert} for i, g6, cert in self.flagged
            ],
            "malformed": [{"line": i, "error": msg} for i, msg in self.malformed],
        }

    def to_json(self, include_timing: bool = True) -> str:
        body = {"report": self.comparable()}
        if include_timing:
            body["timing"] = {"elapsed_seconds": round(self.elapsed, 3)}
        return json.dumps(body, sort_keys=True, indent=2)


def _scan_chunk(job: tuple[int, list[tuple[int, str]], int]) -> tuple[int, int, list, list]:
    """Returns (count, max order, flagged, malformed) for one chunk."""
    lines, max_order = job[1], job[2]
    count = 0
    top = 0
    flagged = []
    malformed = []
    for idx, text in lines:
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            malformed.append((idx, str(exc)))
            continue
        if g.n > max_order:
            malformed.append((idx, f"order {g.n} exceeds --max-order {max_order}"))
            continue
        count += 1
        top = max(top, g.n)
        p = ind_poly(g, max_order=max(max_order, DEFAULT_MAX_ORDER))
        if has_imaginary_roots(p):
            flagged.append((idx, text.strip(), certify_imaginary(p).to_json()))
    return count, top, flagged, malformed


def _numbered(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    for idx, line in enumerate(lines):
        text = line.strip()
        if text:
            yield idx, text


def _chunks(lines: Iterable[str], size: int) -> Iterator[list[tuple[int, str]]]:
    buf: list[tuple[int, str]] = []
    for item in _numbered(lines):
        buf.append(item)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def scan_lines(lines: Iterable[str], *, jobs: int = 1, lenient: bool = False,
               max_order: int = DEFAULT_MAX_ORDER,
               chunk_size: int = DEFAULT_CHUNK_SIZE) -> ScanReport:
    start = time.perf_counter()
    jobs_iter = ((i, chunk, max_order) for i, chunk in enumerate(_chunks(lines, chunk_size)))
    report = ScanReport()

    if jobs <= 1:
        results = map(_scan_chunk, jobs_iter)
        report = _merge(results, lenient)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map() yields in submission order, which is chunk order
            report = _merge(pool.map(_scan_chunk, jobs_iter), lenient)
    report.elapsed = time.perf_counter() - start
    return report


def _merge(results, lenient: bool) -> ScanReport:
    report = ScanReport()
    for count, top, flagged, malformed in results:
        if malformed and not lenient:
            idx, msg = malformed[0]
            raise ScanInputError(idx, msg)
        report.input_count += count
        report.max_order_seen = max(report.max_order_seen, top)
        report.flagged.extend(flagged)
        report.malformed.extend(malformed)
    return report


def open_corpus(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    if path.endswith(".gz"):
        return io.TextIOWrapper(gzip.open(path, "rb"), encoding="ascii", errors="replace")
    return open(path, encoding="ascii", errors="replace")


def scan_file(path: str, **kwargs) -> ScanReport:
    fh = open_corpus(path)
    try:
        return scan_lines(fh, **kwargs)
    finally:
        if fh is not sys.stdin:
            fh.close()

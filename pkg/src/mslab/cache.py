"""Append-only JSON-lines cache of search reports."""
from __future__ import annotations

import json
import os
import threading
from pathlib import Path
from typing import Iterator

from .search import SearchConfig, SearchReport

_lock = threading.Lock()


def cache_key(n: int, d: int, r: int, cfg: SearchConfig) -> dict:
    return {
        "n": n,
        "d": d,
        "r": r,
        "seed": cfg.seed,
        "restarts": cfg.restarts,
        "alpha_steps": cfg.alpha_steps,
        "local_iters": cfg.local_iters,
        "denominator": cfg.denominator,
    }


class ResultCache:
    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)

    def records(self) -> Iterator[dict]:
        if not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    yield json.loads(line)

    def get(self, n: int, d: int, r: int, cfg: SearchConfig) -> SearchReport | None:
        key = cache_key(n, d, r, cfg)
        hit = None
        for rec in self.records():
            if rec.get("key") == key:
                hit = rec
        return SearchReport.from_record(hit["report"]) if hit else None

    def put(self, report: SearchReport, cfg: SearchConfig) -> None:
        rec = {"key": cache_key(report.n, report.d, report.r, cfg), "report": report.to_record()}
        line = json.dumps(rec, sort_keys=True)
        with _lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    def best_upper_bounds(self) -> dict[tuple[int, int, int], int]:
        """Smallest cached best_phi per (n, d, r), across all seeds and configs."""
        best: dict[tuple[int, int, int], int] = {}
        for rec in self.records():
            rep = rec["report"]
            k = (rep["n"], rep["d"], rep["r"])
            best[k] = min(best.get(k, rep["best_phi"]), rep["best_phi"])
        return best

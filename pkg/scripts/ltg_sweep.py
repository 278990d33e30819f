"""Local-to-global sweep: pass counts and timing per field.

    python3 scripts/ltg_sweep.py --count 200 --fields Q Fp:3 Fp:5 --seed 7
"""

from __future__ import annotations

import argparse
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from a1deg.field import Field
from a1deg.sampling import instance_rng, random_split_function
from a1deg.sums import verify_local_to_global


@dataclass(frozen=True)
class SweepConfig:
    fields: tuple = ("Q", "Fp:3", "Fp:5", "Fp:7", "Fp:11")
    count: int = 200
    seed: int = 7
    max_degree: int = 8
    max_roots: int = 4
    workers: int = 1


def _one(job):
    field_text, seed, i, max_degree, max_roots = job
    F = random_split_function(Field.parse(field_text), instance_rng(seed, i), max_degree, max_roots)
    rep = verify_local_to_global(F)
    return rep.classes_equal, rep.matrix_identity_holds, F.degree


def sweep(cfg: SweepConfig) -> list[dict]:
    rows = []
    for name in cfg.fields:
        jobs = [(name, cfg.seed, i, cfg.max_degree, cfg.max_roots) for i in range(cfg.count)]
        t0 = time.perf_counter()
        if cfg.workers > 1:
            with ProcessPoolExecutor(cfg.workers) as pool:
                results = list(pool.map(_one, jobs, chunksize=16))
        else:
            results = [_one(j) for j in jobs]
        rows.append(
            {
                "field": name,
                "instances": len(results),
                "classes_equal": sum(r[0] for r in results),
                "matrix_identity": sum(r[1] for r in results),
                "mean_degree": sum(r[2] for r in results) / len(results),
                "seconds": time.perf_counter() - t0,
            }
        )
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    d = SweepConfig()
    ap.add_argument("--fields", nargs="+", default=list(d.fields))
    ap.add_argument("--count", type=int, default=d.count)
    ap.add_argument("--seed", type=int, default=d.seed)
    ap.add_argument("--max-degree", type=int, default=d.max_degree)
    ap.add_argument("--max-roots", type=int, default=d.max_roots)
    ap.add_argument("--workers", type=int, default=d.workers)
    a = ap.parse_args()
    cfg = SweepConfig(tuple(a.fields), a.count, a.seed, a.max_degree, a.max_roots, a.workers)
    print(f"{'field':>8} {'n':>5} {'classes':>8} {'matrix':>7} {'mean deg':>9} {'time (s)':>9}")
    for r in sweep(cfg):
        print(
            f"{r['field']:>8} {r['instances']:>5} {r['classes_equal']:>8} {r['matrix_identity']:>7}"
            f" {r['mean_degree']:>9.2f} {r['seconds']:>9.2f}"
        )


if __name__ == "__main__":
    main()

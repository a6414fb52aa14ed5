#!/usr/bin/env python3
"""Run every suite twice and confirm the two reports are byte-identical.

    python3 scripts/run_all_suites.py --jobs 4 --outdir reports
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from butforms.cli import RunConfig, run_suite  # noqa: E402
from butforms.suites import SUITES  # noqa: E402


@dataclass
class BatchConfig:
    seed: int = 0
    jobs: int = 1
    outdir: str = "reports"
    skip_conjectures: bool = False


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--outdir", default="reports")
    p.add_argument("--skip-conjectures", action="store_true")
    cfg = BatchConfig(**vars(p.parse_args(argv)))
    outdir = Path(cfg.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    worst = 0
    for suite in SUITES:
        if cfg.skip_conjectures and suite == "conjectures":
            continue
        first = run_suite(RunConfig(suite=suite, seed=cfg.seed, jobs=cfg.jobs))
        again = run_suite(RunConfig(suite=suite, seed=cfg.seed, jobs=cfg.jobs)).to_json()
        (outdir / f"{suite}.json").write_text(first.to_json())
        same = "identical" if again == first.to_json() else "DIFFERENT"
        print(f"{suite:<12} {first.status:<15} {len(first.checks):3d} checks  rerun {same}")
        worst = max(worst, first.exit_code, 0 if same == "identical" else 1)
    return worst


if __name__ == "__main__":
    sys.exit(main())

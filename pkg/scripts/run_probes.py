#!/usr/bin/env python3
"""Run the conjecture probes and write their findings as JSON.

    python3 scripts/run_probes.py --m 2 3 --out probes.json
"""

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from butforms.cli import jsonable  # noqa: E402
from butforms.quantum.probes import affine_bn1_probe, braid_m3_probe  # noqa: E402


@dataclass
class ProbeConfig:
    m: list = field(default_factory=lambda: [2, 3])
    count: int = 60
    seed: int = 0
    out: str | None = None


def run(cfg: ProbeConfig) -> dict:
    out = {"config": asdict(cfg), "braid": {}, "affine": None}
    for m in cfg.m:
        print(f"braid probe m={m} ...", file=sys.stderr)
        out["braid"][str(m)] = braid_m3_probe(m=m, count=cfg.count, seed=cfg.seed)
    print("affine probe n=2 m=2 ...", file=sys.stderr)
    out["affine"] = affine_bn1_probe(count=cfg.count, seed=cfg.seed)
    return out


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--m", type=int, nargs="+", default=[2, 3])
    p.add_argument("--count", type=int, default=60)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    cfg = ProbeConfig(**vars(p.parse_args(argv)))
    res = run(cfg)
    text = json.dumps(jsonable(res), sort_keys=True, indent=2) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text)
    for m, rep in res["braid"].items():
        print(f"braid m={m}: {rep['status']}  middle-entry exponents {rep.get('middle_entry_exponents')}")
    a = res["affine"]
    print(f"affine n=2 m=2: {a['status']}  corner exponents {a.get('corner_transpose_exponents')}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

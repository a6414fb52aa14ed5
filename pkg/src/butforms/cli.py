"""Command-line entry point: ``verify <suite> [options]`` and ``verify dump <object>``.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 a resource
bound stopped some check (the partial report is still written).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path

from .kernel.gens import Gen
from .kernel.mpoly import MPoly, to_text
from .shapes import ButShape
from .suites import SUITES, CheckSpec, SuiteOptions, build

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3
DUMP_OBJECTS = ("shape", "braid-matrix", "r-matrix", "central-set")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    suite: str = "all"
    shape: str | None = None
    K: int = 2
    seed: int = 0
    m: int | None = None
    max_N: int = 8
    step_bound: int = 200_000
    max_word: int = 6
    samples: int = 200
    jobs: int = 1
    timings: bool = False
    out: str | None = None
    json: bool = False

    def validate(self) -> None:
        if self.suite not in SUITES + ("all",):
            raise UsageError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES + ('all',))}")
        for name in ("K", "max_N", "step_bound", "max_word", "samples", "jobs"):
            if getattr(self, name) <= 0:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
        if self.m is not None and self.m <= 0:
            raise UsageError("--m must be positive")
        if self.shape is not None:
            try:
                ButShape.parse(self.shape)
            except ValueError as exc:
                raise UsageError(str(exc)) from None

    def echo(self) -> dict:
        """Config fields that determine the report contents."""
        skip = {"out", "json", "jobs", "timings"}
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name not in skip}


@dataclass
class Report:
    suite: str
    config: dict
    checks: list = field(default_factory=list)
    conjectures: list = field(default_factory=list)

    @property
    def status(self) -> str:
        states = {c["status"] for c in self.checks}
        if states & {"fail", "error"}:
            return "fail"
        if "resource-bound" in states:
            return "resource-bound"
        return "pass"

    @property
    def exit_code(self) -> int:
        return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "resource-bound": EXIT_BOUND}[self.status]

    def to_json(self) -> str:
        body = {"suite": self.suite, "config": self.config, "status": self.status,
                "checks": self.checks, "conjectures": self.conjectures}
        return json.dumps(jsonable(body), sort_keys=True, indent=2) + "\n"

    def lines(self) -> list[str]:
        out = [f"{c['status']:>14}  {c['id']}" for c in self.checks]
        out += [f"{'CONJECTURE ' + c['status']:>14}  {c['id']}" for c in self.conjectures]
        out.append(f"{self.suite}: {self.status} ({len(self.checks)} checks)")
        return out


def jsonable(x):
    """Plain JSON data: tuples to lists, exact numbers and symbols to text."""
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(jsonable(v) for v in x)
    if isinstance(x, MPoly):
        return to_text(x)
    if isinstance(x, (Fraction, Gen)):
        return str(x)
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


def _run_spec(spec: CheckSpec, step_bound: int, timings: bool) -> dict:
    from .quantum.algebra import RewritingBound, set_step_bound

    set_step_bound(step_bound)
    t0 = time.perf_counter()
    try:
        res = spec.run()
    except RewritingBound as exc:
        res = {"status": "resource-bound", "witness": str(exc)}
    except Exception as exc:  # a crashing check is reported, not raised
        res = {"status": "error", "witness": f"{type(exc).__name__}: {exc}"}
    rec = {"id": spec.id, "anchor": spec.anchor}
    status = res.get("status", "error")
    rec["status"] = status
    rec["witness"] = res.get("witness") if status != "pass" else None
    detail = {k: v for k, v in res.items() if k not in ("status", "witness")}
    if detail:
        rec["detail"] = detail
    if spec.conjecture:
        rec["label"] = "CONJECTURE"
    if timings:
        rec["elapsed"] = round(time.perf_counter() - t0, 3)
    return rec


def run_suite(config: RunConfig) -> Report:
    config.validate()
    opts = SuiteOptions(
        shape=ButShape.parse(config.shape) if config.shape else None,
        K=config.K,
        seed=config.seed,
        m=config.m,
        samples=config.samples,
        max_word=config.max_word,
    )
    specs = build(config.suite, opts)
    report = Report(config.suite, config.echo())
    runnable = [s for s in specs if s.size <= config.max_N]
    for s in specs:
        if s.size > config.max_N:
            rec = {"id": s.id, "anchor": s.anchor, "status": "resource-bound",
                   "witness": f"size {s.size} exceeds max-N {config.max_N}"}
            (report.conjectures if s.conjecture else report.checks).append(rec)
    if config.jobs > 1 and len(runnable) > 1:
        with ProcessPoolExecutor(config.jobs) as pool:
            recs = list(pool.map(_run_spec, runnable, [config.step_bound] * len(runnable), [config.timings] * len(runnable)))
    else:
        recs = [_run_spec(s, config.step_bound, config.timings) for s in runnable]
    for s, rec in zip(runnable, recs):
        (report.conjectures if s.conjecture else report.checks).append(rec)
    report.checks.sort(key=lambda r: r["id"])
    report.conjectures.sort(key=lambda r: r["id"])
    return report


# dump ----------------------------------------------------------------------------------------
def read_matrix(path: str) -> list[list[Fraction]]:
    """Square matrix from a JSON list of rows with rational-string entries."""
    rows = json.loads(Path(path).read_text())
    if not isinstance(rows, list) or not rows or any(len(r) != len(rows) for r in rows):
        raise UsageError(f"{path}: expected a square list of rows")
    try:
        return [[Fraction(str(x)) for x in r] for r in rows]
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _text_matrix(M) -> list[list[str]]:
    out = []
    for row in M:
        out.append([to_text(x) if isinstance(x, MPoly) else str(x) for x in row])
    return out


def dump(obj: str, shape: ButShape | None = None, I: int = 1, N: int | None = None, matrix=None) -> dict:
    if obj not in DUMP_OBJECTS:
        raise UsageError(f"unknown dump object {obj!r}; choose from {', '.join(DUMP_OBJECTS)}")
    if obj == "r-matrix":
        from .rmatrix import quantum_R

        N = N or (shape.N if shape else 2)
        return {"object": obj, "N": N, "triplets": [list(t) for t in quantum_R(N).triplets()]}
    if shape is None:
        raise UsageError(f"dump {obj} needs --shape")
    if obj == "shape":
        return {"object": obj, "shape": shape.to_json(), "label": shape.label(),
                "free": [str(g) for g in shape.free_gens], "matrix": _text_matrix(shape.matrix())}
    if obj == "central-set":
        from .central import central_set_record

        return {"object": obj, **central_set_record(shape)}
    from .braid import BraidError, braid_matrix

    A = matrix if matrix is not None else shape.chart_matrix()
    if len(A) != shape.N:
        raise UsageError(f"matrix size {len(A)} does not match shape size {shape.N}")
    try:
        B = braid_matrix(A, shape, I)
    except BraidError as exc:
        raise UsageError(str(exc)) from None
    return {"object": obj, "shape": shape.label(), "I": I, "matrix": _text_matrix(B)}


# argument parsing ------------------------------------------------------------------------------
def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description="Exact verification suites for block upper triangular forms.")
    p.add_argument("command", nargs="?", help=f"suite ({' | '.join(SUITES + ('all',))}) or 'dump'")
    p.add_argument("target", nargs="?", help=f"object for dump ({' | '.join(DUMP_OBJECTS)})")
    p.add_argument("--suite", help="suite name (alternative to the positional form)")
    p.add_argument("--shape", help="shape descriptor, e.g. full:3, uniform:3,2, partition:2,3")
    p.add_argument("--K", type=int, help="truncation level for affine checks")
    p.add_argument("--seed", type=int, help="seed for sampled checks")
    p.add_argument("--m", type=int, help="block size for the conjecture probes")
    p.add_argument("--max-N", dest="max_N", type=int, help="skip checks on matrices larger than this")
    p.add_argument("--step-bound", dest="step_bound", type=int, help="rewriting step bound")
    p.add_argument("--max-word", dest="max_word", type=int, help="word length for the termination check")
    p.add_argument("--samples", type=int, help="sampled relation instances for large quantum shapes")
    p.add_argument("--jobs", type=int, help="worker processes")
    p.add_argument("--timings", action="store_true", default=None, help="record elapsed seconds per check")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--json", action="store_true", default=None, help="print the JSON report instead of the summary")
    p.add_argument("--config", help="JSON file of config fields; overrides flags")
    p.add_argument("--I", dest="I", type=int, default=1, help="generator index for dump braid-matrix")
    p.add_argument("--N", dest="N", type=int, help="size for dump r-matrix")
    p.add_argument("--matrix", help="JSON matrix (rational strings) for dump braid-matrix")
    return p


def config_from_args(args) -> RunConfig:
    values = {}
    for f in fields(RunConfig):
        v = getattr(args, f.name, None)
        if v is not None:
            values[f.name] = v
    if args.command and args.command != "dump":
        values["suite"] = args.command
    elif args.suite:
        values["suite"] = args.suite
    if args.config:
        try:
            extra = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"config file: {exc}") from None
        names = {f.name for f in fields(RunConfig)}
        unknown = set(extra) - names
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        values.update(extra)
    return RunConfig(**values)


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        if args.command == "dump":
            shape = ButShape.parse(args.shape) if args.shape else None
            matrix = read_matrix(args.matrix) if args.matrix else None
            text = json.dumps(jsonable(dump(args.target, shape, args.I, args.N, matrix)), sort_keys=True, indent=2) + "\n"
            if args.out:
                Path(args.out).write_text(text)
            sys.stdout.write(text)
            return EXIT_PASS
        if args.target is not None:
            raise UsageError(f"unexpected argument {args.target!r}")
        config = config_from_args(args)
        report = run_suite(config)
    except (UsageError, ValueError) as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = report.to_json()
    if config.out:
        Path(config.out).write_text(text)
    if config.json:
        sys.stdout.write(text)
    else:
        print("\n".join(report.lines()))
    return report.exit_code


__all__ = ["RunConfig", "Report", "dump", "main", "read_matrix", "run_suite"]

if __name__ == "__main__":
    sys.exit(main())

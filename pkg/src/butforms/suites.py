"""Named verification suites.

A suite is a list of :class:`CheckSpec`.  Each spec names a module-level
function and its arguments, so specs can be shipped to worker processes.
Every check function returns a dict with at least ``status`` and ``witness``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import algebroid, braid, brackets, central, rmatrix
from .affine import KLevel, kernel_resummation_residue
from .brackets import BracketRule
from .kernel.mpoly import to_text
from .kernel.sampling import rand_rational, task_rng
from .shapes import FIG_STAIRCASE, ButShape

SUITES = ("jacobi", "reduction", "central", "algebroid", "groupoid", "braid", "affine", "rmatrix", "quantum", "conjectures")


@dataclass(frozen=True)
class CheckSpec:
    id: str
    anchor: str
    func: object
    args: tuple = ()
    kwargs: tuple = ()  # sorted (key, value) pairs
    size: int = 0  # matrix size N, compared against the max-N bound
    conjecture: bool = False

    def run(self) -> dict:
        return self.func(*self.args, **dict(self.kwargs))


@dataclass
class SuiteOptions:
    shape: ButShape | None = None
    K: int = 2
    seed: int = 0
    m: int | None = None
    samples: int = 200
    max_word: int = 6


def _spec(id_, anchor, func, *args, size=0, conjecture=False, **kwargs) -> CheckSpec:
    return CheckSpec(id_, anchor, func, tuple(args), tuple(sorted(kwargs.items())), size, conjecture)


def _status(ok: bool, witness=None, **extra) -> dict:
    out = {"status": "pass" if ok else "fail", "witness": None if ok else witness}
    out.update(extra)
    return out


def _shape_list(opts: SuiteOptions, default: list[str]) -> list[ButShape]:
    return [opts.shape] if opts.shape is not None else [ButShape.parse(s) for s in default]


# jacobi ------------------------------------------------------------------------------
def jacobi_symbolic(label: str) -> dict:
    rule = BracketRule.of(ButShape.parse(label))
    checked = 0
    for triple, v in brackets.jacobi_sweep(rule):
        checked += 1
        if v:
            return _status(False, {"triple": [str(g) for g in triple], "residue": to_text(v)}, checked=checked)
    return _status(True, checked=checked)


def jacobi_numeric(label: str, seed: int, points: int = 8) -> dict:
    shape = ButShape.parse(label)
    rule = BracketRule.of(shape)
    for t in range(points):
        rng = task_rng(seed, "jacobi-point", label, t)
        point = {g: rand_rational(rng) for g in shape.free_gens}
        bad = brackets.numeric_jacobi(rule, point)
        if bad:
            return _status(False, {"point": t, "triple": [str(g) for g in bad[0]]}, points=points)
    return _status(True, points=points)


def table_jacobi(N: int, corrected: bool) -> dict:
    bad = brackets.table_jacobi_failures(N, corrected)
    return {"status": "pass", "witness": None, "failing_triples": len(bad), "corrected": corrected}


def jacobi_suite(opts: SuiteOptions) -> list[CheckSpec]:
    out = []
    if opts.shape is not None:
        s = opts.shape
        if s.N <= 5:
            out.append(_spec(f"jacobi.symbolic[{s.label()}]", "poisson.jacobi", jacobi_symbolic, s.label(), size=s.N))
        else:
            out.append(_spec(f"jacobi.numeric[{s.label()}]", "poisson.jacobi", jacobi_numeric, s.label(), opts.seed, size=s.N))
        return out
    for label in ("full:2", "full:3", "full:4", "uniform:3,1", "uniform:2,2", "uniform:4,1"):
        s = ButShape.parse(label)
        out.append(_spec(f"jacobi.symbolic[{label}]", "poisson.jacobi", jacobi_symbolic, label, size=s.N))
    out.append(_spec("jacobi.numeric[full:6]", "poisson.jacobi", jacobi_numeric, "full:6", opts.seed, size=6))
    return out


# reduction -----------------------------------------------------------------------------
REDUCTION_SHAPES = [
    "uniform:2,2",
    "uniform:3,1",
    "uniform:3,2",
    "partition:2,3",
    "staircase:" + ",".join(map(str, FIG_STAIRCASE)),
    "symmetric:2",
    "symmetric:3",
    "symmetric:4",
]


def coisotropy(label: str) -> dict:
    return brackets.coisotropy_check(ButShape.parse(label))


def symmetric_table(N: int) -> dict:
    bad = brackets.symmetric_matches_reduced_full(N)
    return _status(not bad, [list(q) for q in bad[:5]])


def table_conformance(N: int) -> dict:
    return brackets.table_conformance(N)


def reduction_suite(opts: SuiteOptions) -> list[CheckSpec]:
    out = [
        _spec(f"reduction.coisotropy[{s.label()}]", "reduction.poisson_ideal", coisotropy, s.label(), size=s.N)
        for s in _shape_list(opts, REDUCTION_SHAPES)
    ]
    if opts.shape is None:
        for N in (2, 3, 4):
            out.append(_spec(f"reduction.symmetric_table[{N}]", "reduction.symmetric_bracket", symmetric_table, N, size=N))
        out.append(_spec("reduction.triangular_table[5]", "reduction.triangular_table", table_conformance, 5, size=5))
        out.append(_spec("reduction.triangular_table_literal[4]", "reduction.triangular_table", table_jacobi, 4, False, size=4))
    return out


# central ---------------------------------------------------------------------------------
def central_elements(label: str) -> dict:
    shape = ButShape.parse(label)
    rule = BracketRule.of(shape)
    cs = central.central_set(shape)
    names = []
    for k, c in enumerate(cs["c"]):
        if c.is_const():
            continue
        names.append(f"c{k}")
        r = central.verify_central(c, rule)
        if r["status"] != "pass":
            return _status(False, {"element": f"c{k}", **r["witness"]})
    for (I, d), b in sorted(cs["b"].items()):
        if central.is_constant(b):
            continue
        names.append(f"b{d}^({I})")
        r = central.verify_central(b, rule)
        if r["status"] != "pass":
            return _status(False, {"element": f"b{d}^({I})", **r["witness"]})
    return _status(True, elements=names)


def minor_commutation(d: int, N: int) -> dict:
    r = central.verify_minor_commutation(d, N, K=1)
    return _status(r["status"] == "pass", r["witness"], checks=r["checks"])


def palindrome(N: int) -> dict:
    cs = central.poly_central_coeffs(ButShape.full(N).matrix())
    bad = [k for k in range(N + 1) if cs[k] != cs[N - k]]
    return _status(not bad, bad)


def tensor_rank(label: str, seed: int, points: int = 3) -> dict:
    shape = ButShape.parse(label)
    rule = BracketRule.of(shape)
    if shape.kind == "full":
        want = shape.N * shape.N - shape.N
    else:
        want = central.leaf_dimension(shape.n, shape.m)
    ranks = []
    for t in range(points):
        rng = task_rng(seed, "rank", label, t)
        point = brackets.shape_point(shape, rng, rand_rational)
        ranks.append(brackets.poisson_tensor_rank(rule, point))
    ok = all(r == want and r % 2 == 0 for r in ranks)
    return _status(ok, {"ranks": ranks, "expected": want}, ranks=ranks, expected=want)


def independence(label: str, seed: int) -> dict:
    return central.independence_check(ButShape.parse(label), seed)


def central_suite(opts: SuiteOptions) -> list[CheckSpec]:
    out = [
        _spec(f"central.elements[{s.label()}]", "central.casimirs", central_elements, s.label(), size=s.N)
        for s in _shape_list(opts, REDUCTION_SHAPES)
    ]
    if opts.shape is not None:
        s = opts.shape
        if s.kind in ("full", "uniform"):
            out.append(_spec(f"central.rank[{s.label()}]", "central.leaf_dimension", tensor_rank, s.label(), opts.seed, size=s.N))
        return out
    for N in (2, 3, 4):
        for d in range(1, min(3, N - 1) + 1):
            out.append(_spec(f"central.minor_commutation[N={N},d={d}]", "central.minor_commutation", minor_commutation, d, N, size=N))
    for N in range(1, 6):
        out.append(_spec(f"central.palindrome[{N}]", "central.palindrome", palindrome, N, size=N))
    for label in ("full:3", "full:4", "full:5", "uniform:3,1", "uniform:2,2", "uniform:2,3"):
        s = ButShape.parse(label)
        out.append(_spec(f"central.rank[{label}]", "central.leaf_dimension", tensor_rank, label, opts.seed, size=s.N))
    for label in ("uniform:2,2", "uniform:3,1", "uniform:2,3"):
        s = ButShape.parse(label)
        out.append(_spec(f"central.independence[{label}]", "central.census", independence, label, opts.seed, size=s.N))
    return out


# algebroid and groupoid ----------------------------------------------------------------------
def skew_symmetry(label: str) -> dict:
    return algebroid.skew_symmetry_check(ButShape.parse(label))


def bracket_recovery(label: str) -> dict:
    return algebroid.bracket_recovery_check(ButShape.parse(label))


def section_closure(label: str) -> dict:
    return algebroid.section_closure_check(ButShape.parse(label))


def tangency(label: str) -> dict:
    return algebroid.tangency_check(ButShape.parse(label))


def algebroid_suite(opts: SuiteOptions) -> list[CheckSpec]:
    if opts.shape is not None:
        s = opts.shape
        out = [
            _spec(f"algebroid.skew[{s.label()}]", "algebroid.bivector_skew", skew_symmetry, s.label(), size=s.N),
            _spec(f"algebroid.tangency[{s.label()}]", "algebroid.anchor_tangency", tangency, s.label(), size=s.N),
        ]
        if s.is_block:
            out.append(_spec(f"algebroid.recovery[{s.label()}]", "algebroid.bracket_recovery", bracket_recovery, s.label(), size=s.N))
            out.append(_spec(f"algebroid.closure[{s.label()}]", "algebroid.section_closure", section_closure, s.label(), size=s.N))
        return out
    out = []
    for N in (2, 3, 4):
        out.append(_spec(f"algebroid.skew[full:{N}]", "algebroid.bivector_skew", skew_symmetry, f"full:{N}", size=N))
    for label in ("uniform:3,1", "uniform:2,2"):
        out.append(_spec(f"algebroid.recovery[{label}]", "algebroid.bracket_recovery", bracket_recovery, label, size=ButShape.parse(label).N))
    for label in ("uniform:2,1", "uniform:1,2"):
        out.append(_spec(f"algebroid.closure[{label}]", "algebroid.section_closure", section_closure, label, size=2))
    for label in ("full:3", "uniform:3,1", "uniform:2,2", "uniform:1,2"):
        out.append(_spec(f"algebroid.tangency[{label}]", "algebroid.anchor_tangency", tangency, label, size=ButShape.parse(label).N))
    return out


def groupoid_axioms(label: str, seed: int) -> dict:
    return algebroid.groupoid_axioms(ButShape.parse(label), 20, seed)


def braid_membership(label: str, seed: int) -> dict:
    return algebroid.braid_generators_membership(ButShape.parse(label), seed)


def groupoid_suite(opts: SuiteOptions) -> list[CheckSpec]:
    shapes = _shape_list(opts, ["uniform:3,1", "uniform:2,2", "uniform:3,2", "uniform:2,3"])
    out = []
    for s in shapes:
        out.append(_spec(f"groupoid.axioms[{s.label()}]", "groupoid.axioms", groupoid_axioms, s.label(), opts.seed, size=s.N))
        if s.is_block and s.n >= 2 and len(set(s.sizes)) == 1:
            out.append(_spec(f"groupoid.braid_members[{s.label()}]", "groupoid.braid_membership", braid_membership, s.label(), opts.seed, size=s.N))
    return out


# braid ------------------------------------------------------------------------------------------
def braid_relation(n: int, m: int) -> dict:
    return braid.verify_braid_relation(n, m)


def braid_automorphism(n: int, m: int) -> dict:
    return braid.verify_braid_automorphism(n, m)


def total_braid(n: int, m: int) -> dict:
    return braid.total_braid_check(n, m)


def closed_form(n: int, m: int) -> dict:
    return braid.verify_closed_form(n, m)


def affine_braid_relation(n: int, m: int, K: int) -> dict:
    return braid.verify_affine_braid_relation(n, m, K)


def braid_suite(opts: SuiteOptions) -> list[CheckSpec]:
    if opts.shape is not None:
        s = opts.shape
        if s.kind != "uniform":
            return []
        n, m = s.n, s.m
        out = [
            _spec(f"braid.automorphism[{s.label()}]", "braid.poisson_automorphism", braid_automorphism, n, m, size=s.N),
            _spec(f"braid.total[{s.label()}]", "braid.total_braid", total_braid, n, m, size=s.N),
        ]
        if n >= 3:
            out.append(_spec(f"braid.relation[{s.label()}]", "braid.relation", braid_relation, n, m, size=s.N))
        return out
    out = []
    for n, m in ((3, 1), (3, 2), (4, 1)):
        out.append(_spec(f"braid.relation[uniform:{n},{m}]", "braid.relation", braid_relation, n, m, size=n * m))
    for n, m in ((3, 1), (2, 2)):
        out.append(_spec(f"braid.automorphism[uniform:{n},{m}]", "braid.poisson_automorphism", braid_automorphism, n, m, size=n * m))
    for n, m in ((2, 2), (3, 1), (3, 2)):
        out.append(_spec(f"braid.total[uniform:{n},{m}]", "braid.total_braid", total_braid, n, m, size=n * m))
    for n, m in ((3, 1), (3, 2)):
        out.append(_spec(f"braid.closed_form[uniform:{n},{m}]", "braid.closed_form", closed_form, n, m, size=n * m))
    out.append(_spec(f"braid.affine_relation[uniform:3,1,K={opts.K}]", "braid.affine_relation", affine_braid_relation, 3, 1, opts.K, size=3))
    return out


# affine ----------------------------------------------------------------------------------------
def klevel_checks(label: str, K: int) -> dict:
    lv = KLevel(ButShape.parse(label), K)
    hom = lv.homomorphism_check()
    if hom["status"] != "pass":
        return _status(False, {"homomorphism": hom.get("witness")})
    anti = lv.antisymmetry_violations()
    if anti:
        return _status(False, {"antisymmetry": [str(x) for x in anti[:3]]})
    jac = lv.jacobi_violations(limit=1)
    if jac:
        return _status(False, {"jacobi": [str(x) for x in jac[:1]]})
    return _status(True, generators=len(lv.gens))


def kernel_resummation(which: str, order: int) -> dict:
    """Denominator times truncated series equals the numerator up to terms
    beyond the truncation order."""
    res = kernel_resummation_residue(which, order)
    low = {k: v for k, v in res.items() if max(abs(k[0]), abs(k[1])) <= order}
    return _status(not low, {str(k): v for k, v in sorted(low.items())[:5]}, tail=len(res))


def affine_suite(opts: SuiteOptions) -> list[CheckSpec]:
    shapes = _shape_list(opts, ["full:2", "uniform:2,1", "uniform:3,1", "uniform:1,3"])
    out = [
        _spec(f"affine.klevel[{s.label()},K={opts.K}]", "affine.klevel_reduction", klevel_checks, s.label(), opts.K, size=s.N)
        for s in shapes
    ]
    if opts.shape is None:
        for which in ("k1", "k2"):
            out.append(_spec(f"affine.kernel[{which}]", "affine.kernel_series", kernel_resummation, which, 6))
    return out


# rmatrix ----------------------------------------------------------------------------------------
def rmatrix_suite(opts: SuiteOptions) -> list[CheckSpec]:
    Ns = [opts.shape.N] if opts.shape is not None else [2, 3]
    out = []
    for N in Ns:
        out.append(_spec(f"rmatrix.ybe[{N}]", "rmatrix.yang_baxter", rmatrix.ybe_check, N, size=N))
        out.append(_spec(f"rmatrix.q_one[{N}]", "rmatrix.classical_limit", rmatrix.q_one_check, N, size=N))
        out.append(_spec(f"rmatrix.bracket[{N}]", "rmatrix.tensor_bracket", rmatrix.rmatrix_bracket_check, N, size=N))
        out.append(_spec(f"rmatrix.r_operators[{N}]", "rmatrix.r_operators", rmatrix.r_operator_reconstruction, N, size=N))
        out.append(_spec(f"rmatrix.projections[{N}]", "rmatrix.r_operators", rmatrix.projection_identities, N, size=N))
    if opts.shape is None or opts.shape.N == 2:
        out.append(_spec("rmatrix.reflection[2]", "rmatrix.reflection_equation", rmatrix.reflection_consistency, 2, size=2))
    return out


# quantum ----------------------------------------------------------------------------------------
def q_confluence(N: int, sample, seed: int) -> dict:
    from .quantum import confluence_probe

    return confluence_probe(N, sample=sample, seed=seed)


def q_termination(N: int, length: int, seed: int) -> dict:
    from .quantum import termination_probe

    return termination_probe(N, count=20, length=length, seed=seed)


def q_star(label: str) -> dict:
    from .quantum import algebra_for, star_checks

    r = star_checks(algebra_for(ButShape.parse(label)))
    bad = {k: [str(x) for x in v[:3]] for k, v in sorted(r.items()) if v}
    return _status(not bad, bad)


def q_qdet(label: str) -> dict:
    from .quantum import algebra_for, qdet_checks

    r = qdet_checks(algebra_for(ButShape.parse(label)))
    bad = {k: [str(x) for x in v[:3]] for k, v in sorted(r.items()) if v}
    return _status(not bad, bad)


def q_inverse(label: str) -> dict:
    from .quantum import inverse_identity

    return inverse_identity(ButShape.parse(label))


def q_relations(label: str, count, seed: int) -> dict:
    from .quantum import relation_preservation

    return relation_preservation(ButShape.parse(label), 1, count=count, seed=seed)


def q_conjugation(label: str) -> dict:
    from .quantum import conjugation_preservation

    return conjugation_preservation(ButShape.parse(label), 1)


def q_swap(m: int) -> dict:
    from .quantum import automorphism_n2

    return automorphism_n2(m)


def q_middle(m: int) -> dict:
    from .quantum import middle_entry_law

    return middle_entry_law(m)


def q_braid_relation(n: int, m: int, a, b) -> dict:
    from .quantum import braid_relation

    return braid_relation(n, m, a, b)


def q_total(n: int, m: int) -> dict:
    from .quantum import total_braid

    return total_braid(n, m)


def q_semiclassical(N: int) -> dict:
    from .quantum import semiclassical_bridge

    return semiclassical_bridge(N)


def q_one(N: int) -> dict:
    from .quantum import q_one_commutators

    return q_one_commutators(N)


def quantum_suite(opts: SuiteOptions) -> list[CheckSpec]:
    if opts.shape is not None:
        s = opts.shape
        out = []
        if s.kind == "full" and s.N <= 4:
            sample = None if s.N <= 2 else 300
            out.append(_spec(f"quantum.confluence[{s.label()}]", "quantum.confluence", q_confluence, s.N, sample, opts.seed, size=s.N))
        if s.kind == "full" and s.N <= 3:
            out.append(_spec(f"quantum.semiclassical[{s.label()}]", "quantum.semiclassical", q_semiclassical, s.N, size=s.N))
        if s.kind in ("full", "uniform"):
            out.append(_spec(f"quantum.star[{s.label()}]", "quantum.star", q_star, s.label(), size=s.N))
        if s.kind == "uniform" and s.m <= 2:
            out.append(_spec(f"quantum.qdet[{s.label()}]", "quantum.qdet", q_qdet, s.label(), size=s.N))
            count = None if s.n <= 2 else opts.samples
            out.append(_spec(f"quantum.braid_relations[{s.label()}]", "quantum.braid.relations", q_relations, s.label(), count, opts.seed, size=s.N))
            out.append(_spec(f"quantum.braid_conjugation[{s.label()}]", "quantum.braid.conjugation", q_conjugation, s.label(), size=s.N))
            if s.n == 3:
                out.append(_spec(f"quantum.q_braid[{s.label()}]", "quantum.braid.relation", q_braid_relation, 3, s.m, None, None, size=s.N))
        return out
    out = [
        _spec("quantum.confluence[full:2]", "quantum.confluence", q_confluence, 2, None, opts.seed, size=2),
        _spec("quantum.confluence[full:3]", "quantum.confluence", q_confluence, 3, 300, opts.seed, size=3),
        _spec("quantum.termination[full:4]", "quantum.termination", q_termination, 4, opts.max_word, opts.seed, size=4),
        _spec("quantum.star[full:2]", "quantum.star", q_star, "full:2", size=2),
        _spec("quantum.star[uniform:2,2]", "quantum.star", q_star, "uniform:2,2", size=4),
        _spec("quantum.qdet[full:2]", "quantum.qdet", q_qdet, "full:2", size=2),
        _spec("quantum.qdet[uniform:2,2]", "quantum.qdet", q_qdet, "uniform:2,2", size=4),
        _spec("quantum.inverse[uniform:2,2]", "quantum.inverse", q_inverse, "uniform:2,2", size=4),
        _spec("quantum.braid_relations[uniform:2,1]", "quantum.braid.relations", q_relations, "uniform:2,1", None, opts.seed, size=2),
        _spec("quantum.braid_relations[uniform:2,2]", "quantum.braid.relations", q_relations, "uniform:2,2", None, opts.seed, size=4),
        _spec("quantum.braid_relations[uniform:3,2]", "quantum.braid.relations", q_relations, "uniform:3,2", opts.samples, opts.seed, size=6),
        _spec("quantum.braid_conjugation[uniform:2,2]", "quantum.braid.conjugation", q_conjugation, "uniform:2,2", size=4),
        _spec("quantum.braid_conjugation[uniform:3,2]", "quantum.braid.conjugation", q_conjugation, "uniform:3,2", size=6),
        _spec("quantum.swap[uniform:2,1]", "quantum.braid.swap", q_swap, 1, size=2),
        _spec("quantum.swap[uniform:2,2]", "quantum.braid.swap", q_swap, 2, size=4),
        _spec("quantum.middle_entry[uniform:3,2]", "quantum.braid.middle_entry", q_middle, 2, size=6),
        _spec("quantum.q_braid[uniform:3,1]", "quantum.braid.relation", q_braid_relation, 3, 1, None, None, size=3),
        _spec("quantum.q_braid[uniform:3,1,a=1,b=0]", "quantum.braid.relation", q_braid_relation, 3, 1, 1, 0, size=3),
        _spec("quantum.q_braid[uniform:3,2]", "quantum.braid.relation", q_braid_relation, 3, 2, None, None, size=6),
        _spec("quantum.q_braid[uniform:3,2,a=1,b=0]", "quantum.braid.relation", q_braid_relation, 3, 2, 1, 0, size=6),
        _spec("quantum.total[uniform:3,1]", "quantum.braid.total", q_total, 3, 1, size=3),
        _spec("quantum.total[uniform:3,2]", "quantum.braid.total", q_total, 3, 2, size=6),
    ]
    for N in (1, 2, 3):
        out.append(_spec(f"quantum.semiclassical[full:{N}]", "quantum.semiclassical", q_semiclassical, N, size=N))
        out.append(_spec(f"quantum.q_one[full:{N}]", "quantum.classical_limit", q_one, N, size=N))
    return out


# conjectures ---------------------------------------------------------------------------------------
def probe_braid(m: int, seed: int) -> dict:
    from .quantum import braid_m3_probe, braid_probe_consistency

    if m <= 2:
        return braid_probe_consistency(m)
    return braid_m3_probe(m, seed=seed)


def probe_affine(n: int, m: int, seed: int) -> dict:
    from .quantum import affine_bn1_probe

    return affine_bn1_probe(n, m, seed=seed)


def conjectures_suite(opts: SuiteOptions) -> list[CheckSpec]:
    ms = [opts.m] if opts.m is not None else [2, 3]
    out = [
        _spec(f"conjecture.braid[m={m}]", "conjecture.braid_exponent", probe_braid, m, opts.seed, size=2 * m, conjecture=True)
        for m in ms
    ]
    if opts.m is None or opts.m == 2:
        out.append(_spec("conjecture.affine[n=2,m=2,K=1]", "conjecture.affine_generator", probe_affine, 2, 2, opts.seed, size=4, conjecture=True))
    return out


BUILDERS = {
    "jacobi": jacobi_suite,
    "reduction": reduction_suite,
    "central": central_suite,
    "algebroid": algebroid_suite,
    "groupoid": groupoid_suite,
    "braid": braid_suite,
    "affine": affine_suite,
    "rmatrix": rmatrix_suite,
    "quantum": quantum_suite,
    "conjectures": conjectures_suite,
}


def build(suite: str, opts: SuiteOptions) -> list[CheckSpec]:
    names = SUITES if suite == "all" else (suite,)
    if any(s not in BUILDERS for s in names):
        raise KeyError(suite)
    specs = []
    for s in names:
        specs += BUILDERS[s](opts)
    return sorted(specs, key=lambda c: c.id)


__all__ = ["BUILDERS", "CheckSpec", "SUITES", "SuiteOptions", "build"]

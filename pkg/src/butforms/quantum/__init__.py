"""Quantum algebra of block upper triangular forms."""

from .algebra import NCPoly, QAlgebra, RewritingBound, algebra_for, qpow
from .braid import (
    BraidDefect,
    QButMatrix,
    apply_word,
    automorphism_n2,
    braid_relation,
    conjugation_preservation,
    inverse_identity,
    middle_entry_law,
    quantum_braid_act,
    relation_preservation,
    total_braid,
)
from .checks import (
    SEMICLASSICAL_SCALAR,
    confluence_probe,
    measured_scalars,
    nc_normal_form,
    q_one_commutators,
    semiclassical_bridge,
    termination_probe,
)
from .matrices import (
    UnsupportedBlock,
    hermitian,
    hermitian_block,
    qdet,
    qdet_checks,
    qinverse,
    qinverse_dagger,
    star,
    star_checks,
)
from .probes import LABEL, affine_bn1_probe, braid_m3_probe, braid_probe_consistency, conjecture_probe

__all__ = [
    "LABEL",
    "SEMICLASSICAL_SCALAR",
    "BraidDefect",
    "NCPoly",
    "QAlgebra",
    "QButMatrix",
    "RewritingBound",
    "UnsupportedBlock",
    "affine_bn1_probe",
    "algebra_for",
    "apply_word",
    "automorphism_n2",
    "braid_m3_probe",
    "braid_probe_consistency",
    "braid_relation",
    "confluence_probe",
    "conjecture_probe",
    "conjugation_preservation",
    "hermitian",
    "hermitian_block",
    "inverse_identity",
    "measured_scalars",
    "middle_entry_law",
    "nc_normal_form",
    "q_one_commutators",
    "qdet",
    "qdet_checks",
    "qinverse",
    "qinverse_dagger",
    "qpow",
    "quantum_braid_act",
    "relation_preservation",
    "semiclassical_bridge",
    "star",
    "star_checks",
    "termination_probe",
    "total_braid",
]

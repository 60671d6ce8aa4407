"""Minimal critical points of smooth maps between closed orientable surfaces.

Thin wrapper over the C++ extension module: exact branched-covering
arithmetic, permutation monodromy certificates, the sphere-pair
classification and the simplicial volume ratio.
"""

from ._critmin import (
    CoveringData,
    DomainError,
    EnumeratedCovering,
    InfeasibleReason,
    MonodromyCertificate,
    Permutation,
    PhiResult,
    RamificationProfile,
    RatioMod1,
    Realizability,
    RealizeResult,
    SearchBudget,
    SpherePhi,
    Surface,
    VerificationReport,
    Violation,
    admits_degree,
    certificate_from_json,
    certificate_to_json,
    classify_sphere_pair,
    closed_form_phi,
    commutator,
    conjugate,
    enumerate_covering_data,
    euler_char,
    genus_from_euler,
    hurwitz_euler,
    minimal_k,
    oracle_phi,
    patterson_feasible,
    phi,
    phi_table,
    read_certificate,
    realize,
    simplicial_volume,
    verify_certificate,
    volume_ratio,
    write_certificate,
)

__all__ = [
    "CoveringData",
    "DomainError",
    "EnumeratedCovering",
    "InfeasibleReason",
    "MonodromyCertificate",
    "Permutation",
    "PhiResult",
    "RamificationProfile",
    "RatioMod1",
    "Realizability",
    "RealizeResult",
    "SearchBudget",
    "SpherePhi",
    "Surface",
    "VerificationReport",
    "Violation",
    "admits_degree",
    "certificate_from_json",
    "certificate_to_json",
    "classify_sphere_pair",
    "closed_form_phi",
    "commutator",
    "conjugate",
    "enumerate_covering_data",
    "euler_char",
    "genus_from_euler",
    "hurwitz_euler",
    "minimal_k",
    "oracle_phi",
    "patterson_feasible",
    "phi",
    "phi_table",
    "read_certificate",
    "realize",
    "simplicial_volume",
    "verify_certificate",
    "volume_ratio",
    "write_certificate",
]

"""Folded ADE root lattices and exact characters of principal subspaces.

The package builds the rank 2n-1 type-A, type-D, and E6 root lattices
with their order-2 diagram folding, the sign 2-cocycle of the lattice
with its compatible lifting of the folding, the symbolic layer of
twisted component operators (gradings, commutator classification,
truncated relations, shift maps), and finally the multigraded dimension
of the principal subspace, computed both from the closed-form sum over
charge sectors and from the recursion it satisfies, with exact integer
arithmetic throughout.
"""

from .lattice import (
    ChargeMatrix,
    ConfigurationError,
    RootSystem,
    RootSystemKind,
    build_root_system,
    charge_matrix,
    charge_vector,
    dual_basis,
    inner,
    nu,
    orbit_representatives,
    project,
    verify_e6_embedding,
)
from .cocycle import (
    commutator_c,
    epsilon,
    nu_coeffs,
    pairing,
    psi,
    to_coeffs,
    to_vector,
    verify_cocycle,
    verify_nu_hat,
)
from .modes import (
    COMMUTE,
    DOUBLE,
    ONE,
    SINGLE,
    ZERO,
    CommCase,
    Mode,
    Monomial,
    charge,
    commutator_case,
    delta_shift,
    format_monomial,
    mode_weight,
    psi_map,
    relation_r0,
    relation_r0_general,
    tau_shift,
    theta_char,
    verify_pair_lemma,
    verify_simple_pairing_lemma,
    weight,
    x,
)
from .characters import (
    MultiSeries,
    enumerate_sectors,
    format_series,
    inv_pochhammer,
    nahm_character,
    recursion_residual,
    recursion_solve,
    sector_valuation,
    series_json,
    shifted_character_check,
    specialize_x1,
    substitute,
)
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "ChargeMatrix", "ConfigurationError", "RootSystem", "RootSystemKind",
    "build_root_system", "charge_matrix", "charge_vector", "dual_basis",
    "inner", "nu", "orbit_representatives", "project", "verify_e6_embedding",
    "commutator_c", "epsilon", "nu_coeffs", "pairing", "psi", "to_coeffs",
    "to_vector", "verify_cocycle", "verify_nu_hat",
    "COMMUTE", "DOUBLE", "ONE", "SINGLE", "ZERO", "CommCase", "Mode",
    "Monomial", "charge", "commutator_case", "delta_shift",
    "format_monomial", "mode_weight", "psi_map", "relation_r0",
    "relation_r0_general", "tau_shift", "theta_char", "verify_pair_lemma",
    "verify_simple_pairing_lemma", "weight", "x",
    "MultiSeries", "enumerate_sectors", "format_series", "inv_pochhammer",
    "nahm_character", "recursion_residual", "recursion_solve",
    "sector_valuation", "series_json", "shifted_character_check",
    "specialize_x1", "substitute",
    "Report",
]

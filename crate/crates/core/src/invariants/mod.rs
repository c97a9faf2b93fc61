//! Invariant families, the generating function `phi`, exact equivalence, and
//! symbolic quasi-invariance checking.

mod equivalence;
mod families;
mod quasi;

pub use equivalence::{
    are_equivalent, default_fingerprint_len, fingerprint, logderivative_coefficients, phi_parts,
    EquivalenceCertificate, Fingerprint, PhiParts,
};
pub use families::{
    b_l, b_l_poly_uv, b_l_with, p_l, p_l_poly_xy, q_l, q_l_poly_uv, q_l_poly_xy, uv_in_xy, xy_in_uv,
};
pub use quasi::{is_quasi_invariant, parse_terms, QuasiFailure, QuasiReport};

//! The kernel `Ω(z,w)`, the functions `ℍ_ω(z,w)` extracted from its
//! plethystic logarithm, their specializations, and type-sum point counts.

mod count;
mod hfunction;
mod omega;
mod specialize;
mod unipotent;

pub use count::{closure_sum, count_via_type_sum, count_via_type_sum_symbolic, principal_schur_dual, propmagic_holds};
pub use hfunction::{h_function, h_function_via_types, log_omega, schur_dual, HError, HFunction};
pub use omega::{macdonald_zw, negate_zw, omega_term, swap_zw, OmegaKernel};
pub use specialize::{is_palindromic, specialize_h, Outcome, Specialization, SpecializeMode};
pub use unipotent::{
    at_sqrt_q, multipartitions, phi, top_degree, top_degree_series, top_degree_via_u, u_specialize, unipotent_h_sum,
    unipotent_multitype, unipotent_product, unipotent_series_from_counts,
};

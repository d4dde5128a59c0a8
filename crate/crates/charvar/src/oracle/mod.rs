//! Brute-force ground truth over `GL_n(F_q)` for `n ≤ 3` and prime `q`:
//! conjugacy class census, characteristic functions of class closures,
//! commutator distributions and exact counts of the surface relation.

mod census;
mod classfn;
mod descriptor;
mod field;
mod gl2;

pub use census::{class_key, gl_order, key_type, ClassInfo, ClassKey, GroupCensus, Mat, DEFAULT_BUDGET};
pub use classfn::{
    class_indicator, closure_char_function, commutator_distribution, commutator_distribution_enumerated,
    commutator_histogram, convolution_count, raw_count, stack_count, ClassFunction, Counts,
};
pub use descriptor::{find_generic, is_generic, parse_classes, unipotent_descriptor, ClassDescriptor};
pub use field::{inv_mod, is_irreducible, is_prime, monic_irreducibles, ExtField, FieldError, FpPoly};
pub use gl2::{Cyclotomic, Gl2Characters};

use thiserror::Error;

use crate::partitions::ParseError;

#[derive(Debug, Clone, Error)]
pub enum OracleError {
    #[error("the census supports 1 ≤ n ≤ 3, got n = {0}")]
    Rank(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("|GL_n(F_q)| = {size} exceeds the budget of {budget} elements")]
    Budget { size: u64, budget: u64 },
    #[error("{}", .0.render())]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Descriptor(String),
    #[error("character table is only available for n = 2")]
    NoCharacterTable,
}

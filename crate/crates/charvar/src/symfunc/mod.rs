//! Symmetric functions in several alphabets with rational-function
//! coefficients.
//!
//! Everything is stored in the power-sum basis, where products, Adams
//! operations and the Hall pairing are all simple.  Other bases are reached
//! through [`SymFunc::to_basis`] and [`SymFunc::basis_element`].

mod basis;
mod characters;
mod series;
mod sym;

pub use basis::{basis_matrices, Basis, BasisMatrices};
pub use characters::{character_table, chi, CharacterTable};
pub use series::{SeriesError, SymSeries};
pub use sym::{principal_specialization_pairing, type_extension, BasisExpansion, Key, SymFunc};

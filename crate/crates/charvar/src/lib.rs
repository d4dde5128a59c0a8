//! Exact computation of `ℍ_ω(z,w)` for character varieties of punctured
//! surfaces, with the symmetric-function, quiver and finite-field machinery
//! around it.

pub mod arith;
pub mod exact;
pub mod hfun;
pub mod macdonald;
pub mod oracle;
pub mod partitions;
pub mod quiver;
pub mod symfunc;
pub mod verify;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/partitions-and-types.md")]
    mod partitions_and_types {}
    #[doc = include_str!("../../../book/src/symmetric-functions.md")]
    mod symmetric_functions {}
    #[doc = include_str!("../../../book/src/macdonald.md")]
    mod macdonald {}
    #[doc = include_str!("../../../book/src/h-function.md")]
    mod h_function {}
    #[doc = include_str!("../../../book/src/quivers.md")]
    mod quivers {}
    #[doc = include_str!("../../../book/src/point-counts.md")]
    mod point_counts {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}

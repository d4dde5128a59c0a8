//! Comet-shaped quivers attached to multi-types, root tests, dimensions and
//! genericity of eigenvalue data.

mod comet;
mod generic;

pub use comet::{
    build_quiver, class_dimension, dimension_dc, dimension_unipotent, root_test, tits_form, type_columns, CometQuiver,
    DimVector, RootKind,
};
pub use generic::{genericity_check, AbelianGroup, ClassData, GenericityError};

use serde::Serialize;

use crate::partitions::MultiType;

/// Everything the CLI reports about a multi-type's quiver.
#[derive(Clone, Debug, Serialize)]
pub struct QuiverReport {
    pub multitype: String,
    pub g: u32,
    pub quiver: CometQuiver,
    pub dimension_vector: DimVector,
    pub classification: RootKind,
    pub is_root: bool,
    pub d_c: i64,
    pub tits_form: i64,
}

pub fn report(omega: &MultiType, g: u32) -> QuiverReport {
    let (q, v) = build_quiver(omega, g);
    let c = root_test(&q, &v);
    QuiverReport {
        multitype: omega.to_string(),
        g,
        classification: c,
        is_root: c.is_root(),
        d_c: dimension_dc(omega, g),
        tits_form: tits_form(&q, &v),
        quiver: q,
        dimension_vector: v,
    }
}

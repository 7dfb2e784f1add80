//! The rational group ring `QG`, matrices over it, and the
//! Hattori-Stallings trace.

mod element;
mod matrix;
mod trace;

pub use element::GroupRingElement;
pub use matrix::GroupRingMatrix;
pub use trace::{
    augmentation_dim, hs_trace, hs_trace_raw, kaplansky_trace, product_class, restrict_matrix,
    tensor_matrix, wall_element_finite, Restriction, TensorProduct,
};

use std::sync::Arc;

use crate::group::FiniteGroup;

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

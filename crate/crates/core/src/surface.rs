//! Tensor-product patches: subdivision along either parameter and evaluation.
//!
//! Splitting along `t` at `c` replaces every column `W_0j..W_nj` with its left
//! curve segment. All columns are split with the same plan, so the β spectrum
//! is transformed once no matter how many columns or coordinates there are.

use crate::error::{Error, Result};
use crate::fastsub::{Convolution, SubdivisionPlan};
use crate::geometry::{ControlPolygon, TensorPatch};
use crate::reference;

/// The patch restricted to `[0, c] × [0, 1]`.
pub fn subdivide_patch_left(plan: &SubdivisionPlan, patch: &TensorPatch) -> Result<TensorPatch> {
    if plan.degree() != patch.row_degree() {
        return Err(Error::DegreeMismatch {
            expected: plan.degree(),
            found: patch.row_degree(),
        });
    }
    let columns = (0..=patch.column_degree())
        .map(|j| plan.subdivide_left(&patch.column(j), Convolution::Fft))
        .collect::<Result<Vec<ControlPolygon>>>()?;
    TensorPatch::from_columns(&columns)
}

/// The patch restricted to `[0, 1] × [0, c]`; `plan` has the column degree `m`.
pub fn subdivide_patch_left_u(plan: &SubdivisionPlan, patch: &TensorPatch) -> Result<TensorPatch> {
    Ok(subdivide_patch_left(plan, &patch.transposed())?.transposed())
}

/// `S(t, u)`: de Casteljau along `u` in every row, then along `t`.
pub fn evaluate_patch(patch: &TensorPatch, t: f64, u: f64) -> Result<Vec<f64>> {
    reference::check_unit_closed(t)?;
    let along_u = (0..=patch.row_degree())
        .map(|i| reference::evaluate(&patch.row(i), u))
        .collect::<Result<Vec<Vec<f64>>>>()?;
    reference::evaluate(&ControlPolygon::new(patch.dimension(), along_u)?, t)
}

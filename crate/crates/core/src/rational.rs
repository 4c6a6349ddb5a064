//! Subdivision and evaluation of rational Bézier curves.
//!
//! The left segment at `c` has weights `ν_k = Σ_i ω_i B^k_i(c)` and points
//! `V_k = Σ_i ω_i B^k_i(c) W_i / ν_k`. Both sums are left-segment control
//! points of polynomial curves, so one fast subdivision of the
//! `d + 1`-dimensional polygon `(ω_i W_i, ω_i)` yields all of them.

use crate::error::{Error, Result};
use crate::fastsub::{Convolution, SubdivisionPlan};
use crate::geometry::RationalControlPolygon;
use crate::instrument;
use crate::reference;

/// Left segment of a rational curve through the FFT.
pub fn subdivide_left_rational(
    plan: &SubdivisionPlan,
    rpolygon: &RationalControlPolygon,
) -> Result<RationalControlPolygon> {
    subdivide_left_rational_with(plan, rpolygon, Convolution::Fft)
}

/// Left segment with the chosen convolution.
///
/// When all weights are equal the weights are unchanged by subdivision and
/// the points are those of the polynomial curve.
pub fn subdivide_left_rational_with(
    plan: &SubdivisionPlan,
    rpolygon: &RationalControlPolygon,
    method: Convolution,
) -> Result<RationalControlPolygon> {
    let weights = rpolygon.weights();
    if weights.iter().all(|&w| w == weights[0]) {
        let left = plan.subdivide_left(rpolygon.polygon(), method)?;
        return RationalControlPolygon::new(left, weights.to_vec());
    }
    let lifted = plan.subdivide_left(&rpolygon.lift(), method)?;
    instrument::add_flops(lifted.as_flat().len() as u64);
    RationalControlPolygon::project(&lifted)
}

/// Right segment; `plan` must be built for `1 - c`.
pub fn subdivide_right_rational(
    plan: &SubdivisionPlan,
    rpolygon: &RationalControlPolygon,
    method: Convolution,
) -> Result<RationalControlPolygon> {
    Ok(subdivide_left_rational_with(plan, &rpolygon.reversed(), method)?.reversed())
}

/// The point `R(t)` by de Casteljau on the homogeneous polygon.
pub fn evaluate_rational(rpolygon: &RationalControlPolygon, t: f64) -> Result<Vec<f64>> {
    let mut p = reference::evaluate(&rpolygon.lift(), t)?;
    let w = p.pop().expect("lifted points have a weight coordinate");
    if !(w.is_finite() && w > 0.0) {
        return Err(Error::DegenerateWeight { index: 0, value: w });
    }
    Ok(p.into_iter().map(|x| x / w).collect())
}

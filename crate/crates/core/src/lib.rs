//! Fast subdivision of Bézier curves and patches.
//!
//! Splitting a degree-`n` curve at `c` with de Casteljau's algorithm costs
//! `O(d n²)`. The control points of the left segment are, per coordinate, a
//! rescaled product of two degree-`n` polynomials, so a real FFT brings the
//! cost down to `O(d n log n)`. This crate provides:
//!
//! * [`reference`]: the de Casteljau table, used as the accuracy oracle;
//! * [`transform`]: real-input FFT plans over `rustfft`, a built-in radix-2
//!   engine, or Bluestein for exact lengths;
//! * [`fastsub`]: scaled FFT subdivision, direct scaled convolution, and
//!   updates of the left segment when control points are appended, at a cost
//!   independent of `n`;
//! * [`calculus`], [`rational`], [`surface`]: endpoint derivatives, rational
//!   curves and tensor-product patches built on the same machinery;
//! * [`harness`]: the accuracy and timing experiments behind the `bezsub` CLI.
//!
//! ```
//! use bezier_fastsub::{reference, ControlPolygon, SubdivisionPlan};
//!
//! let curve = ControlPolygon::new(2, vec![vec![0.0, 0.0], vec![1.0, 2.0], vec![3.0, 1.0]])?;
//! let plan = SubdivisionPlan::new(curve.degree(), 0.25, None)?;
//! let left = bezier_fastsub::fastsub::subdivide_left_fft(&plan, &curve)?;
//! let exact = reference::subdivide(&curve, 0.25)?.left;
//! for (a, b) in left.as_flat().iter().zip(exact.as_flat()) {
//!     assert!((a - b).abs() < 1e-14);
//! }
//! # Ok::<(), bezier_fastsub::Error>(())
//! ```

pub mod bernstein;
pub mod calculus;
pub mod error;
pub mod fastsub;
pub mod geometry;
pub mod harness;
pub mod instrument;
pub mod rational;
pub mod reference;
pub mod surface;
pub mod transform;

pub use error::{Error, Result};
pub use fastsub::{default_scale, make_plan, Convolution, GammaTail, SubdivisionPlan};
pub use geometry::{ControlPolygon, RationalControlPolygon, SubdivisionOutcome, TensorPatch};

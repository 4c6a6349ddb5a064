//! Subdivision of Bézier curves through polynomial multiplication.
//!
//! For one coordinate with scalar control points `w_i`, the left segment at
//! `c` has control points
//!
//! ```text
//! v_k = k!/s^k · γ_k,   γ_k = Σ_{i<=k} α_i β_(k-i),
//! α_i = w_i (s c)^i / i!,   β_j = (s (1 - c))^j / j!
//! ```
//!
//! for any scale `s != 0`. The `γ_k` are the coefficients of a product of two
//! degree-`n` polynomials, so a real FFT of length `>= 2n + 1` yields all of
//! them in `O(n log n)`. The β spectrum does not depend on the control
//! points and is computed once per [`SubdivisionPlan`], then shared by every
//! coordinate, every curve and every patch column split at the same `c`.
//!
//! `s = 1` is the plain variant, which loses accuracy quickly as `n` grows
//! because the inputs decay like `1/i!` and the outputs are multiplied back
//! by `k!`. A scale near [`default_scale`] keeps both sides in range.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::{ControlPolygon, SubdivisionOutcome};
use crate::instrument;
use crate::transform::{Engine, Scratch, Spectrum, TransformPlan};

/// `s(n) = 0.375 n + 0.9`.
pub fn default_scale(n: usize) -> f64 {
    0.375 * n as f64 + 0.9
}

/// How the convolution coefficients `γ_0..γ_n` are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convolution {
    /// Forward transforms, spectrum product, inverse transform: `O(n log n)`.
    Fft,
    /// Direct summation: `O(n²)`, but every term is a product of positive factors.
    Direct,
}

/// Precomputed state for splitting degree-`n` curves at a fixed `c` with scale `s`.
#[derive(Debug, Clone)]
pub struct SubdivisionPlan {
    degree: usize,
    split: f64,
    scale: f64,
    /// `a_i = (s c)^i / i!`.
    alpha_prefactors: Vec<f64>,
    /// `β_j = (s (1 - c))^j / j!`.
    beta: Vec<f64>,
    /// `f_k = k! / s^k`.
    rescale: Vec<f64>,
    /// Absent for plans built by [`SubdivisionPlan::direct_only`].
    fft: Option<FftState>,
}

#[derive(Debug, Clone)]
struct FftState {
    transform: Arc<TransformPlan>,
    beta_spectrum: Spectrum,
}

/// Same as [`SubdivisionPlan::new`].
pub fn make_plan(n: usize, c: f64, scale: Option<f64>) -> Result<SubdivisionPlan> {
    SubdivisionPlan::new(n, c, scale)
}

impl SubdivisionPlan {
    /// Plan with the default transform engine; `scale` defaults to [`default_scale`].
    pub fn new(n: usize, c: f64, scale: Option<f64>) -> Result<Self> {
        Self::with_transform(n, c, scale, Self::transform_for(n, Engine::default())?)
    }

    pub fn with_engine(n: usize, c: f64, scale: Option<f64>, engine: Engine) -> Result<Self> {
        Self::with_transform(n, c, scale, Self::transform_for(n, engine)?)
    }

    /// Plan for [`subdivide_with_tail`] followed by up to `n` extensions.
    ///
    /// The retained coefficients reach index `2n`, so the scale is chosen for
    /// degree `2n`. With `s(n)` the top coefficients are tiny next to the
    /// largest one and the FFT leaves them with large relative error.
    pub fn for_extension(n: usize, c: f64) -> Result<Self> {
        Self::new(n, c, Some(default_scale(2 * n)))
    }

    /// Transform tables for degree `n` (logical length `2n + 1`). They depend
    /// only on `n`, so one instance can back plans for many split parameters.
    pub fn transform_for(n: usize, engine: Engine) -> Result<Arc<TransformPlan>> {
        Ok(Arc::new(TransformPlan::new(2 * n + 1, engine)?))
    }

    pub fn with_transform(
        n: usize,
        c: f64,
        scale: Option<f64>,
        transform: Arc<TransformPlan>,
    ) -> Result<Self> {
        if transform.physical_len() < 2 * n + 1 {
            return Err(Error::Length {
                len: 2 * n + 1,
                capacity: transform.physical_len(),
            });
        }
        let mut plan = Self::direct_only(n, c, scale)?;
        let beta_spectrum = transform.forward(&plan.beta)?;
        instrument::count_beta();
        plan.fft = Some(FftState {
            transform,
            beta_spectrum,
        });
        Ok(plan)
    }

    /// Plan without transform state, usable only with [`Convolution::Direct`].
    pub fn direct_only(n: usize, c: f64, scale: Option<f64>) -> Result<Self> {
        if !(c > 0.0 && c < 1.0) {
            return Err(Error::Domain(format!(
                "split parameter {c} must lie strictly inside (0, 1)"
            )));
        }
        let s = scale.unwrap_or_else(|| default_scale(n));
        if s == 0.0 || !s.is_finite() {
            return Err(Error::Domain(format!(
                "scale {s} must be finite and non-zero"
            )));
        }
        let mut alpha_prefactors = Vec::with_capacity(n + 1);
        let mut beta = Vec::with_capacity(n + 1);
        let mut rescale = Vec::with_capacity(n + 1);
        let (sc, sd) = (s * c, s * (1.0 - c));
        let (mut a, mut b, mut f) = (1.0, 1.0, 1.0);
        for i in 0..=n {
            if i > 0 {
                let k = i as f64;
                a = a * sc / k;
                b = b * sd / k;
                f = f * k / s;
            }
            if !(a.is_finite() && b.is_finite() && f.is_finite()) {
                return Err(Error::Overflow(format!(
                    "scaling factors for degree {n} and scale {s} leave the double range at index {i}"
                )));
            }
            alpha_prefactors.push(a);
            beta.push(b);
            rescale.push(f);
        }
        instrument::add_flops(6 * n as u64);

        Ok(Self {
            degree: n,
            split: c,
            scale: s,
            alpha_prefactors,
            beta,
            rescale,
            fft: None,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn split(&self) -> f64 {
        self.split
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn alpha_prefactors(&self) -> &[f64] {
        &self.alpha_prefactors
    }

    pub fn beta_coefficients(&self) -> &[f64] {
        &self.beta
    }

    pub fn rescale_factors(&self) -> &[f64] {
        &self.rescale
    }

    pub fn beta_spectrum(&self) -> Option<&Spectrum> {
        self.fft.as_ref().map(|f| &f.beta_spectrum)
    }

    pub fn transform(&self) -> Option<&Arc<TransformPlan>> {
        self.fft.as_ref().map(|f| &f.transform)
    }

    fn check(&self, polygon: &ControlPolygon) -> Result<()> {
        if polygon.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: polygon.degree(),
            });
        }
        Ok(())
    }

    /// Fills `ws.weighted` with `a_i · w_i` for coordinate `k`.
    fn weigh(&self, polygon: &ControlPolygon, k: usize, ws: &mut Workspace) {
        ws.weighted.clear();
        ws.weighted.extend(
            self.alpha_prefactors
                .iter()
                .zip(polygon.points())
                .map(|(a, p)| a * p[k]),
        );
        instrument::add_flops(ws.weighted.len() as u64);
    }

    /// Fills `ws.gamma` with the scaled convolution of `ws.weighted` and β:
    /// all `2n + 1` coefficients for the FFT, `γ_0..γ_n` for direct summation.
    fn convolve(&self, method: Convolution, ws: &mut Workspace) -> Result<()> {
        match method {
            Convolution::Fft => {
                let fft = self.fft.as_ref().ok_or(Error::PlanMismatch)?;
                fft.transform
                    .forward_into(&ws.weighted, &mut ws.spectrum, &mut ws.scratch)?;
                ws.spectrum.multiply_in_place(&fft.beta_spectrum)?;
                fft.transform
                    .inverse_into(&ws.spectrum, &mut ws.gamma, &mut ws.scratch)?;
                ws.gamma.truncate(2 * self.degree + 1);
            }
            Convolution::Direct => {
                let n = self.degree;
                ws.gamma.clear();
                ws.gamma.extend((0..=n).map(|k| {
                    ws.weighted[..=k]
                        .iter()
                        .zip(self.beta[..=k].iter().rev())
                        .map(|(a, b)| a * b)
                        .sum::<f64>()
                }));
                instrument::add_flops(((n + 1) * (n + 2)) as u64);
            }
        }
        Ok(())
    }

    /// Left segment; `on_gamma` sees each coordinate's full γ sequence.
    fn run(
        &self,
        polygon: &ControlPolygon,
        method: Convolution,
        mut on_gamma: impl FnMut(&[f64]),
    ) -> Result<ControlPolygon> {
        self.check(polygon)?;
        let d = polygon.dimension();
        let n = self.degree;
        let mut coords = vec![0.0; (n + 1) * d];
        // V_0 = W_0 exactly.
        coords[..d].copy_from_slice(polygon.first());
        let mut ws = Workspace::default();
        for k in 0..d {
            self.weigh(polygon, k, &mut ws);
            self.convolve(method, &mut ws)?;
            for (i, (f, g)) in self.rescale.iter().zip(&ws.gamma).enumerate().skip(1) {
                coords[i * d + k] = f * g;
            }
            on_gamma(&ws.gamma);
        }
        instrument::add_flops((n * d) as u64);
        ControlPolygon::from_flat(d, coords)
            .map_err(|_| Error::Overflow("subdivision produced non-finite control points".into()))
    }

    pub fn subdivide_left(
        &self,
        polygon: &ControlPolygon,
        method: Convolution,
    ) -> Result<ControlPolygon> {
        self.run(polygon, method, |_| {})
    }
}

#[derive(Debug, Default)]
struct Workspace {
    scratch: Scratch,
    spectrum: Spectrum,
    weighted: Vec<f64>,
    gamma: Vec<f64>,
}

/// Left segment through the FFT: `O(d n log n)`.
pub fn subdivide_left_fft(
    plan: &SubdivisionPlan,
    polygon: &ControlPolygon,
) -> Result<ControlPolygon> {
    plan.subdivide_left(polygon, Convolution::Fft)
}

/// Left segment through direct evaluation of the scaled convolution: `O(d n²)`.
pub fn subdivide_left_direct(
    plan: &SubdivisionPlan,
    polygon: &ControlPolygon,
) -> Result<ControlPolygon> {
    plan.subdivide_left(polygon, Convolution::Direct)
}

/// The unscaled (`s = 1`) FFT method. Accurate only for small degrees.
pub fn subdivide_left_unscaled(polygon: &ControlPolygon, c: f64) -> Result<ControlPolygon> {
    let plan = SubdivisionPlan::new(polygon.degree(), c, Some(1.0))?;
    subdivide_left_fft(&plan, polygon)
}

/// Right segment as the reversed left segment of the reversed polygon.
///
/// `plan` must be built for `1 - c`.
pub fn subdivide_right(
    plan: &SubdivisionPlan,
    polygon: &ControlPolygon,
    method: Convolution,
) -> Result<ControlPolygon> {
    Ok(plan.subdivide_left(&polygon.reversed(), method)?.reversed())
}

/// Both segments at `c`, building plans for `c` and `1 - c`.
pub fn subdivide(
    polygon: &ControlPolygon,
    c: f64,
    scale: Option<f64>,
    method: Convolution,
) -> Result<SubdivisionOutcome> {
    let n = polygon.degree();
    let transform = SubdivisionPlan::transform_for(n, Engine::default())?;
    let left_plan = SubdivisionPlan::with_transform(n, c, scale, transform.clone())?;
    let right_plan = SubdivisionPlan::with_transform(n, 1.0 - c, scale, transform)?;
    Ok(SubdivisionOutcome {
        left: left_plan.subdivide_left(polygon, method)?,
        right: subdivide_right(&right_plan, polygon, method)?,
        split_parameter: c,
    })
}

/// Raw convolution coefficients `γ_(n+1)..γ_(2n)` kept from an FFT
/// subdivision, so the left segment can follow new control points appended
/// to the curve without another transform.
#[derive(Debug, Clone)]
pub struct GammaTail {
    base_degree: usize,
    split: f64,
    scale: f64,
    /// Per coordinate, `γ_(n+1)..γ_(2n)`.
    tail: Vec<Vec<f64>>,
    /// Per coordinate, `a_i w_i` for every control point seen so far.
    weighted: Vec<Vec<f64>>,
    alpha: Vec<f64>,
    beta: Vec<f64>,
    last_rescale: f64,
    extensions: usize,
}

/// Left segment plus the retained upper half of the convolution.
///
/// Extensions are only as accurate as the retained coefficients; build the
/// plan with [`SubdivisionPlan::for_extension`] unless few extensions follow.
pub fn subdivide_with_tail(
    plan: &SubdivisionPlan,
    polygon: &ControlPolygon,
) -> Result<(ControlPolygon, GammaTail)> {
    let n = plan.degree;
    let mut tail = Vec::with_capacity(polygon.dimension());
    let left = plan.run(polygon, Convolution::Fft, |gamma| {
        tail.push(gamma[n + 1..].to_vec())
    })?;
    let weighted = (0..polygon.dimension())
        .map(|k| {
            plan.alpha_prefactors
                .iter()
                .zip(polygon.points())
                .map(|(a, p)| a * p[k])
                .collect()
        })
        .collect();
    Ok((
        left,
        GammaTail {
            base_degree: n,
            split: plan.split,
            scale: plan.scale,
            tail,
            weighted,
            alpha: plan.alpha_prefactors.clone(),
            beta: plan.beta.clone(),
            last_rescale: plan.rescale[n],
            extensions: 0,
        },
    ))
}

impl GammaTail {
    /// Degree of the curve the tail currently describes.
    pub fn degree(&self) -> usize {
        self.base_degree + self.extensions
    }

    /// Extensions still possible before a new plan is needed.
    pub fn remaining(&self) -> usize {
        self.base_degree - self.extensions
    }

    pub fn split(&self) -> f64 {
        self.split
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Retained coefficients not yet consumed, per coordinate.
    pub fn coefficients(&self, dimension: usize) -> &[f64] {
        &self.tail[dimension][self.extensions..]
    }

    /// Appends control point `W_(n+m)` and returns the new last control
    /// point `V_(n+m)` of the left segment; earlier `V_k` are unchanged.
    ///
    /// The `m`-th extension adds the `2m` products the degree-`n`
    /// convolution never formed: `α_i β_(n+m-i)` for `i < m` and
    /// `i > n`. Its cost depends on `m` only, never on `n`.
    pub fn extend_by_one(&mut self, point: &[f64]) -> Result<Vec<f64>> {
        let n = self.base_degree;
        if self.extensions >= n {
            return Err(Error::ExhaustedTail(n));
        }
        if point.len() != self.tail.len() {
            return Err(Error::DimensionMismatch {
                expected: self.tail.len(),
                found: point.len(),
            });
        }
        if point.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput("control point must be finite".into()));
        }
        let m = self.extensions + 1;
        let top = n + m;
        let kf = top as f64;
        let s = self.scale;
        let a = self.alpha[top - 1] * (s * self.split) / kf;
        let b = self.beta[top - 1] * (s * (1.0 - self.split)) / kf;
        let f = self.last_rescale * kf / s;
        if !(a.is_finite() && b.is_finite() && f.is_finite()) {
            return Err(Error::Overflow(format!(
                "scaling factors overflow at degree {top}"
            )));
        }
        self.alpha.push(a);
        self.beta.push(b);
        instrument::add_flops(8);

        let mut out = Vec::with_capacity(point.len());
        for (dim, &w) in point.iter().enumerate() {
            let weighted = &mut self.weighted[dim];
            weighted.push(a * w);
            let mut acc = self.tail[dim][m - 1];
            for i in (0..m).chain(n + 1..=top) {
                acc += weighted[i] * self.beta[top - i];
            }
            out.push(f * acc);
            instrument::add_flops(4 * m as u64 + 2);
        }
        self.last_rescale = f;
        self.extensions = m;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference;

    fn scalars(v: &[f64]) -> ControlPolygon {
        ControlPolygon::from_scalars(v).unwrap()
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!(
                (g - w).abs() <= tol * w.abs().max(1.0),
                "got {got:?}, want {want:?}"
            );
        }
    }

    #[test]
    fn default_scale_values() {
        assert!((default_scale(2) - 1.65).abs() < 1e-15);
        assert!((default_scale(20) - 8.4).abs() < 1e-15);
        assert!((default_scale(0) - 0.9).abs() < 1e-15);
    }

    #[test]
    fn plan_factors() {
        let p = make_plan(1, 0.5, Some(1.0)).unwrap();
        assert_eq!(p.beta_coefficients(), &[1.0, 0.5]);
        assert_eq!(p.rescale_factors(), &[1.0, 1.0]);

        let p = make_plan(2, 0.5, Some(2.0)).unwrap();
        assert_eq!(p.alpha_prefactors(), &[1.0, 1.0, 0.5]);
        assert_eq!(p.beta_coefficients(), &[1.0, 1.0, 0.5]);
        assert_eq!(p.rescale_factors(), &[1.0, 0.5, 0.5]);

        let p = make_plan(0, 0.3, None).unwrap();
        assert_eq!(p.rescale_factors(), &[1.0]);
        assert_eq!(p.scale(), 0.9);
    }

    #[test]
    fn plan_errors() {
        assert!(matches!(make_plan(3, 0.0, None), Err(Error::Domain(_))));
        assert!(matches!(make_plan(3, 1.0, None), Err(Error::Domain(_))));
        assert!(matches!(
            make_plan(3, f64::NAN, None),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            make_plan(3, 0.5, Some(0.0)),
            Err(Error::Domain(_))
        ));
        // 171! overflows a double.
        assert!(matches!(
            make_plan(200, 0.5, Some(1.0)),
            Err(Error::Overflow(_))
        ));
        // The default scale keeps the factors in range far beyond that.
        assert!(make_plan(512, 0.5, None).is_ok());
    }

    #[test]
    fn direct_only_plan() {
        let poly = scalars(&[1.0, -2.0, 0.5, 3.0]);
        let light = SubdivisionPlan::direct_only(3, 0.3, None).unwrap();
        let full = make_plan(3, 0.3, None).unwrap();
        assert!(light.beta_spectrum().is_none());
        assert_eq!(
            light.subdivide_left(&poly, Convolution::Direct).unwrap(),
            full.subdivide_left(&poly, Convolution::Direct).unwrap()
        );
        assert_eq!(
            subdivide_left_fft(&light, &poly).unwrap_err(),
            Error::PlanMismatch
        );
        let (_, counts) =
            instrument::measure(|| SubdivisionPlan::direct_only(64, 0.5, None).unwrap());
        assert_eq!(counts.forward_transforms, 0);
    }

    #[test]
    fn fft_examples() {
        let p = make_plan(1, 0.5, Some(1.0)).unwrap();
        let left = subdivide_left_fft(&p, &scalars(&[1.0, 1.0])).unwrap();
        assert_close(left.as_flat(), &[1.0, 1.0], 1e-15);

        let p = make_plan(2, 0.5, None).unwrap();
        let left = subdivide_left_fft(&p, &scalars(&[0.0, 1.0, 0.0])).unwrap();
        assert_close(left.as_flat(), &[0.0, 0.5, 0.5], 1e-15);

        let p = make_plan(0, 0.5, None).unwrap();
        assert_eq!(
            subdivide_left_fft(&p, &scalars(&[7.5])).unwrap().as_flat(),
            &[7.5]
        );

        let err = subdivide_left_fft(&p, &scalars(&[1.0, 2.0])).unwrap_err();
        assert_eq!(
            err,
            Error::DegreeMismatch {
                expected: 0,
                found: 1
            }
        );
    }

    #[test]
    fn direct_examples() {
        for (n, c, s, w, want) in [
            (1, 0.5, Some(1.0), vec![1.0, 1.0], vec![1.0, 1.0]),
            (2, 0.5, None, vec![0.0, 1.0, 0.0], vec![0.0, 0.5, 0.5]),
            (0, 0.5, None, vec![7.5], vec![7.5]),
            (1, 0.25, None, vec![0.0, 1.0], vec![0.0, 0.25]),
        ] {
            let p = make_plan(n, c, s).unwrap();
            let direct = subdivide_left_direct(&p, &scalars(&w)).unwrap();
            let fft = subdivide_left_fft(&p, &scalars(&w)).unwrap();
            assert_close(direct.as_flat(), &want, 1e-13);
            assert_close(direct.as_flat(), fft.as_flat(), 1e-13);
        }
    }

    #[test]
    fn unscaled_examples() {
        let left = subdivide_left_unscaled(&scalars(&[0.0, 1.0, 0.0]), 0.5).unwrap();
        assert_close(left.as_flat(), &[0.0, 0.5, 0.5], 1e-15);
        let left = subdivide_left_unscaled(&scalars(&[3.0]), 0.5).unwrap();
        assert_eq!(left.as_flat(), &[3.0]);
        let w = [1.3, 1.9, 1.1, 1.7, 1.4, 1.05];
        let want = reference::subdivide(&scalars(&w), 0.3).unwrap().left;
        let got = subdivide_left_unscaled(&scalars(&w), 0.3).unwrap();
        assert_close(got.as_flat(), want.as_flat(), 1e-12);
    }

    #[test]
    fn right_examples() {
        let p = make_plan(1, 0.5, None).unwrap();
        let right = subdivide_right(&p, &scalars(&[0.0, 1.0]), Convolution::Fft).unwrap();
        assert_close(right.as_flat(), &[0.5, 1.0], 1e-15);

        let p = make_plan(2, 0.5, None).unwrap();
        let right = subdivide_right(&p, &scalars(&[0.0, 1.0, 0.0]), Convolution::Fft).unwrap();
        assert_close(right.as_flat(), &[0.5, 0.5, 0.0], 1e-15);

        let sym = scalars(&[1.0, 3.0, 2.0, 3.0, 1.0]);
        let p = make_plan(4, 0.5, None).unwrap();
        let left = subdivide_left_fft(&p, &sym).unwrap();
        let right = subdivide_right(&p, &sym, Convolution::Fft).unwrap();
        assert_eq!(right, left.reversed());

        let out = subdivide(&sym, 0.3, None, Convolution::Direct).unwrap();
        let want = reference::subdivide(&sym, 0.3).unwrap();
        assert_close(out.left.as_flat(), want.left.as_flat(), 1e-13);
        assert_close(out.right.as_flat(), want.right.as_flat(), 1e-13);
        assert_eq!(out.right.last(), sym.last());
    }

    #[test]
    fn tail_examples() {
        let p = make_plan(1, 0.5, Some(1.0)).unwrap();
        let (left, mut tail) = subdivide_with_tail(&p, &scalars(&[1.0, 1.0])).unwrap();
        assert_close(left.as_flat(), &[1.0, 1.0], 1e-15);
        assert_close(tail.coefficients(0), &[0.25], 1e-15);
        let v2 = tail.extend_by_one(&[1.0]).unwrap();
        assert_close(&v2, &[1.0], 1e-15);
        assert_eq!(tail.extend_by_one(&[1.0]), Err(Error::ExhaustedTail(1)));

        let p = make_plan(2, 0.5, None).unwrap();
        let (_, mut tail) = subdivide_with_tail(&p, &scalars(&[0.0, 1.0, 0.0])).unwrap();
        assert_eq!(tail.remaining(), 2);
        let v3 = tail.extend_by_one(&[0.0]).unwrap();
        assert_close(&v3, &[0.375], 1e-15);
        assert_eq!(tail.degree(), 3);
        assert_eq!(tail.coefficients(0).len(), 1);
        assert!(matches!(
            tail.extend_by_one(&[0.0, 1.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn extending_to_twice_the_degree() {
        let n = 15;
        let full: Vec<f64> = (0..=2 * n)
            .map(|i| 1.0 + ((i * 7) % 11) as f64 / 11.0)
            .collect();
        for c in [0.1, 0.5, 0.93] {
            let plan = SubdivisionPlan::for_extension(n, c).unwrap();
            let (_, mut tail) = subdivide_with_tail(&plan, &scalars(&full[..=n])).unwrap();
            let grown: Vec<f64> = (1..=n)
                .map(|m| tail.extend_by_one(&[full[n + m]]).unwrap()[0])
                .collect();
            let want =
                subdivide_left_fft(&make_plan(2 * n, c, None).unwrap(), &scalars(&full)).unwrap();
            for (m, v) in grown.iter().enumerate() {
                let w = want.as_flat()[n + 1 + m];
                assert!(
                    (v - w).abs() <= 1e-10 * w.abs(),
                    "c={c} m={} {v} {w}",
                    m + 1
                );
            }
            assert_eq!(tail.remaining(), 0);
        }
    }

    #[test]
    fn two_step_extension_matches_recomputation() {
        let base = [1.2, 1.7, 1.1, 1.9];
        let extra = [1.4, 1.6];
        let c = 0.37;
        let p = make_plan(3, c, None).unwrap();
        let (_, mut tail) = subdivide_with_tail(&p, &scalars(&base)).unwrap();
        let v4 = tail.extend_by_one(&[extra[0]]).unwrap()[0];
        let v5 = tail.extend_by_one(&[extra[1]]).unwrap()[0];

        let full: Vec<f64> = base.iter().chain(&extra).copied().collect();
        let full_plan = make_plan(5, c, Some(p.scale())).unwrap();
        let want = subdivide_left_fft(&full_plan, &scalars(&full)).unwrap();
        assert!((v4 - want.as_flat()[4]).abs() <= 1e-12 * want.as_flat()[4].abs());
        assert!((v5 - want.as_flat()[5]).abs() <= 1e-12 * want.as_flat()[5].abs());

        // The explicit two-step formula for v_(n+2) with n = 3 and s = 1.
        let p1 = make_plan(3, c, Some(1.0)).unwrap();
        let (_, t1) = subdivide_with_tail(&p1, &scalars(&base)).unwrap();
        let gamma5 = t1.coefficients(0)[1];
        let d = 1.0 - c;
        let (w, n) = (&full, 3i32);
        let v = w[0] * d.powi(n + 2)
            + (n + 2) as f64 * w[1] * c * d.powi(n + 1)
            + 120.0 * gamma5
            + (n + 2) as f64 * w[4] * c.powi(n + 1) * d
            + w[5] * c.powi(n + 2);
        assert!((v - want.as_flat()[5]).abs() <= 1e-12 * v.abs());
    }
}

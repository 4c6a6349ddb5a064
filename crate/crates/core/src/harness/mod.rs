//! Experiment driver: random test curves, accuracy statistics against the
//! de Casteljau oracle, timing comparisons, and curve file I/O.

mod accuracy;
mod bench;
pub mod io;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use accuracy::{run_accuracy, AccuracyReport, AccuracyRow};
pub use bench::{run_bench, TimingMode, TimingReport, TimingRow};

use crate::error::{Error, Result};
use crate::fastsub::{Convolution, SubdivisionPlan};
use crate::geometry::ControlPolygon;
use crate::reference;
use crate::transform::TransformPlan;

/// Degrees used by default: 2..=20, then 25..=50 in steps of 5, then 60 and 70.
pub const DEFAULT_DEGREES: [usize; 27] = [
    2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 25, 30, 35, 40, 45, 50, 60,
    70,
];

/// Subdivision algorithms the harness can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Classical triangular scheme; also the accuracy oracle.
    DeCasteljau,
    /// Scaled convolution through the FFT.
    Fft,
    /// Scaled convolution summed directly.
    Direct,
    /// FFT convolution with scale 1.
    Unscaled,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::DeCasteljau,
        Method::Fft,
        Method::Direct,
        Method::Unscaled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::DeCasteljau => "decasteljau",
            Method::Fft => "fft",
            Method::Direct => "direct",
            Method::Unscaled => "unscaled",
        }
    }

    /// Builds the plan this method needs at `c`, if any.
    pub fn plan(
        self,
        n: usize,
        c: f64,
        scale: ScaleRule,
        transform: &Arc<TransformPlan>,
    ) -> Result<Option<SubdivisionPlan>> {
        Ok(match self {
            Method::DeCasteljau => None,
            Method::Fft => Some(SubdivisionPlan::with_transform(
                n,
                c,
                scale.scale(),
                transform.clone(),
            )?),
            Method::Direct => Some(SubdivisionPlan::direct_only(n, c, scale.scale())?),
            Method::Unscaled => Some(SubdivisionPlan::with_transform(
                n,
                c,
                Some(1.0),
                transform.clone(),
            )?),
        })
    }

    /// Left segment at `c`. `plan` must come from [`Method::plan`] for the same `c`.
    pub fn left_segment(
        self,
        polygon: &ControlPolygon,
        c: f64,
        plan: Option<&SubdivisionPlan>,
    ) -> Result<ControlPolygon> {
        match (self, plan) {
            (Method::DeCasteljau, _) => Ok(reference::subdivide(polygon, c)?.left),
            (Method::Direct, Some(p)) => p.subdivide_left(polygon, Convolution::Direct),
            (Method::Fft | Method::Unscaled, Some(p)) => {
                p.subdivide_left(polygon, Convolution::Fft)
            }
            (_, None) => Err(Error::PlanMismatch),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidInput(format!("unknown method '{s}'")))
    }
}

/// How the scale `s` is chosen for the scaled methods.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum ScaleRule {
    /// `s(n) = 0.375 n + 0.9`.
    #[default]
    Default,
    Fixed(f64),
}

impl ScaleRule {
    fn scale(self) -> Option<f64> {
        match self {
            ScaleRule::Default => None,
            ScaleRule::Fixed(s) => Some(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub degrees: Vec<usize>,
    pub curves_per_degree: usize,
    /// Number `K` of split parameters; they are `t_i = i / (K + 1)` for `i = 1..=K`.
    pub split_points: usize,
    pub dimension: usize,
    pub coordinate_range: (f64, f64),
    pub seed: u64,
    pub scale_rule: ScaleRule,
    pub methods: Vec<Method>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            degrees: DEFAULT_DEGREES.to_vec(),
            curves_per_degree: 1000,
            split_points: 499,
            dimension: 2,
            coordinate_range: (1.0, 2.0),
            seed: 1,
            scale_rule: ScaleRule::Default,
            methods: vec![Method::DeCasteljau, Method::Fft, Method::Direct],
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if let Some(&n) = self.degrees.iter().find(|&&n| n == 0) {
            return Err(Error::InvalidInput(format!(
                "degree {n} is not supported; degrees start at 1"
            )));
        }
        if self.dimension == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        let (lo, hi) = self.coordinate_range;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidInput(format!(
                "bad coordinate range [{lo}, {hi}]"
            )));
        }
        if let ScaleRule::Fixed(s) = self.scale_rule {
            if s == 0.0 || !s.is_finite() {
                return Err(Error::Domain(format!(
                    "scale {s} must be finite and non-zero"
                )));
            }
        }
        Ok(())
    }

    /// The split parameters, all strictly inside `(0, 1)`.
    pub fn splits(&self) -> Vec<f64> {
        let denom = (self.split_points + 1) as f64;
        (1..=self.split_points).map(|i| i as f64 / denom).collect()
    }
}

/// `curves_per_degree` random curves of degree `n`.
///
/// Each degree draws from its own ChaCha8 stream keyed by the seed, so the
/// curves for one degree do not depend on which other degrees are run.
pub fn generate_curves(config: &ExperimentConfig, n: usize) -> Vec<ControlPolygon> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(n as u64);
    let (lo, hi) = config.coordinate_range;
    let len = (n + 1) * config.dimension;
    (0..config.curves_per_degree)
        .map(|_| {
            let coords = (0..len).map(|_| rng.gen_range(lo..=hi)).collect();
            ControlPolygon::from_flat(config.dimension, coords).expect("finite random coordinates")
        })
        .collect()
}

/// Correct significant decimal digits of `computed` against `exact`, in `[0, 17]`.
///
/// Exact agreement scores 17. Relative error is used unless `exact` is zero.
pub fn digits_of_accuracy(exact: f64, computed: f64) -> f64 {
    if computed == exact {
        return 17.0;
    }
    let err = (computed - exact).abs();
    let err = if exact == 0.0 { err } else { err / exact.abs() };
    if err.is_nan() {
        return 0.0;
    }
    (-err.log10()).clamp(0.0, 17.0)
}

/// Parses degree lists such as `2..20,25,30`; ranges are inclusive.
pub fn parse_degrees(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidInput(format!("cannot parse degree list '{text}'"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let a: usize = a.trim().parse().map_err(|_| bad())?;
                let b: usize = b
                    .trim()
                    .trim_start_matches('=')
                    .parse()
                    .map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

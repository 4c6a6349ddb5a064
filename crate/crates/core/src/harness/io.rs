//! JSON curve and patch files, and the file-level operations behind the CLI.
//!
//! A curve file holds one object `{"dimension": d, "points": [[..], ..]}` with
//! an optional `"weights"` array for rational curves; a patch file holds
//! `{"dimension": d, "grid": [[[..], ..], ..]}` with one inner array per row.
//! Doubles are printed in shortest round-trip form, so reading back a
//! written file reproduces every value bit for bit.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::Method;
use crate::calculus;
use crate::error::Error;
use crate::fastsub::{Convolution, SubdivisionPlan};
use crate::geometry::{ControlPolygon, RationalControlPolygon, TensorPatch};
use crate::rational;
use crate::reference;
use crate::surface;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("cannot parse input: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("numerical failure: {0}")]
    Numeric(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl FileError {
    pub fn exit_code(&self) -> i32 {
        match self {
            FileError::Parse(_) => EXIT_PARSE,
            FileError::Domain(_) => EXIT_DOMAIN,
            FileError::Numeric(_) => EXIT_NUMERIC,
            FileError::Io(_) => EXIT_IO,
        }
    }
}

impl From<Error> for FileError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_)
            | Error::DegreeMismatch { .. }
            | Error::DimensionMismatch { .. } => FileError::Parse(e.to_string()),
            Error::Domain(_) => FileError::Domain(e.to_string()),
            _ => FileError::Numeric(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for FileError {
    fn from(e: serde_json::Error) -> Self {
        FileError::Parse(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub dimension: usize,
    pub points: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatchFile {
    pub dimension: usize,
    pub grid: Vec<Vec<Vec<f64>>>,
}

/// A polynomial or rational curve read from a file.
#[derive(Debug, Clone, PartialEq)]
pub enum Curve {
    Polynomial(ControlPolygon),
    Rational(RationalControlPolygon),
}

impl Curve {
    pub fn degree(&self) -> usize {
        match self {
            Curve::Polynomial(p) => p.degree(),
            Curve::Rational(r) => r.degree(),
        }
    }
}

impl TryFrom<CurveFile> for Curve {
    type Error = FileError;

    fn try_from(file: CurveFile) -> Result<Self, FileError> {
        let polygon = ControlPolygon::new(file.dimension, file.points)?;
        Ok(match file.weights {
            None => Curve::Polynomial(polygon),
            Some(w) => Curve::Rational(RationalControlPolygon::new(polygon, w)?),
        })
    }
}

impl From<&Curve> for CurveFile {
    fn from(curve: &Curve) -> Self {
        match curve {
            Curve::Polynomial(p) => CurveFile {
                dimension: p.dimension(),
                points: p.to_nested(),
                weights: None,
            },
            Curve::Rational(r) => CurveFile {
                dimension: r.dimension(),
                points: r.polygon().to_nested(),
                weights: Some(r.weights().to_vec()),
            },
        }
    }
}

pub fn parse_curve(text: &str) -> Result<Curve, FileError> {
    serde_json::from_str::<CurveFile>(text)?.try_into()
}

pub fn curve_to_json(curve: &Curve) -> String {
    serde_json::to_string(&CurveFile::from(curve)).expect("curves serialize")
}

pub fn parse_patch(text: &str) -> Result<TensorPatch, FileError> {
    let file: PatchFile = serde_json::from_str(text)?;
    Ok(TensorPatch::new(file.dimension, file.grid)?)
}

pub fn patch_to_json(patch: &TensorPatch) -> String {
    let file = PatchFile {
        dimension: patch.dimension(),
        grid: patch.to_nested(),
    };
    serde_json::to_string(&file).expect("patches serialize")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubdivisionFile {
    pub split: f64,
    pub left: CurveFile,
    pub right: CurveFile,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DerivativesFile {
    /// `P^(k)(0)` for `k = 0..=n`; orders beyond the double range are `null`.
    pub at_zero: Vec<Vec<f64>>,
    pub at_one: Vec<Vec<f64>>,
}

fn check_split(c: f64) -> Result<(), FileError> {
    if !(0.0..=1.0).contains(&c) {
        return Err(FileError::Domain(format!(
            "split parameter {c} must lie in [0, 1]"
        )));
    }
    Ok(())
}

fn convolution(method: Method) -> Result<(Convolution, Option<f64>), FileError> {
    Ok(match method {
        Method::Fft => (Convolution::Fft, None),
        Method::Direct => (Convolution::Direct, None),
        Method::Unscaled => (Convolution::Fft, Some(1.0)),
        Method::DeCasteljau => unreachable!("handled by the reference path"),
    })
}

/// Both segments of `curve` at `c ∈ [0, 1]` with the chosen method.
///
/// `scale` overrides the default for the fft and direct methods. The
/// endpoints `c = 0` and `c = 1` always take the exact reference path.
pub fn subdivide_curve(
    curve: &Curve,
    c: f64,
    scale: Option<f64>,
    method: Method,
) -> Result<(Curve, Curve), FileError> {
    check_split(c)?;
    let n = curve.degree();
    if method == Method::DeCasteljau || c == 0.0 || c == 1.0 {
        return Ok(match curve {
            Curve::Polynomial(p) => {
                let out = reference::subdivide(p, c)?;
                (Curve::Polynomial(out.left), Curve::Polynomial(out.right))
            }
            Curve::Rational(r) => {
                let out = reference::subdivide(&r.lift(), c)?;
                (
                    Curve::Rational(RationalControlPolygon::project(&out.left)?),
                    Curve::Rational(RationalControlPolygon::project(&out.right)?),
                )
            }
        });
    }
    let (conv, forced) = convolution(method)?;
    let scale = forced.or(scale);
    let plans = |split: f64| -> Result<SubdivisionPlan, Error> {
        match conv {
            Convolution::Fft => SubdivisionPlan::new(n, split, scale),
            Convolution::Direct => SubdivisionPlan::direct_only(n, split, scale),
        }
    };
    let (left_plan, right_plan) = (plans(c)?, plans(1.0 - c)?);
    Ok(match curve {
        Curve::Polynomial(p) => (
            Curve::Polynomial(left_plan.subdivide_left(p, conv)?),
            Curve::Polynomial(crate::fastsub::subdivide_right(&right_plan, p, conv)?),
        ),
        Curve::Rational(r) => (
            Curve::Rational(rational::subdivide_left_rational_with(&left_plan, r, conv)?),
            Curve::Rational(rational::subdivide_right_rational(&right_plan, r, conv)?),
        ),
    })
}

fn write_output(text: &str, output: Option<&Path>) -> Result<(), FileError> {
    match output {
        Some(path) => fs::write(path, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn report(result: Result<(), FileError>) -> i32 {
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn try_subdivide_file(
    input: &Path,
    c: f64,
    scale: Option<f64>,
    method: Method,
    output: Option<&Path>,
) -> Result<(), FileError> {
    let curve = parse_curve(&fs::read_to_string(input)?)?;
    let (left, right) = subdivide_curve(&curve, c, scale, method)?;
    let out = SubdivisionFile {
        split: c,
        left: CurveFile::from(&left),
        right: CurveFile::from(&right),
    };
    write_output(&serde_json::to_string(&out)?, output)
}

/// Splits the curve in `input` at `c` and writes both segments as one JSON
/// object. Returns the process exit status; failures are reported on stderr.
pub fn subdivide_file(
    input: &Path,
    c: f64,
    scale: Option<f64>,
    method: Method,
    output: Option<&Path>,
) -> i32 {
    report(try_subdivide_file(input, c, scale, method, output))
}

pub fn try_derivatives_file(input: &Path, output: Option<&Path>) -> Result<(), FileError> {
    let polygon = match parse_curve(&fs::read_to_string(input)?)? {
        Curve::Polynomial(p) => p,
        Curve::Rational(_) => {
            return Err(FileError::Domain(
                "derivatives of rational curves are not supported".into(),
            ))
        }
    };
    let out = DerivativesFile {
        at_zero: calculus::derivatives_at_zero(&polygon),
        at_one: calculus::derivatives_at_one(&polygon),
    };
    write_output(&serde_json::to_string(&out)?, output)
}

/// Writes all endpoint derivatives of the curve in `input`.
pub fn derivatives_file(input: &Path, output: Option<&Path>) -> i32 {
    report(try_derivatives_file(input, output))
}

/// Which parameter of a patch to split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Direction {
    /// The row index (first parameter).
    #[default]
    T,
    /// The column index (second parameter).
    U,
}

pub fn try_surface_subdivide_file(
    input: &Path,
    c: f64,
    direction: Direction,
    scale: Option<f64>,
    output: Option<&Path>,
) -> Result<(), FileError> {
    check_split(c)?;
    if c == 0.0 || c == 1.0 {
        return Err(FileError::Domain(format!(
            "patch split parameter {c} must lie strictly inside (0, 1)"
        )));
    }
    let patch = parse_patch(&fs::read_to_string(input)?)?;
    let left = match direction {
        Direction::T => {
            let plan = SubdivisionPlan::new(patch.row_degree(), c, scale)?;
            surface::subdivide_patch_left(&plan, &patch)?
        }
        Direction::U => {
            let plan = SubdivisionPlan::new(patch.column_degree(), c, scale)?;
            surface::subdivide_patch_left_u(&plan, &patch)?
        }
    };
    write_output(&patch_to_json(&left), output)
}

/// Writes the part of the patch in `input` over `[0, c]` in the chosen direction.
pub fn surface_subdivide_file(
    input: &Path,
    c: f64,
    direction: Direction,
    scale: Option<f64>,
    output: Option<&Path>,
) -> i32 {
    report(try_surface_subdivide_file(
        input, c, direction, scale, output,
    ))
}

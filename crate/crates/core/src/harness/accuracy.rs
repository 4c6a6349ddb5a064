use std::fmt::Write as _;

use rayon::prelude::*;

use super::{digits_of_accuracy, generate_curves, ExperimentConfig, Method};
use crate::error::Result;
use crate::fastsub::SubdivisionPlan;
use crate::geometry::ControlPolygon;
use crate::reference;
use crate::transform::Engine;

#[derive(Debug, Clone, PartialEq)]
pub struct AccuracyRow {
    pub degree: usize,
    pub method: Method,
    /// Over every coordinate of every left-segment control point.
    pub min_digits: f64,
    pub mean_digits: f64,
    /// Subdivisions that returned an error; they contribute no digits.
    pub error_count: usize,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct AccuracyReport {
    pub rows: Vec<AccuracyRow>,
}

impl AccuracyReport {
    pub const CSV_HEADER: &'static str = "degree,method,min_digits,mean_digits,error_count";

    pub fn row(&self, degree: usize, method: Method) -> Option<&AccuracyRow> {
        self.rows
            .iter()
            .find(|r| r.degree == degree && r.method == method)
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("{}\n", Self::CSV_HEADER);
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{:.4},{:.4},{}",
                r.degree, r.method, r.min_digits, r.mean_digits, r.error_count
            );
        }
        out
    }

    /// One line per degree with min and mean digits for each method.
    pub fn to_markdown(&self) -> String {
        let methods = distinct_methods(self.rows.iter().map(|r| r.method));
        let mut out = String::from("| n |");
        for m in &methods {
            let _ = write!(out, " min {m} | mean {m} |");
        }
        out.push_str("\n|---|");
        out.push_str(&"---:|---:|".repeat(methods.len()));
        out.push('\n');
        for n in distinct_degrees(self.rows.iter().map(|r| r.degree)) {
            let _ = write!(out, "| {n} |");
            for &m in &methods {
                match self.row(n, m) {
                    Some(r) => {
                        let _ = write!(out, " {:.2} | {:.2} |", r.min_digits, r.mean_digits);
                    }
                    None => out.push_str(" | |"),
                }
            }
            out.push('\n');
        }
        out
    }
}

pub(super) fn distinct_methods(it: impl Iterator<Item = Method>) -> Vec<Method> {
    let mut v: Vec<Method> = Vec::new();
    for m in it {
        if !v.contains(&m) {
            v.push(m);
        }
    }
    v
}

pub(super) fn distinct_degrees(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = Vec::new();
    for n in it {
        if !v.contains(&n) {
            v.push(n);
        }
    }
    v
}

#[derive(Debug, Clone, Copy)]
struct Tally {
    min: f64,
    sum: f64,
    count: usize,
    errors: usize,
}

impl Tally {
    const EMPTY: Tally = Tally {
        min: f64::INFINITY,
        sum: 0.0,
        count: 0,
        errors: 0,
    };

    fn merge(self, other: Tally) -> Tally {
        Tally {
            min: self.min.min(other.min),
            sum: self.sum + other.sum,
            count: self.count + other.count,
            errors: self.errors + other.errors,
        }
    }
}

/// Digits of every method against de Casteljau on the same curves and splits.
///
/// Curves are processed in parallel; per-curve tallies are combined in curve
/// order, so the report is identical for identical configurations.
pub fn run_accuracy(config: &ExperimentConfig) -> Result<AccuracyReport> {
    config.validate()?;
    let splits = config.splits();
    let mut rows = Vec::new();
    for &n in &config.degrees {
        let curves = generate_curves(config, n);
        let transform = SubdivisionPlan::transform_for(n, Engine::default())?;
        let oracles: Vec<Vec<ControlPolygon>> = curves
            .par_iter()
            .map(|curve| {
                splits
                    .iter()
                    .map(|&c| reference::subdivide(curve, c).map(|o| o.left))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        for &method in &config.methods {
            let plans: Vec<_> = splits
                .iter()
                .map(|&c| method.plan(n, c, config.scale_rule, &transform))
                .collect();
            let tallies: Vec<Tally> = curves
                .par_iter()
                .zip(&oracles)
                .map(|(curve, oracle)| {
                    let mut t = Tally::EMPTY;
                    for ((&c, plan), exact) in splits.iter().zip(&plans).zip(oracle) {
                        let left = match plan {
                            Ok(p) => method.left_segment(curve, c, p.as_ref()),
                            Err(e) => Err(e.clone()),
                        };
                        match left {
                            Ok(left) => {
                                for (e, v) in exact.as_flat().iter().zip(left.as_flat()) {
                                    let digits = digits_of_accuracy(*e, *v);
                                    t.min = t.min.min(digits);
                                    t.sum += digits;
                                    t.count += 1;
                                }
                            }
                            Err(_) => t.errors += 1,
                        }
                    }
                    t
                })
                .collect();
            let total = tallies.into_iter().fold(Tally::EMPTY, Tally::merge);
            let (min_digits, mean_digits) = if total.count == 0 {
                (0.0, 0.0)
            } else {
                (total.min, total.sum / total.count as f64)
            };
            rows.push(AccuracyRow {
                degree: n,
                method,
                min_digits,
                mean_digits,
                error_count: total.errors,
            });
        }
    }
    Ok(AccuracyReport { rows })
}

use std::fmt::{self, Write as _};
use std::hint::black_box;
use std::time::Instant;

use super::accuracy::{distinct_degrees, distinct_methods};
use super::{generate_curves, ExperimentConfig, Method};
use crate::error::Result;
use crate::fastsub::SubdivisionPlan;
use crate::geometry::ControlPolygon;
use crate::transform::Engine;

/// When plans are built relative to the timed region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TimingMode {
    /// Every subdivision builds its own plan inside the timed region. The
    /// transform tables for the degree are shared, as they do not depend on
    /// the split parameter.
    PerCall,
    /// Plans for all split parameters are built before timing starts.
    Amortized,
}

impl TimingMode {
    pub fn name(self) -> &'static str {
        match self {
            TimingMode::PerCall => "per-call",
            TimingMode::Amortized => "amortized",
        }
    }
}

impl fmt::Display for TimingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TimingRow {
    pub degree: usize,
    pub method: Method,
    pub mode: TimingMode,
    /// Wall time over all curves and splits, excluding curve generation and warm-up.
    pub total_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct TimingReport {
    pub rows: Vec<TimingRow>,
}

impl TimingReport {
    pub const CSV_HEADER: &'static str = "degree,method,mode,total_seconds";

    pub fn seconds(&self, degree: usize, method: Method, mode: TimingMode) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| r.degree == degree && r.method == method && r.mode == mode)
            .map(|r| r.total_seconds)
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("{}\n", Self::CSV_HEADER);
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{:.6}",
                r.degree, r.method, r.mode, r.total_seconds
            );
        }
        out
    }

    /// One table per mode: a line per degree, a column per method, the
    /// fastest entry in bold.
    pub fn to_markdown(&self) -> String {
        let methods = distinct_methods(self.rows.iter().map(|r| r.method));
        let degrees = distinct_degrees(self.rows.iter().map(|r| r.degree));
        let mut out = String::new();
        for mode in [TimingMode::PerCall, TimingMode::Amortized] {
            if !self.rows.iter().any(|r| r.mode == mode) {
                continue;
            }
            if !out.is_empty() {
                out.push('\n');
            }
            let _ = writeln!(out, "Total seconds ({mode})\n");
            out.push_str("| n |");
            for m in &methods {
                let _ = write!(out, " {m} |");
            }
            let _ = writeln!(out, "\n|---|{}", "---:|".repeat(methods.len()));
            for &n in &degrees {
                let times: Vec<Option<f64>> =
                    methods.iter().map(|&m| self.seconds(n, m, mode)).collect();
                let best = times
                    .iter()
                    .flatten()
                    .copied()
                    .fold(f64::INFINITY, f64::min);
                let _ = write!(out, "| {n} |");
                for t in times {
                    match t {
                        Some(t) if t == best => {
                            let _ = write!(out, " **{t:.4}** |");
                        }
                        Some(t) => {
                            let _ = write!(out, " {t:.4} |");
                        }
                        None => out.push_str(" |"),
                    }
                }
                out.push('\n');
            }
        }
        out
    }
}

/// Times every configured method on identical curves and splits, on the
/// calling thread only.
pub fn run_bench(config: &ExperimentConfig, modes: &[TimingMode]) -> Result<TimingReport> {
    config.validate()?;
    let splits = config.splits();
    let mut rows = Vec::new();
    for &n in &config.degrees {
        let curves = generate_curves(config, n);
        let transform = SubdivisionPlan::transform_for(n, Engine::default())?;
        for &method in &config.methods {
            for &mode in modes {
                let total_seconds = match mode {
                    TimingMode::PerCall => {
                        let run = |curves: &[ControlPolygon]| -> Result<()> {
                            for curve in curves {
                                for &c in &splits {
                                    let plan = method.plan(n, c, config.scale_rule, &transform)?;
                                    black_box(method.left_segment(curve, c, plan.as_ref())?);
                                }
                            }
                            Ok(())
                        };
                        run(&curves[..curves.len().min(1)])?;
                        let start = Instant::now();
                        run(&curves)?;
                        start.elapsed().as_secs_f64()
                    }
                    TimingMode::Amortized => {
                        let plans = splits
                            .iter()
                            .map(|&c| method.plan(n, c, config.scale_rule, &transform))
                            .collect::<Result<Vec<_>>>()?;
                        let run = |curves: &[ControlPolygon]| -> Result<()> {
                            for curve in curves {
                                for (&c, plan) in splits.iter().zip(&plans) {
                                    black_box(method.left_segment(curve, c, plan.as_ref())?);
                                }
                            }
                            Ok(())
                        };
                        run(&curves[..curves.len().min(1)])?;
                        let start = Instant::now();
                        run(&curves)?;
                        start.elapsed().as_secs_f64()
                    }
                };
                rows.push(TimingRow {
                    degree: n,
                    method,
                    mode,
                    total_seconds,
                });
            }
        }
    }
    Ok(TimingReport { rows })
}

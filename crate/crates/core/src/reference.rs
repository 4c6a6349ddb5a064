//! Classical de Casteljau evaluation and subdivision.
//!
//! This is the ground truth for every other module: the fast methods are
//! judged by how many decimal digits they share with these results.

use crate::error::{Error, Result};
use crate::geometry::{ControlPolygon, SubdivisionOutcome};

pub(crate) fn check_unit_closed(c: f64) -> Result<()> {
    if (0.0..=1.0).contains(&c) {
        Ok(())
    } else {
        Err(Error::Domain(format!("parameter {c} is outside [0, 1]")))
    }
}

/// Triangular de Casteljau table. Level `k` holds `W^(k)_0..W^(k)_(n-k)`.
///
/// All levels live in one flat buffer, level after level, point-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DeCasteljauTable {
    degree: usize,
    dimension: usize,
    data: Vec<f64>,
}

impl DeCasteljauTable {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    fn offset(&self, level: usize) -> usize {
        // Sum of (n - j + 1) over j < level.
        let n = self.degree;
        (level * (2 * n + 3 - level) / 2) * self.dimension
    }

    /// `W^(level)_i`.
    pub fn point(&self, level: usize, i: usize) -> &[f64] {
        assert!(level <= self.degree && i <= self.degree - level);
        let at = self.offset(level) + i * self.dimension;
        &self.data[at..at + self.dimension]
    }

    /// All points of one level as a flat slice.
    pub fn level(&self, level: usize) -> &[f64] {
        let start = self.offset(level);
        &self.data[start..start + (self.degree - level + 1) * self.dimension]
    }

    /// The diagonal `W^(0)_0, W^(1)_0, ..., W^(n)_0`: the left segment.
    pub fn diagonal(&self) -> ControlPolygon {
        let mut coords = Vec::with_capacity((self.degree + 1) * self.dimension);
        for k in 0..=self.degree {
            coords.extend_from_slice(self.point(k, 0));
        }
        ControlPolygon::from_flat(self.dimension, coords).expect("table entries are finite")
    }

    /// The bottom row `W^(n)_0, W^(n-1)_1, ..., W^(0)_n`: the right segment.
    pub fn bottom_row(&self) -> ControlPolygon {
        let n = self.degree;
        let mut coords = Vec::with_capacity((n + 1) * self.dimension);
        for k in 0..=n {
            coords.extend_from_slice(self.point(n - k, k));
        }
        ControlPolygon::from_flat(self.dimension, coords).expect("table entries are finite")
    }
}

/// Builds the full table `W^(k)_i = (1 - c) W^(k-1)_i + c W^(k-1)_(i+1)`.
pub fn build_table(polygon: &ControlPolygon, c: f64) -> Result<DeCasteljauTable> {
    check_unit_closed(c)?;
    let n = polygon.degree();
    let d = polygon.dimension();
    let total = (n + 1) * (n + 2) / 2 * d;
    let mut data = vec![0.0; total];
    data[..(n + 1) * d].copy_from_slice(polygon.as_flat());
    let s = 1.0 - c;
    let mut prev = 0;
    for k in 1..=n {
        let start = prev + (n - k + 2) * d;
        let count = (n - k + 1) * d;
        let (done, rest) = data.split_at_mut(start);
        let src = &done[prev..];
        for ((out, a), b) in rest[..count].iter_mut().zip(src).zip(&src[d..]) {
            *out = s * a + c * b;
        }
        prev = start;
    }
    debug_assert_eq!(data.len(), total);
    Ok(DeCasteljauTable {
        degree: n,
        dimension: d,
        data,
    })
}

/// `P_n(c)`, the apex of the de Casteljau table. Uses O(n) scratch.
pub fn evaluate(polygon: &ControlPolygon, c: f64) -> Result<Vec<f64>> {
    check_unit_closed(c)?;
    Ok(evaluate_unchecked(polygon, c))
}

pub(crate) fn evaluate_unchecked(polygon: &ControlPolygon, c: f64) -> Vec<f64> {
    let d = polygon.dimension();
    let mut buf = polygon.as_flat().to_vec();
    let s = 1.0 - c;
    for k in 1..=polygon.degree() {
        let count = (polygon.degree() - k + 1) * d;
        for idx in 0..count {
            buf[idx] = s * buf[idx] + c * buf[idx + d];
        }
    }
    buf.truncate(d);
    buf
}

/// Splits the curve at `c` into the segments over `[0, c]` and `[c, 1]`.
///
/// `c = 0` and `c = 1` return the degenerate segments directly.
pub fn subdivide(polygon: &ControlPolygon, c: f64) -> Result<SubdivisionOutcome> {
    check_unit_closed(c)?;
    let n = polygon.degree();
    let (left, right) = if c == 0.0 {
        (
            ControlPolygon::repeated(polygon.first(), n + 1),
            polygon.clone(),
        )
    } else if c == 1.0 {
        (
            polygon.clone(),
            ControlPolygon::repeated(polygon.last(), n + 1),
        )
    } else {
        let table = build_table(polygon, c)?;
        (table.diagonal(), table.bottom_row())
    };
    Ok(SubdivisionOutcome {
        left,
        right,
        split_parameter: c,
    })
}

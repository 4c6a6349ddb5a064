//! Control polygons, rational polygons and tensor-product patches.
//!
//! Points are stored point-major in one flat buffer: point `i` occupies
//! `coords[i * d..(i + 1) * d]`. The FFT path works component-wise and
//! gathers a scalar slice per dimension with [`ControlPolygon::component`].

use crate::error::{Error, Result};

/// Control points `W_0..W_n` of a polynomial Bézier curve of degree `n` in `d` dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlPolygon {
    dimension: usize,
    coords: Vec<f64>,
}

impl ControlPolygon {
    pub fn new(dimension: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        if points.iter().any(|p| p.len() != dimension) {
            return Err(Error::InvalidInput(format!(
                "every point must have {dimension} coordinates"
            )));
        }
        Self::from_flat(dimension, points.into_iter().flatten().collect())
    }

    /// Builds a polygon from point-major flat coordinates.
    pub fn from_flat(dimension: usize, coords: Vec<f64>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        if coords.is_empty() {
            return Err(Error::InvalidInput(
                "a control polygon needs at least one point".into(),
            ));
        }
        if !coords.len().is_multiple_of(dimension) {
            return Err(Error::InvalidInput(format!(
                "{} coordinates do not split into points of dimension {dimension}",
                coords.len()
            )));
        }
        if let Some(bad) = coords.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "coordinate {} of point {} is not finite",
                bad % dimension,
                bad / dimension
            )));
        }
        Ok(Self { dimension, coords })
    }

    /// One-dimensional polygon with scalar control points.
    pub fn from_scalars(values: &[f64]) -> Result<Self> {
        Self::from_flat(1, values.to_vec())
    }

    /// Reassembles a polygon from per-dimension scalar sequences of equal length.
    pub fn from_components(components: &[Vec<f64>]) -> Result<Self> {
        let dimension = components.len();
        let len = components.first().map_or(0, Vec::len);
        if components.iter().any(|c| c.len() != len) {
            return Err(Error::InvalidInput("components differ in length".into()));
        }
        let mut coords = Vec::with_capacity(dimension * len);
        for i in 0..len {
            coords.extend(components.iter().map(|c| c[i]));
        }
        Self::from_flat(dimension, coords)
    }

    /// Polygon of `count` copies of one point.
    pub(crate) fn repeated(point: &[f64], count: usize) -> Self {
        Self {
            dimension: point.len(),
            coords: point.repeat(count),
        }
    }

    pub fn degree(&self) -> usize {
        self.len() - 1
    }

    /// Number of control points (`degree + 1`).
    pub fn len(&self) -> usize {
        self.coords.len() / self.dimension
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dimension..(i + 1) * self.dimension]
    }

    pub fn points(&self) -> std::slice::ChunksExact<'_, f64> {
        self.coords.chunks_exact(self.dimension)
    }

    pub fn first(&self) -> &[f64] {
        self.point(0)
    }

    pub fn last(&self) -> &[f64] {
        self.point(self.degree())
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.coords
    }

    /// Scalar control points of coordinate `k`.
    pub fn component(&self, k: usize) -> Vec<f64> {
        self.points().map(|p| p[k]).collect()
    }

    pub fn to_nested(&self) -> Vec<Vec<f64>> {
        self.points().map(<[f64]>::to_vec).collect()
    }

    /// The same curve traversed backwards: `W_n, ..., W_0`.
    pub fn reversed(&self) -> Self {
        let mut coords = Vec::with_capacity(self.coords.len());
        for p in self.coords.rchunks_exact(self.dimension) {
            coords.extend_from_slice(p);
        }
        Self {
            dimension: self.dimension,
            coords,
        }
    }
}

/// Control points of the two halves of a curve split at `split_parameter`.
#[derive(Debug, Clone, PartialEq)]
pub struct SubdivisionOutcome {
    /// Control points of the segment over `[0, c]`.
    pub left: ControlPolygon,
    /// Control points of the segment over `[c, 1]`.
    pub right: ControlPolygon,
    pub split_parameter: f64,
}

/// Rational Bézier curve: control points with strictly positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalControlPolygon {
    polygon: ControlPolygon,
    weights: Vec<f64>,
}

impl RationalControlPolygon {
    pub fn new(polygon: ControlPolygon, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != polygon.len() {
            return Err(Error::InvalidInput(format!(
                "{} weights given for {} control points",
                weights.len(),
                polygon.len()
            )));
        }
        if let Some((i, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !(w.is_finite() && **w > 0.0))
        {
            return Err(Error::Domain(format!(
                "weight {i} is {w}; weights must be finite and positive"
            )));
        }
        Ok(Self { polygon, weights })
    }

    pub fn polygon(&self) -> &ControlPolygon {
        &self.polygon
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn degree(&self) -> usize {
        self.polygon.degree()
    }

    pub fn dimension(&self) -> usize {
        self.polygon.dimension()
    }

    pub fn reversed(&self) -> Self {
        let mut weights = self.weights.clone();
        weights.reverse();
        Self {
            polygon: self.polygon.reversed(),
            weights,
        }
    }

    /// Homogeneous lift `(ω_i W_i, ω_i)` as a polynomial curve in `d + 1` dimensions.
    pub fn lift(&self) -> ControlPolygon {
        let d = self.dimension();
        let mut coords = Vec::with_capacity((d + 1) * self.polygon.len());
        for (p, &w) in self.polygon.points().zip(&self.weights) {
            coords.extend(p.iter().map(|x| x * w));
            coords.push(w);
        }
        ControlPolygon {
            dimension: d + 1,
            coords,
        }
    }

    /// Inverse of [`lift`](Self::lift): divide by the last coordinate.
    pub fn project(lifted: &ControlPolygon) -> Result<Self> {
        let d = lifted.dimension() - 1;
        if d == 0 {
            return Err(Error::InvalidInput(
                "lifted polygon needs at least two coordinates".into(),
            ));
        }
        let mut coords = Vec::with_capacity(d * lifted.len());
        let mut weights = Vec::with_capacity(lifted.len());
        for (i, p) in lifted.points().enumerate() {
            let w = p[d];
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::DegenerateWeight { index: i, value: w });
            }
            coords.extend(p[..d].iter().map(|x| x / w));
            weights.push(w);
        }
        Ok(Self {
            polygon: ControlPolygon::from_flat(d, coords)?,
            weights,
        })
    }
}

/// Rectangular tensor-product patch with an `(n + 1) × (m + 1)` grid of control points.
///
/// Row index `i` runs along the first parameter `t`, column index `j` along `u`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorPatch {
    dimension: usize,
    rows: usize,
    cols: usize,
    coords: Vec<f64>,
}

impl TensorPatch {
    pub fn new(dimension: usize, grid: Vec<Vec<Vec<f64>>>) -> Result<Self> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidInput("patch grid must be non-empty".into()));
        }
        if grid.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("patch grid is not rectangular".into()));
        }
        let flat: Vec<Vec<f64>> = grid.into_iter().flatten().collect();
        let poly = ControlPolygon::new(dimension, flat)?;
        Ok(Self {
            dimension,
            rows,
            cols,
            coords: poly.coords,
        })
    }

    /// Assembles a patch whose columns are the given curves (all of equal degree).
    pub fn from_columns(columns: &[ControlPolygon]) -> Result<Self> {
        let first = columns
            .first()
            .ok_or_else(|| Error::InvalidInput("patch needs at least one column".into()))?;
        let (rows, dimension) = (first.len(), first.dimension());
        if columns
            .iter()
            .any(|c| c.len() != rows || c.dimension() != dimension)
        {
            return Err(Error::InvalidInput(
                "columns differ in degree or dimension".into(),
            ));
        }
        let cols = columns.len();
        let mut coords = Vec::with_capacity(rows * cols * dimension);
        for i in 0..rows {
            for col in columns {
                coords.extend_from_slice(col.point(i));
            }
        }
        Ok(Self {
            dimension,
            rows,
            cols,
            coords,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Degree `n` in the row (`t`) direction.
    pub fn row_degree(&self) -> usize {
        self.rows - 1
    }

    /// Degree `m` in the column (`u`) direction.
    pub fn column_degree(&self) -> usize {
        self.cols - 1
    }

    pub fn point(&self, i: usize, j: usize) -> &[f64] {
        let at = (i * self.cols + j) * self.dimension;
        &self.coords[at..at + self.dimension]
    }

    /// Column `j` as a curve of degree `n`: `W_0j, ..., W_nj`.
    pub fn column(&self, j: usize) -> ControlPolygon {
        let mut coords = Vec::with_capacity(self.rows * self.dimension);
        for i in 0..self.rows {
            coords.extend_from_slice(self.point(i, j));
        }
        ControlPolygon {
            dimension: self.dimension,
            coords,
        }
    }

    /// Row `i` as a curve of degree `m`: `W_i0, ..., W_im`.
    pub fn row(&self, i: usize) -> ControlPolygon {
        let at = i * self.cols * self.dimension;
        ControlPolygon {
            dimension: self.dimension,
            coords: self.coords[at..at + self.cols * self.dimension].to_vec(),
        }
    }

    /// Swaps the roles of the two parameters.
    pub fn transposed(&self) -> Self {
        let columns: Vec<ControlPolygon> = (0..self.rows).map(|i| self.row(i)).collect();
        let mut coords = Vec::with_capacity(self.coords.len());
        for j in 0..self.cols {
            for row in &columns {
                coords.extend_from_slice(row.point(j));
            }
        }
        Self {
            dimension: self.dimension,
            rows: self.cols,
            cols: self.rows,
            coords,
        }
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<f64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.point(i, j).to_vec()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_polygons() {
        assert!(ControlPolygon::new(2, vec![]).is_err());
        assert!(ControlPolygon::new(2, vec![vec![1.0, 2.0], vec![1.0]]).is_err());
        assert!(ControlPolygon::new(0, vec![vec![]]).is_err());
        assert!(ControlPolygon::from_scalars(&[1.0, f64::NAN]).is_err());
        assert!(ControlPolygon::from_scalars(&[f64::INFINITY]).is_err());
    }

    #[test]
    fn components_round_trip() {
        let p =
            ControlPolygon::new(2, vec![vec![1.0, 2.0], vec![3.0, 4.0], vec![5.0, 6.0]]).unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.component(1), vec![2.0, 4.0, 6.0]);
        let back = ControlPolygon::from_components(&[p.component(0), p.component(1)]).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.reversed().point(0), &[5.0, 6.0]);
    }

    #[test]
    fn weights_are_validated() {
        let p = ControlPolygon::from_scalars(&[0.0, 1.0]).unwrap();
        assert!(RationalControlPolygon::new(p.clone(), vec![1.0]).is_err());
        assert!(matches!(
            RationalControlPolygon::new(p.clone(), vec![1.0, 0.0]),
            Err(Error::Domain(_))
        ));
        assert!(RationalControlPolygon::new(p.clone(), vec![1.0, -2.0]).is_err());
        let r = RationalControlPolygon::new(p, vec![1.0, 2.0]).unwrap();
        let back = RationalControlPolygon::project(&r.lift()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn patch_columns_and_transpose() {
        let patch = TensorPatch::new(
            1,
            vec![
                vec![vec![0.0], vec![1.0], vec![2.0]],
                vec![vec![3.0], vec![4.0], vec![5.0]],
            ],
        )
        .unwrap();
        assert_eq!(patch.row_degree(), 1);
        assert_eq!(patch.column_degree(), 2);
        assert_eq!(patch.column(2).as_flat(), &[2.0, 5.0]);
        let t = patch.transposed();
        assert_eq!(t.row_degree(), 2);
        assert_eq!(t.point(2, 1), &[5.0]);
        assert_eq!(t.transposed(), patch);
        let cols: Vec<_> = (0..3).map(|j| patch.column(j)).collect();
        assert_eq!(TensorPatch::from_columns(&cols).unwrap(), patch);
        assert!(TensorPatch::new(1, vec![vec![vec![0.0]], vec![]]).is_err());
    }
}

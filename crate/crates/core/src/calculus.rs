//! All derivatives of a Bézier curve at its endpoints.
//!
//! At `t = 0`,
//!
//! ```text
//! P^(k)(0) = n!/(n-k)! · Σ_i C(k, i) (-1)^(k-i) W_i
//!          = n!/(n-k)! · (-2)^k · Σ_i B^k_i(1/2) z_i,   z_i = (-1)^i W_i,
//! ```
//!
//! and the inner sums are the left-segment control points of the polygon
//! `z` split at `1/2`, so every derivative comes out of one fast subdivision.
//! High-order derivatives of high-degree curves can exceed the range of
//! `f64`; those entries are returned as infinities.

use crate::error::Result;
use crate::fastsub::{Convolution, SubdivisionPlan};
use crate::geometry::ControlPolygon;
use crate::instrument;

/// `P^(k)(0)` for `k = 0..=n`, one vector per order.
pub fn derivatives_at_zero(polygon: &ControlPolygon) -> Vec<Vec<f64>> {
    derivatives_with(polygon, Convolution::Fft).expect("plans at c = 1/2 are always valid")
}

/// `P^(k)(1)` for `k = 0..=n`.
pub fn derivatives_at_one(polygon: &ControlPolygon) -> Vec<Vec<f64>> {
    let mut out = derivatives_at_zero(&polygon.reversed());
    for row in out.iter_mut().skip(1).step_by(2) {
        row.iter_mut().for_each(|x| *x = -*x);
    }
    out
}

/// Endpoint derivatives at zero with the chosen convolution.
pub fn derivatives_with(polygon: &ControlPolygon, method: Convolution) -> Result<Vec<Vec<f64>>> {
    let n = polygon.degree();
    let d = polygon.dimension();
    let alternating: Vec<f64> = polygon
        .points()
        .enumerate()
        .flat_map(|(i, p)| p.iter().map(move |&x| if i % 2 == 0 { x } else { -x }))
        .collect();
    let z = ControlPolygon::from_flat(d, alternating)?;
    let left = if n == 0 {
        z
    } else {
        SubdivisionPlan::new(n, 0.5, None)?.subdivide_left(&z, method)?
    };
    let mut factor = 1.0;
    let out = left
        .points()
        .enumerate()
        .map(|(k, v)| {
            if k > 0 {
                factor *= -2.0 * (n - k + 1) as f64;
            }
            v.iter().map(|x| factor * x).collect()
        })
        .collect();
    instrument::add_flops((2 * n + (n + 1) * d) as u64);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernstein::binomial;
    use crate::reference::evaluate_unchecked;
    use proptest::prelude::*;

    /// Direct alternating-sum formula at zero.
    fn direct_at_zero(polygon: &ControlPolygon) -> Vec<Vec<f64>> {
        let n = polygon.degree();
        let d = polygon.dimension();
        let mut falling = 1.0;
        (0..=n)
            .map(|k| {
                if k > 0 {
                    falling *= (n - k + 1) as f64;
                }
                let mut acc = vec![0.0; d];
                for i in 0..=k {
                    let sign = if (k - i) % 2 == 0 { 1.0 } else { -1.0 };
                    let coef = sign * binomial(k, i);
                    for (a, w) in acc.iter_mut().zip(polygon.point(i)) {
                        *a += coef * w;
                    }
                }
                acc.iter().map(|a| falling * a).collect()
            })
            .collect()
    }

    fn norm(v: &[f64]) -> f64 {
        v.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn rel(a: &[f64], b: &[f64]) -> f64 {
        let diff: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        norm(&diff) / norm(b).max(f64::MIN_POSITIVE)
    }

    #[test]
    fn examples() {
        let p = ControlPolygon::from_scalars(&[0.0, 1.0, 0.0]).unwrap();
        let at0 = derivatives_at_zero(&p);
        assert_eq!(at0[0], vec![0.0]);
        assert!((at0[1][0] - 2.0).abs() < 1e-12);
        assert!((at0[2][0] + 4.0).abs() < 1e-12);
        let at1 = derivatives_at_one(&p);
        assert_eq!(at1[0], vec![0.0]);
        assert!((at1[1][0] + 2.0).abs() < 1e-12);

        let line = ControlPolygon::from_scalars(&[3.0, 7.5]).unwrap();
        assert!((derivatives_at_zero(&line)[1][0] - 4.5).abs() < 1e-12);
        assert_eq!(derivatives_at_one(&line)[0], vec![7.5]);

        let point = ControlPolygon::from_scalars(&[2.0]).unwrap();
        assert_eq!(derivatives_at_zero(&point), vec![vec![2.0]]);
    }

    #[test]
    fn symmetric_polygon() {
        let p = ControlPolygon::new(
            2,
            vec![
                vec![0.0, 1.0],
                vec![2.0, 5.0],
                vec![3.0, -1.0],
                vec![2.0, 5.0],
                vec![0.0, 1.0],
            ],
        )
        .unwrap();
        let (a, b) = (derivatives_at_zero(&p), derivatives_at_one(&p));
        for (k, (x, y)) in a.iter().zip(&b).enumerate() {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let flipped: Vec<f64> = x.iter().map(|v| sign * v).collect();
            assert!(rel(y, &flipped) < 1e-12 || norm(y) < 1e-9, "k={k}");
        }
    }

    #[test]
    fn flops_grow_like_n_log_n() {
        let count = |n: usize| {
            let p = ControlPolygon::from_scalars(&vec![0.5; n + 1]).unwrap();
            instrument::measure(|| derivatives_at_zero(&p)).1.flops as f64
        };
        let (a, b, c) = (count(64), count(128), count(256));
        assert!(b / a <= 2.5, "{}", b / a);
        assert!(c / b <= 2.5, "{}", c / b);
    }

    fn polygon(max_degree: usize, lo: f64, hi: f64) -> impl Strategy<Value = ControlPolygon> {
        (0..=max_degree, 1usize..=3).prop_flat_map(move |(n, d)| {
            prop::collection::vec(lo..hi, (n + 1) * d)
                .prop_map(move |c| ControlPolygon::from_flat(d, c).unwrap())
        })
    }

    proptest! {
        #[test]
        fn matches_direct_sums(p in polygon(25, 0.0, 1.0)) {
            let fast = derivatives_at_zero(&p);
            let slow = direct_at_zero(&p);
            for (k, (a, b)) in fast.iter().zip(&slow).enumerate() {
                prop_assert!(rel(a, b) < 1e-9, "k={} {:?} {:?}", k, a, b);
            }
            let fast = derivatives_at_one(&p);
            let mut slow = direct_at_zero(&p.reversed());
            for row in slow.iter_mut().skip(1).step_by(2) {
                row.iter_mut().for_each(|x| *x = -*x);
            }
            for (k, (a, b)) in fast.iter().zip(&slow).enumerate() {
                prop_assert!(rel(a, b) < 1e-9, "k={} {:?} {:?}", k, a, b);
            }
        }

        #[test]
        fn matches_finite_differences(p in polygon(10, 0.0, 1.0)) {
            prop_assume!(p.degree() >= 2);
            let at = |t: f64| evaluate_unchecked(&p, t);
            for (t, derivs) in [(0.0, derivatives_at_zero(&p)), (1.0, derivatives_at_one(&p))] {
                let h = 1e-6;
                let (fp, fm) = (at(t + h), at(t - h));
                let first: Vec<f64> = fp.iter().zip(&fm).map(|(a, b)| (a - b) / (2.0 * h)).collect();
                prop_assert!(rel(&derivs[1], &first) < 1e-5 || norm(&derivs[1]) < 1e-6);
                let h = 1e-4;
                let (fp, f0, fm) = (at(t + h), at(t), at(t - h));
                let second: Vec<f64> = fp.iter().zip(&f0).zip(&fm)
                    .map(|((a, b), c)| (a - 2.0 * b + c) / (h * h)).collect();
                prop_assert!(rel(&derivs[2], &second) < 1e-3 || norm(&derivs[2]) < 1e-3);
            }
        }
    }
}

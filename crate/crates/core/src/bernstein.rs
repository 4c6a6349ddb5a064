//! Bernstein basis polynomials.

/// Binomial coefficient `C(n, k)` by the multiplicative running product.
///
/// Stays finite far beyond the range where `n!` overflows.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for j in 1..=k {
        acc = acc * (n - k + j) as f64 / j as f64;
    }
    acc
}

/// `B^n_i(t) = C(n, i) t^i (1 - t)^(n - i)`, and 0 for `i` outside `[0, n]`.
pub fn bernstein(n: usize, i: i64, t: f64) -> f64 {
    if i < 0 || i as u64 > n as u64 {
        return 0.0;
    }
    let i = i as usize;
    binomial(n, i) * t.powi(i as i32) * (1.0 - t).powi((n - i) as i32)
}

/// All basis values `[B^n_0(t), ..., B^n_n(t)]`.
///
/// Built by the degree-raising recurrence `B^k_j = (1 - t) B^(k-1)_j + t B^(k-1)_(j-1)`,
/// which only forms convex combinations.
pub fn bernstein_row(n: usize, t: f64) -> Vec<f64> {
    let mut row = vec![0.0; n + 1];
    row[0] = 1.0;
    let s = 1.0 - t;
    for k in 1..=n {
        for j in (1..=k).rev() {
            row[j] = s * row[j] + t * row[j - 1];
        }
        row[0] *= s;
    }
    row
}

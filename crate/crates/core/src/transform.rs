//! Real-input discrete Fourier transforms for fast polynomial multiplication.
//!
//! Forward transforms are unnormalized; the inverse is scaled by `1/M`, so
//! `inverse(multiply_spectra(forward(a), forward(b)))` is the cyclic
//! convolution of `a` and `b`. With `M >= len(a) + len(b) - 1` that equals
//! the linear convolution.
//!
//! Engines behind [`TransformPlan`]:
//! * [`Engine::Vectorized`] (default) pads to the next power of two and runs
//!   the real transform through a half-length complex FFT from `rustfft`,
//!   which picks SIMD kernels at runtime.
//! * [`Engine::Radix2`] is the same padding and packing with a plain
//!   iterative radix-2 complex FFT.
//! * [`Engine::Bluestein`] transforms at exactly the logical length using
//!   the chirp-z identity `jk = (j² + k² - (k - j)²) / 2`.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::instrument;

/// Largest logical length accepted by [`TransformPlan::new`].
pub const DEFAULT_MAX_LENGTH: usize = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Vectorized,
    Radix2,
    Bluestein,
}

impl Engine {
    /// Whether the engine pads to a power of two (as opposed to the exact length).
    pub fn pads_to_power_of_two(self) -> bool {
        !matches!(self, Engine::Bluestein)
    }
}

/// Precomputed tables for one transform length. Immutable once built.
#[derive(Debug, Clone)]
pub struct TransformPlan {
    logical_len: usize,
    physical_len: usize,
    engine: Engine,
    kernel: Kernel,
}

#[derive(Debug, Clone)]
enum Kernel {
    Identity,
    /// Real FFT of even length `M` through a complex FFT of length `M/2`.
    Packed {
        half: ComplexFft,
        /// `exp(-2πik/M) / 2` for `k in 0..=M/2`.
        post: Vec<Complex64>,
    },
    Chirp(Bluestein),
}

#[derive(Clone)]
enum ComplexFft {
    Radix2(Radix2),
    Vectorized {
        len: usize,
        forward: Arc<dyn Fft<f64>>,
        inverse: Arc<dyn Fft<f64>>,
        scratch_len: usize,
    },
}

impl fmt::Debug for ComplexFft {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexFft::Radix2(r) => f.debug_tuple("Radix2").field(&r.len).finish(),
            ComplexFft::Vectorized { len, .. } => f.debug_tuple("Vectorized").field(len).finish(),
        }
    }
}

impl ComplexFft {
    fn new(len: usize, engine: Engine) -> Self {
        match engine {
            Engine::Vectorized => {
                let mut planner = FftPlanner::new();
                let forward = planner.plan_fft_forward(len);
                let inverse = planner.plan_fft_inverse(len);
                let scratch_len = forward
                    .get_inplace_scratch_len()
                    .max(inverse.get_inplace_scratch_len());
                ComplexFft::Vectorized {
                    len,
                    forward,
                    inverse,
                    scratch_len,
                }
            }
            _ => ComplexFft::Radix2(Radix2::new(len)),
        }
    }

    /// Unnormalized in-place transform.
    fn process(&self, buf: &mut [Complex64], inverse: bool, scratch: &mut Vec<Complex64>) {
        match self {
            ComplexFft::Radix2(r) => r.process(buf, inverse),
            ComplexFft::Vectorized {
                len,
                forward,
                inverse: backward,
                scratch_len,
            } => {
                if scratch.len() < *scratch_len {
                    scratch.resize(*scratch_len, Complex64::new(0.0, 0.0));
                }
                let fft = if inverse { backward } else { forward };
                fft.process_with_scratch(buf, &mut scratch[..*scratch_len]);
                // Nominal radix-2 count, so engines report comparable work.
                instrument::add_flops(5 * *len as u64 * len.trailing_zeros() as u64);
            }
        }
    }
}

/// Reusable buffers for [`TransformPlan::forward_into`] and [`TransformPlan::inverse_into`].
#[derive(Debug, Default, Clone)]
pub struct Scratch {
    work: Vec<Complex64>,
    fft: Vec<Complex64>,
}

/// Half spectrum (`M/2 + 1` bins) of a real sequence of length `M`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Spectrum {
    physical_len: usize,
    bins: Vec<Complex64>,
}

impl Spectrum {
    pub fn physical_len(&self) -> usize {
        self.physical_len
    }

    pub fn bins(&self) -> &[Complex64] {
        &self.bins
    }

    /// `Σ x_k²` of the time-domain sequence, recovered from the half spectrum.
    pub fn energy(&self) -> f64 {
        let m = self.physical_len;
        let mut total = self.bins[0].norm_sqr();
        for (k, b) in self.bins.iter().enumerate().skip(1) {
            // The Nyquist bin of an even length has no mirror image.
            let weight = if 2 * k == m { 1.0 } else { 2.0 };
            total += weight * b.norm_sqr();
        }
        total / m as f64
    }

    /// Multiplies bin-wise by `other` in place.
    pub fn multiply_in_place(&mut self, other: &Spectrum) -> Result<()> {
        if self.physical_len != other.physical_len || self.bins.len() != other.bins.len() {
            return Err(Error::PlanMismatch);
        }
        for (x, y) in self.bins.iter_mut().zip(&other.bins) {
            *x *= y;
        }
        instrument::add_flops(6 * self.bins.len() as u64);
        Ok(())
    }
}

/// Plan with the default engine.
pub fn plan(logical_len: usize) -> Result<TransformPlan> {
    TransformPlan::new(logical_len, Engine::default())
}

impl TransformPlan {
    pub fn new(logical_len: usize, engine: Engine) -> Result<Self> {
        Self::with_max_length(logical_len, engine, DEFAULT_MAX_LENGTH)
    }

    pub fn with_max_length(logical_len: usize, engine: Engine, max: usize) -> Result<Self> {
        if logical_len == 0 {
            return Err(Error::Domain("transform length must be at least 1".into()));
        }
        if logical_len > max {
            return Err(Error::Resource {
                requested: logical_len,
                max,
            });
        }
        let physical_len = if engine.pads_to_power_of_two() {
            logical_len.next_power_of_two()
        } else {
            logical_len
        };
        let kernel = if physical_len == 1 {
            Kernel::Identity
        } else if engine.pads_to_power_of_two() {
            Kernel::Packed {
                half: ComplexFft::new(physical_len / 2, engine),
                post: (0..=physical_len / 2)
                    .map(|k| root_of_unity(k, physical_len) * 0.5)
                    .collect(),
            }
        } else {
            Kernel::Chirp(Bluestein::new(physical_len))
        };
        Ok(Self {
            logical_len,
            physical_len,
            engine,
            kernel,
        })
    }

    pub fn logical_len(&self) -> usize {
        self.logical_len
    }

    /// Transform size `M >= logical_len`.
    pub fn physical_len(&self) -> usize {
        self.physical_len
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    /// Spectrum of `x` zero-padded to the physical length.
    pub fn forward(&self, x: &[f64]) -> Result<Spectrum> {
        let mut out = Spectrum::default();
        self.forward_into(x, &mut out, &mut Scratch::default())?;
        Ok(out)
    }

    /// Real sequence of length `M` whose forward transform is `s`.
    pub fn inverse(&self, s: &Spectrum) -> Result<Vec<f64>> {
        let mut out = Vec::new();
        self.inverse_into(s, &mut out, &mut Scratch::default())?;
        Ok(out)
    }

    /// Bin-wise product of two spectra from this plan.
    pub fn multiply_spectra(&self, a: &Spectrum, b: &Spectrum) -> Result<Spectrum> {
        if a.physical_len != self.physical_len {
            return Err(Error::PlanMismatch);
        }
        multiply_spectra(a, b)
    }

    /// [`forward`](Self::forward) into caller-owned storage.
    pub fn forward_into(&self, x: &[f64], out: &mut Spectrum, scratch: &mut Scratch) -> Result<()> {
        let m = self.physical_len;
        if x.len() > m {
            return Err(Error::Length {
                len: x.len(),
                capacity: m,
            });
        }
        instrument::count_forward();
        out.physical_len = m;
        out.bins.clear();
        match &self.kernel {
            Kernel::Identity => out
                .bins
                .push(Complex64::new(x.first().copied().unwrap_or(0.0), 0.0)),
            Kernel::Packed { half, post } => {
                let n = m / 2;
                let z = &mut scratch.work;
                z.clear();
                z.extend(
                    x.chunks(2)
                        .map(|pair| Complex64::new(pair[0], pair.get(1).copied().unwrap_or(0.0))),
                );
                z.resize(n, Complex64::new(0.0, 0.0));
                half.process(z, false, &mut scratch.fft);
                out.bins.reserve(n + 1);
                for (k, w) in post.iter().enumerate() {
                    let a = z[if k == n { 0 } else { k }];
                    let b = z[if k == 0 { 0 } else { n - k }];
                    // Spectra of the even and odd samples: E = (a + b̄)/2, O = (a - b̄)/(2i).
                    let even = Complex64::new(0.5 * (a.re + b.re), 0.5 * (a.im - b.im));
                    let odd2 = Complex64::new(a.im + b.im, b.re - a.re);
                    out.bins.push(even + w * odd2);
                }
                instrument::add_flops(14 * (n as u64 + 1));
            }
            Kernel::Chirp(b) => {
                let buf = &mut scratch.work;
                buf.clear();
                buf.extend((0..m).map(|k| Complex64::new(x.get(k).copied().unwrap_or(0.0), 0.0)));
                b.process(buf, &mut scratch.fft);
                out.bins.extend_from_slice(&buf[..m / 2 + 1]);
            }
        }
        Ok(())
    }

    /// [`inverse`](Self::inverse) into caller-owned storage; `out` is resized to `M`.
    pub fn inverse_into(
        &self,
        s: &Spectrum,
        out: &mut Vec<f64>,
        scratch: &mut Scratch,
    ) -> Result<()> {
        let m = self.physical_len;
        if s.physical_len != m || s.bins.len() != m / 2 + 1 {
            return Err(Error::PlanMismatch);
        }
        instrument::count_inverse();
        out.clear();
        match &self.kernel {
            Kernel::Identity => out.push(s.bins[0].re),
            Kernel::Packed { half, post } => {
                let n = m / 2;
                let x = &s.bins;
                let z = &mut scratch.work;
                z.clear();
                z.extend((0..n).map(|k| {
                    let (a, b) = (x[k], x[n - k]);
                    // E = (X_k + X̄_(n-k))/2, O = (X_k - X̄_(n-k)) w̄ / 2, Z = E + iO.
                    let even = Complex64::new(0.5 * (a.re + b.re), 0.5 * (a.im - b.im));
                    let odd = Complex64::new(a.re - b.re, a.im + b.im) * post[k].conj();
                    Complex64::new(even.re - odd.im, even.im + odd.re)
                }));
                instrument::add_flops(16 * n as u64);
                half.process(z, true, &mut scratch.fft);
                let scale = 1.0 / n as f64;
                out.reserve(m);
                for v in z.iter() {
                    out.push(v.re * scale);
                    out.push(v.im * scale);
                }
                instrument::add_flops(m as u64);
            }
            Kernel::Chirp(b) => {
                // inverse DFT = conj(DFT(conj X)) / M over the full Hermitian spectrum.
                let buf = &mut scratch.work;
                buf.clear();
                buf.extend((0..m).map(|k| {
                    if k < s.bins.len() {
                        s.bins[k].conj()
                    } else {
                        s.bins[m - k]
                    }
                }));
                b.process(buf, &mut scratch.fft);
                let scale = 1.0 / m as f64;
                out.extend(buf.iter().map(|v| v.re * scale));
                instrument::add_flops(m as u64);
            }
        }
        Ok(())
    }
}

/// Bin-wise complex product; both spectra must have the same physical length.
pub fn multiply_spectra(a: &Spectrum, b: &Spectrum) -> Result<Spectrum> {
    let mut out = a.clone();
    out.multiply_in_place(b)?;
    Ok(out)
}

/// `exp(-2πik/n)`, evaluated directly rather than by recurrence.
fn root_of_unity(k: usize, n: usize) -> Complex64 {
    let (sin, cos) = (-2.0 * PI * k as f64 / n as f64).sin_cos();
    Complex64::new(cos, sin)
}

/// Iterative decimation-in-time complex FFT of power-of-two length.
#[derive(Debug, Clone)]
struct Radix2 {
    len: usize,
    /// Per-stage twiddles, concatenated: the stage with half-width `h`
    /// stores `exp(-πij/h)` for `j < h` starting at offset `h - 1`.
    twiddles: Vec<Complex64>,
    bit_reverse: Vec<u32>,
}

impl Radix2 {
    fn new(len: usize) -> Self {
        assert!(len.is_power_of_two());
        let mut twiddles = Vec::with_capacity(len.saturating_sub(1));
        let mut half = 1;
        while half < len {
            twiddles.extend((0..half).map(|j| root_of_unity(j, 2 * half)));
            half *= 2;
        }
        let bits = len.trailing_zeros();
        let bit_reverse = (0..len as u32)
            .map(|i| {
                if bits == 0 {
                    0
                } else {
                    i.reverse_bits() >> (32 - bits)
                }
            })
            .collect();
        Self {
            len,
            twiddles,
            bit_reverse,
        }
    }

    /// In place. `inverse` uses conjugate twiddles and does not rescale.
    fn process(&self, buf: &mut [Complex64], inverse: bool) {
        let n = self.len;
        debug_assert_eq!(buf.len(), n);
        for (i, &r) in self.bit_reverse.iter().enumerate() {
            let r = r as usize;
            if i < r {
                buf.swap(i, r);
            }
        }
        if inverse {
            self.stages::<true>(buf);
        } else {
            self.stages::<false>(buf);
        }
        let stages = n.trailing_zeros() as u64;
        instrument::add_flops(5 * n as u64 * stages);
    }

    fn stages<const INVERSE: bool>(&self, buf: &mut [Complex64]) {
        let n = self.len;
        // The first stage has unit twiddles.
        if n >= 2 {
            for pair in buf.chunks_exact_mut(2) {
                let (a, b) = (pair[0], pair[1]);
                pair[0] = a + b;
                pair[1] = a - b;
            }
        }
        let mut half = 2;
        while half < n {
            let tw = &self.twiddles[half - 1..2 * half - 1];
            for block in buf.chunks_exact_mut(2 * half) {
                let (lo, hi) = block.split_at_mut(half);
                for j in 0..half {
                    let w = if INVERSE { tw[j].conj() } else { tw[j] };
                    let b = hi[j];
                    let t = Complex64::new(b.re * w.re - b.im * w.im, b.re * w.im + b.im * w.re);
                    let a = lo[j];
                    lo[j] = a + t;
                    hi[j] = a - t;
                }
            }
            half *= 2;
        }
    }
}

/// Arbitrary-length complex DFT as a convolution with a chirp.
#[derive(Debug, Clone)]
struct Bluestein {
    len: usize,
    /// `exp(-πik²/M)`.
    chirp: Vec<Complex64>,
    inner: Radix2,
    /// Forward transform of the conjugate chirp, pre-divided by the inner length.
    kernel_spectrum: Vec<Complex64>,
}

impl Bluestein {
    fn new(len: usize) -> Self {
        let inner_len = (2 * len - 1).next_power_of_two();
        let modulus = 2 * len as u128;
        let chirp: Vec<Complex64> = (0..len)
            .map(|k| {
                // k² mod 2M keeps the angle argument small and exact.
                let k2 = (k as u128 * k as u128 % modulus) as f64;
                let (sin, cos) = (-PI * k2 / len as f64).sin_cos();
                Complex64::new(cos, sin)
            })
            .collect();
        let mut kernel = vec![Complex64::new(0.0, 0.0); inner_len];
        kernel[0] = chirp[0].conj();
        for k in 1..len {
            kernel[k] = chirp[k].conj();
            kernel[inner_len - k] = chirp[k].conj();
        }
        let inner = Radix2::new(inner_len);
        inner.process(&mut kernel, false);
        let scale = 1.0 / inner_len as f64;
        for v in &mut kernel {
            *v *= scale;
        }
        Self {
            len,
            chirp,
            inner,
            kernel_spectrum: kernel,
        }
    }

    fn process(&self, buf: &mut [Complex64], work: &mut Vec<Complex64>) {
        let m = self.len;
        let p = self.inner.len;
        work.clear();
        work.resize(p, Complex64::new(0.0, 0.0));
        for k in 0..m {
            work[k] = buf[k] * self.chirp[k];
        }
        self.inner.process(work, false);
        for (w, k) in work.iter_mut().zip(&self.kernel_spectrum) {
            *w *= k;
        }
        self.inner.process(work, true);
        for k in 0..m {
            buf[k] = work[k] * self.chirp[k];
        }
        instrument::add_flops((12 * m + 6 * p) as u64);
    }
}

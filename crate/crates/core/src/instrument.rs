//! Per-thread operation counters.
//!
//! The transform engine and the scalar kernels report work here so tests can
//! check complexity claims (transform counts, floating-point operation growth)
//! without timing. Counters are thread-local, so concurrent callers never
//! observe each other's work.

use std::cell::Cell;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    /// Forward real transforms of any sequence.
    pub forward_transforms: u64,
    /// Forward transforms of a β coefficient sequence (subdivision plan setup).
    pub beta_transforms: u64,
    pub inverse_transforms: u64,
    /// Floating-point operations (add, multiply, divide) reported by kernels.
    pub flops: u64,
}

impl Counts {
    pub fn since(&self, earlier: &Counts) -> Counts {
        Counts {
            forward_transforms: self.forward_transforms - earlier.forward_transforms,
            beta_transforms: self.beta_transforms - earlier.beta_transforms,
            inverse_transforms: self.inverse_transforms - earlier.inverse_transforms,
            flops: self.flops - earlier.flops,
        }
    }
}

thread_local! {
    static COUNTS: Cell<Counts> = const { Cell::new(Counts {
        forward_transforms: 0,
        beta_transforms: 0,
        inverse_transforms: 0,
        flops: 0,
    }) };
}

/// Current counter values for the calling thread.
pub fn snapshot() -> Counts {
    COUNTS.with(Cell::get)
}

/// Runs `f` and returns its result with the work it performed on this thread.
pub fn measure<T>(f: impl FnOnce() -> T) -> (T, Counts) {
    let before = snapshot();
    let out = f();
    (out, snapshot().since(&before))
}

fn update(f: impl FnOnce(&mut Counts)) {
    COUNTS.with(|cell| {
        let mut c = cell.get();
        f(&mut c);
        cell.set(c);
    });
}

pub(crate) fn add_flops(n: u64) {
    update(|c| c.flops += n);
}

pub(crate) fn count_forward() {
    update(|c| c.forward_transforms += 1);
}

pub(crate) fn count_beta() {
    update(|c| c.beta_transforms += 1);
}

pub(crate) fn count_inverse() {
    update(|c| c.inverse_transforms += 1);
}

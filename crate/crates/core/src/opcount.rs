//! Real floating-point operation counters.
//!
//! Kernels report the operations they perform in bulk. One quaternion product
//! is 16 multiplications and 12 additions; a quaternion sum is 4 additions.
//! Counters are thread-local, so concurrent runs on different threads do not
//! interfere. Without the `opcount` feature every hook compiles to nothing and
//! [`snapshot`] always reads zero.

#[cfg(feature = "opcount")]
use std::cell::Cell;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub mul: u64,
    pub add: u64,
    pub div: u64,
    pub sqrt: u64,
}

impl OpCounts {
    pub fn total(&self) -> u64 {
        self.mul + self.add + self.div + self.sqrt
    }
}

impl std::ops::Sub for OpCounts {
    type Output = OpCounts;
    fn sub(self, o: OpCounts) -> OpCounts {
        OpCounts {
            mul: self.mul - o.mul,
            add: self.add - o.add,
            div: self.div - o.div,
            sqrt: self.sqrt - o.sqrt,
        }
    }
}

#[cfg(feature = "opcount")]
thread_local! {
    static COUNTS: Cell<OpCounts> = const { Cell::new(OpCounts { mul: 0, add: 0, div: 0, sqrt: 0 }) };
}

pub fn enabled() -> bool {
    cfg!(feature = "opcount")
}

pub fn reset() {
    #[cfg(feature = "opcount")]
    COUNTS.with(|c| c.set(OpCounts::default()));
}

pub fn snapshot() -> OpCounts {
    #[cfg(feature = "opcount")]
    {
        COUNTS.with(|c| c.get())
    }
    #[cfg(not(feature = "opcount"))]
    {
        OpCounts::default()
    }
}

/// Runs `f` and returns its result with the operations it performed.
pub fn measure<R>(f: impl FnOnce() -> R) -> (R, OpCounts) {
    let before = snapshot();
    let r = f();
    (r, snapshot() - before)
}

#[inline]
#[allow(unused_variables)]
pub(crate) fn record(mul: u64, add: u64, div: u64, sqrt: u64) {
    #[cfg(feature = "opcount")]
    COUNTS.with(|c| {
        let mut v = c.get();
        v.mul += mul;
        v.add += add;
        v.div += div;
        v.sqrt += sqrt;
        c.set(v);
    });
}

/// `k` quaternion products.
#[inline]
pub(crate) fn qmul(k: u64) {
    record(16 * k, 12 * k, 0, 0);
}

/// `k` quaternion additions.
#[inline]
pub(crate) fn qadd(k: u64) {
    record(0, 4 * k, 0, 0);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measure_isolates_work() {
        reset();
        record(1, 1, 0, 0);
        let (_, c) = measure(|| qmul(2));
        if enabled() {
            assert_eq!(c, OpCounts { mul: 32, add: 24, div: 0, sqrt: 0 });
            assert_eq!(snapshot().total(), 58);
        } else {
            assert_eq!(c.total(), 0);
        }
    }
}

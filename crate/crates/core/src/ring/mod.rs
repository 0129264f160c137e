//! Exact arithmetic in `A = Z`, `B = Z[1/2]` and the radical tower `D`.

mod dyadic;
mod interval;
mod radical;

pub use dyadic::Dyadic;
pub use interval::{pow2_enclosure, DyadicInterval};
pub use radical::Radical;

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

/// Initial working precision (fractional bits) for sign determination.
pub const DEFAULT_PRECISION_BITS: u64 = 64;

static INITIAL_PRECISION: AtomicU64 = AtomicU64::new(DEFAULT_PRECISION_BITS);

/// Sets the starting precision used by [`Radical::sign`]. Only affects speed:
/// precision doubles until the sign is certain.
pub fn set_initial_precision(bits: u64) {
    INITIAL_PRECISION.store(bits.max(1), AtomicOrdering::Relaxed);
}

pub fn initial_precision() -> u64 {
    INITIAL_PRECISION.load(AtomicOrdering::Relaxed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

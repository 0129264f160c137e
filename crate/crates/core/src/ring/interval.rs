//! Dyadic interval enclosures used for exact sign determination.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Dyadic, Sign};

/// Closed interval `[lo, hi]` with dyadic endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
}

impl DyadicInterval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: [{lo}, {hi}]");
        DyadicInterval { lo, hi }
    }

    pub fn point(d: Dyadic) -> Self {
        DyadicInterval {
            lo: d.clone(),
            hi: d,
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn contains(&self, d: &Dyadic) -> bool {
        &self.lo <= d && d <= &self.hi
    }

    pub fn add(&self, other: &DyadicInterval) -> DyadicInterval {
        DyadicInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    /// Exact product with a dyadic scalar.
    pub fn scale(&self, c: &Dyadic) -> DyadicInterval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            DyadicInterval { lo: a, hi: b }
        } else {
            DyadicInterval { lo: b, hi: a }
        }
    }

    /// The sign of every point of the interval, or `None` if it straddles zero.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else if self.lo.signum().is_gt() {
            Some(Sign::Positive)
        } else if self.hi.signum().is_lt() {
            Some(Sign::Negative)
        } else {
            None
        }
    }
}

fn ceil_sqrt(n: &BigInt) -> BigInt {
    let s = n.sqrt();
    if &(&s * &s) == n {
        s
    } else {
        s + 1
    }
}

thread_local! {
    // bits -> [(lo_j, hi_j)] with 2^(1/2^(j+1)) in [lo_j, hi_j] / 2^bits
    static ROOT_CHAINS: RefCell<HashMap<u64, Vec<(BigInt, BigInt)>>> = RefCell::new(HashMap::new());
}

/// Integer bounds `(lo, hi)` with `lo / 2^bits <= 2^(1/2^j) <= hi / 2^bits`, `j >= 1`.
fn root_bounds(j: u64, bits: u64) -> (BigInt, BigInt) {
    assert!(j >= 1);
    ROOT_CHAINS.with(|cell| {
        let mut map = cell.borrow_mut();
        let chain = map.entry(bits).or_default();
        if chain.is_empty() {
            let two = BigInt::from(2) << (2 * bits) as usize;
            chain.push((two.sqrt(), ceil_sqrt(&two)));
        }
        while (chain.len() as u64) < j {
            let (lo, hi) = chain.last().expect("chain seeded");
            let next = (
                (lo << bits as usize).sqrt(),
                ceil_sqrt(&(hi << bits as usize)),
            );
            chain.push(next);
        }
        chain[(j - 1) as usize].clone()
    })
}

/// Encloses `2^q` for `0 <= q < 1` at `bits` fractional bits of working precision.
pub fn pow2_enclosure(q: &Dyadic, bits: u64) -> DyadicInterval {
    assert!(
        !q.signum().is_lt() && q < &Dyadic::one(),
        "exponent {q} outside [0, 1)"
    );
    if q.is_zero() {
        return DyadicInterval::point(Dyadic::one());
    }
    let e = q.exp();
    let p = q.num();
    let mut lo = BigInt::one() << bits as usize;
    let mut hi = lo.clone();
    let mask = (BigInt::one() << bits as usize) - 1;
    // q = sum over set bits: bit (e - j) of p contributes 2^(-j)
    for j in 1..=e {
        if p.bit(e - j) {
            let (rl, rh) = root_bounds(j, bits);
            lo = (&lo * rl) >> bits as usize;
            let prod = &hi * rh;
            let carry = !(&prod & &mask).is_zero();
            hi = (prod >> bits as usize) + if carry { 1 } else { 0 };
        }
    }
    DyadicInterval::new(Dyadic::new(lo, bits), Dyadic::new(hi, bits))
}

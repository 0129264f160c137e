//! Elements of the radical tower `D = Z[1/2, 2^(1/2), 2^(1/4), ...]`.
//!
//! An element is stored as `sum_q coeff(q) * 2^q` over distinct dyadic
//! exponents `q` in `[0, 1)` with nonzero dyadic coefficients. The powers
//! `2^q` for such `q` are linearly independent over the rationals, so the
//! element is zero exactly when no terms remain.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::interval::{pow2_enclosure, DyadicInterval};
use super::{Dyadic, Sign};
use crate::error::ParseValueError;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Radical {
    terms: BTreeMap<Dyadic, Dyadic>,
}

/// Splits an arbitrary dyadic exponent into `(floor, fract)`.
fn split_exponent(q: &Dyadic) -> (i64, Dyadic) {
    let fl = q
        .floor()
        .to_i64()
        .expect("exponent integer part out of range");
    (fl, q.fract())
}

impl Radical {
    pub fn zero() -> Self {
        Radical::default()
    }

    pub fn one() -> Self {
        Radical::from_dyadic(Dyadic::one())
    }

    pub fn from_dyadic(d: Dyadic) -> Self {
        let mut r = Radical::zero();
        r.add_term(Dyadic::zero(), d);
        r
    }

    /// `coeff * 2^q` for any dyadic `q`.
    pub fn term(coeff: Dyadic, q: &Dyadic) -> Self {
        let (fl, fr) = split_exponent(q);
        let mut r = Radical::zero();
        r.add_term(fr, coeff.mul_pow2(fl));
        r
    }

    /// `2^q`.
    pub fn pow2(q: &Dyadic) -> Self {
        Radical::term(Dyadic::one(), q)
    }

    /// The action constant `c_n = 2^(2^n)`; `c_{n+1} = c_n^2` for every integer `n`.
    pub fn c_constant(n: i64) -> Self {
        Radical::pow2(&Dyadic::pow2(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Dyadic, &Dyadic)> {
        self.terms.iter()
    }

    /// The value as a dyadic, if it lies in `Z[1/2]`.
    pub fn as_dyadic(&self) -> Option<Dyadic> {
        match self.terms.len() {
            0 => Some(Dyadic::zero()),
            1 => self.terms.get(&Dyadic::zero()).cloned(),
            _ => None,
        }
    }

    /// If the value is a pure power `2^s`, returns `s`.
    pub fn as_pow2(&self) -> Option<Dyadic> {
        let mut it = self.terms.iter();
        let (q, c) = it.next()?;
        if it.next().is_some() || c.signum().is_le() {
            return None;
        }
        let n = c.num();
        if n.trailing_zeros() != Some(n.bits() - 1) {
            return None;
        }
        let log2 = (n.bits() - 1) as i64 - c.exp() as i64;
        Some(q + &Dyadic::from(log2))
    }

    fn add_term(&mut self, q: Dyadic, c: Dyadic) {
        debug_assert!(!q.signum().is_lt() && q < Dyadic::one());
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&q) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&q);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(q, c);
            }
        }
    }

    /// Exact product with `2^q` for any dyadic `q`.
    pub fn scale_pow2(&self, q: &Dyadic) -> Radical {
        if q.is_zero() {
            return self.clone();
        }
        let (fl, fr) = split_exponent(q);
        let one = Dyadic::one();
        let mut out = Radical::zero();
        for (e, c) in &self.terms {
            let mut ne = e + &fr;
            let mut shift = fl;
            if ne >= one {
                ne = &ne - &one;
                shift += 1;
            }
            out.add_term(ne, c.mul_pow2(shift));
        }
        out
    }

    /// Exact product with a dyadic scalar.
    pub fn scale(&self, d: &Dyadic) -> Radical {
        if d.is_zero() {
            return Radical::zero();
        }
        Radical {
            terms: self.terms.iter().map(|(q, c)| (q.clone(), c * d)).collect(),
        }
    }

    /// Enclosure of the value at `bits` fractional bits per term.
    pub fn enclosure(&self, bits: u64) -> DyadicInterval {
        self.terms
            .iter()
            .fold(DyadicInterval::point(Dyadic::zero()), |acc, (q, c)| {
                acc.add(&pow2_enclosure(q, bits).scale(c))
            })
    }

    pub fn sign(&self) -> Sign {
        self.sign_with_precision(super::initial_precision())
    }

    /// Exact sign, refining the interval enclosure with doubling precision
    /// starting from `initial_bits`.
    pub fn sign_with_precision(&self, initial_bits: u64) -> Sign {
        if self.terms.is_empty() {
            return Sign::Zero;
        }
        let mut coeff_signs = self.terms.values().map(|c| c.signum());
        let first = coeff_signs.next().expect("nonempty");
        if coeff_signs.all(|s| s == first) {
            return if first.is_gt() {
                Sign::Positive
            } else {
                Sign::Negative
            };
        }
        let mut bits = initial_bits.max(1);
        loop {
            if let Some(s) = self.enclosure(bits).sign() {
                return s;
            }
            bits *= 2;
        }
    }

    /// Exact comparison of real values.
    pub fn cmp_value(&self, other: &Radical) -> std::cmp::Ordering {
        (self - other).sign().as_ordering()
    }
}

impl<'a> Add<&'a Radical> for &'a Radical {
    type Output = Radical;
    fn add(self, rhs: &Radical) -> Radical {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (q, c) in &small.terms {
            out.add_term(q.clone(), c.clone());
        }
        out
    }
}

impl Neg for &Radical {
    type Output = Radical;
    fn neg(self) -> Radical {
        Radical {
            terms: self.terms.iter().map(|(q, c)| (q.clone(), -c)).collect(),
        }
    }
}

impl<'a> Sub<&'a Radical> for &'a Radical {
    type Output = Radical;
    fn sub(self, rhs: &Radical) -> Radical {
        let mut out = self.clone();
        for (q, c) in &rhs.terms {
            out.add_term(q.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Radical> for &'a Radical {
    type Output = Radical;
    fn mul(self, rhs: &Radical) -> Radical {
        let one = Dyadic::one();
        let mut out = Radical::zero();
        for (q1, c1) in &self.terms {
            for (q2, c2) in &rhs.terms {
                let q = q1 + q2;
                let c = c1 * c2;
                if q >= one {
                    out.add_term(&q - &one, c.mul_pow2(1));
                } else {
                    out.add_term(q, c);
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Radical> for Radical {
            type Output = Radical;
            fn $m(self, rhs: Radical) -> Radical {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Radical {
    type Output = Radical;
    fn neg(self) -> Radical {
        -&self
    }
}

impl From<Dyadic> for Radical {
    fn from(d: Dyadic) -> Self {
        Radical::from_dyadic(d)
    }
}

impl From<i64> for Radical {
    fn from(n: i64) -> Self {
        Radical::from_dyadic(Dyadic::from(n))
    }
}

/// Renders as `c*2^(q) + c*2^(q) + ...` in ascending exponent order; zero is `0`.
impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (q, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*2^({q})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Radical({self})")
    }
}

impl FromStr for Radical {
    type Err = ParseValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Radical::zero();
        for part in s.split(" + ") {
            let part = part.trim();
            let term = match part.split_once("*2^(") {
                Some((c, rest)) => {
                    let q = rest.strip_suffix(')').ok_or_else(|| {
                        ParseValueError::new(format!("unterminated exponent in `{part}`"))
                    })?;
                    Radical::term(c.parse()?, &q.parse()?)
                }
                None => Radical::from_dyadic(part.parse()?),
            };
            out = &out + &term;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Dyadic,
    coeff: Dyadic,
}

impl Serialize for Radical {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(q, c)| TermRepr {
            exp: q.clone(),
            coeff: c.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for Radical {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let reprs = Vec::<TermRepr>::deserialize(d)?;
        let mut out = Radical::zero();
        for t in reprs {
            out = &out + &Radical::term(t.coeff, &t.exp);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn half() -> Dyadic {
        Dyadic::new(1, 1)
    }

    fn sqrt2() -> Radical {
        Radical::pow2(&half())
    }

    #[test]
    fn sqrt2_squared_is_two() {
        assert_eq!(&sqrt2() * &sqrt2(), Radical::from(2));
    }

    #[test]
    fn conjugate_product() {
        // (sqrt2 - 1)(sqrt2 + 1) = 2 - 1
        let one = Radical::one();
        let lhs = &sqrt2() - &one;
        let rhs = &sqrt2() + &one;
        assert_eq!(&lhs * &rhs, Radical::one());
    }

    #[test]
    fn additive_inverse_is_empty() {
        let x = &sqrt2() + &Radical::term(Dyadic::new(-3, 2), &Dyadic::new(5, 3));
        let z = &x + &(-&x);
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn scale_pow2_examples() {
        let one = Radical::one();
        let r = one.scale_pow2(&half()).scale_pow2(&half());
        assert_eq!(r, Radical::from(2));
        let back = one.scale_pow2(&-half()).scale_pow2(&half());
        assert_eq!(back, one);
        assert_eq!(Radical::c_constant(-1), one.scale_pow2(&half()));
        assert_eq!(
            &Radical::c_constant(-1) * &Radical::c_constant(-1),
            Radical::c_constant(0)
        );
        assert_eq!(Radical::c_constant(0), Radical::from(2));
        assert_eq!(Radical::c_constant(1), Radical::from(4));
    }

    #[test]
    fn negative_exponent_folds_into_coefficient() {
        // 2^(-1/4) = 2^(3/4) / 2
        let r = Radical::pow2(&Dyadic::new(-1, 2));
        let (q, c) = r.terms().next().unwrap();
        assert_eq!(q, &Dyadic::new(3, 2));
        assert_eq!(c, &Dyadic::new(1, 1));
        assert_eq!(r.as_pow2(), Some(Dyadic::new(-1, 2)));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Radical::zero().sign(), Sign::Zero);
        assert_eq!((&sqrt2() - &Radical::one()).sign(), Sign::Positive);
        let r = &Radical::from_dyadic(Dyadic::new(7, 3)) - &sqrt2();
        assert_eq!(r.sign(), Sign::Negative);
    }

    #[test]
    fn cmp_examples() {
        let x = &sqrt2() + &Radical::from(3);
        assert_eq!(x.cmp_value(&x), Ordering::Equal);
        assert_eq!(Radical::one().cmp_value(&sqrt2()), Ordering::Less);
        assert_eq!(
            Radical::c_constant(1).cmp_value(&Radical::c_constant(0)),
            Ordering::Greater
        );
    }

    #[test]
    fn sign_needs_refinement() {
        // a difference below 2^-64 forces at least one doubling
        let q = Dyadic::new(1, 8);
        let r = &Radical::pow2(&q) - &Radical::from_dyadic(Dyadic::one());
        assert_eq!(r.sign(), Sign::Positive);
        let close = {
            let iv = pow2_enclosure(&Dyadic::new(1, 1), 200);
            // a dyadic just below sqrt 2, closer than 2^-64
            iv.lo().clone()
        };
        let d = &sqrt2() - &Radical::from_dyadic(close.clone());
        assert_eq!(d.sign(), Sign::Positive);
        let d = &Radical::from_dyadic(close) - &sqrt2();
        assert_eq!(d.sign(), Sign::Negative);
    }

    #[test]
    fn text_and_json_round_trip() {
        let x = &sqrt2().scale(&Dyadic::new(-7, 3)) + &Radical::from(5);
        let text = x.to_string();
        assert_eq!(text, "5*2^(0) + -7/2^3*2^(1/2^1)");
        assert_eq!(text.parse::<Radical>().unwrap(), x);
        assert_eq!("0".parse::<Radical>().unwrap(), Radical::zero());
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            r#"[{"exp":"0","coeff":"5"},{"exp":"1/2^1","coeff":"-7/2^3"}]"#
        );
        assert_eq!(serde_json::from_str::<Radical>(&json).unwrap(), x);
    }
}

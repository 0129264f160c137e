use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::Dyadic;

/// Element `t^k a^u` of `BS(1,2) = <t, a | t a t^-1 = a^2>`.
///
/// Moving `a`-powers across `t`-powers uses `a^u t^m = t^m a^(u 2^-m)`, which
/// gives the product law `(k1, u1)(k2, u2) = (k1 + k2, u1 2^-k2 + u2)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BsElement {
    pub k: i64,
    pub u: Dyadic,
}

impl BsElement {
    pub fn new(k: i64, u: Dyadic) -> Self {
        BsElement { k, u }
    }

    pub fn identity() -> Self {
        BsElement {
            k: 0,
            u: Dyadic::zero(),
        }
    }

    pub fn t() -> Self {
        BsElement {
            k: 1,
            u: Dyadic::zero(),
        }
    }

    pub fn a() -> Self {
        BsElement {
            k: 0,
            u: Dyadic::one(),
        }
    }

    pub fn t_pow(k: i64) -> Self {
        BsElement {
            k,
            u: Dyadic::zero(),
        }
    }

    pub fn a_pow(u: Dyadic) -> Self {
        BsElement { k: 0, u }
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0 && self.u.is_zero()
    }

    pub fn mul(&self, rhs: &BsElement) -> BsElement {
        BsElement {
            k: self.k + rhs.k,
            u: &self.u.mul_pow2(-rhs.k) + &rhs.u,
        }
    }

    pub fn inv(&self) -> BsElement {
        BsElement {
            k: -self.k,
            u: -self.u.mul_pow2(self.k),
        }
    }

    pub fn pow(&self, n: i64) -> BsElement {
        let base = if n < 0 { self.inv() } else { self.clone() };
        (0..n.unsigned_abs()).fold(BsElement::identity(), |acc, _| acc.mul(&base))
    }

    /// The exponent `v` in the other normal form `a^v t^k`; `v = u 2^k`.
    ///
    /// In this form `BS(1,2)` is the semidirect product `Z ⋉ Z[1/2]` with
    /// `(k1, v1)(k2, v2) = (k1 + k2, v1 + 2^k1 v2)`.
    pub fn left_a_exponent(&self) -> Dyadic {
        self.u.mul_pow2(self.k)
    }
}

impl fmt::Debug for BsElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{} a^{}", self.k, self.u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relation() {
        let t = BsElement::t();
        let a = BsElement::a();
        let lhs = t.mul(&a).mul(&t.inv());
        assert_eq!(lhs, a.pow(2));
    }

    #[test]
    fn inverse_and_identity() {
        let g = BsElement::new(3, Dyadic::new(5, 2));
        assert!(g.mul(&g.inv()).is_identity());
        assert!(g.inv().mul(&g).is_identity());
        assert_eq!(g.mul(&BsElement::identity()), g);
    }

    #[test]
    fn conjugating_a_by_t_inverse_halves() {
        let t = BsElement::t();
        let c = t.inv().mul(&BsElement::a()).mul(&t);
        assert_eq!(c, BsElement::a_pow(Dyadic::new(1, 1)));
    }

    #[test]
    fn left_normal_form_law() {
        let g = BsElement::new(2, Dyadic::new(3, 1));
        let h = BsElement::new(-1, Dyadic::new(-5, 3));
        let gh = g.mul(&h);
        let expected = &g.left_a_exponent() + &h.left_a_exponent().mul_pow2(g.k);
        assert_eq!(gh.left_a_exponent(), expected);
    }
}

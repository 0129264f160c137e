use std::fmt;

use serde::{Deserialize, Serialize};

use super::action::act;
use super::{BsElement, OmegaElement};
use crate::ring::{Dyadic, Radical};

/// Element `(w, x)` of `Γ = BS(1,2) ⋉ Ω` with
/// `(w1, x1)(w2, x2) = (w1 w2, x1 + ρ(w1) x2)`.
///
/// As a product, `(w, x) = x · w`: the `Ω` part written to the left.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GammaElement {
    pub w: BsElement,
    pub x: OmegaElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    T,
    A,
    B,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::T, Generator::A, Generator::B];

    pub fn element(self) -> GammaElement {
        match self {
            Generator::T => GammaElement::t(),
            Generator::A => GammaElement::a(),
            Generator::B => GammaElement::b(),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Generator::T => 't',
            Generator::A => 'a',
            Generator::B => 'b',
        }
    }
}

impl GammaElement {
    pub fn new(w: BsElement, x: OmegaElement) -> Self {
        GammaElement { w, x }
    }

    pub fn identity() -> Self {
        GammaElement {
            w: BsElement::identity(),
            x: OmegaElement::zero(),
        }
    }

    pub fn t() -> Self {
        GammaElement::from_bs(BsElement::t())
    }

    pub fn a() -> Self {
        GammaElement::from_bs(BsElement::a())
    }

    /// `b = δ_0 · 1`.
    pub fn b() -> Self {
        GammaElement::from_omega(OmegaElement::delta(0, Radical::one()))
    }

    pub fn from_bs(w: BsElement) -> Self {
        GammaElement {
            w,
            x: OmegaElement::zero(),
        }
    }

    pub fn from_omega(x: OmegaElement) -> Self {
        GammaElement {
            w: BsElement::identity(),
            x,
        }
    }

    /// `δ_index · value` as an element of `Ω ⊂ Γ`.
    pub fn omega_delta(index: i64, value: Radical) -> Self {
        GammaElement::from_omega(OmegaElement::delta(index, value))
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_identity() && self.x.is_zero()
    }

    /// Membership in `C = <t>`.
    pub fn in_cyclic_t(&self) -> bool {
        self.x.is_zero() && self.w.u.is_zero()
    }

    /// Membership in `G = <t, a>`.
    pub fn in_bs(&self) -> bool {
        self.x.is_zero()
    }

    pub fn in_omega(&self) -> bool {
        self.w.is_identity()
    }

    pub fn mul(&self, rhs: &GammaElement) -> GammaElement {
        GammaElement {
            w: self.w.mul(&rhs.w),
            x: self.x.add(&act(&self.w, &rhs.x)),
        }
    }

    pub fn inv(&self) -> GammaElement {
        let wi = self.w.inv();
        let x = act(&wi, &self.x).neg();
        GammaElement { w: wi, x }
    }

    pub fn pow(&self, n: i64) -> GammaElement {
        let base = if n < 0 { self.inv() } else { self.clone() };
        (0..n.unsigned_abs()).fold(GammaElement::identity(), |acc, _| acc.mul(&base))
    }

    /// `g h g^-1`.
    pub fn conj(&self, h: &GammaElement) -> GammaElement {
        self.mul(h).mul(&self.inv())
    }

    /// `[g, h] = g h g^-1 h^-1`.
    pub fn comm(&self, h: &GammaElement) -> GammaElement {
        self.mul(h).mul(&self.inv()).mul(&h.inv())
    }
}

/// Which of the two conjugation directions to use for a conjugate family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjugationSign {
    /// `s^n b s^-n`
    Forward,
    /// `s^-n b s^n`
    Backward,
}

impl ConjugationSign {
    pub const BOTH: [ConjugationSign; 2] = [ConjugationSign::Forward, ConjugationSign::Backward];
}

/// Conjugates of `b` by powers of `t` or `a`.
///
/// `a^-i b a^i = δ_0 · 2^-i`, and `t^n b t^-n = δ_{-n} · 1`.
pub fn conjugate_family(base: Generator, n: i64, sign: ConjugationSign) -> GammaElement {
    assert!(
        base != Generator::B,
        "conjugate families are indexed by t or a"
    );
    let n = match sign {
        ConjugationSign::Forward => n,
        ConjugationSign::Backward => -n,
    };
    let s = base.element().pow(n);
    s.conj(&GammaElement::b())
}

impl Serialize for GammaElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            k: i64,
            u: &'a Dyadic,
            omega: &'a OmegaElement,
        }
        Repr {
            k: self.w.k,
            u: &self.w.u,
            omega: &self.x,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GammaElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            k: i64,
            u: Dyadic,
            omega: OmegaElement,
        }
        let r = Repr::deserialize(d)?;
        Ok(GammaElement {
            w: BsElement::new(r.k, r.u),
            x: r.omega,
        })
    }
}

impl fmt::Debug for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.w, self.x)
    }
}

/// Renders the normal form as `(k, u, {index: value, ...})`.
impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k = {}, u = {}, omega = {{", self.w.k, self.w.u)?;
        for (i, (n, v)) in self.x.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}: {v}")?;
        }
        f.write_str("})")
    }
}

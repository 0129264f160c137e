//! The orders `≺1` on `Z`, `≺2` on `Z[1/2]`, `≺3` on `Ω`, `≺4` on `BS(1,2)`,
//! and `<` on `Γ`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::group::{BsElement, GammaElement, OmegaElement};
use crate::ring::{Dyadic, Radical, Sign};

/// Lexicographic order on pairs with the second coordinate dominant: `(g1, f1) < (g2, f2)`
/// iff `f1 ≺ f2`, or `f1 = f2` and `g1 ≺ g2`.
pub fn extension_order<A: ?Sized, B: ?Sized>(
    cmp_first: impl Fn(&A, &A) -> Ordering,
    cmp_second: impl Fn(&B, &B) -> Ordering,
) -> impl Fn((&A, &B), (&A, &B)) -> Ordering {
    move |(g1, f1), (g2, f2)| cmp_second(f1, f2).then_with(|| cmp_first(g1, g2))
}

/// `≺1`: the natural order on `t`-exponents.
pub fn cmp_int(a: &i64, b: &i64) -> Ordering {
    a.cmp(b)
}

/// `≺2`: the natural order on dyadic `a`-exponents.
pub fn cmp_dyadic(a: &Dyadic, b: &Dyadic) -> Ordering {
    a.cmp(b)
}

/// `≺3`: compare coordinate sums, then the coordinate at the smallest index
/// where the vectors differ.
///
/// On sum-equal distinct vectors the differences `x_k - y_k` sum to zero, so
/// both `{k | x_k < y_k}` and `{k | y_k < x_k}` are nonempty and the smaller
/// of their minima is the first differing index.
pub fn cmp_omega(x: &OmegaElement, y: &OmegaElement) -> Ordering {
    cmp_omega_staged(x, y).0
}

/// Which comparison decided a verdict of `<`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    OmegaSum,
    OmegaTiebreak,
    /// `a`-exponent of the `a^v t^k` normal form.
    U,
    /// `t`-exponent.
    K,
    Equal,
}

impl Stage {
    pub fn label(self) -> &'static str {
        match self {
            Stage::OmegaSum => "Ω-sum",
            Stage::OmegaTiebreak => "Ω-tiebreak",
            Stage::U => "u",
            Stage::K => "k",
            Stage::Equal => "equal",
        }
    }
}

fn cmp_omega_staged(x: &OmegaElement, y: &OmegaElement) -> (Ordering, Stage) {
    let d = x.sub(y);
    let Some((_, first)) = d.iter().next() else {
        return (Ordering::Equal, Stage::Equal);
    };
    match d.coordinate_sum().sign() {
        Sign::Zero => (first.sign().as_ordering(), Stage::OmegaTiebreak),
        s => (s.as_ordering(), Stage::OmegaSum),
    }
}

fn cmp_bs_staged(g: &BsElement, h: &BsElement) -> (Ordering, Stage) {
    match g.left_a_exponent().cmp(&h.left_a_exponent()) {
        Ordering::Equal => match g.k.cmp(&h.k) {
            Ordering::Equal => (Ordering::Equal, Stage::Equal),
            o => (o, Stage::K),
        },
        o => (o, Stage::U),
    }
}

/// `≺4`: the extension of `≺1` (on `t`-exponents) and `≺2` (on `a`-exponents).
///
/// The pair is read in the `a^v t^k` normal form, where `BS(1,2)` is the
/// semidirect product `Z ⋉ Z[1/2]` with `t` acting by doubling; `v = u 2^k`.
pub fn cmp_bs(g: &BsElement, h: &BsElement) -> Ordering {
    let ext = extension_order(cmp_int, cmp_dyadic);
    ext((&g.k, &g.left_a_exponent()), (&h.k, &h.left_a_exponent()))
}

/// `<`: the extension of `≺4` (on the `BS(1,2)` part) and `≺3` (on the `Ω` part).
pub fn cmp_gamma(g: &GammaElement, h: &GammaElement) -> Ordering {
    let ext = extension_order(cmp_bs, cmp_omega);
    ext((&g.w, &g.x), (&h.w, &h.x))
}

/// `cmp_gamma` together with the stage that decided it.
pub fn cmp_gamma_staged(g: &GammaElement, h: &GammaElement) -> (Ordering, Stage) {
    match cmp_omega_staged(&g.x, &h.x) {
        (Ordering::Equal, _) => cmp_bs_staged(&g.w, &h.w),
        r => r,
    }
}

/// An element with its `Ω` coordinate sum precomputed, for repeated comparisons.
#[derive(Clone, Debug)]
pub struct Keyed<'a> {
    pub element: &'a GammaElement,
    sum: Radical,
    sum_sign: Sign,
}

impl<'a> Keyed<'a> {
    pub fn new(element: &'a GammaElement) -> Self {
        let sum = element.x.coordinate_sum();
        let sum_sign = sum.sign();
        Keyed {
            element,
            sum,
            sum_sign,
        }
    }

    pub fn sum(&self) -> &Radical {
        &self.sum
    }

    /// Same verdict as [`cmp_gamma`].
    pub fn order(&self, other: &Keyed<'_>) -> Ordering {
        let by_sum = if self.sum_sign != other.sum_sign {
            self.sum_sign
                .as_ordering()
                .cmp(&other.sum_sign.as_ordering())
        } else if self.sum_sign == Sign::Zero {
            Ordering::Equal
        } else {
            self.sum.cmp_value(&other.sum)
        };
        match by_sum {
            Ordering::Equal => cmp_gamma(self.element, other.element),
            o => o,
        }
    }
}

/// Sorts elements by `<`.
pub fn sort_by_order(elements: &mut Vec<GammaElement>) {
    let mut keyed: Vec<(Keyed<'_>, usize)> = elements
        .iter()
        .enumerate()
        .map(|(i, g)| (Keyed::new(g), i))
        .collect();
    keyed.sort_by(|a, b| a.0.order(&b.0));
    let order: Vec<usize> = keyed.into_iter().map(|(_, i)| i).collect();
    let mut slots: Vec<Option<GammaElement>> = elements.drain(..).map(Some).collect();
    elements.extend(
        order
            .into_iter()
            .map(|i| slots[i].take().expect("each index once")),
    );
}

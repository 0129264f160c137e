//! Derived-series facts: `b` lies in the second derived subgroup, and
//! the third derived subgroup is trivial.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::GammaElement;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct CertificateStep {
    pub claim: String,
    pub lhs: GammaElement,
    pub rhs: GammaElement,
    pub holds: bool,
}

/// The chain `a = [t, a]`, `b = [a, b]` with `a, b` in `Γ^(1)`, hence
/// `b = [a, b]` in `Γ^(2)`, together with `b ≠ 1`.
#[derive(Clone, Debug, Serialize)]
pub struct DerivedCertificate {
    pub steps: Vec<CertificateStep>,
    pub b_nontrivial: bool,
}

pub fn derived_certificate() -> Result<DerivedCertificate> {
    let (t, a, b) = (GammaElement::t(), GammaElement::a(), GammaElement::b());
    let eq = |claim: &str, lhs: GammaElement, rhs: GammaElement| {
        let holds = lhs == rhs;
        CertificateStep {
            claim: claim.to_string(),
            lhs,
            rhs,
            holds,
        }
    };
    let steps = vec![
        eq("[t,a] = a, so a ∈ Γ^(1)", t.comm(&a), a.clone()),
        eq("[a,b] = b, so b ∈ Γ^(1)", a.comm(&b), b.clone()),
        eq(
            "b = [a,b] with a, b ∈ Γ^(1), so b ∈ Γ^(2)",
            a.comm(&b),
            b.clone(),
        ),
    ];
    if let Some(bad) = steps.iter().find(|s| !s.holds) {
        return Err(Error::Certificate(format!(
            "{}: {:?} ≠ {:?}",
            bad.claim, bad.lhs, bad.rhs
        )));
    }
    if b.is_identity() {
        return Err(Error::Certificate("b = 1".into()));
    }
    Ok(DerivedCertificate {
        steps,
        b_nontrivial: true,
    })
}

/// Nested commutator of depth `level` over `2^level` inputs:
/// level 1 is `[g0, g1]`, level 2 is `[[g0, g1], [g2, g3]]`, and so on.
pub fn nested_commutator(level: u32, inputs: &[GammaElement]) -> GammaElement {
    assert_eq!(
        inputs.len(),
        1usize << level,
        "level {level} needs {} inputs",
        1usize << level
    );
    if level == 0 {
        return inputs[0].clone();
    }
    let (l, r) = inputs.split_at(inputs.len() / 2);
    nested_commutator(level - 1, l).comm(&nested_commutator(level - 1, r))
}

#[derive(Clone, Debug, Serialize)]
pub struct SolvabilityReport {
    pub level: u32,
    pub count: usize,
    pub seed: u64,
    pub identity_count: usize,
    /// Inputs of the first sample whose commutator was not the identity.
    pub first_nontrivial: Option<Vec<GammaElement>>,
}

impl SolvabilityReport {
    pub fn all_identity(&self) -> bool {
        self.identity_count == self.count
    }
}

/// Samples `count` nested commutators of depth `level` with inputs drawn
/// uniformly from `pool` by a ChaCha8 generator seeded with `seed`.
pub fn sample_solvability(
    level: u32,
    count: usize,
    seed: u64,
    pool: &[GammaElement],
) -> SolvabilityReport {
    assert!((1..=3).contains(&level), "level must be 1, 2 or 3");
    assert!(!pool.is_empty());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = 1usize << level;
    let mut identity_count = 0;
    let mut first_nontrivial = None;
    for _ in 0..count {
        let inputs: Vec<GammaElement> = (0..width)
            .map(|_| pool[rng.random_range(0..pool.len())].clone())
            .collect();
        if nested_commutator(level, &inputs).is_identity() {
            identity_count += 1;
        } else if first_nontrivial.is_none() {
            first_nontrivial = Some(inputs);
        }
    }
    SolvabilityReport {
        level,
        count,
        seed,
        identity_count,
        first_nontrivial,
    }
}

//! Normal forms and group operations for `BS(1,2)`, `Ω` and `Γ = BS(1,2) ⋉ Ω`.

pub mod action;
mod ball;
mod bs;
mod derived;
mod gamma;
mod omega;
mod word;

pub use action::{act, act_with, identify_a_power, ShiftConvention};
pub use ball::{
    ball, ball_over, bs_ball, element_budget, symmetric, BUDGET_ENV, DEFAULT_ELEMENT_BUDGET,
};
pub use bs::BsElement;
pub use derived::{
    derived_certificate, nested_commutator, sample_solvability, CertificateStep,
    DerivedCertificate, SolvabilityReport,
};
pub use gamma::{conjugate_family, ConjugationSign, GammaElement, Generator};
pub use omega::OmegaElement;
pub use word::{parse_word, to_word, tokenize, Syllable};

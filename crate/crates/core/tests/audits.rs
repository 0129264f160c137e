use std::cmp::Ordering;

use gamma_audit::group::{
    ball, conjugate_family, parse_word, BsElement, ConjugationSign, GammaElement, Generator,
    ShiftConvention,
};
use gamma_audit::orders::audit::{
    audit_action_preservation, audit_cofinality, preservation_grid, preservation_violations,
};
use gamma_audit::orders::{cmp_gamma, cmp_gamma_staged, Stage};
use gamma_audit::realization::{build_embedding, check_c2, realize_generator};
use gamma_audit::report::Status;
use gamma_audit::ring::{Dyadic, Radical};

fn delta(n: i64, v: Dyadic) -> GammaElement {
    GammaElement::omega_delta(n, Radical::from_dyadic(v))
}

#[test]
fn left_invariance_fails_at_a() {
    let (f, g, h) = (
        GammaElement::a(),
        delta(1, Dyadic::new(7, 3)),
        delta(0, Dyadic::one()),
    );
    assert_eq!(cmp_gamma(&g, &h), Ordering::Less);
    assert_eq!(cmp_gamma(&f.mul(&g), &f.mul(&h)), Ordering::Greater);
}

#[test]
fn a_conjugate_of_b_sits_below_every_t_conjugate() {
    let h = conjugate_family(Generator::A, 1, ConjugationSign::Backward);
    assert_eq!(h, parse_word("A b a").unwrap());
    for n in -16..=16 {
        for sign in ConjugationSign::BOTH {
            let c = conjugate_family(Generator::T, n, sign);
            assert_eq!(cmp_gamma_staged(&h, &c), (Ordering::Less, Stage::OmegaSum));
        }
    }
}

#[test]
fn preservation_holds_for_t_under_both_conventions() {
    let grid = preservation_grid();
    for conv in [ShiftConvention::RelationFixed, ShiftConvention::Literal] {
        let c = audit_action_preservation("t", Status::Pass, &BsElement::t(), &grid, conv);
        assert_eq!(c.status, Status::Pass);
        assert!(!preservation_violations(&BsElement::a(), &grid, conv).is_empty());
    }
}

#[test]
fn cofinality_bound_grows_with_radius() {
    // a t^-3 b has Ω part 2^8 at index 3, so n = 64 does not reach it
    let b5 = ball(5).unwrap();
    let short = audit_cofinality(&b5, 64);
    let cof = short
        .iter()
        .find(|c| c.name.starts_with("cofinality"))
        .unwrap();
    assert_eq!(cof.status, Status::Fail);
    assert!(cof.detail.as_ref().unwrap().contains("Ω-sum 256"));
    let full = audit_cofinality(&b5, 1 << 20);
    assert!(full.iter().all(|c| c.status == Status::Pass));
    let g = parse_word("a T T T b").unwrap();
    assert_eq!(g.x.get(3), Some(&Radical::from(256)));
}

#[test]
fn realized_t_is_monotone_on_ball_three() {
    let rb = build_embedding(3).unwrap();
    assert!(realize_generator(Generator::T, &rb).monotone);
}

#[test]
fn c2_basepoint_and_members() {
    let rb = build_embedding(4).unwrap();
    let h = parse_word("A b a").unwrap();
    let ph = rb.coord(&h).unwrap().clone();
    assert!(rb.coord(&GammaElement::identity()).unwrap() < &ph);
    assert!(rb.coord(&GammaElement::a()).unwrap() < &ph);
    assert_eq!(check_c2(&rb, 2).status, Status::Pass);
    assert_eq!(
        check_c2(&build_embedding(2).unwrap(), 2).status,
        Status::Fail
    );
}

#[test]
fn b_moves_the_identity_up() {
    let b = GammaElement::b();
    assert_eq!(
        cmp_gamma(&b.mul(&GammaElement::identity()), &GammaElement::identity()),
        Ordering::Greater
    );
    let rb = build_embedding(2).unwrap();
    assert!(rb.coord(&b).unwrap() > rb.coord(&GammaElement::identity()).unwrap());
}

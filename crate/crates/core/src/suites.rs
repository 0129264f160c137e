//! The audit suites run by `gamma-audit verify`, with their expected statuses.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::group::{
    act_with, ball, bs_ball, conjugate_family, derived_certificate, identify_a_power,
    sample_solvability, BsElement, ConjugationSign, GammaElement, Generator, OmegaElement,
    ShiftConvention,
};
use crate::orders::audit::{
    audit_action_preservation, audit_conditions, audit_left_invariance, audit_order_axioms,
    induced_left_invariance_witness, preservation_grid, preservation_violations, Ordered,
};
use crate::orders::{Value, Witness};
use crate::realization::{build_embedding, freeness_report, realize_generator};
use crate::report::{AuditReport, CheckResult, Status};
use crate::ring::{Dyadic, Radical};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Orders,
    Lemma,
    Conditions,
    Derived,
    Freeness,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Relations,
        Suite::Orders,
        Suite::Lemma,
        Suite::Conditions,
        Suite::Derived,
        Suite::Freeness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Orders => "orders",
            Suite::Lemma => "lemma",
            Suite::Conditions => "conditions",
            Suite::Derived => "derived",
            Suite::Freeness => "freeness",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    /// Radius of the ball over `t, a, b` used by orders, conditions and freeness.
    pub radius: usize,
    /// Radius of the ball over `t, a` used by condition (viii).
    pub g_radius: usize,
    pub n_range: i64,
    /// Search bound for cofinality of `b`.
    pub n_max: u64,
    pub shift: ShiftConvention,
    pub precision_bits: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 1,
            samples: 10_000,
            radius: 5,
            g_radius: 8,
            n_range: 16,
            n_max: 1 << 20,
            shift: ShiftConvention::RelationFixed,
            precision_bits: crate::ring::DEFAULT_PRECISION_BITS,
        }
    }
}

fn eq_check(name: &str, lhs: GammaElement, rhs: GammaElement) -> CheckResult {
    let witness = (lhs != rhs).then(|| {
        Witness::new(name)
            .value("lhs", Value::Gamma(lhs.clone()))
            .value("rhs", Value::Gamma(rhs.clone()))
            .equal("lhs", "rhs")
    });
    CheckResult::from_outcome(name, Status::Pass, format!("{lhs}"), witness)
}

/// `t a t^-1 = a^2` read through the action: `ρ(t) ρ(a) ρ(t)^-1` against `ρ(a^2)`.
fn action_relation(conv: ShiftConvention) -> CheckResult {
    let name = "ρ(t) ρ(a) ρ(t)^-1 = ρ(a^2)";
    let (t, a) = (BsElement::t(), BsElement::a());
    let conj =
        |x: &OmegaElement| act_with(conv, &t, &act_with(conv, &a, &act_with(conv, &t.inv(), x)));
    let s = identify_a_power(conj);
    let expected = match conv {
        ShiftConvention::RelationFixed => Status::Pass,
        ShiftConvention::Literal => Status::Counterexample,
    };
    let detail = match &s {
        Some(s) => format!("{} shift: t a t^-1 acts as a^{s}", conv.label()),
        None => format!("{} shift: t a t^-1 acts as no power of a", conv.label()),
    };
    let probe = OmegaElement::delta(1, Radical::one());
    let mut w = Witness::new(name)
        .value("t", Value::Bs(t.clone()))
        .value("a", Value::Bs(a.clone()))
        .value("t_inv", Value::Bs(t.inv()))
        .value("a2", Value::Bs(a.pow(2)))
        .value("x", Value::Omega(probe))
        .act("x1", "t_inv", "x", conv)
        .act("x2", "a", "x1", conv)
        .act("x3", "t", "x2", conv)
        .act("y", "a2", "x", conv)
        .equal("x3", "y");
    if let Some(s) = &s {
        w = w
            .value("a_s", Value::Bs(BsElement::a_pow(s.clone())))
            .act("z", "a_s", "x", conv)
            .equal("x3", "z");
    }
    let holds = s.as_ref() == Some(&Dyadic::from(2));
    CheckResult::from_outcome(name, expected, detail, (!holds).then_some(w))
}

pub fn relations(config: &RunConfig) -> AuditReport {
    let mut r = AuditReport::new("relations");
    let (t, a, b) = (GammaElement::t(), GammaElement::a(), GammaElement::b());
    r.push(eq_check("t a t^-1 = a^2", t.conj(&a), a.pow(2)));
    r.push(eq_check("a b a^-1 = b^2", a.conj(&b), b.pow(2)));
    r.push(action_relation(config.shift));
    let mut bad = None;
    for i in -4..=4 {
        for j in -4..=4 {
            let x = conjugate_family(Generator::T, i, ConjugationSign::Forward);
            let y = conjugate_family(Generator::A, j, ConjugationSign::Forward);
            if !x.comm(&y).is_identity() && bad.is_none() {
                bad = Some(
                    Witness::new("commuting conjugates")
                        .value("x", Value::Gamma(x.clone()))
                        .value("y", Value::Gamma(y.clone()))
                        .value("one", Value::Gamma(GammaElement::identity()))
                        .op("xy", "x", "y")
                        .op("yx", "y", "x")
                        .equal("xy", "yx"),
                );
            }
        }
    }
    r.push(CheckResult::from_outcome(
        "[t^i b t^-i, a^j b a^-j] = 1 for |i|, |j| ≤ 4",
        Status::Pass,
        "81 commutators",
        bad,
    ));
    r
}

fn pick<'a>(pool: &'a [GammaElement], rng: &mut ChaCha8Rng) -> &'a GammaElement {
    &pool[rng.random_range(0..pool.len())]
}

fn axioms_and_invariance<T: Ordered>(
    r: &mut AuditReport,
    config: &RunConfig,
    invariance: (&str, Status),
    project: impl Fn(&GammaElement) -> T + Copy,
    pool: &[GammaElement],
) {
    let sampler = |rng: &mut ChaCha8Rng| project(pick(pool, rng));
    r.extend(audit_order_axioms(sampler, config.samples, config.seed));
    r.push(audit_left_invariance(
        invariance.0,
        invariance.1,
        sampler,
        config.samples,
        config.seed,
    ));
}

pub fn orders(config: &RunConfig) -> Result<AuditReport> {
    let pool = ball(config.radius)?;
    let mut r = AuditReport::new("orders");
    axioms_and_invariance(
        &mut r,
        config,
        ("≺1 translation invariance", Status::Pass),
        |g| g.w.k,
        &pool,
    );
    axioms_and_invariance(
        &mut r,
        config,
        ("≺2 translation invariance", Status::Pass),
        |g| g.w.left_a_exponent(),
        &pool,
    );
    axioms_and_invariance(
        &mut r,
        config,
        ("≺3 translation invariance", Status::Pass),
        |g| g.x.clone(),
        &pool,
    );
    axioms_and_invariance(
        &mut r,
        config,
        ("≺4 left invariance", Status::Pass),
        |g| g.w.clone(),
        &pool,
    );
    axioms_and_invariance(
        &mut r,
        config,
        ("< left invariance", Status::Counterexample),
        |g| g.clone(),
        &pool,
    );
    Ok(r)
}

pub fn lemma(config: &RunConfig) -> AuditReport {
    let mut r = AuditReport::new("lemma");
    let grid = preservation_grid();
    let conv = config.shift;
    for (label, s, expected) in [
        ("t", BsElement::t(), Status::Pass),
        ("t^-1", BsElement::t().inv(), Status::Pass),
        ("a", BsElement::a(), Status::Counterexample),
    ] {
        r.push(audit_action_preservation(
            &format!("ρ({label}) preserves ≺3"),
            expected,
            &s,
            &grid,
            conv,
        ));
    }
    let bad = preservation_violations(&BsElement::a(), &grid, conv);
    let induced = bad
        .first()
        .map(|(x, y)| induced_left_invariance_witness(&BsElement::a(), x, y));
    r.push(CheckResult::from_outcome(
        "< left invariance at f = a (induced)",
        Status::Counterexample,
        "f = (a, 0), g = (1, x), h = (1, y) from the preservation witness",
        induced,
    ));
    r
}

pub fn conditions(config: &RunConfig) -> Result<AuditReport> {
    let mut r = AuditReport::new("conditions");
    let b6 = ball(config.radius)?;
    let g8 = bs_ball(config.g_radius)?;
    r.extend(audit_conditions(&b6, &g8, config.n_range));
    Ok(r)
}

pub fn derived(config: &RunConfig) -> Result<AuditReport> {
    let mut r = AuditReport::new("derived");
    match derived_certificate() {
        Ok(cert) => {
            let claims: Vec<&str> = cert.steps.iter().map(|s| s.claim.as_str()).collect();
            r.push(CheckResult::pass(
                "b ∈ Γ^(2), b ≠ 1",
                Status::Pass,
                claims.join("; "),
            ));
        }
        Err(e) => r.push(CheckResult::violated(
            "b ∈ Γ^(2), b ≠ 1",
            Status::Pass,
            e.to_string(),
            None,
        )),
    }
    let pool = ball(config.radius.min(4))?;
    let count = (config.samples / 10).max(1);
    let rep = sample_solvability(3, count, config.seed, &pool);
    let name = "level-3 nested commutators are trivial";
    let detail = format!(
        "{}/{} identity (seed {}, inputs from a ball of {} elements)",
        rep.identity_count,
        rep.count,
        rep.seed,
        pool.len()
    );
    let witness = rep.first_nontrivial.as_ref().map(|inputs| {
        let mut w = Witness::new(name);
        let names: Vec<String> = (0..inputs.len()).map(|i| format!("g{i}")).collect();
        for (n, g) in names.iter().zip(inputs) {
            w = w.value(n, Value::Gamma(g.clone()));
        }
        w.value("one", Value::Gamma(GammaElement::identity()))
    });
    r.push(CheckResult::from_outcome(
        name,
        Status::Pass,
        detail,
        witness,
    ));
    Ok(r)
}

pub fn freeness(config: &RunConfig) -> Result<AuditReport> {
    let mut r = AuditReport::new("freeness");
    let rb = build_embedding(config.radius)?;
    let b_map = realize_generator(Generator::B, &rb);
    r.extend(freeness_report(&rb, &b_map, config.n_max));
    Ok(r)
}

pub fn run_suite(suite: Suite, config: &RunConfig) -> Result<Vec<AuditReport>> {
    Ok(match suite {
        Suite::Relations => vec![relations(config)],
        Suite::Orders => vec![orders(config)?],
        Suite::Lemma => vec![lemma(config)],
        Suite::Conditions => vec![conditions(config)?],
        Suite::Derived => vec![derived(config)?],
        Suite::Freeness => vec![freeness(config)?],
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::EACH {
                out.extend(run_suite(s, config)?);
            }
            out
        }
    })
}

/// Round-trips every witness through JSON and replays it.
pub fn replay_report(reports: &[AuditReport]) -> AuditReport {
    let mut r = AuditReport::new("replay");
    for rep in reports {
        for (name, w) in rep.witnesses() {
            let check = format!("{}/{}", rep.suite, name);
            let back: std::result::Result<Witness, String> = serde_json::to_string(w)
                .and_then(|s| serde_json::from_str(&s))
                .map_err(|e| e.to_string());
            match back.and_then(|b| {
                if &b == w {
                    b.replay()
                } else {
                    Err("JSON round trip changed the witness".into())
                }
            }) {
                Ok(()) => r.push(CheckResult::pass(check, Status::Pass, "replays")),
                Err(e) => r.push(CheckResult::violated(check, Status::Pass, e, None)),
            }
        }
    }
    r
}

/// Runs a suite and appends the replay report.
pub fn verify(suite: Suite, config: &RunConfig) -> Result<Vec<AuditReport>> {
    crate::ring::set_initial_precision(config.precision_bits);
    let mut reports = run_suite(suite, config)?;
    let replay = replay_report(&reports);
    reports.push(replay);
    Ok(reports)
}

//! Sampled and exhaustive audits of the order-theoretic claims.

use std::cmp::Ordering;

use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::cmp::{cmp_bs, cmp_gamma, cmp_omega, Keyed};
use super::witness::{Value, Witness};
use crate::group::{
    act_with, conjugate_family, BsElement, ConjugationSign, GammaElement, Generator, OmegaElement,
    ShiftConvention,
};
use crate::report::{CheckResult, Status};
use crate::ring::{Dyadic, Radical};

/// A left-ordered group: the order, the group law, and a witness encoding.
pub trait Ordered: Clone + PartialEq {
    const SYMBOL: &'static str;
    fn order_cmp(&self, other: &Self) -> Ordering;
    fn group_op(&self, other: &Self) -> Self;
    fn to_value(&self) -> Value;
}

impl Ordered for i64 {
    const SYMBOL: &'static str = "≺1";
    fn order_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
    fn group_op(&self, other: &Self) -> Self {
        self + other
    }
    fn to_value(&self) -> Value {
        Value::Int(*self)
    }
}

impl Ordered for Dyadic {
    const SYMBOL: &'static str = "≺2";
    fn order_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
    fn group_op(&self, other: &Self) -> Self {
        self + other
    }
    fn to_value(&self) -> Value {
        Value::Dyadic(self.clone())
    }
}

impl Ordered for OmegaElement {
    const SYMBOL: &'static str = "≺3";
    fn order_cmp(&self, other: &Self) -> Ordering {
        cmp_omega(self, other)
    }
    fn group_op(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn to_value(&self) -> Value {
        Value::Omega(self.clone())
    }
}

impl Ordered for BsElement {
    const SYMBOL: &'static str = "≺4";
    fn order_cmp(&self, other: &Self) -> Ordering {
        cmp_bs(self, other)
    }
    fn group_op(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn to_value(&self) -> Value {
        Value::Bs(self.clone())
    }
}

impl Ordered for GammaElement {
    const SYMBOL: &'static str = "<";
    fn order_cmp(&self, other: &Self) -> Ordering {
        cmp_gamma(self, other)
    }
    fn group_op(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn to_value(&self) -> Value {
        Value::Gamma(self.clone())
    }
}

fn pair_witness<T: Ordered>(property: &str, x: &T, y: &T) -> Witness {
    Witness::new(property)
        .value("x", x.to_value())
        .value("y", y.to_value())
        .compare("x", "y")
        .compare("y", "x")
        .equal("x", "y")
}

/// Totality, antisymmetry and transitivity of `T`'s order on `count`
/// sampled triples. The sampler receives a ChaCha8 generator seeded with `seed`.
pub fn audit_order_axioms<T: Ordered>(
    mut sampler: impl FnMut(&mut ChaCha8Rng) -> T,
    count: usize,
    seed: u64,
) -> Vec<CheckResult> {
    let sym = T::SYMBOL;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut totality: Option<Witness> = None;
    let mut antisymmetry: Option<Witness> = None;
    let mut transitivity: Option<Witness> = None;
    let (mut tot_bad, mut anti_bad, mut trans_bad) = (0usize, 0usize, 0usize);
    for _ in 0..count {
        let triple = [sampler(&mut rng), sampler(&mut rng), sampler(&mut rng)];
        let c = |i: usize, j: usize| triple[i].order_cmp(&triple[j]);
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            let (xy, yx) = (c(i, j), c(j, i));
            if xy != yx.reverse() || c(i, i) != Ordering::Equal {
                tot_bad += 1;
                totality.get_or_insert_with(|| {
                    pair_witness(&format!("totality of {sym}"), &triple[i], &triple[j])
                });
            }
            if (xy == Ordering::Equal) != (triple[i] == triple[j]) {
                anti_bad += 1;
                antisymmetry.get_or_insert_with(|| {
                    pair_witness(&format!("antisymmetry of {sym}"), &triple[i], &triple[j])
                });
            }
        }
        for (p, q, r) in [
            (0, 1, 2),
            (0, 2, 1),
            (1, 0, 2),
            (1, 2, 0),
            (2, 0, 1),
            (2, 1, 0),
        ] {
            if c(p, q).is_le() && c(q, r).is_le() {
                let expect = if c(p, q).is_lt() || c(q, r).is_lt() {
                    Ordering::Less
                } else {
                    Ordering::Equal
                };
                if c(p, r) != expect {
                    trans_bad += 1;
                    transitivity.get_or_insert_with(|| {
                        Witness::new(format!("transitivity of {sym}"))
                            .value("x", triple[p].to_value())
                            .value("y", triple[q].to_value())
                            .value("z", triple[r].to_value())
                            .compare("x", "y")
                            .compare("y", "z")
                            .compare("x", "z")
                    });
                }
            }
        }
    }
    let detail = |bad: usize| format!("{bad} violations on {count} sampled triples (seed {seed})");
    vec![
        CheckResult::from_outcome(
            format!("{sym} totality"),
            Status::Pass,
            detail(tot_bad),
            totality,
        ),
        CheckResult::from_outcome(
            format!("{sym} antisymmetry"),
            Status::Pass,
            detail(anti_bad),
            antisymmetry,
        ),
        CheckResult::from_outcome(
            format!("{sym} transitivity"),
            Status::Pass,
            detail(trans_bad),
            transitivity,
        ),
    ]
}

/// Witness that `g ≺ h` but not `fg ≺ fh`.
pub fn left_invariance_witness<T: Ordered>(property: &str, f: &T, g: &T, h: &T) -> Witness {
    Witness::new(property)
        .value("f", f.to_value())
        .value("g", g.to_value())
        .value("h", h.to_value())
        .op("fg", "f", "g")
        .op("fh", "f", "h")
        .compare("g", "h")
        .compare("fg", "fh")
}

/// `g ≺ h ⇒ fg ≺ fh` on `count` sampled triples `(f, g, h)`. For the
/// abelian groups this is translation invariance.
pub fn audit_left_invariance<T: Ordered>(
    name: &str,
    expected: Status,
    mut sampler: impl FnMut(&mut ChaCha8Rng) -> T,
    count: usize,
    seed: u64,
) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0usize;
    let mut first = None;
    for _ in 0..count {
        let (f, mut g, mut h) = (sampler(&mut rng), sampler(&mut rng), sampler(&mut rng));
        match g.order_cmp(&h) {
            Ordering::Equal => continue,
            Ordering::Greater => std::mem::swap(&mut g, &mut h),
            Ordering::Less => {}
        }
        if f.group_op(&g).order_cmp(&f.group_op(&h)) != Ordering::Less {
            bad += 1;
            first.get_or_insert_with(|| left_invariance_witness(name, &f, &g, &h));
        }
    }
    CheckResult::from_outcome(
        name,
        expected,
        format!("{bad} violations on {count} sampled triples (seed {seed})"),
        first,
    )
}

/// Coefficients of the exhaustive preservation grid.
pub fn grid_coefficients() -> Vec<Dyadic> {
    let base = [
        Dyadic::new(1, 1),
        Dyadic::new(7, 3),
        Dyadic::one(),
        Dyadic::from(2),
    ];
    let mut out = vec![Dyadic::zero()];
    out.extend(base.iter().cloned());
    out.extend(base.iter().map(|d| -d));
    out
}

/// All vectors supported in `{0, 1}` with coordinates from [`grid_coefficients`].
pub fn preservation_grid() -> Vec<OmegaElement> {
    let cs = grid_coefficients();
    let mut out = Vec::with_capacity(cs.len() * cs.len());
    for c0 in &cs {
        for c1 in &cs {
            let x = OmegaElement::delta(0, Radical::from_dyadic(c0.clone()))
                .add(&OmegaElement::delta(1, Radical::from_dyadic(c1.clone())));
            out.push(x);
        }
    }
    out
}

/// Pairs `(x, y)` from the grid with `x ≺3 y` but not `ρ(s)x ≺3 ρ(s)y`.
/// Pairs whose both verdicts are decided by coordinate sums come first, then
/// smallest supports (total, then largest single support), then the widest
/// reversal `Σρ(s)x - Σρ(s)y`, then grid position.
pub fn preservation_violations(
    s: &BsElement,
    grid: &[OmegaElement],
    conv: ShiftConvention,
) -> Vec<(OmegaElement, OmegaElement)> {
    let images: Vec<OmegaElement> = grid.iter().map(|x| act_with(conv, s, x)).collect();
    let mut found = Vec::new();
    for (i, x) in grid.iter().enumerate() {
        for (j, y) in grid.iter().enumerate() {
            if cmp_omega(x, y) == Ordering::Less
                && cmp_omega(&images[i], &images[j]) != Ordering::Less
            {
                let gap = images[i].sub(&images[j]).coordinate_sum();
                let tiebreak = x.sub(y).coordinate_sum().is_zero() || gap.is_zero();
                found.push((x.clone(), y.clone(), tiebreak, gap));
            }
        }
    }
    found.sort_by(|(x1, y1, t1, g1), (x2, y2, t2, g2)| {
        let size = |x: &OmegaElement, y: &OmegaElement| {
            (
                x.support_len() + y.support_len(),
                x.support_len().max(y.support_len()),
            )
        };
        t1.cmp(t2)
            .then_with(|| size(x1, y1).cmp(&size(x2, y2)))
            .then_with(|| g2.cmp_value(g1))
    });
    found.into_iter().map(|(x, y, _, _)| (x, y)).collect()
}

/// Witness that `x ≺3 y` while `ρ(s)x ⊀3 ρ(s)y`.
pub fn preservation_witness(
    s: &BsElement,
    x: &OmegaElement,
    y: &OmegaElement,
    conv: ShiftConvention,
) -> Witness {
    Witness::new("action preserves ≺3")
        .value("s", Value::Bs(s.clone()))
        .value("x", Value::Omega(x.clone()))
        .value("y", Value::Omega(y.clone()))
        .act("sx", "s", "x", conv)
        .act("sy", "s", "y", conv)
        .compare("x", "y")
        .compare("sx", "sy")
}

/// Decides over the grid whether `ρ(s)` preserves `≺3`.
pub fn audit_action_preservation(
    name: &str,
    expected: Status,
    s: &BsElement,
    grid: &[OmegaElement],
    conv: ShiftConvention,
) -> CheckResult {
    let bad = preservation_violations(s, grid, conv);
    let detail = format!(
        "{} violating pairs among {} grid vectors",
        bad.len(),
        grid.len()
    );
    let witness = bad
        .first()
        .map(|(x, y)| preservation_witness(s, x, y, conv));
    CheckResult::from_outcome(name, expected, detail, witness)
}

/// The left-invariance failure of `<` induced by a preservation failure:
/// `f = (s, 0)`, `g = (1, x)`, `h = (1, y)`.
pub fn induced_left_invariance_witness(
    s: &BsElement,
    x: &OmegaElement,
    y: &OmegaElement,
) -> Witness {
    left_invariance_witness(
        "left invariance of <",
        &GammaElement::from_bs(s.clone()),
        &GammaElement::from_omega(x.clone()),
        &GammaElement::from_omega(y.clone()),
    )
}

fn gamma_pair_witness(
    property: &str,
    names: [&str; 2],
    g: &GammaElement,
    h: &GammaElement,
) -> Witness {
    Witness::new(property)
        .value(names[0], Value::Gamma(g.clone()))
        .value(names[1], Value::Gamma(h.clone()))
        .compare(names[0], names[1])
}

type Membership = fn(&GammaElement) -> bool;

/// Conditions on `(Γ, <)`:
/// (ii) `1 < t < a < b`; (vi) positive elements outside `C = <t>` exceed all
/// of `C`; (vii) positive elements outside `G = <t, a>` exceed all of `G`;
/// (viii) `h = a^-1 b a` separates `G` from every `t`-conjugate of `b`.
pub fn audit_conditions(
    ball: &[GammaElement],
    g_ball: &[GammaElement],
    n_range: i64,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let (one, t, a, b) = (
        GammaElement::identity(),
        GammaElement::t(),
        GammaElement::a(),
        GammaElement::b(),
    );

    let chain = [("1", &one), ("t", &t), ("a", &a), ("b", &b)];
    let broken = chain
        .windows(2)
        .find(|w| cmp_gamma(w[0].1, w[1].1) != Ordering::Less);
    out.push(CheckResult::from_outcome(
        "(ii) 1 < t < a < b",
        Status::Pass,
        "exact comparison of generators",
        broken.map(|w| gamma_pair_witness("(ii)", [w[0].0, w[1].0], w[0].1, w[1].1)),
    ));

    let keyed: Vec<Keyed<'_>> = ball.iter().map(Keyed::new).collect();
    let identity = Keyed::new(&one);
    let subgroups: [(&str, Membership); 2] = [
        ("(vi) g ∈ C, 1 < f ∉ C ⇒ g < f", GammaElement::in_cyclic_t),
        ("(vii) g ∈ G, 1 < f ∉ G ⇒ g < f", GammaElement::in_bs),
    ];
    for (name, member) in subgroups {
        let inside: Vec<&Keyed<'_>> = keyed.iter().filter(|k| member(k.element)).collect();
        let outside: Vec<&Keyed<'_>> = keyed
            .iter()
            .filter(|k| !member(k.element) && identity.order(k) == Ordering::Less)
            .collect();
        let mut pairs = 0usize;
        let mut bad = 0usize;
        let mut first = None;
        for f in &outside {
            for g in &inside {
                pairs += 1;
                if g.order(f) != Ordering::Less {
                    bad += 1;
                    first.get_or_insert_with(|| {
                        Witness::new(name)
                            .value("one", Value::Gamma(one.clone()))
                            .value("g", Value::Gamma(g.element.clone()))
                            .value("f", Value::Gamma(f.element.clone()))
                            .compare("one", "f")
                            .compare("g", "f")
                    });
                }
            }
        }
        out.push(CheckResult::from_outcome(
            name,
            Status::Pass,
            format!(
                "{bad} violations over {pairs} pairs ({} in subgroup, {} positive outside)",
                inside.len(),
                outside.len()
            ),
            first,
        ));
    }

    let h = conjugate_family(Generator::A, 1, ConjugationSign::Backward);
    for sign in ConjugationSign::BOTH {
        let name = match sign {
            ConjugationSign::Forward => "(viii) g < a^-1 b a < t^n b t^-n",
            ConjugationSign::Backward => "(viii) g < a^-1 b a < t^-n b t^n",
        };
        let mut first = None;
        let mut checks = 0usize;
        for g in g_ball {
            checks += 1;
            if !g.in_bs() || cmp_gamma(g, &h) != Ordering::Less {
                first.get_or_insert_with(|| gamma_pair_witness(name, ["g", "h"], g, &h));
            }
        }
        for n in -n_range..=n_range {
            checks += 1;
            let c = conjugate_family(Generator::T, n, sign);
            if cmp_gamma(&h, &c) != Ordering::Less {
                first.get_or_insert_with(|| gamma_pair_witness(name, ["h", "conjugate"], &h, &c));
            }
        }
        out.push(CheckResult::from_outcome(
            name,
            Status::Pass,
            format!(
                "h = a^-1 b a against {} elements of G and |n| ≤ {n_range}; {checks} comparisons",
                g_ball.len()
            ),
            first,
        ));
    }
    out
}

/// Least `n` in `1..=n_max` with `b^-n < g < b^n`.
///
/// Comparing against `b^±n` is decided by the `Ω` sum `S` except on ties, so
/// the search starts just below `|S|`.
pub fn cofinality_bound(g: &GammaElement, n_max: u64) -> Option<u64> {
    let kg = Keyed::new(g);
    let e = kg.sum().enclosure(64);
    let below = if e.lo().signum() == Ordering::Greater {
        e.lo().clone()
    } else if e.hi().signum() == Ordering::Less {
        -e.hi()
    } else {
        Dyadic::zero()
    };
    let start = below.floor().to_u64()?.max(1);
    (start..=n_max).find(|&n| {
        let bn = GammaElement::omega_delta(0, Radical::from_dyadic(Dyadic::from_int(n)));
        let bmn = GammaElement::omega_delta(0, Radical::from_dyadic(-Dyadic::from_int(n)));
        Keyed::new(&bmn).order(&kg) == Ordering::Less
            && kg.order(&Keyed::new(&bn)) == Ordering::Less
    })
}

/// `bg > g` and `b^-1 g < g` for every ball element, and cofinality of `b`.
pub fn audit_cofinality(ball: &[GammaElement], n_max: u64) -> Vec<CheckResult> {
    let b = GammaElement::b();
    let b_inv = b.inv();
    let mut up_bad = None;
    let mut down_bad = None;
    for g in ball {
        if up_bad.is_none() && cmp_gamma(&b.mul(g), g) != Ordering::Greater {
            up_bad = Some(
                Witness::new("bg > g")
                    .value("b", Value::Gamma(b.clone()))
                    .value("g", Value::Gamma(g.clone()))
                    .op("bg", "b", "g")
                    .compare("bg", "g"),
            );
        }
        if down_bad.is_none() && cmp_gamma(&b_inv.mul(g), g) != Ordering::Less {
            down_bad = Some(
                Witness::new("b^-1 g < g")
                    .value("b_inv", Value::Gamma(b_inv.clone()))
                    .value("g", Value::Gamma(g.clone()))
                    .op("bg", "b_inv", "g")
                    .compare("bg", "g"),
            );
        }
    }
    let mut bound = 0u64;
    let mut missing: Vec<String> = Vec::new();
    for g in ball {
        match cofinality_bound(g, n_max) {
            Some(n) => bound = bound.max(n),
            None => {
                if missing.len() < 4 {
                    missing.push(format!("{g} (Ω-sum {})", g.x.coordinate_sum()));
                }
            }
        }
    }
    let cof = if missing.is_empty() {
        CheckResult::pass(
            "cofinality b^-n < g < b^n",
            Status::Pass,
            format!(
                "all {} elements bracketed; largest minimal n = {bound} (n_max {n_max})",
                ball.len()
            ),
        )
    } else {
        CheckResult::violated(
            "cofinality b^-n < g < b^n",
            Status::Pass,
            format!("no n ≤ {n_max} for: {}", missing.join("; ")),
            None,
        )
    };
    vec![
        CheckResult::from_outcome(
            "bg > g",
            Status::Pass,
            format!("{} elements", ball.len()),
            up_bad,
        ),
        CheckResult::from_outcome(
            "b^-1 g < g",
            Status::Pass,
            format!("{} elements", ball.len()),
            down_bad,
        ),
        cof,
    ]
}

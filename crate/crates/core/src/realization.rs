//! Finite-scale realization of `(Γ, <)` on the line.
//!
//! A ball is embedded by rank: `φ(g)` is the position of `g` in the sorted
//! ball, shifted so `φ(1) = 0`. Left translation by a generator `s` becomes a
//! piecewise-linear map through the points `(φ(g), φ(sg))`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::group::{ball, conjugate_family, to_word, ConjugationSign, GammaElement, Generator};
use crate::orders::audit::{audit_cofinality, left_invariance_witness};
use crate::orders::{Value, Witness};
use crate::report::{AuditReport, CheckResult, Status};
use crate::Result;

fn ser_rational<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A ball sorted by `<` with its rank coordinates.
#[derive(Clone, Debug)]
pub struct RealizedBall {
    radius: usize,
    elements: Vec<GammaElement>,
    coords: Vec<BigRational>,
    index: HashMap<GammaElement, usize>,
}

#[derive(Serialize)]
struct PointJson<'a> {
    element: &'a GammaElement,
    #[serde(serialize_with = "ser_rational")]
    coord: &'a BigRational,
}

impl RealizedBall {
    /// Embeds `elements`, which must be sorted by `<` and contain the identity.
    pub fn from_sorted(radius: usize, elements: Vec<GammaElement>) -> Self {
        let base = elements
            .iter()
            .position(GammaElement::is_identity)
            .expect("ball contains the identity") as i64;
        let coords = (0..elements.len() as i64).map(|i| int(i - base)).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        RealizedBall {
            radius,
            elements,
            coords,
            index,
        }
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn elements(&self) -> &[GammaElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &GammaElement) -> bool {
        self.index.contains_key(g)
    }

    /// `φ(g)`, when `g` is in the ball.
    pub fn coord(&self, g: &GammaElement) -> Option<&BigRational> {
        self.index.get(g).map(|&i| &self.coords[i])
    }

    pub fn points(&self) -> impl Iterator<Item = (&GammaElement, &BigRational)> {
        self.elements.iter().zip(&self.coords)
    }

    /// Smallest and largest coordinate.
    pub fn hull(&self) -> (BigRational, BigRational) {
        (
            self.coords[0].clone(),
            self.coords[self.coords.len() - 1].clone(),
        )
    }

    /// `φ` is strictly increasing along the stored order, and the stored
    /// order is strictly increasing under `<`.
    pub fn check_embedding(&self) -> CheckResult {
        let mut first = None;
        for (i, w) in self.elements.windows(2).enumerate() {
            let order = crate::orders::cmp_gamma(&w[0], &w[1]);
            if order != Ordering::Less || self.coords[i] >= self.coords[i + 1] {
                first.get_or_insert_with(|| {
                    Witness::new("φ strictly order-preserving")
                        .value("g", Value::Gamma(w[0].clone()))
                        .value("h", Value::Gamma(w[1].clone()))
                        .compare("g", "h")
                });
            }
        }
        let base = self
            .coord(&GammaElement::identity())
            .map(|c| c.is_zero())
            .unwrap_or(false);
        let name = "(c1) g < h ⇒ φ(g) < φ(h)";
        let detail = format!("{} points, φ(1) = 0: {base}", self.len());
        match (first, base) {
            (None, true) => CheckResult::pass(name, Status::Pass, detail),
            (w, _) => CheckResult::violated(name, Status::Pass, detail, w),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pts: Vec<PointJson<'_>> = self
            .points()
            .map(|(element, coord)| PointJson { element, coord })
            .collect();
        serde_json::to_value(pts).expect("points serialize")
    }

    /// One line per point: coordinate, then a word for the element.
    pub fn number_line(&self) -> String {
        let mut out = String::new();
        for (g, c) in self.points() {
            let w = to_word(g);
            let _ = writeln!(out, "{c:>8}  {}", if w.is_empty() { "1" } else { &w });
        }
        out
    }
}

/// Builds the ball of the given radius over `t, a, b` and embeds it.
pub fn build_embedding(radius: usize) -> Result<RealizedBall> {
    Ok(RealizedBall::from_sorted(radius, ball(radius)?))
}

/// A piecewise-linear map through finitely many breakpoints.
#[derive(Clone, Debug, Serialize)]
pub struct PLMap {
    pub generator: Generator,
    #[serde(serialize_with = "ser_breakpoints")]
    pub breakpoints: Vec<(BigRational, BigRational)>,
    pub monotone: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

fn ser_breakpoints<S: Serializer>(
    bp: &[(BigRational, BigRational)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(bp.iter().map(|(p, q)| [p.to_string(), q.to_string()]))
}

impl PLMap {
    /// Affine between breakpoints, identity plus a constant beyond the hull.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let bp = &self.breakpoints;
        if bp.is_empty() {
            return x.clone();
        }
        let (p0, q0) = &bp[0];
        if x <= p0 {
            return x + (q0 - p0);
        }
        let (pn, qn) = &bp[bp.len() - 1];
        if x >= pn {
            return x + (qn - pn);
        }
        let i = bp.partition_point(|(p, _)| p <= x);
        let ((p1, q1), (p2, q2)) = (&bp[i - 1], &bp[i]);
        q1 + (q2 - q1) * (x - p1) / (p2 - p1)
    }

    /// The breakpoint with input `x`, if any.
    pub fn at(&self, x: &BigRational) -> Option<&BigRational> {
        self.breakpoints
            .binary_search_by(|(p, _)| p.cmp(x))
            .ok()
            .map(|i| &self.breakpoints[i].1)
    }
}

/// Left translation by `s` on the ball: breakpoints `(φ(g), φ(sg))` for
/// every `g` with `sg` also in the ball.
pub fn realize_generator(s: Generator, rb: &RealizedBall) -> PLMap {
    let se = s.element();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (i, g) in rb.elements.iter().enumerate() {
        if let Some(&j) = rb.index.get(&se.mul(g)) {
            pairs.push((i, j));
        }
    }
    let mut witness = None;
    for w in pairs.windows(2) {
        if w[1].1 <= w[0].1 {
            let (g, h) = (&rb.elements[w[0].0], &rb.elements[w[1].0]);
            witness = Some(left_invariance_witness(
                &format!("monotonicity of realized {}", s.letter()),
                &se,
                g,
                h,
            ));
            break;
        }
    }
    PLMap {
        generator: s,
        breakpoints: pairs
            .iter()
            .map(|&(i, j)| (rb.coords[i].clone(), rb.coords[j].clone()))
            .collect(),
        monotone: witness.is_none(),
        witness,
    }
}

fn gamma_chain_witness(names: [&str; 3], els: [&GammaElement; 3]) -> Witness {
    Witness::new("(c2) φ(g) < φ(h) < φ(t^n b t^-n)")
        .value(names[0], Value::Gamma(els[0].clone()))
        .value(names[1], Value::Gamma(els[1].clone()))
        .value(names[2], Value::Gamma(els[2].clone()))
        .compare(names[0], names[1])
        .compare(names[1], names[2])
}

/// `φ(g) < φ(h) < φ(t^n b t^-n)` for `h = a^-1 b a`, every `g ∈ G` in the
/// ball and every `|n| ≤ n_range` whose conjugate is in the ball, under both
/// conjugation sign conventions.
pub fn check_c2(rb: &RealizedBall, n_range: i64) -> CheckResult {
    let name = "(c2) φ(g) < φ(h) < φ(t^n b t^-n), h = a^-1 b a";
    let h = conjugate_family(Generator::A, 1, ConjugationSign::Backward);
    let Some(ph) = rb.coord(&h) else {
        // precondition, not a property failure: h has word length 3
        return CheckResult::violated(
            name,
            Status::Fail,
            "not applicable: h = a^-1 b a is not in the ball (radius ≥ 3 needed)",
            None,
        );
    };
    let gs: Vec<&GammaElement> = rb.elements.iter().filter(|g| g.in_bs()).collect();
    let mut conj = Vec::new();
    for sign in ConjugationSign::BOTH {
        for n in -n_range..=n_range {
            let c = conjugate_family(Generator::T, n, sign);
            if rb.contains(&c) && !conj.contains(&c) {
                conj.push(c);
            }
        }
    }
    let mut first = None;
    for g in &gs {
        if rb.coord(g).expect("in ball") >= ph {
            first.get_or_insert_with(|| gamma_chain_witness(["g", "h", "c"], [g, &h, &conj[0]]));
        }
    }
    for c in &conj {
        if rb.coord(c).expect("in ball") <= ph {
            first.get_or_insert_with(|| {
                gamma_chain_witness(["g", "h", "c"], [&GammaElement::identity(), &h, c])
            });
        }
    }
    let detail = format!(
        "φ(h) = {ph}; {} elements of G, {} realized conjugates (|n| ≤ {n_range})",
        gs.len(),
        conj.len()
    );
    if conj.is_empty() {
        return CheckResult::violated(
            name,
            Status::Pass,
            format!("{detail}; no conjugate in the ball"),
            None,
        );
    }
    CheckResult::from_outcome(name, Status::Pass, detail, first)
}

/// Joint displacement `max_s |f_s(x) - x|` over the realized generators.
fn joint_displacement(maps: &[PLMap], x: &BigRational) -> BigRational {
    maps.iter()
        .map(|m| (m.eval(x) - x).abs())
        .max()
        .unwrap_or_else(BigRational::zero)
}

/// No realized coordinate is fixed by every realized generator; reports the
/// least joint displacement over the integers and midpoints of the hull.
pub fn check_c3(rb: &RealizedBall, maps: &[PLMap]) -> CheckResult {
    let name = "(c3) no jointly fixed realized point";
    let mut fixed = None;
    for (g, c) in rb.points() {
        let moved = maps.iter().any(|m| &m.eval(c) != c);
        if !moved {
            fixed.get_or_insert_with(|| (g.clone(), c.clone()));
        }
    }
    let (lo, hi) = rb.hull();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let mut x = lo.clone();
    let mut min: Option<(BigRational, BigRational)> = None;
    while x <= hi {
        let d = joint_displacement(maps, &x);
        if min.as_ref().is_none_or(|(m, _)| d < *m) {
            min = Some((d, x.clone()));
        }
        x += &half;
    }
    let (dmin, at) = min.expect("nonempty hull");
    let detail = format!("hull [{lo}, {hi}], least joint displacement {dmin} at {at}");
    match fixed {
        None if dmin.is_positive() => CheckResult::pass(name, Status::Pass, detail),
        None => CheckResult::violated(name, Status::Pass, detail, None),
        Some((g, c)) => CheckResult::violated(
            name,
            Status::Pass,
            format!(
                "{detail}; {} at {c} is moved by no realized generator",
                to_word(&g)
            ),
            None,
        ),
    }
}

/// `bg > g`, `b^-1 g < g` and cofinality of `b` over the ball, plus the
/// realized `b` map strictly above the diagonal at every breakpoint.
pub fn freeness_report(rb: &RealizedBall, b_map: &PLMap, n_max: u64) -> Vec<CheckResult> {
    let mut out = audit_cofinality(&rb.elements, n_max);
    let name = "realized b above the diagonal";
    let below = b_map.breakpoints.iter().find(|(p, q)| q <= p);
    let detail = format!("{} breakpoints", b_map.breakpoints.len());
    out.push(match below {
        None if !b_map.breakpoints.is_empty() => CheckResult::pass(name, Status::Pass, detail),
        None => CheckResult::violated(name, Status::Pass, "no breakpoints", None),
        Some((p, q)) => {
            CheckResult::violated(name, Status::Pass, format!("{detail}; {p} ↦ {q}"), None)
        }
    });
    out
}

/// Every artifact of a realization run.
pub struct Realization {
    pub ball: RealizedBall,
    pub maps: Vec<PLMap>,
    pub report: AuditReport,
}

/// Builds the embedding, realizes `t, a, b`, and runs (c1)–(c3) and freeness.
pub fn realize(radius: usize, n_range: i64, n_max: u64) -> Result<Realization> {
    let rb = build_embedding(radius)?;
    let maps: Vec<PLMap> = Generator::ALL
        .iter()
        .map(|&s| realize_generator(s, &rb))
        .collect();
    let mut report = AuditReport::new(format!("realize radius {radius}"));
    report.push(rb.check_embedding());
    for m in &maps {
        let name = format!("realized {} monotone", m.generator.letter());
        let detail = format!("{} breakpoints", m.breakpoints.len());
        // only `a` is known to break left-invariance
        let expected = if m.generator == Generator::A && radius >= 4 {
            Status::Counterexample
        } else {
            Status::Pass
        };
        report.push(CheckResult::from_outcome(
            name,
            expected,
            detail,
            m.witness.clone(),
        ));
    }
    report.push(check_c2(&rb, n_range));
    report.push(check_c3(&rb, &maps));
    let b_map = maps
        .iter()
        .find(|m| m.generator == Generator::B)
        .expect("b realized");
    report.extend(freeness_report(&rb, b_map, n_max));
    Ok(Realization {
        ball: rb,
        maps,
        report,
    })
}

impl Realization {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "radius": self.ball.radius,
            "points": self.ball.to_json(),
            "maps": self.maps,
            "report": self.report,
        })
    }
}

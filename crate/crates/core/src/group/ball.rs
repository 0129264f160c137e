//! Balls in the word metric: all normal forms of words of bounded length.

use std::collections::HashSet;

use super::{GammaElement, Generator};
use crate::error::{Error, Result};
use crate::orders::sort_by_order;

/// Environment variable overriding [`DEFAULT_ELEMENT_BUDGET`].
pub const BUDGET_ENV: &str = "GAMMA_AUDIT_MAX_ELEMENTS";

pub const DEFAULT_ELEMENT_BUDGET: usize = 250_000;

pub fn element_budget() -> usize {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ELEMENT_BUDGET)
}

/// The symmetric generating set `{s, s^-1}` for the given generators.
pub fn symmetric(generators: &[Generator]) -> Vec<GammaElement> {
    generators
        .iter()
        .flat_map(|g| [g.element(), g.element().inv()])
        .collect()
}

/// Distinct elements of word length at most `radius` over `letters`,
/// sorted by `<`. Fails once more than `budget` elements have been found.
pub fn ball_over(
    letters: &[GammaElement],
    radius: usize,
    budget: usize,
) -> Result<Vec<GammaElement>> {
    let mut seen: HashSet<GammaElement> = HashSet::new();
    seen.insert(GammaElement::identity());
    let mut frontier = vec![GammaElement::identity()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for g in &frontier {
            for s in letters {
                let h = g.mul(s);
                if !seen.contains(&h) {
                    seen.insert(h.clone());
                    next.push(h);
                }
            }
        }
        if seen.len() > budget {
            return Err(Error::BudgetExceeded { radius, budget });
        }
        frontier = next;
    }
    let mut out: Vec<GammaElement> = seen.into_iter().collect();
    sort_by_order(&mut out);
    Ok(out)
}

/// Ball of radius `radius` over `{t, a, b}^±1`.
pub fn ball(radius: usize) -> Result<Vec<GammaElement>> {
    ball_over(&symmetric(&Generator::ALL), radius, element_budget())
}

/// Ball of radius `radius` in `G = <t, a>` over `{t, a}^±1`.
pub fn bs_ball(radius: usize) -> Result<Vec<GammaElement>> {
    ball_over(
        &symmetric(&[Generator::T, Generator::A]),
        radius,
        element_budget(),
    )
}

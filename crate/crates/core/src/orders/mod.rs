//! Left orders on the building blocks of `Γ`, counterexample witnesses, and
//! audits of order-theoretic claims.

pub mod audit;
mod cmp;
mod witness;

pub use audit::Ordered;
pub use cmp::{
    cmp_bs, cmp_dyadic, cmp_gamma, cmp_gamma_staged, cmp_int, cmp_omega, extension_order,
    sort_by_order, Keyed, Stage,
};
pub use witness::{Claim, Derivation, NamedValue, OrderKind, Value, Verdict, Witness};

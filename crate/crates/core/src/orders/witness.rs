//! Replayable counterexample witnesses.
//!
//! A witness names exact values, records how some of them are derived from
//! others, and lists the comparisons and equalities that exhibit a
//! violation. Replaying recomputes every derivation and claim.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::cmp::{cmp_bs, cmp_gamma, cmp_omega};
use crate::group::{act_with, BsElement, GammaElement, OmegaElement, ShiftConvention};
use crate::ring::Dyadic;

/// Which of the five orders a comparison uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    /// `≺1` on `Z`
    Int,
    /// `≺2` on `Z[1/2]`
    Dyadic,
    /// `≺3` on `Ω`
    Omega,
    /// `≺4` on `BS(1,2)`
    Bs,
    /// `<` on `Γ`
    Gamma,
}

impl OrderKind {
    pub fn symbol(self) -> &'static str {
        match self {
            OrderKind::Int => "≺1",
            OrderKind::Dyadic => "≺2",
            OrderKind::Omega => "≺3",
            OrderKind::Bs => "≺4",
            OrderKind::Gamma => "<",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Less,
    Equal,
    Greater,
}

impl From<Ordering> for Verdict {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Verdict::Less,
            Ordering::Equal => Verdict::Equal,
            Ordering::Greater => Verdict::Greater,
        }
    }
}

impl From<Verdict> for Ordering {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Less => Ordering::Less,
            Verdict::Equal => Ordering::Equal,
            Verdict::Greater => Ordering::Greater,
        }
    }
}

/// An exact value of one of the ordered groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "kebab-case")]
pub enum Value {
    Int(i64),
    Dyadic(Dyadic),
    Bs(BsElement),
    Omega(OmegaElement),
    Gamma(GammaElement),
}

impl Value {
    fn kind(&self) -> OrderKind {
        match self {
            Value::Int(_) => OrderKind::Int,
            Value::Dyadic(_) => OrderKind::Dyadic,
            Value::Bs(_) => OrderKind::Bs,
            Value::Omega(_) => OrderKind::Omega,
            Value::Gamma(_) => OrderKind::Gamma,
        }
    }

    /// The group law of the value's group: addition on `Z`, `Z[1/2]`, `Ω`;
    /// multiplication on `BS(1,2)` and `Γ`.
    fn op(&self, other: &Value) -> Result<Value, String> {
        Ok(match (self, other) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (Value::Dyadic(a), Value::Dyadic(b)) => Value::Dyadic(a + b),
            (Value::Omega(a), Value::Omega(b)) => Value::Omega(a.add(b)),
            (Value::Bs(a), Value::Bs(b)) => Value::Bs(a.mul(b)),
            (Value::Gamma(a), Value::Gamma(b)) => Value::Gamma(a.mul(b)),
            _ => {
                return Err(format!(
                    "group operation on mismatched values {self:?}, {other:?}"
                ))
            }
        })
    }

    fn compare(&self, other: &Value) -> Result<Ordering, String> {
        Ok(match (self, other) {
            (Value::Int(a), Value::Int(b)) => a.cmp(b),
            (Value::Dyadic(a), Value::Dyadic(b)) => a.cmp(b),
            (Value::Omega(a), Value::Omega(b)) => cmp_omega(a, b),
            (Value::Bs(a), Value::Bs(b)) => cmp_bs(a, b),
            (Value::Gamma(a), Value::Gamma(b)) => cmp_gamma(a, b),
            _ => {
                return Err(format!(
                    "comparison of mismatched values {self:?}, {other:?}"
                ))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Derivation {
    /// `name = args[0] · args[1]` in the group of the arguments.
    Op { name: String, args: [String; 2] },
    /// `name = ρ(args[0]) args[1]` for a `BS(1,2)` element acting on `Ω`.
    Act {
        name: String,
        args: [String; 2],
        convention: ShiftConvention,
    },
}

impl Derivation {
    fn name(&self) -> &str {
        match self {
            Derivation::Op { name, .. } | Derivation::Act { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "claim", rename_all = "kebab-case")]
pub enum Claim {
    /// `cmp(lhs, rhs) = verdict` in the order of the values' group.
    Compare {
        lhs: String,
        rhs: String,
        verdict: Verdict,
    },
    /// `lhs = rhs` holds (or fails) exactly.
    Equal {
        lhs: String,
        rhs: String,
        holds: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub property: String,
    pub elements: Vec<NamedValue>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub derivations: Vec<Derivation>,
    pub claims: Vec<Claim>,
}

impl Witness {
    pub fn new(property: impl Into<String>) -> Self {
        Witness {
            property: property.into(),
            elements: Vec::new(),
            derivations: Vec::new(),
            claims: Vec::new(),
        }
    }

    pub fn value(mut self, name: &str, value: Value) -> Self {
        self.elements.push(NamedValue {
            name: name.to_string(),
            value,
        });
        self
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.elements
            .iter()
            .find(|nv| nv.name == name)
            .map(|nv| &nv.value)
    }

    /// Records `name = lhs · rhs`, evaluating it now.
    pub fn op(mut self, name: &str, lhs: &str, rhs: &str) -> Self {
        let v = self
            .get(lhs)
            .expect("lhs")
            .op(self.get(rhs).expect("rhs"))
            .expect("compatible values");
        self.derivations.push(Derivation::Op {
            name: name.into(),
            args: [lhs.into(), rhs.into()],
        });
        self.value(name, v)
    }

    /// Records `name = ρ(w) x`, evaluating it now.
    pub fn act(mut self, name: &str, w: &str, x: &str, convention: ShiftConvention) -> Self {
        let v = match (self.get(w), self.get(x)) {
            (Some(Value::Bs(w)), Some(Value::Omega(x))) => Value::Omega(act_with(convention, w, x)),
            _ => panic!("act needs a BS element and an Ω element"),
        };
        self.derivations.push(Derivation::Act {
            name: name.into(),
            args: [w.into(), x.into()],
            convention,
        });
        self.value(name, v)
    }

    /// Records the current verdict of `cmp(lhs, rhs)`.
    pub fn compare(mut self, lhs: &str, rhs: &str) -> Self {
        let o = self
            .get(lhs)
            .expect("lhs")
            .compare(self.get(rhs).expect("rhs"))
            .expect("same group");
        self.claims.push(Claim::Compare {
            lhs: lhs.into(),
            rhs: rhs.into(),
            verdict: o.into(),
        });
        self
    }

    /// Records whether `lhs = rhs` currently holds.
    pub fn equal(mut self, lhs: &str, rhs: &str) -> Self {
        let holds = self.get(lhs).expect("lhs") == self.get(rhs).expect("rhs");
        self.claims.push(Claim::Equal {
            lhs: lhs.into(),
            rhs: rhs.into(),
            holds,
        });
        self
    }

    /// Recomputes every derivation and claim from the recorded base values.
    pub fn replay(&self) -> Result<(), String> {
        let derived: std::collections::HashSet<&str> =
            self.derivations.iter().map(|d| d.name()).collect();
        let mut env: BTreeMap<&str, Value> = self
            .elements
            .iter()
            .filter(|nv| !derived.contains(nv.name.as_str()))
            .map(|nv| (nv.name.as_str(), nv.value.clone()))
            .collect();
        let lookup = |env: &BTreeMap<&str, Value>, n: &str| {
            env.get(n)
                .cloned()
                .ok_or_else(|| format!("undefined name `{n}`"))
        };
        for d in &self.derivations {
            let v = match d {
                Derivation::Op { args, .. } => {
                    lookup(&env, &args[0])?.op(&lookup(&env, &args[1])?)?
                }
                Derivation::Act {
                    args, convention, ..
                } => match (lookup(&env, &args[0])?, lookup(&env, &args[1])?) {
                    (Value::Bs(w), Value::Omega(x)) => Value::Omega(act_with(*convention, &w, &x)),
                    _ => return Err(format!("`{}`: act needs (bs, omega)", d.name())),
                },
            };
            if let Some(recorded) = self.get(d.name()) {
                if recorded != &v {
                    return Err(format!("`{}` recomputes to a different value", d.name()));
                }
            }
            env.insert(d.name(), v);
        }
        for c in &self.claims {
            match c {
                Claim::Compare { lhs, rhs, verdict } => {
                    let (l, r) = (lookup(&env, lhs)?, lookup(&env, rhs)?);
                    if l.kind() != r.kind() {
                        return Err(format!("`{lhs}` and `{rhs}` live in different groups"));
                    }
                    let got = Verdict::from(l.compare(&r)?);
                    if got != *verdict {
                        return Err(format!(
                            "cmp({lhs}, {rhs}) replays as {got:?}, recorded {verdict:?}"
                        ));
                    }
                }
                Claim::Equal { lhs, rhs, holds } => {
                    let got = lookup(&env, lhs)? == lookup(&env, rhs)?;
                    if got != *holds {
                        return Err(format!(
                            "`{lhs} = {rhs}` replays as {got}, recorded {holds}"
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

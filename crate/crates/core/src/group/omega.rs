use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ring::Radical;

/// Finitely supported vector `(x_n)` with `x_n` in `D`: an element of
/// `Ω = ⊕_n D`. Zero coordinates are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct OmegaElement {
    support: BTreeMap<i64, Radical>,
}

impl OmegaElement {
    pub fn zero() -> Self {
        OmegaElement::default()
    }

    /// `value` at coordinate `index`, zero elsewhere.
    pub fn delta(index: i64, value: Radical) -> Self {
        let mut x = OmegaElement::zero();
        x.add_at(index, &value);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn get(&self, index: i64) -> Option<&Radical> {
        self.support.get(&index)
    }

    /// Nonzero coordinates in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Radical)> {
        self.support.iter().map(|(n, v)| (*n, v))
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    pub(crate) fn add_at(&mut self, index: i64, value: &Radical) {
        if value.is_zero() {
            return;
        }
        let sum = match self.support.get(&index) {
            Some(v) => v + value,
            None => value.clone(),
        };
        if sum.is_zero() {
            self.support.remove(&index);
        } else {
            self.support.insert(index, sum);
        }
    }

    pub(crate) fn from_map(map: BTreeMap<i64, Radical>) -> Self {
        OmegaElement {
            support: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn add(&self, other: &OmegaElement) -> OmegaElement {
        let mut out = self.clone();
        for (n, v) in &other.support {
            out.add_at(*n, v);
        }
        out
    }

    pub fn neg(&self) -> OmegaElement {
        OmegaElement {
            support: self.support.iter().map(|(n, v)| (*n, -v)).collect(),
        }
    }

    pub fn sub(&self, other: &OmegaElement) -> OmegaElement {
        self.add(&other.neg())
    }

    /// `sum_n x_n`.
    pub fn coordinate_sum(&self) -> Radical {
        self.support
            .values()
            .fold(Radical::zero(), |acc, v| &acc + v)
    }
}

impl fmt::Debug for OmegaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.support.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct CoordRepr {
    index: i64,
    terms: Radical,
}

impl Serialize for OmegaElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.support.iter().map(|(n, v)| CoordRepr {
            index: *n,
            terms: v.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for OmegaElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut out = OmegaElement::zero();
        for c in Vec::<CoordRepr>::deserialize(d)? {
            out.add_at(c.index, &c.terms);
        }
        Ok(out)
    }
}

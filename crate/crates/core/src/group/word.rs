//! Words over `t, a, b` and their inverses `T, A, B`, with optional integer
//! powers (`t^3`, `a^-2`, `B^4`). Whitespace between tokens is optional.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{BsElement, GammaElement, Generator, OmegaElement};
use crate::error::WordError;
use crate::ring::{Dyadic, Radical};

/// One parsed letter with its (signed) power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syllable {
    pub generator: Generator,
    pub power: BigInt,
    /// Byte offset of the letter in the source text.
    pub offset: usize,
}

pub fn tokenize(text: &str) -> Result<Vec<Syllable>, WordError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |offset: usize, message: &str| WordError {
        offset,
        message: message.to_string(),
    };
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start_of_token = i;
        let (generator, inverse) = match c {
            b't' => (Generator::T, false),
            b'a' => (Generator::A, false),
            b'b' => (Generator::B, false),
            b'T' => (Generator::T, true),
            b'A' => (Generator::A, true),
            b'B' => (Generator::B, true),
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(err(i, &format!("unexpected character `{ch}`")));
            }
        };
        i += 1;
        let mut power = BigInt::from(1);
        if i < bytes.len() && bytes[i] == b'^' {
            let caret = i;
            i += 1;
            let mut negative = false;
            if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                negative = bytes[i] == b'-';
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(caret, "expected an integer exponent after `^`"));
            }
            power = text[start..i].parse().expect("ascii digits");
            if negative {
                power = -power;
            }
        }
        if inverse {
            power = -power;
        }
        out.push(Syllable {
            generator,
            power,
            offset: start_of_token,
        });
    }
    Ok(out)
}

/// Evaluates a word to its normal form, multiplying left to right.
pub fn parse_word(text: &str) -> Result<GammaElement, WordError> {
    let mut g = GammaElement::identity();
    for syl in tokenize(text)? {
        let factor = match syl.generator {
            Generator::T => {
                let k = syl.power.to_i64().ok_or_else(|| WordError {
                    offset: syl.offset,
                    message: format!("t-exponent {} does not fit in 64 bits", syl.power),
                })?;
                GammaElement::from_bs(BsElement::t_pow(k))
            }
            Generator::A => GammaElement::from_bs(BsElement::a_pow(Dyadic::from_int(syl.power))),
            Generator::B => {
                GammaElement::omega_delta(0, Radical::from_dyadic(Dyadic::from_int(syl.power)))
            }
        };
        g = g.mul(&factor);
    }
    Ok(g)
}

struct WordBuilder {
    syllables: Vec<(Generator, BigInt)>,
}

impl WordBuilder {
    fn push(&mut self, generator: Generator, power: impl Into<BigInt>) {
        let power = power.into();
        if power.is_zero() {
            return;
        }
        if let Some((g, p)) = self.syllables.last_mut() {
            if *g == generator {
                *p += power;
                if p.is_zero() {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push((generator, power));
    }

    /// `a^s` for dyadic `s = p / 2^e`, written as `t^-e a^p t^e`.
    fn push_a_dyadic(&mut self, s: &Dyadic) {
        let e = s.exp() as i64;
        self.push(Generator::T, -e);
        self.push(Generator::A, s.num().clone());
        self.push(Generator::T, e);
    }

    fn render(&self) -> String {
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|(g, p)| {
                let one = BigInt::from(1);
                if *p == one {
                    g.letter().to_string()
                } else if *p == -one {
                    g.letter().to_ascii_uppercase().to_string()
                } else {
                    format!("{}^{}", g.letter(), p)
                }
            })
            .collect();
        parts.join(" ")
    }
}

fn push_omega(wb: &mut WordBuilder, x: &OmegaElement) {
    for (n, v) in x.iter() {
        for (q, c) in v.terms() {
            // c 2^q = m 2^s with m an integer
            let m = c.num().clone();
            let s = q - &Dyadic::from(c.exp() as i64);
            wb.push(Generator::T, -n);
            wb.push_a_dyadic(&s);
            wb.push(Generator::B, m);
            wb.push_a_dyadic(&-&s);
            wb.push(Generator::T, n);
        }
    }
}

/// A word over `t, a, b` whose evaluation is exactly `g`.
pub fn to_word(g: &GammaElement) -> String {
    let mut wb = WordBuilder {
        syllables: Vec::new(),
    };
    // (w, x) = x · w
    push_omega(&mut wb, &g.x);
    let e = g.w.u.exp() as i64;
    wb.push(Generator::T, g.w.k - e);
    wb.push(Generator::A, g.w.u.num().clone());
    wb.push(Generator::T, e);
    wb.render()
}

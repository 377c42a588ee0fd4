use std::fmt;

use serde::{Deserialize, Serialize};

use super::simple;
use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};

/// Left normal form `Δ^p · x₁ ⋯ x_ℓ`.
///
/// Each `x_i` is a simple element different from `1` and `Δ`, and every
/// consecutive pair is left-weighted. Two words represent the same braid
/// iff their normal forms are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawNormalForm")]
pub struct NormalForm {
    #[serde(rename = "n")]
    strands: usize,
    #[serde(rename = "delta")]
    delta_power: i64,
    factors: Vec<Permutation>,
}

#[derive(Deserialize)]
struct RawNormalForm {
    n: usize,
    delta: i64,
    factors: Vec<Permutation>,
}

impl TryFrom<RawNormalForm> for NormalForm {
    type Error = Error;

    fn try_from(raw: RawNormalForm) -> Result<Self> {
        NormalForm::from_parts(raw.n, raw.delta, raw.factors)
    }
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm {
            strands: n,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power_of(n: usize, p: i64) -> Self {
        NormalForm {
            strands: n,
            delta_power: p,
            factors: Vec::new(),
        }
    }

    /// Validates and wraps raw data, e.g. from JSON.
    pub fn from_parts(n: usize, delta_power: i64, factors: Vec<Permutation>) -> Result<Self> {
        let nf = NormalForm {
            strands: n,
            delta_power,
            factors,
        };
        nf.validate()?;
        Ok(nf)
    }

    pub fn validate(&self) -> Result<()> {
        for f in &self.factors {
            if f.len() != self.strands {
                return Err(Error::Malformed(format!(
                    "factor {f} has the wrong length for {} strands",
                    self.strands
                )));
            }
            if f.is_identity() || simple::is_delta(f) {
                return Err(Error::Malformed(format!("factor {f} is trivial or Δ")));
            }
        }
        for pair in self.factors.windows(2) {
            if !simple::is_left_weighted(&pair[0], &pair[1]) {
                return Err(Error::Malformed(format!(
                    "factors {} {} are not left-weighted",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(())
    }

    pub fn from_word(w: &BraidWord) -> Self {
        let n = w.strands();
        let mut nf = NormalForm::identity(n);
        for l in w.letters() {
            let g = simple::generator(n, l.index());
            if l.is_positive() {
                nf.mul_simple(&g);
            } else {
                nf.mul_simple_inverse(&g);
            }
        }
        nf
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Central iff a power of `Δ²`.
    pub fn is_central(&self) -> bool {
        self.factors.is_empty() && (self.delta_power % 2 == 0 || self.strands <= 2)
    }

    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let d = simple::to_word(&simple::delta(n));
        let mut w = d.power(self.delta_power);
        for f in &self.factors {
            w.extend(&simple::to_word(f));
        }
        w
    }

    fn tidy(&mut self) {
        let lead = self
            .factors
            .iter()
            .take_while(|f| simple::is_delta(f))
            .count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.delta_power += lead as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        debug_assert!(self.validate().is_ok(), "{self:?}");
    }

    /// Right multiplication by a simple element: one backward pass of
    /// left-weighting restores normality.
    pub fn mul_simple(&mut self, s: &Permutation) {
        if s.is_identity() {
            return;
        }
        self.factors.push(s.clone());
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            let changed = simple::left_weight(&mut left[j - 1], &mut right[0]);
            if !changed {
                break;
            }
            j -= 1;
        }
        self.tidy();
    }

    /// Right multiplication by `s⁻¹ = ∂s · Δ⁻¹`.
    pub fn mul_simple_inverse(&mut self, s: &Permutation) {
        self.mul_simple(&simple::right_complement(s));
        self.mul_delta_inverse();
    }

    /// `X Δ⁻¹ = Δ⁻¹ τ(X)`.
    fn mul_delta_inverse(&mut self) {
        self.delta_power -= 1;
        for f in self.factors.iter_mut() {
            *f = simple::tau(f);
        }
    }

    /// Left multiplication by a simple element: one forward pass.
    pub fn left_mul_simple(&mut self, s: &Permutation) {
        if s.is_identity() {
            return;
        }
        // s·Δ^p·X = Δ^p·τ^p(s)·X
        self.factors.insert(0, simple::tau_pow(s, self.delta_power));
        for j in 0..self.factors.len() - 1 {
            let (left, right) = self.factors.split_at_mut(j + 1);
            if !simple::left_weight(&mut left[j], &mut right[0]) {
                break;
            }
        }
        self.tidy();
    }

    pub fn mul(&self, other: &NormalForm) -> NormalForm {
        assert_eq!(self.strands, other.strands);
        // Δ^p X · Δ^q Y = Δ^{p+q} τ^q(X) Y
        let mut out = NormalForm {
            strands: self.strands,
            delta_power: self.delta_power + other.delta_power,
            factors: self
                .factors
                .iter()
                .map(|f| simple::tau_pow(f, other.delta_power))
                .collect(),
        };
        for y in &other.factors {
            out.mul_simple(y);
        }
        out
    }

    pub fn inverse(&self) -> NormalForm {
        // (Δ^p x₁⋯x_ℓ)⁻¹ = x_ℓ⁻¹ ⋯ x₁⁻¹ Δ^{-p}
        let mut out = NormalForm::identity(self.strands);
        for f in self.factors.iter().rev() {
            out.mul_simple_inverse(f);
        }
        out.delta_power -= self.delta_power;
        if self.delta_power % 2 != 0 {
            for f in out.factors.iter_mut() {
                *f = simple::tau(f);
            }
        }
        out
    }

    /// `s⁻¹ · self · s` for a simple `s`.
    pub fn conjugate_by_simple(&self, s: &Permutation) -> NormalForm {
        // s⁻¹ Δ^p = Δ^p τ^p(s)⁻¹ and t⁻¹ = Δ⁻¹ τ(∂t)
        let u = simple::tau(&simple::right_complement(&simple::tau_pow(
            s,
            self.delta_power,
        )));
        let mut out = NormalForm {
            strands: self.strands,
            delta_power: 0,
            factors: self.factors.clone(),
        };
        out.left_mul_simple(&u);
        out.mul_simple(s);
        out.delta_power += self.delta_power - 1;
        out
    }

    pub fn power(&self, d: u32) -> NormalForm {
        let mut out = NormalForm::identity(self.strands);
        for _ in 0..d {
            out = out.mul(self);
        }
        out
    }

    /// Cycling `c(x) = Δ^p x₂⋯x_ℓ τ^p(x₁)`, with its conjugator `τ^p(x₁)`
    /// (so `c(x) = y⁻¹ x y`). `None` when `ℓ = 0`.
    pub fn cycling(&self) -> Option<(NormalForm, Permutation)> {
        let first = self.factors.first()?;
        let y = simple::tau_pow(first, self.delta_power);
        let mut out = NormalForm {
            strands: self.strands,
            delta_power: self.delta_power,
            factors: self.factors[1..].to_vec(),
        };
        out.mul_simple(&y);
        Some((out, y))
    }

    /// Decycling `d(x) = x_ℓ Δ^p x₁⋯x_{ℓ-1}`; the conjugator is `x_ℓ⁻¹`,
    /// returned as the simple element `x_ℓ`.
    pub fn decycling(&self) -> Option<(NormalForm, Permutation)> {
        let last = self.factors.last()?.clone();
        let mut out = NormalForm {
            strands: self.strands,
            delta_power: self.delta_power,
            factors: self.factors[..self.factors.len() - 1].to_vec(),
        };
        out.left_mul_simple(&last);
        Some((out, last))
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.delta_power)?;
        for x in &self.factors {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

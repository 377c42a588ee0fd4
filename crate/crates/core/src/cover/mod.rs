//! The `k`-fold cyclic branched cover `S_{n,k}` of the disk over `n`
//! points, the lift of braids to twist words on it, and the action of
//! those twists on `H₁(S_{n,k}; Z)`.
//!
//! Equality on `H₁` is a necessary condition for equality of mapping
//! classes. For two lifts of braids, compare the braids themselves with
//! [`crate::garside::is_equal`]: the lift is injective.

pub mod burau;
pub mod homology;
pub mod laurent;
pub mod matrix;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

pub use burau::{burau_at_companion, burau_generator, burau_reduced, BaseChange};
pub use homology::{
    check_identity, companion, deck_matrix, homology_rep, intersection_form, symmetry_check,
    transvection, twist_class, SignConvention,
};
pub use laurent::{LaurentMatrix, LaurentPoly};
pub use matrix::IntMatrix;

pub(crate) fn check_cover(n: usize, k: usize) -> Result<()> {
    if n < 2 || k < 2 {
        return Err(Error::InvalidCover { n, k });
    }
    Ok(())
}

/// Topology of `S_{n,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverData {
    pub n: usize,
    pub k: usize,
    pub euler_char: i64,
    pub boundary_components: usize,
    pub genus: usize,
    pub h1_rank: usize,
}

pub fn cover_data(n: usize, k: usize) -> Result<CoverData> {
    check_cover(n, k)?;
    let (ni, ki) = (n as i64, k as i64);
    let euler_char = ni + ki - ni * ki;
    let boundary = n.gcd(&k);
    let genus = (2 - euler_char - boundary as i64) / 2;
    Ok(CoverData {
        n,
        k,
        euler_char,
        boundary_components: boundary,
        genus: genus as usize,
        h1_rank: (n - 1) * (k - 1),
    })
}

/// `t_{i,l}^{sign}`, a Dehn twist about the curve `α^i_l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwistLetter {
    pub i: usize,
    pub l: usize,
    pub sign: i8,
}

impl TwistLetter {
    pub fn inverse(self) -> Self {
        TwistLetter {
            sign: -self.sign,
            ..self
        }
    }
}

impl fmt::Display for TwistLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{},{}]", self.i, self.l)?;
        if self.sign < 0 {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

impl FromStr for TwistLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Syntax {
            pos: 0,
            msg: format!("expected t[i,l] or t[i,l]^-1, found {s:?}"),
        };
        let rest = s.strip_prefix("t[").ok_or_else(bad)?;
        let (inside, tail) = rest.split_once(']').ok_or_else(bad)?;
        let (i, l) = inside.split_once(',').ok_or_else(bad)?;
        let i: usize = i.trim().parse().map_err(|_| bad())?;
        let l: usize = l.trim().parse().map_err(|_| bad())?;
        let sign = match tail {
            "" | "^1" => 1,
            "^-1" => -1,
            _ => return Err(bad()),
        };
        Ok(TwistLetter { i, l, sign })
    }
}

/// A word in the twists `t_{i,l}` on `S_{n,k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistWord {
    n: usize,
    k: usize,
    letters: Vec<TwistLetter>,
}

impl TwistWord {
    pub fn new(n: usize, k: usize, letters: Vec<TwistLetter>) -> Result<Self> {
        check_cover(n, k)?;
        if let Some(t) = letters
            .iter()
            .find(|t| t.i == 0 || t.i >= n || t.l == 0 || t.l >= k || t.sign.abs() != 1)
        {
            return Err(Error::TwistOutOfRange {
                i: t.i,
                l: t.l,
                n,
                k,
            });
        }
        Ok(TwistWord { n, k, letters })
    }

    pub fn empty(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, Vec::new())
    }

    /// Whitespace-separated letters `t[i,l]` and `t[i,l]^-1`.
    pub fn parse(text: &str, n: usize, k: usize) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let pos = text[offset..].find(token).map_or(offset, |p| p + offset);
            offset = pos + token.len();
            let letter = token.parse::<TwistLetter>().map_err(|e| match e {
                Error::Syntax { msg, .. } => Error::Syntax { pos, msg },
                other => other,
            })?;
            letters.push(letter);
        }
        Self::new(n, k, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn letters(&self) -> &[TwistLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            n: self.n,
            k: self.k,
            letters: self.letters.iter().rev().map(|t| t.inverse()).collect(),
        }
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, t) in self.letters.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// The lift of a braid: `σ_i ↦ t_{i,1} t_{i,2} ⋯ t_{i,k-1}` and
/// `σ_i⁻¹ ↦ t_{i,k-1}⁻¹ ⋯ t_{i,1}⁻¹`.
pub fn lift_word(b: &BraidWord, k: usize) -> TwistWord {
    let mut letters = Vec::with_capacity(b.len() * k.saturating_sub(1));
    for l in b.letters() {
        let i = l.index();
        if l.is_positive() {
            letters.extend((1..k).map(|l| TwistLetter { i, l, sign: 1 }));
        } else {
            letters.extend((1..k).rev().map(|l| TwistLetter { i, l, sign: -1 }));
        }
    }
    TwistWord {
        n: b.strands(),
        k,
        letters,
    }
}

/// An `H₁` matrix tagged with its cover, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverMatrix {
    pub n: usize,
    pub k: usize,
    pub dim: usize,
    pub rows: IntMatrix,
}

impl CoverMatrix {
    pub fn new(n: usize, k: usize, m: IntMatrix) -> Self {
        CoverMatrix {
            n,
            k,
            dim: m.dim(),
            rows: m,
        }
    }
}

#[cfg(test)]
mod tests;

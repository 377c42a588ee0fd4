//! The integral homology of the cover `S_{n,k}` and the action of twists.
//!
//! `H₁(S_{n,k})` has basis `e_{i,l} = [α^i_l]` for `1 ≤ i ≤ n-1`,
//! `1 ≤ l ≤ k-1`, at index `(i-1)(k-1) + (l-1)`. The deck transformation
//! sends `e_{i,l}` to `e_{i,l+1}`, and `e_{i,k} = -(e_{i,1} + ⋯ + e_{i,k-1})`.

use super::matrix::IntMatrix;
use super::{check_cover, TwistLetter, TwistWord};
use crate::error::{Error, Result};

/// Signs of the nonzero pairings between basis curves.
///
/// `⟨e_{i,l}, e_{i,l+1}⟩ = horizontal`, `⟨e_{i,l}, e_{i+1,l}⟩ = vertical`
/// and `⟨e_{i,l}, e_{i+1,l+shift}⟩ = diagonal` with `shift = ±1`. All
/// other pairs are disjoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignConvention {
    pub horizontal: i128,
    pub vertical: i128,
    pub shift: i64,
    pub diagonal: i128,
}

impl SignConvention {
    /// The convention under which the lifted generators agree with the
    /// Burau representation at the companion matrix.
    pub const STANDARD: SignConvention = SignConvention {
        horizontal: -1,
        vertical: -1,
        shift: 1,
        diagonal: 1,
    };

    /// All 16 candidates.
    pub fn candidates() -> Vec<SignConvention> {
        let mut out = Vec::with_capacity(16);
        for horizontal in [1, -1] {
            for vertical in [1, -1] {
                for shift in [1, -1] {
                    for diagonal in [1, -1] {
                        out.push(SignConvention {
                            horizontal,
                            vertical,
                            shift,
                            diagonal,
                        });
                    }
                }
            }
        }
        out
    }
}

pub fn basis_index(i: usize, l: usize, k: usize) -> usize {
    (i - 1) * (k - 1) + (l - 1)
}

pub fn h1_rank(n: usize, k: usize) -> usize {
    (n - 1) * (k - 1)
}

/// The intersection form on `H₁` in the standard convention.
pub fn intersection_form(n: usize, k: usize) -> Result<IntMatrix> {
    intersection_form_with(n, k, SignConvention::STANDARD)
}

pub fn intersection_form_with(n: usize, k: usize, conv: SignConvention) -> Result<IntMatrix> {
    check_cover(n, k)?;
    let d = h1_rank(n, k);
    let mut j = IntMatrix::zeros(d);
    let mut pair = |a: usize, b: usize, v: i128| {
        j.set(a, b, j.get(a, b) + v);
        j.set(b, a, j.get(b, a) - v);
    };
    for i in 1..n {
        for l in 1..k {
            let here = basis_index(i, l, k);
            if l + 1 < k {
                pair(here, basis_index(i, l + 1, k), conv.horizontal);
            }
            if i + 1 < n {
                pair(here, basis_index(i + 1, l, k), conv.vertical);
                let l2 = l as i64 + conv.shift;
                if (1..k as i64).contains(&l2) {
                    pair(here, basis_index(i + 1, l2 as usize, k), conv.diagonal);
                }
            }
        }
    }
    Ok(j)
}

/// The class `[α^i_l]`; for `l = k` this is `-(e_{i,1} + ⋯ + e_{i,k-1})`.
pub fn twist_class(i: usize, l: usize, n: usize, k: usize) -> Result<Vec<i128>> {
    check_cover(n, k)?;
    if i == 0 || i >= n || l == 0 || l > k {
        return Err(Error::TwistOutOfRange { i, l, n, k });
    }
    let mut v = vec![0; h1_rank(n, k)];
    if l < k {
        v[basis_index(i, l, k)] = 1;
    } else {
        for m in 1..k {
            v[basis_index(i, m, k)] = -1;
        }
    }
    Ok(v)
}

/// Companion matrix of `1 + t + ⋯ + t^{k-1}`: ones below the diagonal and
/// a last column of `-1`.
pub fn companion(k: usize) -> IntMatrix {
    let d = k - 1;
    let mut m = IntMatrix::zeros(d);
    for l in 0..d {
        if l + 1 < d {
            m.set(l + 1, l, 1);
        }
        m.set(l, d - 1, -1);
    }
    m
}

/// Action of the deck transformation on `H₁`: one companion block per `i`.
pub fn deck_matrix(n: usize, k: usize) -> Result<IntMatrix> {
    check_cover(n, k)?;
    Ok(IntMatrix::block_diagonal(&companion(k), n - 1))
}

/// `x ↦ x + ⟨x, c⟩ c`, the action of a Dehn twist about a curve in class `c`.
pub fn transvection(c: &[i128], j: &IntMatrix) -> Result<IntMatrix> {
    signed_transvection(c, j, 1)
}

fn signed_transvection(c: &[i128], j: &IntMatrix, sign: i128) -> Result<IntMatrix> {
    let d = j.dim();
    if c.len() != d {
        return Err(Error::Dimension(format!(
            "class of length {} for rank {d}",
            c.len()
        )));
    }
    let jc = j.mul_vec(c)?;
    let mut m = IntMatrix::identity(d);
    for (r, &cr) in c.iter().enumerate() {
        for (col, &jcc) in jc.iter().enumerate() {
            let v = cr
                .checked_mul(jcc)
                .and_then(|x| x.checked_mul(sign))
                .and_then(|x| x.checked_add(m.get(r, col)))
                .ok_or(Error::Overflow)?;
            m.set(r, col, v);
        }
    }
    Ok(m)
}

fn letter_matrix(l: &TwistLetter, n: usize, k: usize, j: &IntMatrix) -> Result<IntMatrix> {
    let c = twist_class(l.i, l.l, n, k)?;
    signed_transvection(&c, j, l.sign as i128)
}

/// The action of a twist word on `H₁`: the product of its letter
/// matrices in word order.
pub fn homology_rep(w: &TwistWord) -> Result<IntMatrix> {
    homology_rep_with(w, SignConvention::STANDARD)
}

pub fn homology_rep_with(w: &TwistWord, conv: SignConvention) -> Result<IntMatrix> {
    let (n, k) = (w.n(), w.k());
    let j = intersection_form_with(n, k, conv)?;
    let mut m = IntMatrix::identity(h1_rank(n, k));
    for l in w.letters() {
        m = m.mul(&letter_matrix(l, n, k, &j)?)?;
    }
    Ok(m)
}

/// Whether the action of `w` on `H₁` commutes with the deck transformation.
pub fn symmetry_check(w: &TwistWord) -> Result<bool> {
    let d = deck_matrix(w.n(), w.k())?;
    let m = homology_rep(w)?;
    Ok(m.mul(&d)? == d.mul(&m)?)
}

/// Equality of the actions on `H₁`. Necessary for equality of mapping
/// classes, not sufficient.
pub fn check_identity(a: &TwistWord, b: &TwistWord) -> Result<bool> {
    if (a.n(), a.k()) != (b.n(), b.k()) {
        return Err(Error::Dimension(format!(
            "twist words on (n, k) = ({}, {}) and ({}, {})",
            a.n(),
            a.k(),
            b.n(),
            b.k()
        )));
    }
    Ok(homology_rep(a)? == homology_rep(b)?)
}

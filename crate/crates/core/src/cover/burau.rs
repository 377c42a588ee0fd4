//! The reduced Burau representation and its specialization at the
//! companion matrix of `1 + t + ⋯ + t^{k-1}`.

use super::homology::{companion, h1_rank, homology_rep};
use super::laurent::{LaurentMatrix, LaurentPoly};
use super::matrix::{integer_nullspace, IntMatrix};
use super::{check_cover, lift_word};
use crate::braid::{ArtinLetter, BraidWord};
use crate::error::{Error, Result};

/// Reduced Burau matrix of `σ_i^{±1}` in `B_n`. For `σ_i` it is the
/// identity except in row `i`, which reads `(t, -t, 1)` in columns
/// `i-1, i, i+1` (entries outside the matrix dropped); the inverse has
/// `(1, -t⁻¹, t⁻¹)` there.
pub fn burau_generator(n: usize, letter: ArtinLetter) -> LaurentMatrix {
    let d = n - 1;
    let r = letter.index() - 1;
    let mut m = LaurentMatrix::identity(d);
    let (left, mid, right) = if letter.is_positive() {
        (
            LaurentPoly::monomial(1, 1),
            LaurentPoly::monomial(-1, 1),
            LaurentPoly::one(),
        )
    } else {
        (
            LaurentPoly::one(),
            LaurentPoly::monomial(-1, -1),
            LaurentPoly::monomial(1, -1),
        )
    };
    m.set(r, r, mid);
    if r >= 1 {
        m.set(r, r - 1, left);
    }
    if r + 1 < d {
        m.set(r, r + 1, right);
    }
    m
}

/// Product of the generator matrices in word order.
pub fn burau_reduced(b: &BraidWord) -> Result<LaurentMatrix> {
    let n = b.strands();
    if n < 2 {
        return Err(Error::TooFewStrands { min: 2, got: n });
    }
    let mut m = LaurentMatrix::identity(n - 1);
    for &l in b.letters() {
        m = m.mul(&burau_generator(n, l))?;
    }
    Ok(m)
}

fn companion_powers(k: usize) -> Result<Vec<IntMatrix>> {
    let c = companion(k);
    let mut powers = vec![IntMatrix::identity(k - 1)];
    for _ in 1..k {
        let next = powers.last().expect("nonempty").mul(&c)?;
        powers.push(next);
    }
    Ok(powers)
}

/// `burau_reduced(b)` with `t` replaced by the companion matrix `K` of
/// `1 + t + ⋯ + t^{k-1}`, an integer matrix of size `(n-1)(k-1)`.
pub fn burau_at_companion(b: &BraidWord, k: usize) -> Result<IntMatrix> {
    check_cover(b.strands(), k)?;
    burau_reduced(b)?.substitute_blocks(&companion_powers(k)?)
}

/// A unimodular `V` with `H_i V = V B_i` for every generator, where `H_i`
/// is the homology action of the lift of `σ_i` and `B_i` its Burau matrix
/// at the companion. Then `B(b) = V⁻¹ H(b) V` for every braid `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseChange {
    pub n: usize,
    pub k: usize,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl BaseChange {
    pub fn solve(n: usize, k: usize) -> Result<Self> {
        check_cover(n, k)?;
        let d = h1_rank(n, k);
        let mut pairs = Vec::new();
        for i in 1..n {
            let g = BraidWord::new(n, vec![ArtinLetter::positive(i)])?;
            pairs.push((homology_rep(&lift_word(&g, k))?, burau_at_companion(&g, k)?));
        }
        let works = |v: &IntMatrix| -> bool {
            pairs.iter().all(|(h, b)| match (h.mul(v), v.mul(b)) {
                (Ok(x), Ok(y)) => x == y,
                _ => false,
            })
        };

        let id = IntMatrix::identity(d);
        let v = if works(&id) {
            id
        } else {
            search(&pairs, d).ok_or(Error::NoBaseChange { n, k })?
        };
        debug_assert!(works(&v));
        let v_inv = v.inverse_unimodular()?;
        Ok(BaseChange { n, k, v, v_inv })
    }

    /// `V⁻¹ · m · V`.
    pub fn conjugate(&self, m: &IntMatrix) -> Result<IntMatrix> {
        self.v_inv.mul(m)?.mul(&self.v)
    }

    /// Whether `burau_at_companion(b) = V⁻¹ · homology_rep(lift_word(b)) · V`.
    pub fn agrees_on(&self, b: &BraidWord) -> Result<bool> {
        if b.strands() != self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: b.strands(),
            });
        }
        let h = homology_rep(&lift_word(b, self.k))?;
        Ok(self.conjugate(&h)? == burau_at_companion(b, self.k)?)
    }
}

fn search(pairs: &[(IntMatrix, IntMatrix)], d: usize) -> Option<IntMatrix> {
    let unimodular = |v: &IntMatrix| matches!(v.det(), Ok(1) | Ok(-1));
    pick_unimodular(&solution_space(pairs, d), d, &unimodular)
}

/// Integer basis of `{V : H_i V - V B_i = 0 for all i}`, each `V`
/// flattened row-major.
fn solution_space(pairs: &[(IntMatrix, IntMatrix)], d: usize) -> Vec<Vec<i128>> {
    use num_rational::Ratio;
    let unknowns = d * d;
    let mut rows = Vec::new();
    for (h, b) in pairs {
        // (H V - V B)[r][c] = Σ_m H[r][m] V[m][c] - Σ_m V[r][m] B[m][c]
        for r in 0..d {
            for c in 0..d {
                let mut row = vec![Ratio::from_integer(0i128); unknowns];
                for m in 0..d {
                    row[m * d + c] += Ratio::from_integer(h.get(r, m));
                    row[r * d + m] -= Ratio::from_integer(b.get(m, c));
                }
                rows.push(row);
            }
        }
    }
    integer_nullspace(rows, unknowns)
}

/// First unimodular matrix among the basis vectors and their combinations
/// with coefficients in `{-1, 0, 1}`.
fn pick_unimodular(
    basis: &[Vec<i128>],
    d: usize,
    unimodular: &dyn Fn(&IntMatrix) -> bool,
) -> Option<IntMatrix> {
    let to_matrix =
        |flat: &[i128]| IntMatrix::from_rows(flat.chunks(d).map(<[i128]>::to_vec).collect()).ok();
    let dim = basis.len();
    if dim == 0 || dim > 10 {
        return None;
    }
    let total = 3usize.pow(dim as u32);
    for code in 1..total {
        let mut c = code;
        let mut flat = vec![0i128; d * d];
        for v in basis {
            let coeff = (c % 3) as i128 - 1;
            c /= 3;
            for (x, y) in flat.iter_mut().zip(v) {
                *x += coeff * y;
            }
        }
        if let Some(m) = to_matrix(&flat) {
            if unimodular(&m) {
                return Some(m);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::homology::{homology_rep_with, SignConvention};
    use super::*;

    #[test]
    fn search_recovers_a_sign_change() {
        // flipping the sign of e_{i,l} for even i negates the pairings
        // between neighbouring rows
        let flipped = SignConvention {
            vertical: -SignConvention::STANDARD.vertical,
            diagonal: -SignConvention::STANDARD.diagonal,
            ..SignConvention::STANDARD
        };
        for &(n, k) in &[(3, 2), (3, 3), (4, 3)] {
            let d = h1_rank(n, k);
            let pairs: Vec<(IntMatrix, IntMatrix)> = (1..n)
                .map(|i| {
                    let g = BraidWord::new(n, vec![ArtinLetter::positive(i)]).unwrap();
                    (
                        homology_rep_with(&lift_word(&g, k), flipped).unwrap(),
                        burau_at_companion(&g, k).unwrap(),
                    )
                })
                .collect();
            assert!(pairs.iter().any(|(h, b)| h != b));
            let v = search(&pairs, d).expect("a unimodular base change");
            for (h, b) in &pairs {
                assert_eq!(h.mul(&v).unwrap(), v.mul(b).unwrap());
            }
        }
    }
}

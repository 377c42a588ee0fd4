//! Integer Laurent polynomials in one variable `t` and square matrices
//! over them.

use std::fmt;

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

fn ck(v: Option<i128>) -> Result<i128> {
    v.ok_or(Error::Overflow)
}

/// `Σ coeffs[j] · t^(low + j)`, kept with nonzero first and last
/// coefficients; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<i128>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · t^e`.
    pub fn monomial(c: i128, e: i64) -> Self {
        Self::from_coeffs(e, vec![c])
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<i128>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        self.coeffs.drain(..lead);
        self.low += lead as i64;
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (self.low + j as i64, c))
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let low = self.low.min(other.low);
        let high = (self.low + self.coeffs.len() as i64).max(other.low + other.coeffs.len() as i64);
        let mut coeffs = vec![0i128; (high - low) as usize];
        for (e, c) in self.terms().chain(other.terms()) {
            let cell = &mut coeffs[(e - low) as usize];
            *cell = ck(cell.checked_add(c))?;
        }
        Ok(Self::from_coeffs(low, coeffs))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let cell = &mut coeffs[i + j];
                *cell = ck(cell.checked_add(ck(a.checked_mul(b))?))?;
            }
        }
        Ok(Self::from_coeffs(self.low + other.low, coeffs))
    }

    /// Value at an integer `t`; `t` must be `±1` when negative powers occur.
    pub fn eval(&self, t: i128) -> Result<i128> {
        if self.low < 0 && t.abs() != 1 {
            return Err(Error::Dimension(format!(
                "t^{} is not integral at t = {t}",
                self.low
            )));
        }
        let mut acc = 0i128;
        for (e, c) in self.terms() {
            let pow = if t.abs() == 1 {
                if t == -1 && e.rem_euclid(2) == 1 {
                    -1
                } else {
                    1
                }
            } else {
                ck(t.checked_pow(e as u32))?
            };
            acc = ck(acc.checked_add(ck(c.checked_mul(pow))?))?;
        }
        Ok(acc)
    }

    /// `p(K)` for a matrix `K` of finite order `order` (so `K^e = K^{e mod order}`).
    pub fn eval_finite_order(&self, k_powers: &[IntMatrix]) -> Result<IntMatrix> {
        let order = k_powers.len() as i64;
        let dim = k_powers[0].dim();
        let mut out = IntMatrix::zeros(dim);
        for (e, c) in self.terms() {
            let term = k_powers[e.rem_euclid(order) as usize].scale(c)?;
            out = out.add(&term)?;
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self
            .terms()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .enumerate()
        {
            let sign = if c < 0 { "-" } else { "+" };
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}")?,
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Square matrix with Laurent polynomial entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentMatrix {
    dim: usize,
    data: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(dim: usize) -> Self {
        LaurentMatrix {
            dim,
            data: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: LaurentPoly) {
        self.data[r * self.dim + c] = p;
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn mul(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!("{} vs {}", self.dim, other.dim)));
        }
        let d = self.dim;
        let mut out = Self::zeros(d);
        for r in 0..d {
            for c in 0..d {
                let mut acc = LaurentPoly::zero();
                for m in 0..d {
                    let (a, b) = (self.get(r, m), other.get(m, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b)?)?;
                    }
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Entrywise value at an integer `t`.
    pub fn eval(&self, t: i128) -> Result<IntMatrix> {
        let rows = (0..self.dim)
            .map(|r| {
                (0..self.dim)
                    .map(|c| self.get(r, c).eval(t))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::from_rows(rows)
    }

    /// Replaces every entry `p(t)` by the block `p(K)` for a matrix `K` of
    /// finite order, given as its list of powers `K^0, …, K^{order-1}`.
    pub fn substitute_blocks(&self, k_powers: &[IntMatrix]) -> Result<IntMatrix> {
        let b = k_powers[0].dim();
        let mut out = IntMatrix::zeros(self.dim * b);
        for r in 0..self.dim {
            for c in 0..self.dim {
                let block = self.get(r, c).eval_finite_order(k_powers)?;
                for i in 0..b {
                    for j in 0..b {
                        out.set(r * b + i, c * b + j, block.get(i, j));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Determinant by permutation expansion; meant for small dimensions.
    pub fn det(&self) -> Result<LaurentPoly> {
        fn rec(
            m: &LaurentMatrix,
            row: usize,
            used: &mut Vec<bool>,
            sign: i128,
        ) -> Result<LaurentPoly> {
            let d = m.dim;
            if row == d {
                return Ok(LaurentPoly::monomial(sign, 0));
            }
            let mut acc = LaurentPoly::zero();
            let mut s = sign;
            // sign of choosing column c = (-1)^(number of unused columns before c)
            for c in 0..d {
                if used[c] {
                    continue;
                }
                let entry = m.get(row, c);
                if !entry.is_zero() {
                    used[c] = true;
                    let minor = rec(m, row + 1, used, s)?;
                    used[c] = false;
                    acc = acc.add(&entry.mul(&minor)?)?;
                }
                s = -s;
            }
            Ok(acc)
        }
        rec(self, 0, &mut vec![false; self.dim], 1)
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i128]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c.to_vec())
    }

    #[test]
    fn arithmetic() {
        let a = p(-1, &[1, 0, 2]); // t^-1 + 2t
        let b = p(0, &[1, -1]); // 1 - t
        assert_eq!(a.mul(&b).unwrap(), p(-1, &[1, -1, 2, -2]));
        assert!(a.add(&a.neg()).unwrap().is_zero());
        assert_eq!(p(2, &[0, 0, 3, 0]), LaurentPoly::monomial(3, 4));
        assert_eq!(a.eval(1).unwrap(), 3);
        assert_eq!(a.eval(-1).unwrap(), -3);
        assert!(a.eval(2).is_err());
        assert_eq!(b.eval(3).unwrap(), -2);
    }

    #[test]
    fn display() {
        assert_eq!(LaurentPoly::monomial(-1, 1).to_string(), "-t");
        assert_eq!(p(-1, &[1, 0, 2]).to_string(), "2t + t^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(0, &[1, -1]).to_string(), "-t + 1");
    }

    #[test]
    fn determinant_of_small_matrices() {
        let mut m = LaurentMatrix::identity(3);
        m.set(0, 1, LaurentPoly::monomial(5, 2));
        m.set(1, 1, LaurentPoly::monomial(-1, 1));
        assert_eq!(m.det().unwrap(), LaurentPoly::monomial(-1, 1));
        let mut swap = LaurentMatrix::zeros(2);
        swap.set(0, 1, LaurentPoly::one());
        swap.set(1, 0, LaurentPoly::one());
        assert_eq!(swap.det().unwrap(), LaurentPoly::monomial(-1, 0));
    }
}

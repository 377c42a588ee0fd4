//! Square integer matrices with overflow-checked arithmetic.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

type Q = Ratio<i128>;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i128>>", into = "Vec<Vec<i128>>")]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i128>,
}

impl TryFrom<Vec<Vec<i128>>> for IntMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i128>>) -> Result<Self> {
        IntMatrix::from_rows(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i128>> {
    fn from(m: IntMatrix) -> Self {
        m.rows()
    }
}

fn ck(v: Option<i128>) -> Result<i128> {
    v.ok_or(Error::Overflow)
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i128>>) -> Result<Self> {
        let dim = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::Dimension(format!(
                "row of length {} in a {dim}×{dim} matrix",
                r.len()
            )));
        }
        Ok(IntMatrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.dim + c] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i128>> {
        self.data
            .chunks(self.dim.max(1))
            .take(self.dim)
            .map(<[i128]>::to_vec)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    fn same_dim(&self, other: &IntMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!("{} vs {}", self.dim, other.dim)));
        }
        Ok(())
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.same_dim(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| ck(a.checked_add(*b)))
            .collect::<Result<_>>()?;
        Ok(IntMatrix {
            dim: self.dim,
            data,
        })
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.same_dim(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| ck(a.checked_sub(*b)))
            .collect::<Result<_>>()?;
        Ok(IntMatrix {
            dim: self.dim,
            data,
        })
    }

    pub fn scale(&self, s: i128) -> Result<IntMatrix> {
        let data = self
            .data
            .iter()
            .map(|a| ck(a.checked_mul(s)))
            .collect::<Result<_>>()?;
        Ok(IntMatrix {
            dim: self.dim,
            data,
        })
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.same_dim(other)?;
        let d = self.dim;
        let mut out = Self::zeros(d);
        for r in 0..d {
            for m in 0..d {
                let a = self.get(r, m);
                if a == 0 {
                    continue;
                }
                for c in 0..d {
                    let b = other.get(m, c);
                    if b != 0 {
                        let cell = &mut out.data[r * d + c];
                        *cell = ck(cell.checked_add(ck(a.checked_mul(b))?))?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[i128]) -> Result<Vec<i128>> {
        if v.len() != self.dim {
            return Err(Error::Dimension(format!(
                "vector of length {} for dim {}",
                v.len(),
                self.dim
            )));
        }
        (0..self.dim)
            .map(|r| {
                (0..self.dim).try_fold(0i128, |acc, c| {
                    ck(acc.checked_add(ck(self.get(r, c).checked_mul(v[c]))?))
                })
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> Result<IntMatrix> {
        let mut out = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<i128> {
        let d = self.dim;
        if d == 0 {
            return Ok(1);
        }
        let mut a = self.data.clone();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..d - 1 {
            if a[k * d + k] == 0 {
                let Some(p) = (k + 1..d).find(|&r| a[r * d + k] != 0) else {
                    return Ok(0);
                };
                for c in 0..d {
                    a.swap(k * d + c, p * d + c);
                }
                sign = -sign;
            }
            for r in k + 1..d {
                for c in k + 1..d {
                    let x = ck(a[r * d + c].checked_mul(a[k * d + k]))?;
                    let y = ck(a[r * d + k].checked_mul(a[k * d + c]))?;
                    a[r * d + c] = ck(x.checked_sub(y))? / prev;
                }
            }
            prev = a[k * d + k];
        }
        ck(a[d * d - 1].checked_mul(sign))
    }

    pub fn to_rational(&self) -> Vec<Vec<Q>> {
        self.rows()
            .into_iter()
            .map(|r| r.into_iter().map(Q::from_integer).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        rational_rank(self.to_rational())
    }

    /// Inverse of a matrix with determinant `±1`.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let d = self.dim;
        let mut aug: Vec<Vec<Q>> = self
            .to_rational()
            .into_iter()
            .enumerate()
            .map(|(r, mut row)| {
                row.extend((0..d).map(|c| Q::from_integer((r == c) as i128)));
                row
            })
            .collect();
        for col in 0..d {
            let Some(p) = (col..d).find(|&r| aug[r][col] != Q::from_integer(0)) else {
                return Err(Error::Dimension("singular matrix".into()));
            };
            aug.swap(col, p);
            let pivot = aug[col][col];
            for x in aug[col].iter_mut() {
                *x /= pivot;
            }
            for r in 0..d {
                if r != col && aug[r][col] != Q::from_integer(0) {
                    let f = aug[r][col];
                    let pivot_row = aug[col].clone();
                    for (x, y) in aug[r].iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
        let rows = aug
            .into_iter()
            .map(|row| {
                row[d..]
                    .iter()
                    .map(|x| {
                        x.is_integer()
                            .then(|| x.to_integer())
                            .ok_or_else(|| Error::Dimension("inverse is not integral".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::from_rows(rows)
    }

    /// Block-diagonal matrix with `copies` copies of `block`.
    pub fn block_diagonal(block: &IntMatrix, copies: usize) -> IntMatrix {
        let b = block.dim;
        let mut out = Self::zeros(b * copies);
        for i in 0..copies {
            for r in 0..b {
                for c in 0..b {
                    out.set(i * b + r, i * b + c, block.get(r, c));
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(i128::to_string).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form over `Q`; returns the pivot columns.
pub(crate) fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let zero = Q::from_integer(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != zero) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c];
        for x in m[r].iter_mut() {
            *x /= pivot;
        }
        for i in 0..rows {
            if i != r && m[i][c] != zero {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rational_rank(mut m: Vec<Vec<Q>>) -> usize {
    rref(&mut m).len()
}

/// A basis of the right nullspace over `Q`, each vector scaled to a
/// primitive integer vector.
pub(crate) fn integer_nullspace(mut m: Vec<Vec<Q>>, cols: usize) -> Vec<Vec<i128>> {
    use num_integer::Integer;
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::from_integer(0); cols];
            v[f] = Q::from_integer(1);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][f];
            }
            let lcm = v.iter().fold(1i128, |acc, x| acc.lcm(x.denom()));
            let ints: Vec<i128> = v.iter().map(|x| (x * lcm).to_integer()).collect();
            let g = ints.iter().fold(0i128, |acc, x| acc.gcd(x)).max(1);
            ints.into_iter().map(|x| x / g).collect()
        })
        .collect()
}

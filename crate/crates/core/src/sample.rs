//! Seeded random braids and certificates for property checks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::{ArtinLetter, BraidWord};
use crate::qp::{Band, QPCertificate};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random word of exactly `len` letters on `n ≥ 2` strands.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let mut w = BraidWord::identity(n);
    if n < 2 {
        return w;
    }
    for _ in 0..len {
        let i = rng.gen_range(1..n);
        w.push(ArtinLetter::new(i, rng.gen_bool(0.5)));
    }
    w
}

pub fn random_positive_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let mut w = BraidWord::identity(n);
    for _ in 0..len {
        w.push(ArtinLetter::positive(rng.gen_range(1..n)));
    }
    w
}

/// Random certificate with `bands` bands whose conjugators have length
/// at most `max_conj`.
pub fn random_certificate<R: Rng>(
    rng: &mut R,
    n: usize,
    bands: usize,
    max_conj: usize,
) -> QPCertificate {
    let list = (0..bands)
        .map(|_| {
            let len = rng.gen_range(0..=max_conj);
            Band::new(random_word(rng, n, len), rng.gen_range(1..n)).expect("valid band")
        })
        .collect();
    QPCertificate::new(n, list).expect("valid certificate")
}

/// Applies `steps` random relation moves (commutation, braid relation,
/// insertion or deletion of a cancelling pair), leaving the element fixed.
pub fn random_rewrite<R: Rng>(rng: &mut R, w: &BraidWord, steps: usize) -> BraidWord {
    let n = w.strands();
    let mut v: Vec<i32> = w.letters().iter().map(|l| l.signed()).collect();
    if n < 2 {
        return w.clone();
    }
    for _ in 0..steps {
        match rng.gen_range(0..4) {
            0 => {
                let pos = rng.gen_range(0..=v.len());
                let i = rng.gen_range(1..n) as i32;
                let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                v.splice(pos..pos, [s * i, -s * i]);
            }
            1 => {
                let spots: Vec<usize> = (0..v.len().saturating_sub(1))
                    .filter(|&p| v[p] == -v[p + 1])
                    .collect();
                if let Some(&p) = spots.get(rng.gen_range(0..spots.len().max(1))) {
                    v.drain(p..p + 2);
                }
            }
            2 => {
                let spots: Vec<usize> = (0..v.len().saturating_sub(1))
                    .filter(|&p| (v[p].abs() - v[p + 1].abs()).abs() >= 2)
                    .collect();
                if let Some(&p) = spots.get(rng.gen_range(0..spots.len().max(1))) {
                    v.swap(p, p + 1);
                }
            }
            _ => {
                // a b a -> b a b for |a|,|b| adjacent and equal signs
                let spots: Vec<usize> = (0..v.len().saturating_sub(2))
                    .filter(|&p| {
                        let (a, b, c) = (v[p], v[p + 1], v[p + 2]);
                        a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1
                    })
                    .collect();
                if let Some(&p) = spots.get(rng.gen_range(0..spots.len().max(1))) {
                    let (a, b) = (v[p], v[p + 1]);
                    v[p] = b;
                    v[p + 1] = a;
                    v[p + 2] = b;
                } else {
                    // plant σ_i σ_{i+1} σ_i ... via a cancelling-pair trick is not
                    // needed; insert a full relator instead
                    if n >= 3 {
                        let i = rng.gen_range(1..n - 1) as i32;
                        let pos = rng.gen_range(0..=v.len());
                        v.splice(pos..pos, [i, i + 1, i, -(i + 1), -i, -(i + 1)]);
                    }
                }
            }
        }
    }
    BraidWord::from_signed(n, &v).expect("indices preserved")
}

//! Permutation braids (simple elements of the Garside structure on `B_n`).
//!
//! A simple element is identified with its permutation `π`, where `π(i)` is
//! the final position of the strand starting at position `i`. Two strands
//! cross (once, positively) iff their order is reversed by `π`.

use crate::braid::{ArtinLetter, BraidWord, Permutation};

pub fn identity(n: usize) -> Permutation {
    Permutation::identity(n)
}

/// The half twist `Δ`: `i ↦ n-1-i`.
pub fn delta(n: usize) -> Permutation {
    Permutation::from_images_unchecked((0..n).rev().collect())
}

pub fn is_delta(s: &Permutation) -> bool {
    let n = s.len();
    s.images().iter().enumerate().all(|(i, &x)| x == n - 1 - i)
}

/// `σ_i` (1-based index) as a permutation braid.
pub fn generator(n: usize, index: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.swap(index - 1, index);
    Permutation::from_images_unchecked(images)
}

/// Product `a·b` of simple elements, as a permutation. The product is
/// itself simple only when no pair of strands crosses in both.
pub fn product(a: &Permutation, b: &Permutation) -> Permutation {
    a.then(b)
}

pub fn product_is_simple(a: &Permutation, b: &Permutation) -> bool {
    a.inversions() + b.inversions() == a.then(b).inversions()
}

/// Right complement `∂a = a⁻¹Δ`, so that `a·∂a = Δ`.
pub fn right_complement(a: &Permutation) -> Permutation {
    let n = a.len();
    let inv = a.inverse();
    Permutation::from_images_unchecked(inv.images().iter().map(|&x| n - 1 - x).collect())
}

/// `τ(a) = Δ⁻¹ a Δ`, the flip `σ_i ↦ σ_{n-i}`. An involution.
pub fn tau(a: &Permutation) -> Permutation {
    let n = a.len();
    Permutation::from_images_unchecked((0..n).map(|i| n - 1 - a.apply(n - 1 - i)).collect())
}

pub fn tau_pow(a: &Permutation, p: i64) -> Permutation {
    if p.rem_euclid(2) == 0 {
        a.clone()
    } else {
        tau(a)
    }
}

/// Starting set: the `i` (0-based) with `σ_{i+1} ≼ a`.
#[inline]
pub fn starts_with(a: &Permutation, i: usize) -> bool {
    a.apply(i) > a.apply(i + 1)
}

/// `a = b·σ_{i+1}` for some simple `b`.
pub fn finishes_with(a_inv: &Permutation, i: usize) -> bool {
    a_inv.apply(i) > a_inv.apply(i + 1)
}

/// Strips `σ_{i+1}` from the left of `a`; requires `starts_with(a, i)`.
fn strip_left(a: &mut Permutation, i: usize) {
    let mut images = a.images().to_vec();
    images.swap(i, i + 1);
    *a = Permutation::from_images_unchecked(images);
}

/// Left gcd `a ∧ b` (largest common prefix).
pub fn left_gcd(a: &Permutation, b: &Permutation) -> Permutation {
    let n = a.len();
    let mut a = a.clone();
    let mut b = b.clone();
    let mut g: Vec<usize> = (0..n).collect();
    'outer: loop {
        for i in 0..n.saturating_sub(1) {
            if starts_with(&a, i) && starts_with(&b, i) {
                strip_left(&mut a, i);
                strip_left(&mut b, i);
                // g ← g·σ_{i+1}: the strands now at positions i, i+1 swap
                for x in g.iter_mut() {
                    if *x == i {
                        *x = i + 1;
                    } else if *x == i + 1 {
                        *x = i;
                    }
                }
                continue 'outer;
            }
        }
        break;
    }
    Permutation::from_images_unchecked(g)
}

/// Makes the pair `(a, b)` left-weighted in place, keeping the product
/// `a·b` fixed. Returns whether anything changed.
pub fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let c = left_gcd(&right_complement(a), b);
    if c.is_identity() {
        return false;
    }
    *a = a.then(&c);
    *b = c.inverse().then(b);
    true
}

/// `S(b) ⊆ F(a)`.
pub fn is_left_weighted(a: &Permutation, b: &Permutation) -> bool {
    let a_inv = a.inverse();
    (0..a.len().saturating_sub(1)).all(|i| !starts_with(b, i) || finishes_with(&a_inv, i))
}

/// A positive word for the simple element, one crossing per inverted pair.
pub fn to_word(a: &Permutation) -> BraidWord {
    let n = a.len();
    let mut rest = a.clone();
    let mut w = BraidWord::identity(n);
    'outer: loop {
        for i in 0..n.saturating_sub(1) {
            if starts_with(&rest, i) {
                w.push(ArtinLetter::positive(i + 1));
                strip_left(&mut rest, i);
                continue 'outer;
            }
        }
        break;
    }
    w
}

/// All `n!` simple elements in lexicographic order of image arrays.
pub fn all_simple(n: usize) -> Vec<Permutation> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation::from_images_unchecked(cur.clone()));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_words_reverse_strands() {
        for n in 1..=7 {
            let w = to_word(&delta(n));
            assert_eq!(w.len(), n * (n - 1) / 2);
            assert_eq!(w.permutation(), delta(n));
        }
    }

    #[test]
    fn words_realize_their_permutations() {
        for n in 1..=5 {
            for s in all_simple(n) {
                let w = to_word(&s);
                assert_eq!(w.permutation(), s);
                assert_eq!(w.len(), s.inversions());
            }
        }
    }

    #[test]
    fn complement_and_tau() {
        for s in all_simple(4) {
            let c = right_complement(&s);
            assert!(product_is_simple(&s, &c));
            assert!(is_delta(&product(&s, &c)));
            assert_eq!(tau(&tau(&s)), s);
        }
        assert_eq!(tau(&generator(4, 1)), generator(4, 3));
    }

    #[test]
    fn gcd_is_common_prefix() {
        let n = 4;
        let all = all_simple(n);
        for a in all.iter().step_by(5) {
            for b in all.iter().step_by(3) {
                let g = left_gcd(a, b);
                let ga = g.inverse().then(a);
                let gb = g.inverse().then(b);
                assert!(product_is_simple(&g, &ga));
                assert!(product_is_simple(&g, &gb));
                // nothing more in common
                assert!((0..n - 1).all(|i| !(starts_with(&ga, i) && starts_with(&gb, i))));
            }
        }
    }

    #[test]
    fn left_weighting_preserves_product() {
        let all = all_simple(4);
        for a in all.iter().step_by(7) {
            for b in all.iter().step_by(5) {
                let (mut x, mut y) = (a.clone(), b.clone());
                left_weight(&mut x, &mut y);
                assert!(is_left_weighted(&x, &y));
                let before = to_word(a).concat(&to_word(b)).unwrap().permutation();
                let after = to_word(&x).concat(&to_word(&y)).unwrap().permutation();
                assert_eq!(before, after);
                assert_eq!(
                    a.inversions() + b.inversions(),
                    x.inversions() + y.inversions()
                );
            }
        }
    }
}

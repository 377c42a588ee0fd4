//! Garside theory for `B_n`: left normal forms, the word problem,
//! positivity, periodicity, periodic roots and conjugacy.

pub mod conjugacy;
pub mod normal_form;
pub mod periodic;
pub mod simple;

pub use conjugacy::{conjugacy, Conjugacy, DEFAULT_BUDGET};
pub use normal_form::NormalForm;
pub use periodic::{is_periodic, periodic_root, root_candidate, PeriodicRoot, RootKind};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// The positive half twist `Δ_n = (σ1⋯σ_{n-1})(σ1⋯σ_{n-2})⋯σ1`.
pub fn half_twist(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::TooFewStrands { min: 2, got: n });
    }
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for top in (1..n).rev() {
        letters.extend(1..=top as i32);
    }
    BraidWord::from_signed(n, &letters)
}

pub fn normal_form(w: &BraidWord) -> NormalForm {
    NormalForm::from_word(w)
}

pub fn nf_to_word(nf: &NormalForm) -> BraidWord {
    nf.to_word()
}

pub fn is_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(normal_form(a) == normal_form(b))
}

/// `(inf, sup)` of the braid.
pub fn inf_sup(w: &BraidWord) -> (i64, i64) {
    let nf = normal_form(w);
    (nf.inf(), nf.sup())
}

/// Membership in the positive monoid, decided by `inf ≥ 0`.
pub fn is_positive_braid(w: &BraidWord) -> bool {
    normal_form(w).inf() >= 0
}

pub fn power(w: &BraidWord, d: i64) -> BraidWord {
    w.power(d)
}

/// Decides conjugacy with the default budget; `Some(w)` with `w a w⁻¹ = b`.
pub fn is_conjugate(a: &BraidWord, b: &BraidWord) -> Result<Option<BraidWord>> {
    is_conjugate_with_budget(a, b, DEFAULT_BUDGET)
}

pub fn is_conjugate_with_budget(
    a: &BraidWord,
    b: &BraidWord,
    budget: usize,
) -> Result<Option<BraidWord>> {
    Ok(conjugacy(a, b, budget)?.witness().cloned())
}

//! Periodic braids and their roots.
//!
//! Every periodic braid is conjugate to a power of `δ = σ1σ2⋯σ_{n-1}` or of
//! `γ = σ1²σ2⋯σ_{n-1}`, and `δ^n = γ^{n-1} = Δ²`. Periodicity is therefore
//! decided exactly by checking whether `w^n` or `w^{n-1}` is central.

use serde::{Deserialize, Serialize};

use super::conjugacy::conjugacy;
use super::normal_form::NormalForm;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RootKind {
    /// `δ = σ1σ2⋯σ_{n-1}`
    Delta,
    /// `γ = σ1²σ2⋯σ_{n-1}`
    Gamma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeriodicRoot {
    pub kind: RootKind,
    pub power: i64,
}

impl PeriodicRoot {
    pub fn base_word(kind: RootKind, n: usize) -> BraidWord {
        let mut letters: Vec<i32> = (1..n as i32).collect();
        if kind == RootKind::Gamma && n >= 2 {
            letters.insert(0, 1);
        }
        BraidWord::from_signed(n, &letters).expect("indices below n")
    }

    /// `δ^i` or `γ^i` as a word.
    pub fn word(&self, n: usize) -> BraidWord {
        Self::base_word(self.kind, n).power(self.power)
    }
}

/// True iff some positive power of `w` is central.
pub fn is_periodic(w: &BraidWord) -> bool {
    let n = w.strands();
    if n <= 2 {
        return true;
    }
    let nf = NormalForm::from_word(w);
    [n as u32, n as u32 - 1]
        .into_iter()
        .any(|d| nf.power(d).is_central())
}

/// The exponent `i` making `Ab(base^i)·d = Ab(w)`, if integral.
pub fn root_candidate(kind: RootKind, n: usize, d: i64, ab: i64) -> Option<i64> {
    let unit = match kind {
        RootKind::Delta => n as i64 - 1,
        RootKind::Gamma => n as i64,
    };
    let denom = unit * d;
    if denom == 0 || ab % denom != 0 {
        return None;
    }
    Some(ab / denom)
}

/// Finds `δ^i` or `γ^i` whose `d`-th power is conjugate to `w`.
///
/// The exponent-sum constraint leaves at most one candidate per kind.
/// `δ` candidates are tried first.
pub fn periodic_root(w: &BraidWord, d: i64, budget: usize) -> Result<Option<PeriodicRoot>> {
    if !is_periodic(w) {
        return Err(Error::NotPeriodic);
    }
    if d < 1 {
        return Err(Error::Malformed(format!(
            "root degree must be >= 1, got {d}"
        )));
    }
    let n = w.strands();
    if n < 2 {
        return Ok(Some(PeriodicRoot {
            kind: RootKind::Delta,
            power: 0,
        }));
    }
    let ab = w.exponent_sum();
    for kind in [RootKind::Delta, RootKind::Gamma] {
        let Some(i) = root_candidate(kind, n, d, ab) else {
            continue;
        };
        let root = PeriodicRoot { kind, power: i };
        let candidate = root.word(n).power(d);
        if conjugacy(&candidate, w, budget)?.is_conjugate() {
            return Ok(Some(root));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::{half_twist, is_equal, DEFAULT_BUDGET};

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    fn full_twist(n: usize) -> BraidWord {
        half_twist(n).unwrap().power(2)
    }

    #[test]
    fn delta_and_gamma_powers_are_full_twists() {
        for n in 2..=6 {
            let d = PeriodicRoot::base_word(RootKind::Delta, n);
            let g = PeriodicRoot::base_word(RootKind::Gamma, n);
            assert!(is_equal(&d.power(n as i64), &full_twist(n)).unwrap());
            assert!(is_equal(&g.power(n as i64 - 1), &full_twist(n)).unwrap());
        }
    }

    #[test]
    fn periodicity_examples() {
        assert!(is_periodic(&w(3, "1 2")));
        assert!(is_periodic(&w(3, "1 1 2")));
        assert!(!is_periodic(&w(3, "1")));
        assert!(!is_periodic(&w(3, "1 -2")));
        assert!(is_periodic(&w(2, "1")));
        assert!(is_periodic(&half_twist(5).unwrap()));
    }

    #[test]
    fn sigma1_powers_are_not_central() {
        let s = NormalForm::from_word(&w(3, "1"));
        assert!(!s.power(3).is_central());
        assert!(!s.power(2).is_central());
    }

    #[test]
    fn periodic_root_examples() {
        let d2 = full_twist(3);
        assert_eq!(
            periodic_root(&d2, 3, DEFAULT_BUDGET).unwrap(),
            Some(PeriodicRoot {
                kind: RootKind::Delta,
                power: 1
            })
        );
        assert_eq!(
            periodic_root(&d2, 2, DEFAULT_BUDGET).unwrap(),
            Some(PeriodicRoot {
                kind: RootKind::Gamma,
                power: 1
            })
        );
        assert_eq!(periodic_root(&w(2, "1"), 2, DEFAULT_BUDGET).unwrap(), None);
        assert!(matches!(
            periodic_root(&w(3, "1"), 2, DEFAULT_BUDGET),
            Err(Error::NotPeriodic)
        ));
    }

    #[test]
    fn roots_of_conjugated_periodic_braids() {
        // u δ² u⁻¹ in B_4 has square root δ
        let u = w(4, "2 -3 1");
        let delta = PeriodicRoot::base_word(RootKind::Delta, 4);
        let target = u
            .concat(&delta.power(2))
            .unwrap()
            .concat(&u.inverse())
            .unwrap();
        let root = periodic_root(&target, 2, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(
            root,
            PeriodicRoot {
                kind: RootKind::Delta,
                power: 1
            }
        );
        // and a cube root of Δ⁻² in B_3 is δ⁻¹
        let inv = full_twist(3).inverse();
        let root = periodic_root(&inv, 3, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(
            root,
            PeriodicRoot {
                kind: RootKind::Delta,
                power: -1
            }
        );
    }
}

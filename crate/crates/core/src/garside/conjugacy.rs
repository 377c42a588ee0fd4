//! Conjugacy in `B_n` through ultra summit sets.
//!
//! Both inputs are moved into their super summit sets by iterated cycling
//! and decycling, then onto a cycling circuit (the ultra summit set). The
//! ultra summit set of `a` is enumerated breadth-first by conjugating with
//! every simple element and keeping the results that stay on a circuit.
//! Ultra summit sets are connected under simple conjugators, so the search
//! is complete; it is cut off after `budget` nodes.

use std::collections::{HashMap, VecDeque};

use super::normal_form::NormalForm;
use super::simple;
use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: usize = 20_000;

/// Outcome of a completed conjugacy search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conjugacy {
    /// `witness · a · witness⁻¹ = b`.
    Conjugate {
        witness: BraidWord,
    },
    NotConjugate,
}

impl Conjugacy {
    pub fn is_conjugate(&self) -> bool {
        matches!(self, Conjugacy::Conjugate { .. })
    }

    pub fn witness(&self) -> Option<&BraidWord> {
        match self {
            Conjugacy::Conjugate { witness } => Some(witness),
            Conjugacy::NotConjugate => None,
        }
    }
}

/// A normal form together with `c` such that `form = c⁻¹ · original · c`.
#[derive(Clone, Debug)]
struct Tracked {
    form: NormalForm,
    conj: BraidWord,
}

impl Tracked {
    fn new(w: &BraidWord) -> Self {
        Tracked {
            form: NormalForm::from_word(w),
            conj: BraidWord::identity(w.strands()),
        }
    }

    /// Applies `x ↦ y⁻¹ x y` where `y` is the simple element `s` (or its
    /// inverse when `inverse` is set).
    fn step(&mut self, next: NormalForm, s: &Permutation, inverse: bool) {
        self.form = next;
        let w = simple::to_word(s);
        let w = if inverse { w.inverse() } else { w };
        self.conj.extend(&w);
    }
}

fn norm_delta(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Raises `inf` to its maximum over the conjugacy class, then lowers `sup`.
fn to_super_summit(t: &mut Tracked) {
    let n = t.form.strands();
    let patience = norm_delta(n).max(1);
    let mut idle = 0;
    while idle < patience {
        let Some((next, y)) = t.form.cycling() else {
            return;
        };
        let grew = next.inf() > t.form.inf();
        t.step(next, &y, false);
        idle = if grew { 0 } else { idle + 1 };
    }
    idle = 0;
    while idle < patience {
        let Some((next, last)) = t.form.decycling() else {
            return;
        };
        let shrank = next.sup() < t.form.sup();
        t.step(next, &last, true);
        idle = if shrank { 0 } else { idle + 1 };
    }
}

/// Iterates cycling until an element repeats; the first repeated element
/// lies on a cycling circuit.
fn to_ultra_summit(t: &mut Tracked) {
    let mut seen: HashMap<NormalForm, usize> = HashMap::new();
    let mut trail: Vec<Tracked> = Vec::new();
    loop {
        if let Some(&i) = seen.get(&t.form) {
            *t = trail.swap_remove(i);
            return;
        }
        seen.insert(t.form.clone(), trail.len());
        trail.push(t.clone());
        let Some((next, y)) = t.form.cycling() else {
            return;
        };
        t.step(next, &y, false);
    }
}

/// Whether cycling returns to `x` (i.e. `x` is on a circuit).
fn on_circuit(x: &NormalForm) -> bool {
    let mut seen = std::collections::HashSet::new();
    let mut cur = x.clone();
    loop {
        let Some((next, _)) = cur.cycling() else {
            return true;
        };
        if &next == x {
            return true;
        }
        if !seen.insert(next.clone()) {
            return false;
        }
        cur = next;
    }
}

/// Representative in the ultra summit set plus its conjugator from `w`.
pub(crate) fn ultra_summit_representative(w: &BraidWord) -> (NormalForm, BraidWord) {
    let mut t = Tracked::new(w);
    to_super_summit(&mut t);
    to_ultra_summit(&mut t);
    (t.form, t.conj)
}

/// Decides whether `a` and `b` are conjugate. When they are, the witness
/// `w` satisfies `w a w⁻¹ = b`.
pub fn conjugacy(a: &BraidWord, b: &BraidWord, budget: usize) -> Result<Conjugacy> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    let n = a.strands();
    if a.exponent_sum() != b.exponent_sum()
        || a.permutation().cycle_type() != b.permutation().cycle_type()
    {
        return Ok(Conjugacy::NotConjugate);
    }
    let (ra, ca) = ultra_summit_representative(a);
    let (rb, cb) = ultra_summit_representative(b);
    if ra.inf() != rb.inf() || ra.sup() != rb.sup() {
        return Ok(Conjugacy::NotConjugate);
    }

    // BFS over USS(a): parent links record the simple conjugator used.
    let mut index: HashMap<NormalForm, usize> = HashMap::new();
    let mut nodes: Vec<(NormalForm, Option<(usize, Permutation)>)> = Vec::new();
    index.insert(ra.clone(), 0);
    nodes.push((ra.clone(), None));
    let mut queue = VecDeque::from([0usize]);
    let simples: Vec<Permutation> = simple::all_simple(n)
        .into_iter()
        .filter(|s| !s.is_identity())
        .collect();
    let (inf, sup) = (ra.inf(), ra.sup());

    let mut found = if ra == rb { Some(0) } else { None };
    while found.is_none() {
        let Some(cur) = queue.pop_front() else {
            break;
        };
        let x = nodes[cur].0.clone();
        for s in &simples {
            let y = x.conjugate_by_simple(s);
            if y.inf() != inf || y.sup() != sup || index.contains_key(&y) {
                continue;
            }
            if !on_circuit(&y) {
                continue;
            }
            if nodes.len() >= budget {
                return Err(Error::BudgetExceeded(budget));
            }
            let id = nodes.len();
            index.insert(y.clone(), id);
            let hit = y == rb;
            nodes.push((y, Some((cur, s.clone()))));
            queue.push_back(id);
            if hit {
                found = Some(id);
                break;
            }
        }
    }
    let Some(mut at) = found else {
        return Ok(Conjugacy::NotConjugate);
    };

    // g with rb = g⁻¹ ra g
    let mut path = Vec::new();
    while let Some((parent, s)) = &nodes[at].1 {
        path.push(s.clone());
        at = *parent;
    }
    let mut g = BraidWord::identity(n);
    for s in path.iter().rev() {
        g.extend(&simple::to_word(s));
    }
    // ra = ca⁻¹ a ca, rb = cb⁻¹ b cb  ⇒  b = (cb g⁻¹ ca⁻¹) a (ca g cb⁻¹)
    let mut witness = cb.clone();
    witness.extend(&g.inverse());
    witness.extend(&ca.inverse());
    let witness = witness.free_reduce();
    debug_assert!(verify_witness(a, b, &witness));
    Ok(Conjugacy::Conjugate { witness })
}

fn verify_witness(a: &BraidWord, b: &BraidWord, w: &BraidWord) -> bool {
    let mut lhs = w.clone();
    lhs.extend(a);
    lhs.extend(&w.inverse());
    NormalForm::from_word(&lhs) == NormalForm::from_word(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    fn check(a: &BraidWord, b: &BraidWord) -> bool {
        match conjugacy(a, b, DEFAULT_BUDGET).unwrap() {
            Conjugacy::Conjugate { witness } => {
                assert!(verify_witness(a, b, &witness), "bad witness {witness}");
                true
            }
            Conjugacy::NotConjugate => false,
        }
    }

    #[test]
    fn generators_are_conjugate() {
        assert!(check(&w(3, "1"), &w(3, "2")));
        assert!(check(&w(5, "1"), &w(5, "4")));
        assert!(check(&w(4, "-3"), &w(4, "-1")));
    }

    #[test]
    fn exponent_sum_separates() {
        assert!(!check(&w(3, "1"), &w(3, "1 -2")));
    }

    #[test]
    fn cyclic_shifts_are_conjugate() {
        assert!(check(&w(3, "1 2"), &w(3, "2 1")));
        assert!(check(&w(4, "1 -2 3 3"), &w(4, "3 1 -2 3")));
    }

    #[test]
    fn same_invariants_different_classes() {
        assert!(check(&w(3, "1 -2"), &w(3, "-1 2")));
        // both pure with exponent sum 4; closures are different links
        assert!(!check(&w(3, "1 1 1 1"), &w(3, "1 1 2 2")));
    }

    #[test]
    fn conjugates_by_random_words() {
        let a = w(4, "1 1 2 -3 2");
        let u = w(4, "3 -1 2 2 -3 1");
        let b = u.concat(&a).unwrap().concat(&u.inverse()).unwrap();
        assert!(check(&a, &b));
    }

    #[test]
    fn central_elements_only_conjugate_to_themselves() {
        let d2 = w(3, "(1 2 1)^2");
        assert!(check(&d2, &w(3, "(1 2)^3")));
        assert!(!check(&d2, &w(3, "1^6")));
    }

    #[test]
    fn strand_mismatch_is_an_error() {
        assert!(matches!(
            conjugacy(&w(3, "1"), &w(4, "1"), 10),
            Err(Error::StrandMismatch { .. })
        ));
    }
}

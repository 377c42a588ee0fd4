use super::homology::{homology_rep_with, intersection_form_with};
use super::*;
use crate::garside::half_twist;
use crate::sample;

fn w(n: usize, s: &str) -> BraidWord {
    BraidWord::parse(s, n).unwrap()
}

#[test]
fn cover_data_examples() {
    let d = cover_data(3, 2).unwrap();
    assert_eq!(
        (d.euler_char, d.boundary_components, d.genus, d.h1_rank),
        (-1, 1, 1, 2)
    );
    let d = cover_data(2, 2).unwrap();
    assert_eq!(
        (d.euler_char, d.boundary_components, d.genus, d.h1_rank),
        (0, 2, 0, 1)
    );
    let d = cover_data(5, 4).unwrap();
    assert_eq!(
        (d.euler_char, d.boundary_components, d.genus, d.h1_rank),
        (-11, 1, 6, 12)
    );
    assert!(cover_data(1, 3).is_err());
    assert!(cover_data(3, 1).is_err());
}

#[test]
fn cover_data_invariants() {
    for n in 2..=8 {
        for k in 2..=8 {
            let d = cover_data(n, k).unwrap();
            assert_eq!(d.h1_rank as i64, 1 - d.euler_char);
            assert_eq!(
                d.euler_char,
                2 - 2 * d.genus as i64 - d.boundary_components as i64
            );
        }
    }
}

#[test]
fn lift_examples() {
    assert_eq!(lift_word(&w(3, "1"), 3).to_string(), "t[1,1] t[1,2]");
    assert_eq!(lift_word(&w(3, "-1"), 3).to_string(), "t[1,2]^-1 t[1,1]^-1");
    assert!(lift_word(&BraidWord::identity(4), 5).is_empty());
    let b = w(4, "1 -3 2");
    assert_eq!(lift_word(&b.inverse(), 3), lift_word(&b, 3).inverse());
}

#[test]
fn twist_word_parsing() {
    let t = TwistWord::parse("t[1,2] t[2,1]^-1", 3, 3).unwrap();
    assert_eq!(t.to_string(), "t[1,2] t[2,1]^-1");
    assert!(TwistWord::parse("t[3,1]", 3, 3).is_err());
    assert!(TwistWord::parse("t[1,3]", 3, 3).is_err());
    assert!(matches!(
        TwistWord::parse("t[1,1] s[1,1]", 3, 3),
        Err(Error::Syntax { pos: 7, .. })
    ));
    assert!(TwistWord::parse("", 3, 3).unwrap().is_empty());
}

#[test]
fn intersection_form_examples() {
    assert_eq!(intersection_form(2, 2).unwrap(), IntMatrix::zeros(1));
    for n in 2..=6 {
        for k in 2..=6 {
            let j = intersection_form(n, k).unwrap();
            assert_eq!(j.transpose().scale(-1).unwrap(), j);
            let d = cover_data(n, k).unwrap();
            assert_eq!(j.rank(), 2 * d.genus, "(n,k) = ({n},{k})");
            // deck transformation preserves the form
            let m = deck_matrix(n, k).unwrap();
            assert_eq!(m.transpose().mul(&j).unwrap().mul(&m).unwrap(), j);
        }
    }
}

#[test]
fn twist_class_examples() {
    assert_eq!(twist_class(1, 1, 3, 3).unwrap(), vec![1, 0, 0, 0]);
    assert_eq!(twist_class(1, 3, 3, 3).unwrap(), vec![-1, -1, 0, 0]);
    assert!(twist_class(3, 1, 3, 3).is_err());
    assert!(twist_class(1, 4, 3, 3).is_err());
    // the classes of row i form one deck orbit
    let (n, k) = (3, 4);
    let deck = deck_matrix(n, k).unwrap();
    for i in 1..n {
        for l in 1..k {
            let next = deck.mul_vec(&twist_class(i, l, n, k).unwrap()).unwrap();
            assert_eq!(next, twist_class(i, l + 1, n, k).unwrap());
        }
    }
}

#[test]
fn deck_matrix_examples() {
    assert_eq!(
        deck_matrix(4, 2).unwrap(),
        IntMatrix::identity(3).scale(-1).unwrap()
    );
    assert_eq!(
        deck_matrix(2, 3).unwrap(),
        IntMatrix::from_rows(vec![vec![0, -1], vec![1, -1]]).unwrap()
    );
    for n in 2..=6 {
        for k in 2..=6 {
            let d = deck_matrix(n, k).unwrap();
            for e in 1..k as u32 {
                assert!(!d.pow(e).unwrap().is_identity());
            }
            assert!(d.pow(k as u32).unwrap().is_identity());
        }
    }
}

#[test]
fn transvection_properties() {
    let (n, k) = (4, 3);
    let j = intersection_form(n, k).unwrap();
    let id = IntMatrix::identity(j.dim());
    for i in 1..n {
        for l in 1..=k {
            let c = twist_class(i, l, n, k).unwrap();
            let m = transvection(&c, &j).unwrap();
            let nil = m.sub(&id).unwrap();
            assert!(nil.mul(&nil).unwrap().is_zero());
            assert!(nil.rank() <= 1);
            assert_eq!(m.det().unwrap(), 1);
            assert_eq!(m.transpose().mul(&j).unwrap().mul(&m).unwrap(), j);
            let neg: Vec<i128> = c.iter().map(|x| -x).collect();
            assert_eq!(transvection(&neg, &j).unwrap(), m);
        }
    }
    // a boundary-parallel class lies in the radical
    let j22 = intersection_form(2, 2).unwrap();
    assert!(transvection(&[1], &j22).unwrap().is_identity());
}

#[test]
fn inverse_letters_invert() {
    let t = TwistWord::parse("t[1,1] t[2,2]^-1 t[2,1]", 3, 3).unwrap();
    let prod = homology_rep(&t)
        .unwrap()
        .mul(&homology_rep(&t.inverse()).unwrap())
        .unwrap();
    assert!(prod.is_identity());
}

#[test]
fn homology_examples() {
    assert!(homology_rep(&TwistWord::empty(3, 3).unwrap())
        .unwrap()
        .is_identity());
    let chain = lift_word(&w(3, "(1 2)^6"), 2);
    assert!(homology_rep(&chain).unwrap().is_identity());
    assert_eq!(homology_rep(&chain).unwrap().dim(), 2);
    let chain4 = lift_word(&w(4, "(1 2 3)^4"), 2);
    assert!(homology_rep(&chain4).unwrap().is_identity());
    assert!(homology_rep(&lift_word(&w(2, "1"), 2))
        .unwrap()
        .is_identity());
}

#[test]
fn symmetry_examples() {
    assert!(symmetry_check(&lift_word(&w(4, "1 -2 3 3 -1"), 3)).unwrap());
    assert!(!symmetry_check(&TwistWord::parse("t[1,1]", 3, 3).unwrap()).unwrap());
    assert!(symmetry_check(&TwistWord::empty(3, 3).unwrap()).unwrap());
}

#[test]
fn check_identity_examples() {
    for n in 3..=4 {
        for k in 2..=4 {
            let a = lift_word(&w(n, "1 2 1"), k);
            let b = lift_word(&w(n, "2 1 2"), k);
            assert!(check_identity(&a, &b).unwrap());
        }
    }
    let empty = TwistWord::empty(4, 2).unwrap();
    assert!(check_identity(&lift_word(&w(4, "(1 2 3)^4"), 2), &empty).unwrap());
    assert!(!check_identity(&lift_word(&w(3, "1"), 2), &lift_word(&w(3, "2"), 2)).unwrap());
    assert!(check_identity(&empty, &TwistWord::empty(4, 3).unwrap()).is_err());
}

#[test]
fn full_twist_acts_as_deck_power() {
    // Δ² lifts to a map whose H₁ action is central; on (n, k) = (3, 3) it
    // commutes with every lifted generator
    let d2 = lift_word(&half_twist(3).unwrap().power(2), 3);
    let m = homology_rep(&d2).unwrap();
    for i in 1..3 {
        let g = homology_rep(&lift_word(&w(3, &i.to_string()), 3)).unwrap();
        assert_eq!(m.mul(&g).unwrap(), g.mul(&m).unwrap());
    }
}

#[test]
fn burau_examples() {
    assert!(burau_reduced(&BraidWord::identity(4))
        .unwrap()
        .is_identity());
    let s = burau_reduced(&w(2, "1")).unwrap();
    assert_eq!(s.dim(), 1);
    assert_eq!(*s.get(0, 0), LaurentPoly::monomial(-1, 1));
    assert_eq!(
        burau_reduced(&w(3, "1 2 1")).unwrap(),
        burau_reduced(&w(3, "2 1 2")).unwrap()
    );
    assert!(burau_reduced(&w(4, "2 -2 3 1 -3 -1"))
        .unwrap()
        .is_identity());
    assert_eq!(
        burau_reduced(&w(4, "1 3")).unwrap(),
        burau_reduced(&w(4, "3 1")).unwrap()
    );
    // det is (-t)^{exponent sum}
    let b = w(4, "1 -2 3 3");
    let det = burau_reduced(&b).unwrap().det().unwrap();
    assert_eq!(det, LaurentPoly::monomial(1, 2));
}

/// Characteristic polynomial by Faddeev–LeVerrier; exact over the integers.
fn char_poly(m: &IntMatrix) -> Vec<i128> {
    let d = m.dim();
    let mut coeffs = vec![0i128; d + 1];
    coeffs[d] = 1;
    let mut mk = IntMatrix::zeros(d);
    for step in 1..=d {
        let shifted = mk
            .add(&IntMatrix::identity(d).scale(coeffs[d + 1 - step]).unwrap())
            .unwrap();
        mk = m.mul(&shifted).unwrap();
        let trace: i128 = (0..d).map(|i| mk.get(i, i)).sum();
        coeffs[d - step] = -trace / step as i128;
    }
    coeffs
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn burau_at_one_is_the_reduced_permutation_action() {
    let mut rng = sample::rng(21);
    for _ in 0..60 {
        let n = rand::Rng::gen_range(&mut rng, 2..=5);
        let b = sample::random_word(&mut rng, n, 12);
        let at_one = burau_reduced(&b).unwrap().eval(1).unwrap();
        // permutation character: Π over cycles of (x^len - 1)
        let mut perm_poly = vec![1i128];
        for cycle in b.permutation().cycles() {
            let mut f = vec![0i128; cycle.len() + 1];
            f[0] = -1;
            f[cycle.len()] = 1;
            perm_poly = poly_mul(&perm_poly, &f);
        }
        let with_trivial = poly_mul(&char_poly(&at_one), &[-1, 1]);
        assert_eq!(with_trivial, perm_poly, "{b}");
    }
}

#[test]
fn burau_at_companion_examples() {
    assert!(burau_at_companion(&BraidWord::identity(3), 3)
        .unwrap()
        .is_identity());
    let b = w(4, "1 -2 3 2 2");
    assert_eq!(
        burau_at_companion(&b, 2).unwrap(),
        burau_reduced(&b).unwrap().eval(-1).unwrap()
    );
}

#[test]
fn convention_search_has_a_unique_survivor() {
    let survivors: Vec<SignConvention> = SignConvention::candidates()
        .into_iter()
        .filter(|&conv| {
            [(3, 3), (4, 3), (3, 4)].iter().all(|&(n, k)| {
                (1..n).all(|i| {
                    let g = w(n, &i.to_string());
                    let h = homology_rep_with(&lift_word(&g, k), conv).unwrap();
                    h == burau_at_companion(&g, k).unwrap()
                })
            })
        })
        .collect();
    assert_eq!(survivors, vec![SignConvention::STANDARD]);
    // and the standard form satisfies the braid relations
    let j = intersection_form_with(4, 4, SignConvention::STANDARD).unwrap();
    assert_eq!(j, intersection_form(4, 4).unwrap());
}

#[test]
fn braid_relations_hold_on_h1() {
    for n in 2..=5 {
        for k in 2..=4 {
            for i in 1..n {
                for j in 1..n {
                    let (a, b) = if (i as i64 - j as i64).abs() == 1 {
                        (format!("{i} {j} {i}"), format!("{j} {i} {j}"))
                    } else if i != j {
                        (format!("{i} {j}"), format!("{j} {i}"))
                    } else {
                        continue;
                    };
                    assert!(
                        check_identity(&lift_word(&w(n, &a), k), &lift_word(&w(n, &b), k)).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn base_change_is_found_and_agrees() {
    let mut rng = sample::rng(3);
    for &(n, k) in &[(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3)] {
        let bc = BaseChange::solve(n, k).unwrap();
        assert!(matches!(bc.v.det(), Ok(1) | Ok(-1)));
        for _ in 0..10 {
            let b = sample::random_word(&mut rng, n, 10);
            assert!(bc.agrees_on(&b).unwrap(), "{b} at ({n},{k})");
        }
    }
}

#[test]
fn lifts_are_symmetric() {
    let mut rng = sample::rng(4);
    for _ in 0..50 {
        let n = rand::Rng::gen_range(&mut rng, 2..=5);
        let k = rand::Rng::gen_range(&mut rng, 2..=4);
        let b = sample::random_word(&mut rng, n, 15);
        assert!(symmetry_check(&lift_word(&b, k)).unwrap());
    }
}

#[test]
fn cover_matrix_json() {
    let m = CoverMatrix::new(2, 3, deck_matrix(2, 3).unwrap());
    assert_eq!(
        serde_json::to_string(&m).unwrap(),
        r#"{"n":2,"k":3,"dim":2,"rows":[[0,-1],[1,-1]]}"#
    );
}

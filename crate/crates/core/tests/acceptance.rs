//! Acceptance suite: one PASS/FAIL line per criterion, with wall-clock
//! limits. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use braidforge::cabling::{assemble, cable_certificate, RegularForm};
use braidforge::cover::{
    burau_at_companion, check_identity, homology_rep, lift_word, symmetry_check, BaseChange,
};
use braidforge::garside::{
    conjugacy, half_twist, is_conjugate, is_equal, is_periodic, normal_form, periodic_root, power,
    Conjugacy, PeriodicRoot, RootKind, DEFAULT_BUDGET,
};
use braidforge::qp::{
    conjugate_certificate, expand, obstruct, qp_root_periodic, verify, Band, NotQpReason,
    QPCertificate, QPVerdict,
};
use braidforge::sample::{self, SeededRng};
use braidforge::BraidWord;
use rand::Rng;

type Outcome = Result<String, String>;

fn w(n: usize, s: &str) -> BraidWord {
    BraidWord::parse(s, n).expect("valid word")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn c1_band_identity() -> Outcome {
    let eq = ok(is_equal(&w(4, "2 3 -2 1 2 -1"), &w(4, "2 1 3 2 -1 -1")))?;
    ensure(eq, || "words differ".into())?;
    Ok("equal in B_4".into())
}

fn c2_exponent_sum_obstruction() -> Outcome {
    let b = w(3, "(1 2)^6 1^-13");
    ensure(b.exponent_sum() == -1, || {
        format!("exponent sum {}", b.exponent_sum())
    })?;
    let v = obstruct(&b, DEFAULT_BUDGET);
    ensure(
        v == QPVerdict::NotQp(NotQpReason::NegativeExponentSum),
        || format!("{v:?}"),
    )?;
    Ok("NOT_QP(NEGATIVE_EXPONENT_SUM), exponent sum -1".into())
}

fn c3_cabling() -> Outcome {
    let rf = ok(RegularForm::new(w(2, "1"), vec![2, 2], vec![w(2, "-1 -1")]))?;
    let composite = ok(assemble(&rf))?;
    let target = w(4, "2 1 3 2 -1 -1");
    ensure(ok(is_equal(&composite, &target))?, || {
        format!("assembled {composite}")
    })?;

    let tubular = ok(QPCertificate::new(
        4,
        vec![ok(Band::new(w(4, "2"), 3))?, ok(Band::new(w(4, "1"), 2))?],
    ))?;
    let cert = ok(cable_certificate(&tubular, &[], &[1, 1, 1, 1]))?;
    ensure(cert.len() == 2, || format!("{} bands", cert.len()))?;
    ensure(ok(verify(&cert, &w(4, "2 3 -2 1 2 -1")))?, || {
        "QP word".into()
    })?;
    ensure(ok(verify(&cert, &composite))?, || "assembled braid".into())?;

    let sigma1 = QPCertificate::from_positive_word(&w(2, "1")).expect("positive");
    let inner = QPCertificate::from_positive_word(&w(2, "1 1")).expect("positive");
    let six = ok(cable_certificate(&sigma1, &[Some(inner)], &[2, 2]))?;
    let rf6 = ok(RegularForm::new(w(2, "1"), vec![2, 2], vec![w(2, "1 1")]))?;
    ensure(six.len() == 6, || format!("{} bands", six.len()))?;
    ensure(ok(verify(&six, &ok(assemble(&rf6))?))?, || {
        "6-band certificate".into()
    })?;
    Ok("assembled word matches; 2-band and 6-band certificates verify".into())
}

fn c4_chain_relations() -> Outcome {
    let m3 = ok(homology_rep(&lift_word(&w(3, "(1 2)^6"), 2)))?;
    ensure(m3.dim() == 2 && m3.is_identity(), || format!("(3,2): {m3}"))?;
    let m4 = ok(homology_rep(&lift_word(&w(4, "(1 2 3)^4"), 2)))?;
    ensure(m4.dim() == 3 && m4.is_identity(), || format!("(4,2): {m4}"))?;
    Ok("I_2 at (3,2), I_3 at (4,2)".into())
}

fn c5_symmetry(rng: &mut SeededRng) -> Outcome {
    for trial in 0..500 {
        let n = rng.gen_range(2..=5);
        let k = rng.gen_range(2..=4);
        let len = rng.gen_range(0..=30);
        let b = sample::random_word(rng, n, len);
        ensure(ok(symmetry_check(&lift_word(&b, k)))?, || {
            format!("trial {trial}: {b} at k = {k}")
        })?;
    }
    Ok("500/500 lifts commute with the deck matrix".into())
}

fn c6_representation() -> Outcome {
    let mut checked = 0;
    for n in 2usize..=5 {
        for k in 2..=4 {
            for i in 1..n {
                for j in 1..n {
                    let (a, b) = if i.abs_diff(j) == 1 {
                        (format!("{i} {j} {i}"), format!("{j} {i} {j}"))
                    } else if i != j {
                        (format!("{i} {j}"), format!("{j} {i}"))
                    } else {
                        continue;
                    };
                    let same = ok(check_identity(
                        &lift_word(&w(n, &a), k),
                        &lift_word(&w(n, &b), k),
                    ))?;
                    ensure(same, || format!("{a} vs {b} at ({n},{k})"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} relation pairs agree"))
}

fn c7_cross_oracle(rng: &mut SeededRng) -> Outcome {
    let covers = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)];
    let changes: Vec<BaseChange> = covers
        .iter()
        .map(|&(n, k)| BaseChange::solve(n, k))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    for trial in 0..200 {
        let bc = &changes[trial % covers.len()];
        let len = rng.gen_range(0..=20);
        let b = sample::random_word(rng, bc.n, len);
        let h = ok(homology_rep(&lift_word(&b, bc.k)))?;
        let lhs = ok(bc.conjugate(&h))?;
        let rhs = ok(burau_at_companion(&b, bc.k))?;
        ensure(lhs == rhs, || {
            format!("trial {trial}: {b} at ({},{})", bc.n, bc.k)
        })?;
    }
    Ok("200/200 words agree".into())
}

fn c8_periodicity() -> Outcome {
    for n in 2..=5 {
        for kind in [RootKind::Delta, RootKind::Gamma] {
            for j in -4..=4 {
                let x = PeriodicRoot { kind, power: j }.word(n);
                ensure(is_periodic(&x), || format!("{kind:?}^{j} in B_{n}"))?;
            }
        }
    }
    ensure(!is_periodic(&w(3, "1")), || "σ1 in B_3".into())?;
    ensure(!is_periodic(&w(3, "1 -2")), || "σ1σ2⁻¹ in B_3".into())?;

    let d2 = ok(half_twist(3))?.power(2);
    let r3 = ok(periodic_root(&d2, 3, DEFAULT_BUDGET))?;
    let delta = PeriodicRoot {
        kind: RootKind::Delta,
        power: 1,
    };
    ensure(r3 == Some(delta), || format!("cube root {r3:?}"))?;
    let r2 = ok(periodic_root(&d2, 2, DEFAULT_BUDGET))?;
    let gamma = PeriodicRoot {
        kind: RootKind::Gamma,
        power: 1,
    };
    ensure(r2 == Some(gamma), || format!("square root {r2:?}"))?;

    let cases: Vec<(BraidWord, i64)> = vec![
        (d2.clone(), 3),
        (d2.clone(), 2),
        (ok(half_twist(4))?.power(2), 4),
        (ok(half_twist(4))?.power(2), 3),
        (
            PeriodicRoot {
                kind: RootKind::Gamma,
                power: 2,
            }
            .word(5)
            .power(2),
            2,
        ),
        (
            w(4, "3 -1 2")
                .concat(&ok(half_twist(4))?)
                .unwrap()
                .concat(&w(4, "-2 1 -3"))
                .unwrap(),
            1,
        ),
    ];
    for (b, d) in &cases {
        let cert = ok(qp_root_periodic(b, *d, DEFAULT_BUDGET))?
            .ok_or_else(|| format!("no certificate for d = {d}"))?;
        let root = expand(&cert);
        let is_root = ok(conjugacy(&root.power(*d), b, DEFAULT_BUDGET))?.is_conjugate();
        ensure(is_root, || {
            format!("certificate root {root} does not satisfy d = {d}")
        })?;
    }
    Ok(format!(
        "periodicity, roots, {} root certificates",
        cases.len()
    ))
}

fn c9_root_uniqueness(rng: &mut SeededRng) -> Outcome {
    let periodic: Vec<(BraidWord, i64)> = vec![
        (w(3, "1 1 2"), 2),
        (w(3, "1 2"), 3),
        (w(4, "1 1 2 3"), 3),
        (w(2, "1"), 2),
        (ok(half_twist(3))?, 2),
        (ok(half_twist(4))?, 2),
    ];
    let mut premise_hits = 0;
    for trial in 0..50 {
        let (a, _) = if trial % 2 == 0 {
            periodic[(trial / 2) % periodic.len()].clone()
        } else {
            let n = rng.gen_range(2..=4);
            let len = rng.gen_range(1..=8);
            (sample::random_word(rng, n, len), 0)
        };
        let n = a.strands();
        let ulen = rng.gen_range(0..=8);
        let u = sample::random_word(rng, n, ulen);
        let b = u.concat(&a).unwrap().concat(&u.inverse()).unwrap();
        let witness =
            ok(is_conjugate(&a, &b))?.ok_or_else(|| format!("trial {trial}: {a} ≁ {b}"))?;
        let back = witness
            .concat(&a)
            .unwrap()
            .concat(&witness.inverse())
            .unwrap();
        ensure(ok(is_equal(&back, &b))?, || {
            format!("trial {trial}: bad witness")
        })?;
        for d in [2, 3] {
            if ok(is_equal(&power(&a, d), &power(&b, d)))? {
                premise_hits += 1;
                let confirmed = ok(conjugacy(&a, &b, DEFAULT_BUDGET))?;
                ensure(matches!(confirmed, Conjugacy::Conjugate { .. }), || {
                    format!("trial {trial}: equal {d}-th powers but not conjugate")
                })?;
            }
        }
    }
    ensure(premise_hits > 0, || "premise never exercised".into())?;
    Ok(format!(
        "50/50 pairs conjugate; {premise_hits} equal-power premises confirmed"
    ))
}

fn c10_garside(rng: &mut SeededRng) -> Outcome {
    for trial in 0..1000 {
        let n = rng.gen_range(2..=6);
        let len = rng.gen_range(0..=40);
        let x = sample::random_word(rng, n, len);
        let y = sample::random_rewrite(rng, &x, 12);
        ensure(normal_form(&x) == normal_form(&y), || {
            format!("trial {trial}: {x} vs {y}")
        })?;
        let d2 = ok(half_twist(n))?.power(2);
        let left = normal_form(&d2.concat(&x).unwrap());
        let right = normal_form(&x.concat(&d2).unwrap());
        ensure(left == right, || {
            format!("trial {trial}: Δ² does not commute with {x}")
        })?;
    }
    Ok("1000/1000 rewrites invariant; Δ² central".into())
}

fn c11_certificates(rng: &mut SeededRng) -> Outcome {
    for trial in 0..500 {
        let n = rng.gen_range(2..=5);
        let bands = rng.gen_range(0..=6);
        let cert = sample::random_certificate(rng, n, bands, 6);
        let e = expand(&cert);
        ensure(ok(verify(&cert, &e))?, || {
            format!("trial {trial}: round trip")
        })?;
        ensure(e.exponent_sum() == cert.len() as i64, || {
            format!("trial {trial}: exponent sum")
        })?;
        let ulen = rng.gen_range(0..=8);
        let u = sample::random_word(rng, n, ulen);
        let cu = ok(conjugate_certificate(&cert, &u))?;
        let target = u.concat(&e).unwrap().concat(&u.inverse()).unwrap();
        ensure(ok(verify(&cu, &target))?, || {
            format!("trial {trial}: conjugation")
        })?;
        ensure(cu.len() == cert.len(), || {
            format!("trial {trial}: band count")
        })?;
    }
    Ok("500/500 certificates".into())
}

type Criterion<'a> = (
    u32,
    &'a str,
    Option<Duration>,
    Box<dyn FnMut(&mut SeededRng) -> Outcome>,
);

fn main() -> ExitCode {
    let secs = Duration::from_secs_f64;
    let mut rng = sample::rng(20_241_016);
    let mut criteria: Vec<Criterion> = vec![
        (
            1,
            "B_4 band identity",
            Some(secs(0.1)),
            Box::new(|_| c1_band_identity()),
        ),
        (
            2,
            "exponent-sum obstruction",
            Some(secs(0.1)),
            Box::new(|_| c2_exponent_sum_obstruction()),
        ),
        (
            3,
            "cabling and cabled certificates",
            Some(secs(0.5)),
            Box::new(|_| c3_cabling()),
        ),
        (
            4,
            "chain relations on H1",
            Some(secs(0.5)),
            Box::new(|_| c4_chain_relations()),
        ),
        (
            5,
            "deck symmetry of lifts",
            Some(secs(30.0)),
            Box::new(c5_symmetry),
        ),
        (
            6,
            "braid relations on H1",
            None,
            Box::new(|_| c6_representation()),
        ),
        (
            7,
            "Burau cross-oracle",
            Some(secs(60.0)),
            Box::new(c7_cross_oracle),
        ),
        (
            8,
            "periodicity and periodic roots",
            Some(secs(5.0)),
            Box::new(|_| c8_periodicity()),
        ),
        (
            9,
            "uniqueness of roots up to conjugacy",
            Some(secs(120.0)),
            Box::new(c9_root_uniqueness),
        ),
        (
            10,
            "Garside soundness",
            Some(secs(60.0)),
            Box::new(c10_garside),
        ),
        (
            11,
            "QP certificate algebra",
            Some(secs(30.0)),
            Box::new(c11_certificates),
        ),
    ];
    let mut failures = 0;
    for (id, name, limit, run) in criteria.iter_mut() {
        let start = Instant::now();
        let outcome = run(&mut rng);
        let elapsed = start.elapsed();
        let over = limit.is_some_and(|l| elapsed > l);
        let limit_text = limit.map_or("no limit".to_string(), |l| {
            format!("limit {:.1} s", l.as_secs_f64())
        });
        let (status, detail) = match (&outcome, over) {
            (Ok(msg), false) => ("PASS", msg.clone()),
            (Ok(msg), true) => ("FAIL", format!("{msg}; too slow")),
            (Err(msg), _) => ("FAIL", msg.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "{status} criterion {id:>2} {name}: {detail} ({:.3} s, {limit_text})",
            elapsed.as_secs_f64()
        );
    }
    if failures == 0 {
        println!("acceptance: all 11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}

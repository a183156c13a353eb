//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line with its elapsed time against the stated budget.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use wih_core::classify::classes_from_intervals;
use wih_core::hecke::oracle_with_witness;
use wih_core::{
    action_matrix, canonical_map, colored_digraph, crosscheck_classification, d_classes,
    enumerate_intervals, is_colored_digraph_iso, support, verify_min_max_intervals, DClass,
    GeneratorSet, GroupEngine, Matrix, OracleConfig, Rat, SamplePolicy, WeakInterval,
};

fn criterion(n: u32, desc: &str, budget: Duration, body: impl FnOnce() + UnwindSafe) {
    let start = Instant::now();
    let outcome = catch_unwind(body);
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) if elapsed <= budget => {
            println!("criterion {n}: PASS in {elapsed:.2?} (budget {budget:?}) - {desc}");
        }
        Ok(()) => {
            println!("criterion {n}: FAIL over budget: {elapsed:.2?} > {budget:?} - {desc}");
            panic!("criterion {n} exceeded its time budget");
        }
        Err(cause) => {
            println!("criterion {n}: FAIL in {elapsed:.2?} - {desc}");
            resume_unwind(cause);
        }
    }
}

#[test]
fn criterion_1_colored_digraph_fixture() {
    criterion(
        1,
        "colored digraph of [1234,3214]_L matches the reference figure",
        Duration::from_secs(1),
        || {
            let g = symmetric(4);
            let i = interval(&g, "1234", "3214");
            let d = colored_digraph(&g, &i);
            let mut vertices: Vec<String> =
                d.vertices().iter().map(|v| g.render_element(v)).collect();
            vertices.sort();
            assert_eq!(vertices, ["1234", "1324", "2134", "2314", "3124", "3214"]);
            let mut arcs: Vec<(String, String, usize)> = d
                .arcs()
                .iter()
                .map(|a| {
                    (
                        g.render_element(&d.vertices()[a.source]),
                        g.render_element(&d.vertices()[a.target]),
                        a.generator + 1,
                    )
                })
                .collect();
            arcs.sort();
            let mut expected = vec![
                ("1234".to_string(), "2134".to_string(), 1),
                ("1234".to_string(), "1324".to_string(), 2),
                ("1324".to_string(), "2314".to_string(), 1),
                ("2134".to_string(), "3124".to_string(), 2),
                ("2314".to_string(), "3214".to_string(), 2),
                ("3124".to_string(), "3214".to_string(), 1),
            ];
            expected.sort();
            assert_eq!(arcs, expected);
        },
    );
}

/// Expected generator actions transcribed from the reference module
/// diagrams: for each element, what pi_1, pi_2, pi_3 do ("=": fixed, "0":
/// kill, otherwise the image element).
const B_1234_3214: &[(&str, [&str; 3])] = &[
    ("1234", ["2134", "1324", "0"]),
    ("1324", ["2314", "=", "0"]),
    ("2134", ["=", "3124", "0"]),
    ("2314", ["=", "3214", "0"]),
    ("3124", ["3214", "=", "0"]),
    ("3214", ["=", "=", "0"]),
];

const B_1243_3241: &[(&str, [&str; 3])] = &[
    ("1243", ["2143", "1342", "="]),
    ("1342", ["2341", "=", "0"]),
    ("2143", ["=", "3142", "="]),
    ("2341", ["=", "3241", "0"]),
    ("3142", ["3241", "=", "0"]),
    ("3241", ["=", "=", "0"]),
];

#[test]
fn criterion_2_action_matrix_fixtures() {
    criterion(
        2,
        "action matrices of B(1234,3214) and B(1243,3241) match the reference diagrams",
        Duration::from_secs(1),
        || {
            let g = symmetric(4);
            for (u, v, table) in [
                ("1234", "3214", B_1234_3214),
                ("1243", "3241", B_1243_3241),
            ] {
                let i = interval(&g, u, v);
                assert_eq!(i.len(), table.len());
                for s in 0..3 {
                    let m = action_matrix(&g, &i, s);
                    for (x, actions) in table {
                        let j = i.position(&el(&g, x)).unwrap();
                        let got = m.column(j);
                        match actions[s] {
                            "=" => assert_eq!(got, Some(j), "pi_{} fixes {x}", s + 1),
                            "0" => assert_eq!(got, None, "pi_{} kills {x}", s + 1),
                            img => {
                                let expected = i.position(&el(&g, img)).unwrap();
                                assert_eq!(got, Some(expected), "pi_{} on {x}", s + 1);
                            }
                        }
                    }
                }
            }
        },
    );
}

fn class_of<'c>(g: &GroupEngine, classes: &'c [DClass], u: &str, v: &str) -> &'c DClass {
    let i = interval(g, u, v);
    classes
        .iter()
        .find(|c| c.members().contains(&i))
        .expect("interval must appear in a class")
}

fn member_texts(g: &GroupEngine, c: &DClass) -> Vec<(String, String)> {
    c.members()
        .iter()
        .map(|i| (g.render_element(i.lower()), g.render_element(i.upper())))
        .collect()
}

#[test]
fn criterion_3_example_classes() {
    criterion(
        3,
        "classification of Int(S4) reproduces the two reference classes and their min-bars",
        Duration::from_secs(5),
        || {
            let g = symmetric(4);
            let classes = d_classes(&g, CAP).unwrap();
            let c1 = class_of(&g, &classes, "1243", "4132");
            assert_eq!(
                member_texts(&g, c1),
                [
                    ("1243".into(), "4132".into()),
                    ("1423".into(), "4312".into())
                ]
            );
            let c2 = class_of(&g, &classes, "1243", "2143");
            assert_eq!(
                member_texts(&g, c2),
                [
                    ("1243".into(), "2143".into()),
                    ("1423".into(), "2413".into()),
                    ("4123".into(), "4213".into())
                ]
            );
            let min1: Vec<String> = c1.min_bar().iter().map(|w| g.render_element(w)).collect();
            let min2: Vec<String> = c2.min_bar().iter().map(|w| g.render_element(w)).collect();
            assert_eq!(min1, ["1243", "1423"]);
            assert_eq!(min2, ["1243", "1423", "4123"]);
            // Proper inclusion of the endpoint sets.
            assert!(min1.iter().all(|w| min2.contains(w)));
            assert!(min1.len() < min2.len());
        },
    );
}

#[test]
fn criterion_4_oracle_criterion_agreement() {
    criterion(
        4,
        "oracle vs criterion: exhaustive on S3, S4, B2, B3, I2(3..7); 10000 seeded pairs in S5",
        Duration::from_secs(600),
        || {
            let oracle = OracleConfig::default();
            let mut engines = vec![
                symmetric(3),
                symmetric(4),
                hyperoctahedral(2),
                hyperoctahedral(3),
            ];
            for m in 3..=7 {
                engines.push(dihedral(m));
            }
            for g in &engines {
                let report =
                    crosscheck_classification(g, SamplePolicy::Exhaustive, CAP, &oracle)
                        .unwrap();
                assert!(
                    report.disagreements.is_empty(),
                    "disagreements in exhaustive sweep: {:?}",
                    report.disagreements
                );
            }
            let s5 = symmetric(5);
            let report = crosscheck_classification(
                &s5,
                SamplePolicy::Random {
                    pairs: 10_000,
                    seed: 42,
                },
                CAP,
                &oracle,
            )
            .unwrap();
            assert_eq!(report.pairs_tested, 10_000);
            assert!(
                report.disagreements.is_empty(),
                "disagreements in sampled S5 sweep: {:?}",
                report.disagreements
            );
        },
    );
}

#[test]
fn criterion_5_min_max_are_right_weak_intervals() {
    criterion(
        5,
        "min-bar and max-bar of every class of S4 and B3 are right weak intervals",
        Duration::from_secs(60),
        || {
            for g in [symmetric(4), hyperoctahedral(3)] {
                for class in d_classes(&g, CAP).unwrap() {
                    verify_min_max_intervals(&g, &class).unwrap();
                }
            }
        },
    );
}

#[test]
fn criterion_6_descent_class_intervals() {
    criterion(
        6,
        "elements with fixed descent set form the predicted right weak interval (S4, B3)",
        Duration::from_secs(10),
        || {
            for g in [symmetric(4), hyperoctahedral(3)] {
                let elems = g.elements();
                for bits in 0u32..(1 << g.rank()) {
                    let indices: Vec<usize> =
                        (0..g.rank()).filter(|s| bits & (1 << s) != 0).collect();
                    let set = GeneratorSet::from_indices(g.rank(), &indices);
                    let (lo, hi) = g.descent_class(set);
                    for w in &elems {
                        let inside =
                            g.leq_right(&lo, w).unwrap() && g.leq_right(w, &hi).unwrap();
                        assert_eq!(inside, g.left_descents(w) == set);
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_7_lattice_against_brute_force() {
    criterion(
        7,
        "meet/join match brute-force lattice bounds on S4, B3, I2(3..7)",
        Duration::from_secs(60),
        || {
            let mut engines = vec![symmetric(4), hyperoctahedral(3)];
            for m in 3..=7 {
                engines.push(dihedral(m));
            }
            for g in &engines {
                let elems = g.elements();
                for x in &elems {
                    for y in &elems {
                        assert_eq!(g.meet_right(x, y).unwrap(), brute_meet(g, x, y));
                        assert_eq!(g.join_right(x, y).unwrap(), brute_join(g, x, y));
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_8_intertwiner_fixture() {
    criterion(
        8,
        "endomorphisms of B(2134,2143) have dimension 2 and contain the two-parameter family",
        Duration::from_secs(1),
        || {
            let g = symmetric(4);
            let i = interval(&g, "2134", "2143");
            let space = wih_core::intertwiner_space(&g, &i, &i).unwrap();
            assert_eq!(space.dimension(), 2);
            // The family at a=1, b=2: bottom maps to bottom + top, top to
            // twice itself.
            let lo = i.position(&el(&g, "2134")).unwrap();
            let hi = i.position(&el(&g, "2143")).unwrap();
            let one = Rat::from_integer(1.into());
            let two = Rat::from_integer(2.into());
            let mut f = Matrix::<Rat>::zero(2, 2);
            f[(lo, lo)] = one.clone();
            f[(hi, lo)] = one;
            f[(hi, hi)] = two;
            for s in 0..3 {
                let a = action_matrix(&g, &i, s).to_dense::<Rat>();
                assert_eq!(f.mul(&a), a.mul(&f), "pi_{} equation", s + 1);
            }
            // Membership in the computed space: appending f to the basis
            // does not raise the rank.
            let d = i.len();
            let mut rows: Vec<Vec<Rat>> = space
                .basis()
                .iter()
                .map(|b| {
                    (0..d * d)
                        .map(|v| b[(v / d, v % d)].clone())
                        .collect()
                })
                .collect();
            rows.push((0..d * d).map(|v| f[(v / d, v % d)].clone()).collect());
            let stacked = Matrix::from_fn(rows.len(), d * d, |r, c| rows[r][c].clone());
            assert_eq!(stacked.rank(), space.dimension());
        },
    );
}

#[test]
fn criterion_9_property_suites() {
    criterion(
        9,
        "support/descent, bottom-support, Bruhat-bound, algebra relations, cover-descent, and uniqueness sweeps on S4",
        Duration::from_secs(300),
        || {
            let g = symmetric(4);
            let intervals = enumerate_intervals(&g, CAP).unwrap();

            // Algebra relations on every interval.
            for i in &intervals {
                let mats: Vec<Matrix<Rat>> = (0..g.rank())
                    .map(|s| action_matrix(&g, i, s).to_dense::<Rat>())
                    .collect();
                for m in &mats {
                    assert_eq!(m.mul(m), *m);
                }
                for s in 0..g.rank() {
                    for t in s + 1..g.rank() {
                        let m = g.coxeter_m(s, t) as usize;
                        let mut lhs = Matrix::<Rat>::identity(i.len());
                        let mut rhs = Matrix::<Rat>::identity(i.len());
                        for k in 0..m {
                            let (a, b) = if (m - 1 - k).is_multiple_of(2) { (t, s) } else { (s, t) };
                            lhs = lhs.mul(&mats[b]);
                            rhs = rhs.mul(&mats[a]);
                        }
                        assert_eq!(lhs, rhs);
                    }
                }
            }

            // Covers gain exactly their own generator as a new descent.
            for w in g.elements() {
                let desc = g.left_descents(&w);
                for s in 0..g.rank() {
                    if desc.contains(s) {
                        continue;
                    }
                    let sw = g.left_mul_gen(s, &w);
                    let gained: Vec<usize> = g
                        .left_descents(&sw)
                        .iter()
                        .filter(|&t| !desc.contains(t))
                        .collect();
                    assert_eq!(gained, vec![s]);
                }
            }

            // Support constraints for every invertible intertwiner between
            // equivalent intervals.
            let cfg = OracleConfig::default();
            let classes = classes_from_intervals(&g, intervals.clone());
            for class in &classes {
                for a in class.members() {
                    for b in class.members() {
                        let (out, witness) = oracle_with_witness(&g, a, b, &cfg).unwrap();
                        assert!(out.isomorphic);
                        let f = witness.unwrap();
                        let u_inv = g.inverse(a.lower());
                        let u2_inv = g.inverse(b.lower());
                        for x in a.elements() {
                            let xq = g.multiply(x, &u_inv).unwrap();
                            for y in support(&g, &f, a, b, x).unwrap() {
                                assert!(g
                                    .left_descents(x)
                                    .is_subset(&g.left_descents(&y)));
                                let yq = g.multiply(&y, &u2_inv).unwrap();
                                assert!(g.leq_bruhat(&xq, &yq).unwrap());
                            }
                        }
                        assert!(support(&g, &f, a, b, a.lower())
                            .unwrap()
                            .contains(b.lower()));
                    }
                }
            }

            // Uniqueness of colored-digraph isomorphisms on intervals of
            // size <= 6, by exhaustive bijection search.
            fn permutations(n: usize) -> Vec<Vec<usize>> {
                if n == 0 {
                    return vec![Vec::new()];
                }
                let mut out = Vec::new();
                for rest in permutations(n - 1) {
                    for pos in 0..n {
                        let mut p = rest.clone();
                        p.insert(pos, n - 1);
                        out.push(p);
                    }
                }
                out
            }
            let small: Vec<&WeakInterval> =
                intervals.iter().filter(|i| i.len() <= 6).collect();
            for &a in &small {
                for &b in &small {
                    if !is_colored_digraph_iso(&g, a, b).unwrap() {
                        continue;
                    }
                    let da = colored_digraph(&g, a);
                    let db = colored_digraph(&g, b);
                    let arcs_b: Vec<(usize, usize, usize)> = db
                        .arcs()
                        .iter()
                        .map(|t| (t.source, t.target, t.generator))
                        .collect();
                    let canonical: Vec<usize> = a
                        .elements()
                        .iter()
                        .map(|x| {
                            b.position(&canonical_map(&g, a, b, x).unwrap()).unwrap()
                        })
                        .collect();
                    let found: Vec<Vec<usize>> = permutations(a.len())
                        .into_iter()
                        .filter(|p| {
                            let image: Vec<(usize, usize, usize)> = da
                                .arcs()
                                .iter()
                                .map(|t| (p[t.source], p[t.target], t.generator))
                                .collect();
                            image.len() == arcs_b.len()
                                && image.iter().all(|t| arcs_b.contains(t))
                        })
                        .collect();
                    assert_eq!(found, vec![canonical]);
                }
            }
        },
    );
}

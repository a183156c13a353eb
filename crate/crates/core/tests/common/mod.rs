#![allow(dead_code)]

//! Shared helpers for the integration suites: engine constructors and
//! brute-force oracles kept independent of the code paths they check.

use wih_core::{CoxeterSpec, Element, GroupEngine, WeakInterval};

pub const CAP: u128 = 1_000_000;

pub fn symmetric(n: usize) -> GroupEngine {
    GroupEngine::build(CoxeterSpec::SymmetricA(n)).unwrap()
}

pub fn hyperoctahedral(n: usize) -> GroupEngine {
    GroupEngine::build(CoxeterSpec::HyperoctahedralB(n)).unwrap()
}

pub fn dihedral(m: u32) -> GroupEngine {
    GroupEngine::build(CoxeterSpec::DihedralI2(m)).unwrap()
}

pub fn el(engine: &GroupEngine, text: &str) -> Element {
    engine.parse_element(text).unwrap()
}

pub fn interval(engine: &GroupEngine, u: &str, v: &str) -> WeakInterval {
    WeakInterval::new(engine, &el(engine, u), &el(engine, v)).unwrap()
}

/// Brute-force greatest lower bound in the right weak order: scan the whole
/// group for common lower bounds and insist one of them dominates the rest.
pub fn brute_meet(engine: &GroupEngine, x: &Element, y: &Element) -> Element {
    let candidates: Vec<Element> = engine
        .elements()
        .into_iter()
        .filter(|z| {
            engine.leq_right(z, x).unwrap() && engine.leq_right(z, y).unwrap()
        })
        .collect();
    let best = candidates
        .iter()
        .max_by_key(|z| engine.length(z))
        .expect("identity is always a lower bound")
        .clone();
    for z in &candidates {
        assert!(
            engine.leq_right(z, &best).unwrap(),
            "meet candidates are not directed"
        );
    }
    best
}

/// Brute-force least upper bound in the right weak order.
pub fn brute_join(engine: &GroupEngine, x: &Element, y: &Element) -> Element {
    let candidates: Vec<Element> = engine
        .elements()
        .into_iter()
        .filter(|z| {
            engine.leq_right(x, z).unwrap() && engine.leq_right(y, z).unwrap()
        })
        .collect();
    let best = candidates
        .iter()
        .min_by_key(|z| engine.length(z))
        .expect("the longest element is always an upper bound")
        .clone();
    for z in &candidates {
        assert!(
            engine.leq_right(&best, z).unwrap(),
            "join candidates are not directed"
        );
    }
    best
}

/// All reduced words of an element, by peeling every left descent.
pub fn all_reduced_words(engine: &GroupEngine, w: &Element) -> Vec<Vec<usize>> {
    if engine.is_identity(w) {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for s in engine.left_descents(w).iter() {
        let rest = engine.left_mul_gen(s, w);
        for mut tail in all_reduced_words(engine, &rest) {
            tail.insert(0, s);
            out.push(tail);
        }
    }
    out
}

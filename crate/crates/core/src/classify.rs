//! Classification of all weak Bruhat intervals of a finite group up to
//! descent-preserving isomorphism, and verification of the structure of each
//! class.
//!
//! Intervals are bucketed by the invariant `xi = v u^{-1}` together with the
//! full descent profile along the canonical traversal; two intervals land in
//! the same bucket exactly when they are descent-preserving isomorphic, so
//! the buckets are the equivalence classes. For every class, the set of
//! lower endpoints (min-bar) and upper endpoints (max-bar) are verified to
//! be right weak order intervals, elementwise against the whole group.

use std::collections::HashMap;

use serde::Serialize;

use crate::coxeter::{Element, GeneratorSet, GroupEngine};
use crate::error::Error;
use crate::hecke::{self, OracleConfig};
use crate::intervals::{self, WeakInterval};
use crate::rng::SplitMix64;

/// One descent-preserving equivalence class of intervals.
#[derive(Debug, Clone)]
pub struct DClass {
    xi: Element,
    members: Vec<WeakInterval>,
    min_bar: Vec<Element>,
    max_bar: Vec<Element>,
}

impl DClass {
    /// The shared invariant `v u^{-1}` of all members.
    pub fn xi(&self) -> &Element {
        &self.xi
    }

    pub fn members(&self) -> &[WeakInterval] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Member with the smallest lower endpoint, as the stable class
    /// representative.
    pub fn representative(&self) -> &WeakInterval {
        &self.members[0]
    }

    /// Lower endpoints of the members, sorted.
    pub fn min_bar(&self) -> &[Element] {
        &self.min_bar
    }

    /// Upper endpoints of the members, sorted.
    pub fn max_bar(&self) -> &[Element] {
        &self.max_bar
    }
}

fn check_cap(engine: &GroupEngine, cap: u128) -> Result<(), Error> {
    if engine.order() > cap {
        return Err(Error::GroupTooLarge {
            order: engine.order(),
            cap,
        });
    }
    Ok(())
}

/// All elements weakly above `u` in the left weak order, by ascent BFS.
fn upset(engine: &GroupEngine, u: &Element) -> Vec<Element> {
    let mut seen: HashMap<Element, ()> = HashMap::new();
    let mut queue = vec![u.clone()];
    seen.insert(u.clone(), ());
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        let desc = engine.left_descents(&x);
        for s in 0..engine.rank() {
            if !desc.contains(s) {
                let up = engine.left_mul_gen(s, &x);
                if !seen.contains_key(&up) {
                    seen.insert(up.clone(), ());
                    queue.push(up);
                }
            }
        }
    }
    queue
}

/// Enumerates Int(W): one interval per ordered pair `u <=_L v`.
pub fn enumerate_intervals(engine: &GroupEngine, cap: u128) -> Result<Vec<WeakInterval>, Error> {
    check_cap(engine, cap)?;
    let mut out = Vec::new();
    for u in engine.elements() {
        for v in upset(engine, &u) {
            out.push(WeakInterval::new(engine, &u, &v)?);
        }
    }
    out.sort_by_key(|i| (i.lower().clone(), i.upper().clone()));
    Ok(out)
}

type ProfileKey = (Element, Vec<(Element, GeneratorSet)>);

fn profile_key(engine: &GroupEngine, interval: &WeakInterval) -> ProfileKey {
    let xi = engine
        .multiply(interval.upper(), &engine.inverse(interval.lower()))
        .expect("same engine by construction");
    (xi, interval.descent_profile(engine))
}

/// Partitions a set of intervals into descent-preserving classes.
pub fn classes_from_intervals(
    engine: &GroupEngine,
    intervals: Vec<WeakInterval>,
) -> Vec<DClass> {
    let mut buckets: HashMap<ProfileKey, Vec<WeakInterval>> = HashMap::new();
    for interval in intervals {
        buckets
            .entry(profile_key(engine, &interval))
            .or_default()
            .push(interval);
    }
    let mut classes: Vec<DClass> = buckets
        .into_iter()
        .map(|((xi, _), mut members)| {
            members.sort_by_key(|i| i.lower().clone());
            let mut min_bar: Vec<Element> = members.iter().map(|i| i.lower().clone()).collect();
            let mut max_bar: Vec<Element> = members.iter().map(|i| i.upper().clone()).collect();
            min_bar.sort();
            max_bar.sort();
            DClass {
                xi,
                members,
                min_bar,
                max_bar,
            }
        })
        .collect();
    classes.sort_by_key(|c| {
        (
            engine.length(&c.xi),
            c.xi.clone(),
            c.representative().lower().clone(),
        )
    });
    classes
}

/// Enumerates Int(W) and partitions it into descent-preserving classes.
pub fn d_classes(engine: &GroupEngine, cap: u128) -> Result<Vec<DClass>, Error> {
    Ok(classes_from_intervals(
        engine,
        enumerate_intervals(engine, cap)?,
    ))
}

/// Verified right-weak-interval endpoints of min-bar and max-bar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinMaxIntervals {
    pub min_lower: Element,
    pub min_upper: Element,
    pub max_lower: Element,
    pub max_upper: Element,
}

/// Checks that min-bar and max-bar of a class are right weak intervals and
/// returns their endpoints `(x, y, xi x, xi y)`.
///
/// The candidate endpoints come from folding the lattice operations over
/// min-bar; every check is elementwise over the whole group.
pub fn verify_min_max_intervals(
    engine: &GroupEngine,
    class: &DClass,
) -> Result<MinMaxIntervals, Error> {
    let fail = |msg: String| Err(Error::VerificationFailure(msg));
    let mut min_iter = class.min_bar.iter();
    let first = min_iter.next().expect("classes are nonempty").clone();
    let (mut lo, mut hi) = (first.clone(), first);
    for w in min_iter {
        lo = engine.meet_right(&lo, w)?;
        hi = engine.join_right(&hi, w)?;
    }
    if !class.min_bar.contains(&lo) {
        return fail("meet of min-bar left the set".into());
    }
    if !class.min_bar.contains(&hi) {
        return fail("join of min-bar left the set".into());
    }
    let max_lo = engine.multiply(&class.xi, &lo)?;
    let max_hi = engine.multiply(&class.xi, &hi)?;
    for w in engine.elements() {
        let in_min = engine.leq_right(&lo, &w)? && engine.leq_right(&w, &hi)?;
        if in_min != class.min_bar.contains(&w) {
            return fail(format!(
                "min-bar is not the right weak interval at {}",
                engine.render_element(&w)
            ));
        }
        let in_max = engine.leq_right(&max_lo, &w)? && engine.leq_right(&w, &max_hi)?;
        if in_max != class.max_bar.contains(&w) {
            return fail(format!(
                "max-bar is not the right weak interval at {}",
                engine.render_element(&w)
            ));
        }
    }
    Ok(MinMaxIntervals {
        min_lower: lo,
        min_upper: hi,
        max_lower: max_lo,
        max_upper: max_hi,
    })
}

/// Min-bar of the class of `[u, v]_L`, by scanning all group elements for
/// lower endpoints whose translated interval is descent-preserving
/// isomorphic to it.
fn min_bar_of(engine: &GroupEngine, u: &Element, v: &Element) -> Result<Vec<Element>, Error> {
    let base = WeakInterval::new(engine, u, v)?;
    let xi = engine.multiply(v, &engine.inverse(u))?;
    let mut out = Vec::new();
    for cand in engine.elements() {
        let top = engine.multiply(&xi, &cand)?;
        if engine.length(&top) != engine.length(&xi) + engine.length(&cand) {
            continue;
        }
        let interval = WeakInterval::new(engine, &cand, &top)?;
        if intervals::is_descent_preserving_iso(engine, &interval, &base)? {
            out.push(cand);
        }
    }
    Ok(out)
}

/// For `u <=_L v <=_L w`, checks the anti-inclusion of endpoint sets under
/// refinement: lower endpoints of the class of `[u,w]_L` all appear among
/// the lower endpoints of the class of the bottom subinterval `[u,v]_L`,
/// and upper endpoints all appear among the upper endpoints of the class of
/// the top subinterval `[v,w]_L`. Both follow from transporting the
/// subinterval along the class isomorphisms.
pub fn verify_anti_inclusion(
    engine: &GroupEngine,
    u: &Element,
    v: &Element,
    w: &Element,
) -> Result<bool, Error> {
    for (a, b) in [(u, v), (v, w)] {
        if !engine.leq_left(a, b)? {
            return Err(Error::NotComparable(format!(
                "{} is not below {} in the left weak order",
                engine.render_element(a),
                engine.render_element(b)
            )));
        }
    }
    let min_uv = min_bar_of(engine, u, v)?;
    let min_uw = min_bar_of(engine, u, w)?;
    if !min_uw.iter().all(|x| min_uv.contains(x)) {
        return Ok(false);
    }
    let xi_vw = engine.multiply(w, &engine.inverse(v))?;
    let xi_uw = engine.multiply(w, &engine.inverse(u))?;
    let min_vw = min_bar_of(engine, v, w)?;
    let max_vw: Vec<Element> = min_vw
        .iter()
        .map(|x| engine.multiply(&xi_vw, x))
        .collect::<Result<_, _>>()?;
    let max_uw: Vec<Element> = min_uw
        .iter()
        .map(|x| engine.multiply(&xi_uw, x))
        .collect::<Result<_, _>>()?;
    Ok(max_uw.iter().all(|x| max_vw.contains(x)))
}

/// Pair-selection policy for [`crosscheck_classification`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SamplePolicy {
    /// Every unordered pair of intervals.
    Exhaustive,
    /// Seeded uniform ordered pairs.
    Random { pairs: u64, seed: u64 },
}

/// One pair where the three isomorphism routes disagreed. Empty in a correct
/// build.
#[derive(Debug, Clone, Serialize)]
pub struct Disagreement {
    pub first: (String, String),
    pub second: (String, String),
    pub criterion: bool,
    pub digraph_and_profile: bool,
    pub oracle: bool,
}

/// Aggregate result of an oracle-versus-criterion sweep.
#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckReport {
    pub interval_count: usize,
    pub class_count: usize,
    /// Class sizes, largest first.
    pub class_sizes: Vec<usize>,
    pub pairs_tested: u64,
    pub policy: String,
    pub seed: Option<u64>,
    pub oracle_seed: u64,
    pub disagreements: Vec<Disagreement>,
}

/// Runs the three isomorphism routes against each other over interval pairs:
/// the descent-preserving criterion, the colored-digraph-plus-profile check,
/// and the intertwiner oracle. Any disagreement lands in the report.
pub fn crosscheck_classification(
    engine: &GroupEngine,
    policy: SamplePolicy,
    cap: u128,
    oracle: &OracleConfig,
) -> Result<CrosscheckReport, Error> {
    let intervals_list = enumerate_intervals(engine, cap)?;
    let n = intervals_list.len();

    // Per-interval caches: action column maps, xi, descent profile.
    let maps: Vec<Vec<Vec<Option<usize>>>> = intervals_list
        .iter()
        .map(|i| {
            (0..engine.rank())
                .map(|s| hecke::action_matrix(engine, i, s).columns().to_vec())
                .collect()
        })
        .collect();
    let profiles: Vec<ProfileKey> = intervals_list
        .iter()
        .map(|i| profile_key(engine, i))
        .collect();

    let classes = classes_from_intervals(engine, intervals_list.clone());

    let mut disagreements = Vec::new();
    let mut pairs_tested: u64 = 0;
    let check_pair = |i: usize, j: usize, disagreements: &mut Vec<Disagreement>| {
        let a = &intervals_list[i];
        let b = &intervals_list[j];
        let criterion = intervals::is_descent_preserving_iso(engine, a, b)
            .expect("same engine by construction");
        let digraph = profiles[i].0 == profiles[j].0 && profiles[i].1 == profiles[j].1;
        let (out, _) = hecke::oracle_from_maps(&maps[i], &maps[j], a.len(), b.len(), oracle);
        if criterion != digraph || criterion != out.isomorphic {
            disagreements.push(Disagreement {
                first: (
                    engine.render_element(a.lower()),
                    engine.render_element(a.upper()),
                ),
                second: (
                    engine.render_element(b.lower()),
                    engine.render_element(b.upper()),
                ),
                criterion,
                digraph_and_profile: digraph,
                oracle: out.isomorphic,
            });
        }
    };

    let (policy_name, seed) = match policy {
        SamplePolicy::Exhaustive => {
            for i in 0..n {
                for j in i..n {
                    check_pair(i, j, &mut disagreements);
                    pairs_tested += 1;
                }
            }
            ("exhaustive".to_string(), None)
        }
        SamplePolicy::Random { pairs, seed } => {
            let mut rng = SplitMix64::new(seed);
            for _ in 0..pairs {
                let i = rng.next_below(n as u64) as usize;
                let j = rng.next_below(n as u64) as usize;
                check_pair(i, j, &mut disagreements);
                pairs_tested += 1;
            }
            ("random".to_string(), Some(seed))
        }
    };

    let mut class_sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    class_sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(CrosscheckReport {
        interval_count: n,
        class_count: classes.len(),
        class_sizes,
        pairs_tested,
        policy: policy_name,
        seed,
        oracle_seed: oracle.seed,
        disagreements,
    })
}

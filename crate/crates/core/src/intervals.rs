//! Left weak Bruhat intervals, their colored digraphs, and the two
//! isomorphism notions on them.
//!
//! An interval `[u,v]_L` is the set of `x` with `u <=_L x <=_L v`. Its
//! colored digraph has an arc `x --s--> sx` for every covering pair inside
//! the interval. Two intervals are colored-digraph isomorphic exactly when
//! `v u^{-1} = v' u'^{-1}`, and the unique candidate map is
//! `x -> x u^{-1} u'`; they are descent-preserving isomorphic when that map
//! additionally preserves every left descent set.

use std::collections::HashMap;

use serde::Serialize;

use crate::coxeter::{Element, GeneratorSet, GroupEngine};
use crate::error::Error;

/// A left weak Bruhat interval with its enumerated element list.
///
/// Elements are sorted by (length, canonical serialization), which is a
/// linear extension of the weak order, and an index map gives each element
/// its position in that list.
#[derive(Debug, Clone)]
pub struct WeakInterval {
    lower: Element,
    upper: Element,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
}

impl PartialEq for WeakInterval {
    /// Intervals are equal iff their endpoints are: the element list is
    /// determined by the endpoints.
    fn eq(&self, other: &Self) -> bool {
        self.lower == other.lower && self.upper == other.upper
    }
}

impl Eq for WeakInterval {}

impl WeakInterval {
    /// Enumerates `[u,v]_L` by upward BFS from `u`, stepping along ascents
    /// that stay below `v`.
    pub fn new(engine: &GroupEngine, u: &Element, v: &Element) -> Result<Self, Error> {
        if !engine.leq_left(u, v)? {
            return Err(Error::NotComparable(format!(
                "{} is not below {} in the left weak order",
                engine.render_element(u),
                engine.render_element(v)
            )));
        }
        let mut seen: HashMap<Element, ()> = HashMap::new();
        let mut queue = vec![u.clone()];
        seen.insert(u.clone(), ());
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head].clone();
            head += 1;
            let desc = engine.left_descents(&x);
            for s in 0..engine.rank() {
                if desc.contains(s) {
                    continue;
                }
                let up = engine.left_mul_gen(s, &x);
                if !seen.contains_key(&up) && engine.leq_left(&up, v)? {
                    seen.insert(up.clone(), ());
                    queue.push(up);
                }
            }
        }
        let mut elements = queue;
        elements.sort_by_key(|x| (engine.length(x), x.clone()));
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i))
            .collect();
        Ok(WeakInterval {
            lower: u.clone(),
            upper: v.clone(),
            elements,
            index,
        })
    }

    pub fn lower(&self) -> &Element {
        &self.lower
    }

    pub fn upper(&self) -> &Element {
        &self.upper
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn position(&self, x: &Element) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.index.contains_key(x)
    }

    /// Left descent set of each element, listed along the canonical
    /// traversal ordered by `x u^{-1}`. Two intervals with the same
    /// `v u^{-1}` are descent-preserving isomorphic iff these sequences are
    /// equal, because the canonical map preserves the coordinate `x u^{-1}`.
    pub fn descent_profile(&self, engine: &GroupEngine) -> Vec<(Element, GeneratorSet)> {
        let u_inv = engine.inverse(&self.lower);
        let mut profile: Vec<(Element, GeneratorSet)> = self
            .elements
            .iter()
            .map(|x| {
                let z = engine
                    .multiply(x, &u_inv)
                    .expect("same engine by construction");
                (z, engine.left_descents(x))
            })
            .collect();
        profile.sort_by_key(|(z, _)| (engine.length(z), z.clone()));
        profile
    }
}

/// One labeled arc of a colored digraph, as indices into the vertex list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Arc {
    pub source: usize,
    pub target: usize,
    pub generator: usize,
}

/// Colored digraph of an interval: vertices in interval order, one arc per
/// covering pair, labeled by the generator realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDigraph {
    vertices: Vec<Element>,
    arcs: Vec<Arc>,
}

impl ColoredDigraph {
    pub fn vertices(&self) -> &[Element] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// DOT rendering. Arcs point from shorter to longer elements, so ranks
    /// grow bottom-to-top (`rankdir=BT`); diagrams drawn with the identity
    /// on top appear flipped relative to this output.
    pub fn to_dot(&self, engine: &GroupEngine) -> String {
        let mut out = String::from("digraph interval {\n  rankdir=BT;\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{}\";\n", engine.render_element(v)));
        }
        for arc in &self.arcs {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"s{}\"];\n",
                engine.render_element(&self.vertices[arc.source]),
                engine.render_element(&self.vertices[arc.target]),
                arc.generator + 1
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self, engine: &GroupEngine) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices.iter().map(|v| engine.render_element(v)).collect::<Vec<_>>(),
            "arcs": self.arcs,
        })
    }
}

/// Builds the colored digraph of an interval.
pub fn colored_digraph(engine: &GroupEngine, interval: &WeakInterval) -> ColoredDigraph {
    let mut arcs = Vec::new();
    for (i, x) in interval.elements().iter().enumerate() {
        let desc = engine.left_descents(x);
        for s in 0..engine.rank() {
            if desc.contains(s) {
                continue;
            }
            let up = engine.left_mul_gen(s, x);
            if let Some(j) = interval.position(&up) {
                arcs.push(Arc {
                    source: i,
                    target: j,
                    generator: s,
                });
            }
        }
    }
    arcs.sort();
    ColoredDigraph {
        vertices: interval.elements().to_vec(),
        arcs,
    }
}

fn quotient(engine: &GroupEngine, interval: &WeakInterval) -> Element {
    engine
        .multiply(interval.upper(), &engine.inverse(interval.lower()))
        .expect("same engine by construction")
}

fn check_same_engine(
    engine: &GroupEngine,
    a: &WeakInterval,
    b: &WeakInterval,
) -> Result<(), Error> {
    if a.lower().engine_id() != b.lower().engine_id()
        || a.lower().engine_id() != engine.identity().engine_id()
    {
        return Err(Error::EngineMismatch);
    }
    Ok(())
}

/// Colored-digraph isomorphism test: `v u^{-1} = v' u'^{-1}`.
pub fn is_colored_digraph_iso(
    engine: &GroupEngine,
    a: &WeakInterval,
    b: &WeakInterval,
) -> Result<bool, Error> {
    check_same_engine(engine, a, b)?;
    Ok(quotient(engine, a) == quotient(engine, b))
}

/// Image of `x` under the unique colored-digraph isomorphism, `x u^{-1} u'`.
pub fn canonical_map(
    engine: &GroupEngine,
    a: &WeakInterval,
    b: &WeakInterval,
    x: &Element,
) -> Result<Element, Error> {
    if !is_colored_digraph_iso(engine, a, b)? {
        return Err(Error::NotIsomorphic(
            "intervals are not colored-digraph isomorphic".into(),
        ));
    }
    if !a.contains(x) {
        return Err(Error::NotInInterval(engine.render_element(x)));
    }
    let shift = engine.multiply(&engine.inverse(a.lower()), b.lower())?;
    engine.multiply(x, &shift)
}

/// Descent-preserving isomorphism test: `v u^{-1} = v' u'^{-1}` and the
/// canonical map preserves every left descent set. Scans elements in
/// length-layered order from the bottom and stops at the first mismatch.
pub fn is_descent_preserving_iso(
    engine: &GroupEngine,
    a: &WeakInterval,
    b: &WeakInterval,
) -> Result<bool, Error> {
    if !is_colored_digraph_iso(engine, a, b)? {
        return Ok(false);
    }
    let shift = engine.multiply(&engine.inverse(a.lower()), b.lower())?;
    for x in a.elements() {
        let image = engine.multiply(x, &shift)?;
        if engine.left_descents(x) != engine.left_descents(&image) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transports a subinterval `[x,y]_L` of `a` along the descent-preserving
/// isomorphism onto a subinterval of `b`, returning its endpoints.
pub fn transport_subinterval(
    engine: &GroupEngine,
    a: &WeakInterval,
    b: &WeakInterval,
    x: &Element,
    y: &Element,
) -> Result<(Element, Element), Error> {
    if !is_descent_preserving_iso(engine, a, b)? {
        return Err(Error::NotIsomorphic(
            "intervals are not descent-preserving isomorphic".into(),
        ));
    }
    for w in [x, y] {
        if !a.contains(w) {
            return Err(Error::NotInInterval(engine.render_element(w)));
        }
    }
    if !engine.leq_left(x, y)? {
        return Err(Error::NotComparable(format!(
            "{} is not below {} in the left weak order",
            engine.render_element(x),
            engine.render_element(y)
        )));
    }
    let shift = engine.multiply(&engine.inverse(a.lower()), b.lower())?;
    Ok((engine.multiply(x, &shift)?, engine.multiply(y, &shift)?))
}

//! Finite Coxeter systems: group engines, elements, descents, and the
//! Bruhat and weak orders.
//!
//! A [`GroupEngine`] is an immutable realization of one finite Coxeter
//! system. Elements are opaque values owned by their engine; every operation
//! that combines two elements checks that they come from the same engine.
//! Generators are indexed `0..rank` internally and rendered `s1..s<rank>`.

mod dihedral;
mod perm;
mod rootsys;
mod signed;

use std::collections::HashSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::Error;

pub use rootsys::RootSystem;

static NEXT_ENGINE_ID: AtomicU64 = AtomicU64::new(1);

/// Description of a finite Coxeter system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoxeterSpec {
    /// Symmetric group on `n` letters (type A, rank `n-1`).
    SymmetricA(usize),
    /// Hyperoctahedral group of signed permutations of `[n]` (type B, rank `n`).
    HyperoctahedralB(usize),
    /// Dihedral group of order `2m` (type I2(m), rank 2).
    DihedralI2(u32),
    /// Weyl group of a crystallographic Cartan matrix.
    CrystallographicMatrix(Vec<Vec<i64>>),
}

#[derive(Debug)]
enum EngineKind {
    Symmetric { n: usize },
    Hyperoctahedral { n: usize },
    Dihedral { m: u32 },
    Matrix(RootSystem),
}

/// Engine-specific element value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Payload {
    Perm(Vec<u8>),
    Signed(Vec<i32>),
    Word(Vec<u8>),
    RootTable(Vec<i32>),
}

/// An element of a finite Coxeter group, owned by the engine that built it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    engine: u64,
    payload: Payload,
}

impl Element {
    pub fn engine_id(&self) -> u64 {
        self.engine
    }
}

/// Subset of the generators of one engine, as a bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSet {
    bits: u32,
    rank: u8,
}

impl GeneratorSet {
    pub fn empty(rank: usize) -> Self {
        GeneratorSet {
            bits: 0,
            rank: rank as u8,
        }
    }

    pub fn full(rank: usize) -> Self {
        GeneratorSet {
            bits: if rank == 0 { 0 } else { (1u32 << rank) - 1 },
            rank: rank as u8,
        }
    }

    pub fn from_indices(rank: usize, indices: &[usize]) -> Self {
        let mut set = Self::empty(rank);
        for &i in indices {
            set.insert(i);
        }
        set
    }

    pub(crate) fn from_bits(rank: usize, bits: u32) -> Self {
        GeneratorSet {
            bits,
            rank: rank as u8,
        }
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.rank as usize, "generator index out of range");
        self.bits |= 1 << i;
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits & (1 << i) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn complement(&self) -> Self {
        GeneratorSet {
            bits: !self.bits & Self::full(self.rank as usize).bits,
            rank: self.rank,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        GeneratorSet {
            bits: self.bits & other.bits,
            rank: self.rank,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.rank as usize).filter(move |i| bits & (1 << i) != 0)
    }
}

impl fmt::Debug for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

/// Immutable realization of a finite Coxeter system.
///
/// All operations are pure; the engine can be shared freely across threads.
#[derive(Debug)]
pub struct GroupEngine {
    id: u64,
    spec: CoxeterSpec,
    kind: EngineKind,
    rank: usize,
    order: u128,
}

/// Builds an engine from a validated specification.
pub fn build_group(spec: CoxeterSpec) -> Result<GroupEngine, Error> {
    GroupEngine::build(spec)
}

fn checked_factorial(n: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for k in 2..=n as u128 {
        acc = acc.checked_mul(k)?;
    }
    Some(acc)
}

impl GroupEngine {
    pub fn build(spec: CoxeterSpec) -> Result<GroupEngine, Error> {
        let (kind, rank, order) = match &spec {
            CoxeterSpec::SymmetricA(n) => {
                let n = *n;
                if n < 2 {
                    return Err(Error::InvalidSpec(format!(
                        "symmetric group on {n} letters has rank {}; need rank >= 1",
                        n.saturating_sub(1)
                    )));
                }
                if n > 32 {
                    return Err(Error::InvalidSpec(format!(
                        "symmetric group on {n} letters is beyond the supported range"
                    )));
                }
                let order = checked_factorial(n)
                    .ok_or_else(|| Error::InvalidSpec("group order overflows u128".into()))?;
                (EngineKind::Symmetric { n }, n - 1, order)
            }
            CoxeterSpec::HyperoctahedralB(n) => {
                let n = *n;
                if n == 0 {
                    return Err(Error::InvalidSpec("hyperoctahedral rank 0".into()));
                }
                if n > 24 {
                    return Err(Error::InvalidSpec(format!(
                        "hyperoctahedral group of rank {n} is beyond the supported range"
                    )));
                }
                let order = checked_factorial(n)
                    .and_then(|f| f.checked_mul(1u128 << n))
                    .ok_or_else(|| Error::InvalidSpec("group order overflows u128".into()))?;
                (EngineKind::Hyperoctahedral { n }, n, order)
            }
            CoxeterSpec::DihedralI2(m) => {
                let m = *m;
                if m < 2 {
                    return Err(Error::InvalidSpec(format!(
                        "dihedral parameter m = {m}; need m >= 2"
                    )));
                }
                (EngineKind::Dihedral { m }, 2, 2 * m as u128)
            }
            CoxeterSpec::CrystallographicMatrix(cartan) => {
                let rs = RootSystem::build(cartan.clone())?;
                let rank = rs.rank();
                let order = rs.order();
                (EngineKind::Matrix(rs), rank, order)
            }
        };
        Ok(GroupEngine {
            id: NEXT_ENGINE_ID.fetch_add(1, Ordering::Relaxed),
            spec,
            kind,
            rank,
            order,
        })
    }

    pub fn spec(&self) -> &CoxeterSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    /// Order of the product of two generators, with m(s,s) = 1.
    pub fn coxeter_m(&self, s: usize, t: usize) -> u32 {
        assert!(s < self.rank && t < self.rank);
        if s == t {
            return 1;
        }
        match &self.kind {
            EngineKind::Symmetric { .. } => {
                if s.abs_diff(t) == 1 {
                    3
                } else {
                    2
                }
            }
            EngineKind::Hyperoctahedral { .. } => {
                if s.min(t) == 0 && s.max(t) == 1 {
                    4
                } else if s.abs_diff(t) == 1 {
                    3
                } else {
                    2
                }
            }
            EngineKind::Dihedral { m } => *m,
            EngineKind::Matrix(rs) => rs.coxeter_m(s, t),
        }
    }

    fn wrap(&self, payload: Payload) -> Element {
        Element {
            engine: self.id,
            payload,
        }
    }

    fn check_owned(&self, w: &Element) -> Result<(), Error> {
        if w.engine != self.id {
            Err(Error::EngineMismatch)
        } else {
            Ok(())
        }
    }

    fn assert_owned(&self, w: &Element) {
        assert!(
            w.engine == self.id,
            "element does not belong to this engine"
        );
    }

    pub fn identity(&self) -> Element {
        let payload = match &self.kind {
            EngineKind::Symmetric { n } => Payload::Perm(perm::identity(*n)),
            EngineKind::Hyperoctahedral { n } => Payload::Signed(signed::identity(*n)),
            EngineKind::Dihedral { .. } => Payload::Word(dihedral::identity()),
            EngineKind::Matrix(rs) => Payload::RootTable(rs.identity()),
        };
        self.wrap(payload)
    }

    /// The longest element w0.
    pub fn longest(&self) -> Element {
        let payload = match &self.kind {
            EngineKind::Symmetric { n } => Payload::Perm(perm::longest(*n)),
            EngineKind::Hyperoctahedral { n } => Payload::Signed(signed::longest(*n)),
            EngineKind::Dihedral { m } => Payload::Word(dihedral::longest(*m)),
            EngineKind::Matrix(rs) => Payload::RootTable(rs.longest()),
        };
        self.wrap(payload)
    }

    pub fn generator(&self, s: usize) -> Element {
        assert!(s < self.rank, "generator index out of range");
        self.left_mul_gen(s, &self.identity())
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..self.rank).map(|s| self.generator(s)).collect()
    }

    fn mul_payload(&self, a: &Payload, b: &Payload) -> Payload {
        match (&self.kind, a, b) {
            (EngineKind::Symmetric { .. }, Payload::Perm(x), Payload::Perm(y)) => {
                Payload::Perm(perm::compose(x, y))
            }
            (EngineKind::Hyperoctahedral { .. }, Payload::Signed(x), Payload::Signed(y)) => {
                Payload::Signed(signed::compose(x, y))
            }
            (EngineKind::Dihedral { m }, Payload::Word(x), Payload::Word(y)) => {
                Payload::Word(dihedral::compose(x, y, *m))
            }
            (EngineKind::Matrix(rs), Payload::RootTable(x), Payload::RootTable(y)) => {
                Payload::RootTable(rs.compose(x, y))
            }
            _ => unreachable!("payload kind does not match engine kind"),
        }
    }

    fn inv_payload(&self, w: &Payload) -> Payload {
        match (&self.kind, w) {
            (EngineKind::Symmetric { .. }, Payload::Perm(x)) => Payload::Perm(perm::inverse(x)),
            (EngineKind::Hyperoctahedral { .. }, Payload::Signed(x)) => {
                Payload::Signed(signed::inverse(x))
            }
            (EngineKind::Dihedral { m }, Payload::Word(x)) => {
                Payload::Word(dihedral::inverse(x, *m))
            }
            (EngineKind::Matrix(rs), Payload::RootTable(x)) => {
                Payload::RootTable(rs.inverse(x))
            }
            _ => unreachable!("payload kind does not match engine kind"),
        }
    }

    fn len_payload(&self, w: &Payload) -> usize {
        match (&self.kind, w) {
            (EngineKind::Symmetric { .. }, Payload::Perm(x)) => perm::length(x),
            (EngineKind::Hyperoctahedral { .. }, Payload::Signed(x)) => signed::length(x),
            (EngineKind::Dihedral { .. }, Payload::Word(x)) => dihedral::length(x),
            (EngineKind::Matrix(rs), Payload::RootTable(x)) => rs.length(x),
            _ => unreachable!("payload kind does not match engine kind"),
        }
    }

    fn desc_bits(&self, w: &Payload) -> u32 {
        match (&self.kind, w) {
            (EngineKind::Symmetric { .. }, Payload::Perm(x)) => perm::left_descent_bits(x),
            (EngineKind::Hyperoctahedral { .. }, Payload::Signed(x)) => {
                signed::left_descent_bits(x)
            }
            (EngineKind::Dihedral { m }, Payload::Word(x)) => dihedral::left_descent_bits(x, *m),
            (EngineKind::Matrix(rs), Payload::RootTable(x)) => rs.left_descent_bits(x),
            _ => unreachable!("payload kind does not match engine kind"),
        }
    }

    fn lmul_payload(&self, s: usize, w: &Payload) -> Payload {
        match (&self.kind, w) {
            (EngineKind::Symmetric { .. }, Payload::Perm(x)) => {
                Payload::Perm(perm::left_mul_gen(s, x))
            }
            (EngineKind::Hyperoctahedral { .. }, Payload::Signed(x)) => {
                Payload::Signed(signed::left_mul_gen(s, x))
            }
            (EngineKind::Dihedral { m }, Payload::Word(x)) => {
                Payload::Word(dihedral::left_mul_gen(s as u8, x, *m))
            }
            (EngineKind::Matrix(rs), Payload::RootTable(x)) => {
                Payload::RootTable(rs.left_mul_gen(s, x))
            }
            _ => unreachable!("payload kind does not match engine kind"),
        }
    }

    /// Group product `w * w2` (right factor applied first).
    pub fn multiply(&self, w: &Element, w2: &Element) -> Result<Element, Error> {
        self.check_owned(w)?;
        self.check_owned(w2)?;
        Ok(self.wrap(self.mul_payload(&w.payload, &w2.payload)))
    }

    pub fn inverse(&self, w: &Element) -> Element {
        self.assert_owned(w);
        self.wrap(self.inv_payload(&w.payload))
    }

    /// Coxeter length.
    pub fn length(&self, w: &Element) -> usize {
        self.assert_owned(w);
        self.len_payload(&w.payload)
    }

    /// Left multiplication by generator `s`.
    pub fn left_mul_gen(&self, s: usize, w: &Element) -> Element {
        self.assert_owned(w);
        assert!(s < self.rank, "generator index out of range");
        self.wrap(self.lmul_payload(s, &w.payload))
    }

    /// The set of generators `s` with `l(s w) < l(w)`.
    pub fn left_descents(&self, w: &Element) -> GeneratorSet {
        self.assert_owned(w);
        GeneratorSet::from_bits(self.rank, self.desc_bits(&w.payload))
    }

    pub fn is_identity(&self, w: &Element) -> bool {
        self.assert_owned(w);
        self.len_payload(&w.payload) == 0
    }

    /// Left weak order: `u <=_L v` iff `l(v) = l(u) + l(v u^{-1})`.
    pub fn leq_left(&self, u: &Element, v: &Element) -> Result<bool, Error> {
        self.check_owned(u)?;
        self.check_owned(v)?;
        let quot = self.mul_payload(&v.payload, &self.inv_payload(&u.payload));
        Ok(self.len_payload(&v.payload)
            == self.len_payload(&u.payload) + self.len_payload(&quot))
    }

    /// Right weak order: `u <=_R v` iff `l(v) = l(u) + l(u^{-1} v)`.
    pub fn leq_right(&self, u: &Element, v: &Element) -> Result<bool, Error> {
        self.check_owned(u)?;
        self.check_owned(v)?;
        let quot = self.mul_payload(&self.inv_payload(&u.payload), &v.payload);
        Ok(self.len_payload(&v.payload)
            == self.len_payload(&u.payload) + self.len_payload(&quot))
    }

    /// Bruhat order via the lifting property: pick `s` in Des_L(v); if `s`
    /// is also a descent of `u` recurse on `(su, sv)`, otherwise on `(u, sv)`.
    pub fn leq_bruhat(&self, u: &Element, v: &Element) -> Result<bool, Error> {
        self.check_owned(u)?;
        self.check_owned(v)?;
        let mut u = u.payload.clone();
        let mut v = v.payload.clone();
        loop {
            let v_desc = self.desc_bits(&v);
            if v_desc == 0 {
                // v is the identity.
                return Ok(self.len_payload(&u) == 0);
            }
            let s = v_desc.trailing_zeros() as usize;
            if self.desc_bits(&u) & (1 << s) != 0 {
                u = self.lmul_payload(s, &u);
            }
            v = self.lmul_payload(s, &v);
        }
    }

    /// Greatest lower bound under the right weak order, by peeling common
    /// left descents: meet(x, y) = s * meet(sx, sy) for s in the common
    /// descent set, with the identity once no common descent remains.
    pub fn meet_right(&self, x: &Element, y: &Element) -> Result<Element, Error> {
        self.check_owned(x)?;
        self.check_owned(y)?;
        let mut x = x.payload.clone();
        let mut y = y.payload.clone();
        let mut peeled = Vec::new();
        loop {
            let common = self.desc_bits(&x) & self.desc_bits(&y);
            if common == 0 {
                break;
            }
            let s = common.trailing_zeros() as usize;
            x = self.lmul_payload(s, &x);
            y = self.lmul_payload(s, &y);
            peeled.push(s);
        }
        let mut meet = self.identity().payload;
        for &s in peeled.iter().rev() {
            meet = self.lmul_payload(s, &meet);
        }
        Ok(self.wrap(meet))
    }

    /// Least upper bound under the right weak order, computed through the
    /// order-reversing involution `w -> w w0`.
    pub fn join_right(&self, x: &Element, y: &Element) -> Result<Element, Error> {
        self.check_owned(x)?;
        self.check_owned(y)?;
        let w0 = self.longest();
        let xw0 = self.multiply(x, &w0)?;
        let yw0 = self.multiply(y, &w0)?;
        let m = self.meet_right(&xw0, &yw0)?;
        self.multiply(&m, &w0)
    }

    /// Longest element of the parabolic subgroup generated by `gens`.
    pub fn longest_parabolic(&self, gens: GeneratorSet) -> Element {
        assert!(gens.rank() == self.rank, "generator set rank mismatch");
        let mut w = self.identity().payload;
        loop {
            let desc = self.desc_bits(&w);
            let ascent = gens.iter().find(|&s| desc & (1 << s) == 0);
            match ascent {
                Some(s) => w = self.lmul_payload(s, &w),
                None => return self.wrap(w),
            }
        }
    }

    /// Endpoints `(w0(I), w0(S\I) w0)` of the right weak interval holding
    /// exactly the elements with left descent set `I`.
    pub fn descent_class(&self, gens: GeneratorSet) -> (Element, Element) {
        let lo = self.longest_parabolic(gens);
        let co = self.longest_parabolic(gens.complement());
        let hi = self
            .multiply(&co, &self.longest())
            .expect("same engine by construction");
        (lo, hi)
    }

    /// All group elements, sorted by (length, canonical serialization).
    pub fn elements(&self) -> Vec<Element> {
        let mut seen: HashSet<Payload> = HashSet::new();
        let mut queue = vec![self.identity().payload];
        seen.insert(queue[0].clone());
        let mut head = 0;
        while head < queue.len() {
            let w = queue[head].clone();
            head += 1;
            for s in 0..self.rank {
                let next = self.lmul_payload(s, &w);
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        let mut out: Vec<Element> = queue.into_iter().map(|p| self.wrap(p)).collect();
        out.sort_by_key(|w| (self.len_payload(&w.payload), w.payload.clone()));
        out
    }

    /// ShortLex reduced word, peeling the lowest-index descent first.
    pub fn reduced_word(&self, w: &Element) -> Vec<usize> {
        self.assert_owned(w);
        let mut cur = w.payload.clone();
        let mut word = Vec::new();
        loop {
            let desc = self.desc_bits(&cur);
            if desc == 0 {
                return word;
            }
            let s = desc.trailing_zeros() as usize;
            word.push(s);
            cur = self.lmul_payload(s, &cur);
        }
    }

    /// Product of a word of generator indices (right factor applied first).
    pub fn element_from_word(&self, word: &[usize]) -> Element {
        let mut cur = self.identity().payload;
        for &s in word.iter().rev() {
            assert!(s < self.rank, "generator index out of range");
            cur = self.lmul_payload(s, &cur);
        }
        self.wrap(cur)
    }

    /// Canonical text form; round-trips through [`GroupEngine::parse_element`].
    pub fn render_element(&self, w: &Element) -> String {
        self.assert_owned(w);
        match (&self.kind, &w.payload) {
            (EngineKind::Symmetric { .. }, Payload::Perm(x)) => perm::render(x),
            (EngineKind::Hyperoctahedral { .. }, Payload::Signed(x)) => signed::render(x),
            _ => {
                let word = self.reduced_word(w);
                if word.is_empty() {
                    "e".to_string()
                } else {
                    word.iter()
                        .map(|s| format!("s{}", s + 1))
                        .collect::<Vec<_>>()
                        .join(" ")
                }
            }
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<Element, Error> {
        let payload = match &self.kind {
            EngineKind::Symmetric { n } => Payload::Perm(perm::parse(text, *n)?),
            EngineKind::Hyperoctahedral { n } => Payload::Signed(signed::parse(text, *n)?),
            EngineKind::Dihedral { .. } | EngineKind::Matrix(_) => {
                let word = self.parse_word(text)?;
                return Ok(self.element_from_word(&word));
            }
        };
        Ok(self.wrap(payload))
    }

    fn parse_word(&self, text: &str) -> Result<Vec<usize>, Error> {
        let text = text.trim();
        if text == "e" || text.is_empty() {
            return Ok(Vec::new());
        }
        text.split_whitespace()
            .map(|tok| {
                let digits = tok.strip_prefix('s').unwrap_or(tok);
                let k: usize = digits
                    .parse()
                    .map_err(|_| Error::ParseError(format!("bad generator token {tok:?}")))?;
                if k == 0 || k > self.rank {
                    return Err(Error::ParseError(format!(
                        "generator {tok:?} out of range 1..={}",
                        self.rank
                    )));
                }
                Ok(k - 1)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> GroupEngine {
        GroupEngine::build(CoxeterSpec::SymmetricA(4)).unwrap()
    }

    fn el(g: &GroupEngine, text: &str) -> Element {
        g.parse_element(text).unwrap()
    }

    #[test]
    fn build_group_examples() {
        let a3 = s4();
        assert_eq!(a3.order(), 24);
        assert_eq!(a3.rank(), 3);
        let b3 = GroupEngine::build(CoxeterSpec::HyperoctahedralB(3)).unwrap();
        assert_eq!(b3.order(), 48);
        let i25 = GroupEngine::build(CoxeterSpec::DihedralI2(5)).unwrap();
        assert_eq!(i25.order(), 10);
        assert_eq!(i25.length(&i25.longest()), 5);
    }

    #[test]
    fn build_group_rejects_bad_specs() {
        assert!(matches!(
            GroupEngine::build(CoxeterSpec::SymmetricA(1)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            GroupEngine::build(CoxeterSpec::DihedralI2(1)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            GroupEngine::build(CoxeterSpec::CrystallographicMatrix(vec![
                vec![2, -2],
                vec![-2, 2]
            ])),
            Err(Error::InfiniteGroup(_))
        ));
    }

    #[test]
    fn multiply_examples() {
        let g = s4();
        let prod = g.multiply(&el(&g, "2143"), &el(&g, "1243")).unwrap();
        assert_eq!(g.render_element(&prod), "2134");
        let w = el(&g, "3142");
        assert_eq!(g.multiply(&w, &g.identity()).unwrap(), w);
        for s in 0..3 {
            let gen = g.generator(s);
            assert!(g.is_identity(&g.multiply(&gen, &gen).unwrap()));
        }
    }

    #[test]
    fn engine_mismatch_detected() {
        let g1 = s4();
        let g2 = s4();
        let a = el(&g1, "1234");
        let b = el(&g2, "1234");
        assert!(matches!(g1.multiply(&a, &b), Err(Error::EngineMismatch)));
        assert!(matches!(g1.leq_left(&a, &b), Err(Error::EngineMismatch)));
    }

    #[test]
    fn length_examples() {
        let g = s4();
        assert_eq!(g.length(&el(&g, "1234")), 0);
        assert_eq!(g.length(&el(&g, "2143")), 2);
        assert_eq!(g.length(&el(&g, "4321")), 6);
    }

    #[test]
    fn left_descent_examples() {
        let g = s4();
        let d = g.left_descents(&el(&g, "1243"));
        assert_eq!(d, GeneratorSet::from_indices(3, &[2]));
        assert_eq!(
            g.left_descents(&el(&g, "3124")),
            GeneratorSet::from_indices(3, &[1])
        );
        assert_eq!(
            g.left_descents(&el(&g, "3214")),
            GeneratorSet::from_indices(3, &[0, 1])
        );
        assert!(g.left_descents(&g.identity()).is_empty());
    }

    #[test]
    fn weak_order_examples() {
        let g = s4();
        assert!(g.leq_left(&el(&g, "1243"), &el(&g, "2143")).unwrap());
        assert!(!g.leq_left(&el(&g, "1243"), &el(&g, "1423")).unwrap());
        assert!(g.leq_right(&el(&g, "1243"), &el(&g, "1423")).unwrap());
        assert!(g.leq_right(&el(&g, "1243"), &el(&g, "2143")).unwrap());
        for w in ["1234", "2143", "4321"] {
            let w = el(&g, w);
            assert!(g.leq_left(&g.identity(), &w).unwrap());
            assert!(g.leq_right(&w, &w).unwrap());
        }
    }

    #[test]
    fn bruhat_examples() {
        let g = s4();
        assert!(g.leq_bruhat(&el(&g, "1324"), &el(&g, "3124")).unwrap());
        assert!(!g.leq_bruhat(&el(&g, "2134"), &el(&g, "1324")).unwrap());
        let w = el(&g, "3142");
        assert!(g.leq_bruhat(&w, &w).unwrap());
    }

    #[test]
    fn meet_join_examples() {
        let g = s4();
        let w = el(&g, "3142");
        assert!(g.is_identity(&g.meet_right(&w, &g.identity()).unwrap()));
        assert_eq!(g.meet_right(&w, &w).unwrap(), w);
        assert_eq!(
            g.meet_right(&el(&g, "1243"), &el(&g, "1423")).unwrap(),
            el(&g, "1243")
        );
        assert_eq!(g.join_right(&w, &g.longest()).unwrap(), g.longest());
        assert_eq!(g.join_right(&g.identity(), &w).unwrap(), w);
        assert_eq!(
            g.join_right(&el(&g, "1243"), &el(&g, "1423")).unwrap(),
            el(&g, "1423")
        );
    }

    #[test]
    fn meet_is_tie_independent() {
        // Peeling the highest common descent instead of the lowest gives the
        // same element, as lattice uniqueness demands.
        let g = s4();
        let elems = g.elements();
        for x in &elems {
            for y in &elems {
                let lo = g.meet_right(x, y).unwrap();
                let mut xp = x.clone();
                let mut yp = y.clone();
                let mut peeled = Vec::new();
                loop {
                    let common = g
                        .left_descents(&xp)
                        .intersection(&g.left_descents(&yp));
                    match common.iter().last() {
                        None => break,
                        Some(s) => {
                            xp = g.left_mul_gen(s, &xp);
                            yp = g.left_mul_gen(s, &yp);
                            peeled.push(s);
                        }
                    }
                }
                let mut hi = g.identity();
                for &s in peeled.iter().rev() {
                    hi = g.left_mul_gen(s, &hi);
                }
                assert_eq!(lo, hi);
            }
        }
    }

    #[test]
    fn longest_parabolic_examples() {
        let g = s4();
        assert_eq!(
            g.longest_parabolic(GeneratorSet::from_indices(3, &[0])),
            el(&g, "2134")
        );
        assert_eq!(
            g.longest_parabolic(GeneratorSet::from_indices(3, &[0, 1])),
            el(&g, "3214")
        );
        assert_eq!(g.longest_parabolic(GeneratorSet::full(3)), el(&g, "4321"));
        assert!(g.is_identity(&g.longest_parabolic(GeneratorSet::empty(3))));
    }

    #[test]
    fn descent_class_examples() {
        let g = s4();
        let (lo, hi) = g.descent_class(GeneratorSet::empty(3));
        assert!(g.is_identity(&lo));
        assert!(g.is_identity(&hi));
        let (lo, hi) = g.descent_class(GeneratorSet::full(3));
        assert_eq!(lo, g.longest());
        assert_eq!(hi, g.longest());
        // I = {s3}: the right weak interval must hold exactly the elements
        // with left descent set {s3}.
        let set = GeneratorSet::from_indices(3, &[2]);
        let (lo, hi) = g.descent_class(set);
        for w in g.elements() {
            let in_interval =
                g.leq_right(&lo, &w).unwrap() && g.leq_right(&w, &hi).unwrap();
            assert_eq!(in_interval, g.left_descents(&w) == set, "w={:?}", w);
        }
    }

    #[test]
    fn element_text_round_trip() {
        let g = s4();
        for w in g.elements() {
            let text = g.render_element(&w);
            assert_eq!(g.parse_element(&text).unwrap(), w);
        }
        let b3 = GroupEngine::build(CoxeterSpec::HyperoctahedralB(3)).unwrap();
        assert_eq!(
            b3.render_element(&b3.parse_element("2 -1 3").unwrap()),
            "2 -1 3"
        );
        for w in b3.elements() {
            let text = b3.render_element(&w);
            assert_eq!(b3.parse_element(&text).unwrap(), w);
        }
        let i7 = GroupEngine::build(CoxeterSpec::DihedralI2(7)).unwrap();
        for w in i7.elements() {
            let text = i7.render_element(&w);
            assert_eq!(i7.parse_element(&text).unwrap(), w);
        }
        assert!(i7.parse_element("s3").is_err());
        assert!(i7.parse_element("sX").is_err());
    }

    #[test]
    fn elements_enumeration_matches_order() {
        for spec in [
            CoxeterSpec::SymmetricA(4),
            CoxeterSpec::HyperoctahedralB(2),
            CoxeterSpec::DihedralI2(6),
            CoxeterSpec::CrystallographicMatrix(vec![vec![2, -1], vec![-3, 2]]),
            CoxeterSpec::CrystallographicMatrix(vec![
                vec![2, -1, 0],
                vec![-1, 2, -1],
                vec![0, -2, 2],
            ]),
        ] {
            let g = GroupEngine::build(spec).unwrap();
            assert_eq!(g.elements().len() as u128, g.order());
        }
    }

    #[test]
    fn word_round_trip_matrix_engine() {
        let g = GroupEngine::build(CoxeterSpec::CrystallographicMatrix(vec![
            vec![2, -1],
            vec![-2, 2],
        ]))
        .unwrap();
        for w in g.elements() {
            let text = g.render_element(&w);
            assert_eq!(g.parse_element(&text).unwrap(), w, "text={text}");
            let word = g.reduced_word(&w);
            assert_eq!(word.len(), g.length(&w));
            assert_eq!(g.element_from_word(&word), w);
        }
    }

    #[test]
    fn coxeter_matrix_entries() {
        let g = s4();
        assert_eq!(g.coxeter_m(0, 0), 1);
        assert_eq!(g.coxeter_m(0, 1), 3);
        assert_eq!(g.coxeter_m(0, 2), 2);
        let b = GroupEngine::build(CoxeterSpec::HyperoctahedralB(3)).unwrap();
        assert_eq!(b.coxeter_m(0, 1), 4);
        assert_eq!(b.coxeter_m(1, 2), 3);
        assert_eq!(b.coxeter_m(0, 2), 2);
    }

    #[test]
    fn coxeter_matrix_is_well_formed() {
        // Symmetric, 1 on the diagonal, >= 2 off it, and (st)^m(s,t) = e.
        for spec in [
            CoxeterSpec::SymmetricA(4),
            CoxeterSpec::HyperoctahedralB(3),
            CoxeterSpec::DihedralI2(6),
            CoxeterSpec::CrystallographicMatrix(vec![vec![2, -1], vec![-3, 2]]),
        ] {
            let g = GroupEngine::build(spec).unwrap();
            for s in 0..g.rank() {
                for t in 0..g.rank() {
                    let m = g.coxeter_m(s, t);
                    assert_eq!(m, g.coxeter_m(t, s));
                    if s == t {
                        assert_eq!(m, 1);
                    } else {
                        assert!(m >= 2);
                    }
                    let st = g
                        .multiply(&g.generator(s), &g.generator(t))
                        .unwrap();
                    let mut power = g.identity();
                    for _ in 0..m {
                        power = g.multiply(&st, &power).unwrap();
                    }
                    assert!(g.is_identity(&power), "(s{s} s{t})^{m} = e");
                }
            }
        }
    }
}

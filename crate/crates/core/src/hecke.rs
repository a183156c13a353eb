//! 0-Hecke actions on weak Bruhat intervals and the module-isomorphism
//! oracle.
//!
//! The module attached to `[u,v]_L` has the interval as a basis, with each
//! generator acting by
//!
//! ```text
//! pi_s x = x    if s is a left descent of x,
//!          0    if not and s x lies outside the interval,
//!          s x  otherwise.
//! ```
//!
//! Every action matrix therefore has unit-or-zero columns. Intertwiners
//! between two such modules form the exact solution space of the linear
//! system `F A_s = A'_s F` over all generators; the oracle decides whether
//! that space contains an invertible matrix by evaluating the determinant of
//! a generic member at random integer points (or over a full grid when the
//! deterministic fallback is within budget). The oracle never looks at
//! descent sets, so it is an independent check of the combinatorial
//! criterion.

use num_traits::Zero;
use serde::Serialize;

use crate::coxeter::{Element, GroupEngine};
use crate::error::Error;
use crate::intervals::WeakInterval;
use crate::linalg::{Matrix, Scalar, SparseRref};
use crate::rng::SplitMix64;
use crate::Rat;

/// Matrix of one generator acting on an interval basis, stored as the
/// unit-or-zero column map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMatrix {
    generator: usize,
    cols: Vec<Option<usize>>,
}

impl ActionMatrix {
    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    /// Row index of the basis vector in column `j`, or None for a zero
    /// column.
    pub fn column(&self, j: usize) -> Option<usize> {
        self.cols[j]
    }

    pub fn columns(&self) -> &[Option<usize>] {
        &self.cols
    }

    pub fn to_dense<T: Scalar>(&self) -> Matrix<T> {
        let d = self.cols.len();
        let mut m = Matrix::zero(d, d);
        for (j, target) in self.cols.iter().enumerate() {
            if let Some(i) = target {
                m[(*i, j)] = T::one();
            }
        }
        m
    }
}

/// Builds the matrix of `pi_s` on the interval basis.
pub fn action_matrix(engine: &GroupEngine, interval: &WeakInterval, s: usize) -> ActionMatrix {
    assert!(s < engine.rank(), "generator index out of range");
    let cols = interval
        .elements()
        .iter()
        .enumerate()
        .map(|(j, x)| {
            if engine.left_descents(x).contains(s) {
                Some(j)
            } else {
                interval.position(&engine.left_mul_gen(s, x))
            }
        })
        .collect();
    ActionMatrix { generator: s, cols }
}

/// Applies the product `pi_{s_1} pi_{s_2} ... pi_{s_k}` given by `word` to a
/// basis element; the rightmost factor acts first. Returns None when the
/// result is zero.
pub fn act_word(
    engine: &GroupEngine,
    interval: &WeakInterval,
    word: &[usize],
    x: &Element,
) -> Result<Option<Element>, Error> {
    if !interval.contains(x) {
        return Err(Error::NotInInterval(engine.render_element(x)));
    }
    let mut cur = x.clone();
    for &s in word.iter().rev() {
        if engine.left_descents(&cur).contains(s) {
            continue;
        }
        let up = engine.left_mul_gen(s, &cur);
        if !interval.contains(&up) {
            return Ok(None);
        }
        cur = up;
    }
    Ok(Some(cur))
}

/// Exact basis of the space of module homomorphisms `B(source) -> B(target)`
/// in the element bases.
#[derive(Debug, Clone)]
pub struct IntertwinerSpace {
    source: WeakInterval,
    target: WeakInterval,
    basis: Vec<Matrix<Rat>>,
}

impl IntertwinerSpace {
    pub fn source(&self) -> &WeakInterval {
        &self.source
    }

    pub fn target(&self) -> &WeakInterval {
        &self.target
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix<Rat>] {
        &self.basis
    }

    /// The member with the given coordinates in the basis.
    pub fn combination(&self, coeffs: &[Rat]) -> Matrix<Rat> {
        assert_eq!(coeffs.len(), self.basis.len());
        let mut out = Matrix::zero(self.target.len(), self.source.len());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = out.add(&b.scale(c));
            }
        }
        out
    }
}

fn check_same_engine(
    engine: &GroupEngine,
    a: &WeakInterval,
    b: &WeakInterval,
) -> Result<(), Error> {
    let id = engine.identity().engine_id();
    if a.lower().engine_id() != id || b.lower().engine_id() != id {
        return Err(Error::EngineMismatch);
    }
    Ok(())
}

/// Solves the intertwining equations `F A_s = A'_s F` for all generators.
///
/// The system is assembled sparsely: with unit-or-zero action columns each
/// scalar equation touches at most one entry of `F A_s` and the few entries
/// of `A'_s F` pulled from one column, so rows have a handful of nonzeros.
pub fn intertwiner_space(
    engine: &GroupEngine,
    source: &WeakInterval,
    target: &WeakInterval,
) -> Result<IntertwinerSpace, Error> {
    check_same_engine(engine, source, target)?;
    let src_maps: Vec<Vec<Option<usize>>> = (0..engine.rank())
        .map(|s| action_matrix(engine, source, s).cols)
        .collect();
    let tgt_maps: Vec<Vec<Option<usize>>> = (0..engine.rank())
        .map(|s| action_matrix(engine, target, s).cols)
        .collect();
    let basis = solve_intertwiners::<Rat>(&src_maps, &tgt_maps, source.len(), target.len());
    Ok(IntertwinerSpace {
        source: source.clone(),
        target: target.clone(),
        basis,
    })
}

/// Scalar-generic core of [`intertwiner_space`]: nullspace of the stacked
/// intertwining equations, returned as `d2 x d1` matrices.
pub fn solve_intertwiners<T: Scalar>(
    src_maps: &[Vec<Option<usize>>],
    tgt_maps: &[Vec<Option<usize>>],
    d1: usize,
    d2: usize,
) -> Vec<Matrix<T>> {
    let unknowns = d1 * d2;
    let mut rref: SparseRref<T> = SparseRref::new();
    for (src, tgt) in src_maps.iter().zip(tgt_maps) {
        // Preimages of each target row under the unit-column map.
        let mut pre: Vec<Vec<usize>> = vec![Vec::new(); d2];
        for (k, t) in tgt.iter().enumerate() {
            if let Some(i) = t {
                pre[*i].push(k);
            }
        }
        for (j, &src_col) in src.iter().enumerate() {
            for (i, pre_rows) in pre.iter().enumerate() {
                // (F A_s)[i][j] - (A'_s F)[i][j] = 0.
                let mut row: Vec<(usize, T)> = Vec::with_capacity(pre_rows.len() + 1);
                if let Some(c) = src_col {
                    row.push((i * d1 + c, T::one()));
                }
                for &k in pre_rows {
                    row.push((k * d1 + j, -T::one()));
                }
                row.sort_by_key(|(c, _)| *c);
                // Merge duplicate unknowns (the F[i][j] term can appear on
                // both sides).
                let mut merged: Vec<(usize, T)> = Vec::with_capacity(row.len());
                for (c, v) in row {
                    match merged.last_mut() {
                        Some((lc, lv)) if *lc == c => *lv = lv.clone() + v,
                        _ => merged.push((c, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                if !merged.is_empty() {
                    rref.insert(merged);
                }
            }
        }
    }
    rref.nullspace(unknowns)
        .into_iter()
        .map(|v| Matrix::from_fn(d2, d1, |i, j| v[i * d1 + j].clone()))
        .collect()
}

/// Configuration of the randomized isomorphism oracle.
#[derive(Debug, Clone, Serialize)]
pub struct OracleConfig {
    /// Seed of the PRNG; recorded in every outcome.
    pub seed: u64,
    /// Number of independent determinant evaluations before answering
    /// "not isomorphic".
    pub repetitions: u32,
    /// Size of the integer window the evaluation points are drawn from.
    pub window: u64,
    /// Evaluate on a full grid instead of random points when the grid fits
    /// the budget below.
    pub deterministic: bool,
    /// Grid budget in bits: the grid is used when k*log2(d+1) stays below
    /// this.
    pub grid_budget_bits: u32,
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        OracleConfig {
            seed,
            ..Default::default()
        }
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            seed: 42,
            repetitions: 20,
            window: 1 << 16,
            deterministic: false,
            grid_budget_bits: 16,
        }
    }
}

/// How an oracle verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMethod {
    /// Different basis sizes forbid isomorphism outright.
    SizeMismatch,
    /// The intertwiner space is zero.
    ZeroDimension,
    /// Random determinant evaluations (Schwartz-Zippel bound applies to a
    /// negative answer).
    RandomizedDeterminant,
    /// Exhaustive grid evaluation; both answers are certain.
    DeterministicGrid,
}

/// Outcome of one oracle call.
#[derive(Debug, Clone, Serialize)]
pub struct OracleOutcome {
    pub isomorphic: bool,
    /// Dimension of the intertwiner space (0 when sizes already differ).
    pub dimension: usize,
    pub method: OracleMethod,
    pub seed: u64,
    pub repetitions: u32,
    pub window: u64,
    /// For a negative randomized answer: probability bound `(d/window)^reps`
    /// that an isomorphism was missed.
    pub failure_bound: Option<f64>,
}

/// Decides `B(source) ≅ B(target)` through the intertwiner space alone.
pub fn module_iso_oracle(
    engine: &GroupEngine,
    source: &WeakInterval,
    target: &WeakInterval,
    config: &OracleConfig,
) -> Result<OracleOutcome, Error> {
    Ok(oracle_with_witness(engine, source, target, config)?.0)
}

/// Same decision, also returning an invertible intertwiner when one was
/// found.
pub fn oracle_with_witness(
    engine: &GroupEngine,
    source: &WeakInterval,
    target: &WeakInterval,
    config: &OracleConfig,
) -> Result<(OracleOutcome, Option<Matrix<Rat>>), Error> {
    check_same_engine(engine, source, target)?;
    if source.len() != target.len() {
        return Ok((
            OracleOutcome::new(config, false, 0, OracleMethod::SizeMismatch, None),
            None,
        ));
    }
    let space = intertwiner_space(engine, source, target)?;
    Ok(decide_from_basis(space.basis(), source.len(), config))
}

/// Cached-maps entry point used by bulk cross-checks: same decision
/// procedure without rebuilding interval structures.
pub fn oracle_from_maps(
    src_maps: &[Vec<Option<usize>>],
    tgt_maps: &[Vec<Option<usize>>],
    d1: usize,
    d2: usize,
    config: &OracleConfig,
) -> (OracleOutcome, Option<Matrix<Rat>>) {
    if d1 != d2 {
        return (
            OracleOutcome::new(config, false, 0, OracleMethod::SizeMismatch, None),
            None,
        );
    }
    let basis = solve_intertwiners::<Rat>(src_maps, tgt_maps, d1, d2);
    decide_from_basis(&basis, d1, config)
}

impl OracleOutcome {
    fn new(
        config: &OracleConfig,
        isomorphic: bool,
        dimension: usize,
        method: OracleMethod,
        failure_bound: Option<f64>,
    ) -> Self {
        OracleOutcome {
            isomorphic,
            dimension,
            method,
            seed: config.seed,
            repetitions: config.repetitions,
            window: config.window,
            failure_bound,
        }
    }
}

fn decide_from_basis(
    basis: &[Matrix<Rat>],
    d: usize,
    config: &OracleConfig,
) -> (OracleOutcome, Option<Matrix<Rat>>) {
    let k = basis.len();
    if k == 0 {
        return (
            OracleOutcome::new(config, false, 0, OracleMethod::ZeroDimension, None),
            None,
        );
    }

    if config.deterministic && grid_fits(d, k, config.grid_budget_bits) {
        let mut point = vec![1u64; k];
        loop {
            if let Some(f) = invertible_at(basis, &point) {
                return (
                    OracleOutcome::new(config, true, k, OracleMethod::DeterministicGrid, None),
                    Some(f),
                );
            }
            // Mixed-radix increment over {1..=d+1}^k.
            let mut carry = true;
            for t in point.iter_mut() {
                if *t < d as u64 + 1 {
                    *t += 1;
                    carry = false;
                    break;
                }
                *t = 1;
            }
            if carry {
                return (
                    OracleOutcome::new(config, false, k, OracleMethod::DeterministicGrid, None),
                    None,
                );
            }
        }
    }

    let mut rng = SplitMix64::new(config.seed);
    for _ in 0..config.repetitions {
        let point: Vec<u64> = (0..k).map(|_| rng.next_in_window(config.window)).collect();
        if let Some(f) = invertible_at(basis, &point) {
            return (
                OracleOutcome::new(config, true, k, OracleMethod::RandomizedDeterminant, None),
                Some(f),
            );
        }
    }
    let bound = (d as f64 / config.window as f64).powi(config.repetitions as i32);
    (
        OracleOutcome::new(
            config,
            false,
            k,
            OracleMethod::RandomizedDeterminant,
            Some(bound),
        ),
        None,
    )
}

fn grid_fits(d: usize, k: usize, budget_bits: u32) -> bool {
    let bits = k as f64 * ((d + 1) as f64).log2();
    bits <= budget_bits as f64
}

fn invertible_at(basis: &[Matrix<Rat>], point: &[u64]) -> Option<Matrix<Rat>> {
    let mut f: Option<Matrix<Rat>> = None;
    for (b, &t) in basis.iter().zip(point) {
        let scaled = b.scale(&Rat::from_integer(t.into()));
        f = Some(match f {
            Some(acc) => acc.add(&scaled),
            None => scaled,
        });
    }
    let f = f.expect("nonempty basis");
    if f.is_square() && !f.determinant().is_zero() {
        Some(f)
    } else {
        None
    }
}

/// Elements of the target interval with nonzero coefficient in `F(x)`.
pub fn support(
    engine: &GroupEngine,
    f: &Matrix<Rat>,
    source: &WeakInterval,
    target: &WeakInterval,
    x: &Element,
) -> Result<Vec<Element>, Error> {
    assert_eq!(f.rows(), target.len(), "matrix/target dimension mismatch");
    assert_eq!(f.cols(), source.len(), "matrix/source dimension mismatch");
    let j = source
        .position(x)
        .ok_or_else(|| Error::NotInInterval(engine.render_element(x)))?;
    Ok(target
        .elements()
        .iter()
        .enumerate()
        .filter(|(i, _)| !f[(*i, j)].is_zero())
        .map(|(_, y)| y.clone())
        .collect())
}

/// Renders a rational as an explicit `p/q` string.
pub fn rational_string(q: &Rat) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Dense JSON form of an exact matrix: rows of `p/q` strings.
pub fn matrix_to_json(m: &Matrix<Rat>) -> serde_json::Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| rational_string(&m[(i, j)])).collect())
        .collect();
    serde_json::json!(rows)
}

//! Weyl groups from a crystallographic Cartan matrix.
//!
//! Elements act on the finite set of positive roots, written with integer
//! coordinates in the simple-root basis. An element is stored as a signed
//! permutation table over the positive roots: entry `k` holds `±(j+1)` when
//! the element sends the `k`-th positive root to `±` the `j`-th one. The
//! Coxeter length is the number of positive roots sent negative.

use std::collections::HashMap;

use crate::error::Error;

const MAX_RANK: usize = 16;
const ROOT_CAP: usize = 100_000;

#[derive(Debug)]
pub struct RootSystem {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Positive roots; the first `rank` entries are the simple roots.
    roots: Vec<Vec<i64>>,
    /// Signed root-permutation table of each simple reflection.
    gens: Vec<Vec<i32>>,
    order: u128,
}

/// Fraction-free determinant of a small integer matrix.
fn det_bareiss(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&v| v as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn validate(cartan: &[Vec<i64>]) -> Result<(), Error> {
    let rank = cartan.len();
    if rank == 0 {
        return Err(Error::InvalidSpec("Cartan matrix has rank 0".into()));
    }
    if rank > MAX_RANK {
        return Err(Error::InvalidSpec(format!(
            "Cartan matrix rank {rank} exceeds the supported maximum {MAX_RANK}"
        )));
    }
    for (i, row) in cartan.iter().enumerate() {
        if row.len() != rank {
            return Err(Error::InvalidSpec("Cartan matrix is not square".into()));
        }
        if row[i] != 2 {
            return Err(Error::InvalidSpec(format!(
                "Cartan diagonal entry a[{i}][{i}] = {} (must be 2)",
                row[i]
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if i != j {
                if v > 0 {
                    return Err(Error::InvalidSpec(format!(
                        "off-diagonal Cartan entry a[{i}][{j}] = {v} (must be <= 0)"
                    )));
                }
                if (v == 0) != (cartan[j][i] == 0) {
                    return Err(Error::InvalidSpec(format!(
                        "Cartan entries a[{i}][{j}] and a[{j}][{i}] must vanish together"
                    )));
                }
            }
        }
    }
    // Finite type iff every principal minor is positive; exact integer test.
    for mask in 1u32..(1 << rank) {
        let idx: Vec<usize> = (0..rank).filter(|&i| mask & (1 << i) != 0).collect();
        let sub: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| cartan[i][j]).collect())
            .collect();
        if det_bareiss(&sub) <= 0 {
            return Err(Error::InfiniteGroup(format!(
                "principal minor on generators {idx:?} is not positive"
            )));
        }
    }
    Ok(())
}

impl RootSystem {
    pub fn build(cartan: Vec<Vec<i64>>) -> Result<Self, Error> {
        validate(&cartan)?;
        let rank = cartan.len();

        // Close the simple roots under simple reflections, keeping positives.
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            index.insert(e.clone(), i);
            roots.push(e);
        }
        let mut head = 0;
        while head < roots.len() {
            let root = roots[head].clone();
            head += 1;
            for i in 0..rank {
                let img = reflect(&cartan, i, &root);
                if img.iter().all(|&c| c >= 0) && !index.contains_key(&img) {
                    if roots.len() >= ROOT_CAP {
                        return Err(Error::InfiniteGroup(
                            "positive-root closure exceeded the safety cap".into(),
                        ));
                    }
                    index.insert(img.clone(), roots.len());
                    roots.push(img);
                }
            }
        }

        let gens = (0..rank)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| signed_index(&index, &reflect(&cartan, i, r)))
                    .collect()
            })
            .collect();

        let order = order_from_heights(&roots);
        Ok(RootSystem {
            rank,
            cartan,
            roots,
            gens,
            order,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn identity(&self) -> Vec<i32> {
        (1..=self.roots.len() as i32).collect()
    }

    pub fn generator(&self, i: usize) -> Vec<i32> {
        self.gens[i].clone()
    }

    /// `a * b` as signed permutation tables: apply `b`, then `a`.
    pub fn compose(&self, a: &[i32], b: &[i32]) -> Vec<i32> {
        b.iter()
            .map(|&t| {
                let v = a[t.unsigned_abs() as usize - 1];
                if t < 0 {
                    -v
                } else {
                    v
                }
            })
            .collect()
    }

    pub fn inverse(&self, w: &[i32]) -> Vec<i32> {
        let mut inv = vec![0i32; w.len()];
        for (k, &t) in w.iter().enumerate() {
            let j = t.unsigned_abs() as usize - 1;
            inv[j] = if t < 0 { -(k as i32 + 1) } else { k as i32 + 1 };
        }
        inv
    }

    pub fn length(&self, w: &[i32]) -> usize {
        w.iter().filter(|&&t| t < 0).count()
    }

    pub fn left_mul_gen(&self, s: usize, w: &[i32]) -> Vec<i32> {
        self.compose(&self.gens[s], w)
    }

    /// `s` is a left descent iff `w^{-1}` sends the simple root of `s`
    /// negative.
    pub fn left_descent_bits(&self, w: &[i32]) -> u32 {
        let inv = self.inverse(w);
        let mut bits = 0u32;
        for (s, &image) in inv.iter().take(self.rank).enumerate() {
            if image < 0 {
                bits |= 1 << s;
            }
        }
        bits
    }

    pub fn longest(&self) -> Vec<i32> {
        let mut w = self.identity();
        loop {
            let bits = self.left_descent_bits(&w);
            match (0..self.rank).find(|&s| bits & (1 << s) == 0) {
                Some(s) => w = self.left_mul_gen(s, &w),
                None => return w,
            }
        }
    }

    /// Coxeter matrix entry m(s,t) read off the Cartan product.
    pub fn coxeter_m(&self, s: usize, t: usize) -> u32 {
        if s == t {
            return 1;
        }
        match self.cartan[s][t] * self.cartan[t][s] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => unreachable!("finite Cartan data cannot have product {p}"),
        }
    }
}

fn reflect(cartan: &[Vec<i64>], i: usize, root: &[i64]) -> Vec<i64> {
    let pairing: i64 = cartan[i]
        .iter()
        .zip(root.iter())
        .map(|(&a, &c)| a * c)
        .sum();
    let mut out = root.to_vec();
    out[i] -= pairing;
    out
}

fn signed_index(index: &HashMap<Vec<i64>, usize>, root: &[i64]) -> i32 {
    if root.iter().all(|&c| c >= 0) {
        index[root] as i32 + 1
    } else {
        let neg: Vec<i64> = root.iter().map(|&c| -c).collect();
        debug_assert!(neg.iter().all(|&c| c >= 0), "root image has mixed signs");
        -(index[&neg] as i32 + 1)
    }
}

/// Group order from the root-height distribution: the partition counting
/// positive roots by height is conjugate to the partition of exponents, and
/// the order is the product of (exponent + 1) over all exponents.
fn order_from_heights(roots: &[Vec<i64>]) -> u128 {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for r in roots {
        let h: i64 = r.iter().sum();
        *counts.entry(h as usize).or_insert(0) += 1;
    }
    let max_count = counts.values().copied().max().unwrap_or(0);
    let mut order: u128 = 1;
    for i in 1..=max_count {
        let exponent = counts.values().filter(|&&c| c >= i).count() as u128;
        order *= exponent + 1;
    }
    order
}

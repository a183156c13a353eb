//! Signed permutations: the type B engine payload.
//!
//! An element `w` of the hyperoctahedral group on `[n]` satisfies
//! `w(-i) = -w(i)` and is stored as `[w(1), ..., w(n)]` with signed entries.
//! Generator 0 is the sign change on the value 1; generator `i >= 1` swaps
//! the values `i` and `i+1` (and their negatives).

use crate::error::Error;

pub fn identity(n: usize) -> Vec<i32> {
    (1..=n as i32).collect()
}

pub fn longest(n: usize) -> Vec<i32> {
    (1..=n as i32).map(|v| -v).collect()
}

fn apply(w: &[i32], v: i32) -> i32 {
    if v > 0 {
        w[v as usize - 1]
    } else {
        -w[(-v) as usize - 1]
    }
}

/// `a * b`, i.e. `i ↦ a(b(i))`.
pub fn compose(a: &[i32], b: &[i32]) -> Vec<i32> {
    b.iter().map(|&j| apply(a, j)).collect()
}

pub fn inverse(w: &[i32]) -> Vec<i32> {
    let mut inv = vec![0i32; w.len()];
    for (i, &j) in w.iter().enumerate() {
        if j > 0 {
            inv[j as usize - 1] = i as i32 + 1;
        } else {
            inv[(-j) as usize - 1] = -(i as i32 + 1);
        }
    }
    inv
}

/// Type B length: inversions + negative entries + negative-sum pairs.
pub fn length(w: &[i32]) -> usize {
    let n = w.len();
    let mut count = 0;
    for i in 0..n {
        if w[i] < 0 {
            count += 1;
        }
        for j in i + 1..n {
            if w[i] > w[j] {
                count += 1;
            }
            if w[i] + w[j] < 0 {
                count += 1;
            }
        }
    }
    count
}

/// Left multiplication by generator `s` acting on values.
pub fn left_mul_gen(s: usize, w: &[i32]) -> Vec<i32> {
    if s == 0 {
        w.iter()
            .map(|&v| if v.abs() == 1 { -v } else { v })
            .collect()
    } else {
        let lo = s as i32;
        let hi = s as i32 + 1;
        w.iter()
            .map(|&v| {
                if v.abs() == lo {
                    v.signum() * hi
                } else if v.abs() == hi {
                    v.signum() * lo
                } else {
                    v
                }
            })
            .collect()
    }
}

/// Left descents of `w` are the right descents of `w^{-1}`: generator 0 is a
/// right descent iff `w(1) < 0`, and `i >= 1` iff `w(i) > w(i+1)`.
pub fn left_descent_bits(w: &[i32]) -> u32 {
    let inv = inverse(w);
    let mut bits = 0u32;
    if inv[0] < 0 {
        bits |= 1;
    }
    for i in 1..w.len() {
        if inv[i - 1] > inv[i] {
            bits |= 1 << i;
        }
    }
    bits
}

pub fn render(w: &[i32]) -> String {
    w.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse(text: &str, n: usize) -> Result<Vec<i32>, Error> {
    let values: Vec<i32> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i32>()
                .map_err(|_| Error::ParseError(format!("bad entry {t:?} in signed permutation")))
        })
        .collect::<Result<_, _>>()?;
    if values.len() != n {
        return Err(Error::ParseError(format!(
            "expected {n} signed entries, got {}",
            values.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in &values {
        let a = v.unsigned_abs() as usize;
        if a == 0 || a > n || seen[a - 1] {
            return Err(Error::ParseError(format!(
                "{text:?} is not a signed permutation of 1..={n}"
            )));
        }
        seen[a - 1] = true;
    }
    Ok(values)
}

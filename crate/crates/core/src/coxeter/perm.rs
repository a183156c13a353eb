//! One-line permutations: the type A engine payload.
//!
//! A permutation `w` of `[n]` is stored as the vector `[w(1), ..., w(n)]`
//! with values `1..=n`. Products compose as functions with the right factor
//! applied first, and left multiplication by the generator `s_i` swaps the
//! values `i` and `i+1` in one-line notation.

use crate::error::Error;

pub fn identity(n: usize) -> Vec<u8> {
    (1..=n as u8).collect()
}

pub fn longest(n: usize) -> Vec<u8> {
    (1..=n as u8).rev().collect()
}

/// `a * b`, i.e. `i ↦ a(b(i))`.
pub fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    b.iter().map(|&j| a[j as usize - 1]).collect()
}

pub fn inverse(w: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; w.len()];
    for (i, &j) in w.iter().enumerate() {
        inv[j as usize - 1] = i as u8 + 1;
    }
    inv
}

/// Number of inversions, which is the Coxeter length.
pub fn length(w: &[u8]) -> usize {
    let n = w.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// Left multiplication by `s` (0-based index): swap the values `s+1`, `s+2`.
pub fn left_mul_gen(s: usize, w: &[u8]) -> Vec<u8> {
    let lo = s as u8 + 1;
    let hi = s as u8 + 2;
    w.iter()
        .map(|&v| {
            if v == lo {
                hi
            } else if v == hi {
                lo
            } else {
                v
            }
        })
        .collect()
}

/// Bitset of left descents: `s` is a descent iff the value `s+1` appears to
/// the right of `s+2` in one-line notation.
pub fn left_descent_bits(w: &[u8]) -> u32 {
    let inv = inverse(w);
    let mut bits = 0u32;
    for s in 0..w.len() - 1 {
        if inv[s] > inv[s + 1] {
            bits |= 1 << s;
        }
    }
    bits
}

pub fn render(w: &[u8]) -> String {
    if w.len() <= 9 {
        w.iter().map(|v| v.to_string()).collect()
    } else {
        w.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn parse(text: &str, n: usize) -> Result<Vec<u8>, Error> {
    let text = text.trim();
    let values: Vec<u8> = if text.contains(|c: char| c.is_whitespace() || c == ',') {
        text.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u8>()
                    .map_err(|_| Error::ParseError(format!("bad entry {t:?} in permutation")))
            })
            .collect::<Result<_, _>>()?
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::ParseError(format!("bad digit {c:?} in permutation")))
            })
            .collect::<Result<_, _>>()?
    };
    if values.len() != n {
        return Err(Error::ParseError(format!(
            "expected a permutation of 1..={n}, got {} entries",
            values.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in &values {
        if v == 0 || v as usize > n || seen[v as usize - 1] {
            return Err(Error::ParseError(format!(
                "{text:?} is not a permutation of 1..={n}"
            )));
        }
        seen[v as usize - 1] = true;
    }
    Ok(values)
}

//! Dihedral groups I2(m): ShortLex normal-form words over two generators.
//!
//! Every element has a unique reduced word except the longest element, whose
//! two alternating words of length `m` coincide; its normal form is the one
//! starting with generator 0. A normal form is determined by its length and
//! first letter, which makes the rewriting rules below total.

fn alternating(first: u8, len: usize) -> Vec<u8> {
    (0..len).map(|i| (first as usize + i) as u8 % 2).collect()
}

pub fn identity() -> Vec<u8> {
    Vec::new()
}

pub fn longest(m: u32) -> Vec<u8> {
    alternating(0, m as usize)
}

fn normalize(first: u8, len: usize, m: u32) -> Vec<u8> {
    if len == 0 || len == m as usize {
        alternating(0, len)
    } else {
        alternating(first, len)
    }
}

/// Left multiplication by generator `g in {0,1}`.
pub fn left_mul_gen(g: u8, w: &[u8], m: u32) -> Vec<u8> {
    let len = w.len();
    // The longest element also has an expansion starting with the other
    // generator, so a leading `g` can always be cancelled there.
    let sheds = len > 0 && (w[0] == g || len == m as usize);
    if sheds {
        normalize(1 - g, len - 1, m)
    } else {
        normalize(g, len + 1, m)
    }
}

pub fn compose(a: &[u8], b: &[u8], m: u32) -> Vec<u8> {
    let mut acc = b.to_vec();
    for &g in a.iter().rev() {
        acc = left_mul_gen(g, &acc, m);
    }
    acc
}

pub fn inverse(w: &[u8], m: u32) -> Vec<u8> {
    match w.last() {
        None => Vec::new(),
        Some(&last) => normalize(last, w.len(), m),
    }
}

pub fn length(w: &[u8]) -> usize {
    w.len()
}

pub fn left_descent_bits(w: &[u8], m: u32) -> u32 {
    let len = w.len();
    if len == 0 {
        0
    } else if len == m as usize {
        0b11
    } else {
        1 << w[0]
    }
}

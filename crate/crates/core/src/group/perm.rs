//! Permutations in one-line notation, `p[i]` is the image of `i`.

use alloc::vec::Vec;

pub(crate) fn identity(n: usize) -> Vec<u8> {
    (0..n as u8).collect()
}

/// `(p * q)(i) = p(q(i))`: `q` acts first.
pub(crate) fn compose(p: &[u8], q: &[u8]) -> Vec<u8> {
    q.iter().map(|&i| p[i as usize]).collect()
}

pub(crate) fn inverse(p: &[u8]) -> Vec<u8> {
    let mut out = alloc::vec![0u8; p.len()];
    for (i, &pi) in p.iter().enumerate() {
        out[pi as usize] = i as u8;
    }
    out
}

/// The adjacent transposition `s_{i+1} = (i, i+1)` (0-based `i`).
pub(crate) fn adjacent(n: usize, i: usize) -> Vec<u8> {
    let mut p = identity(n);
    p.swap(i, i + 1);
    p
}

/// Reduced word in adjacent transpositions, as 0-based generator indices,
/// such that multiplying the generators left to right yields `p`.
/// Always strips the leftmost right-descent, so the word is canonical.
pub(crate) fn reduced_word(p: &[u8]) -> Vec<usize> {
    let mut cur = p.to_vec();
    let mut rev = Vec::new();
    while let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) {
        // cur = (cur * s_i) * s_i and cur * s_i has one inversion fewer
        cur.swap(i, i + 1);
        rev.push(i);
    }
    rev.reverse();
    rev
}

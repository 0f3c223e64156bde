#![allow(dead_code)]

use std::collections::HashSet;

use kfactor::{circulant_regular, DegreeSequence, SimpleGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Degree sequences of every labeled simple graph on `n` vertices, sorted
/// nonincreasing. Brute force over all `2^(n(n-1)/2)` edge subsets.
pub fn realizable_sequences(n: usize) -> HashSet<Vec<usize>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = HashSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut deg = vec![0usize; n];
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(deg);
    }
    out
}

/// All nonincreasing sequences of length `n` with entries in `0..=max`.
pub fn nonincreasing_sequences(n: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in 0..=cap {
            cur.push(d);
            rec(n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max, &mut Vec::new(), &mut out);
    out
}

/// A k-factorable sequence built from a k-regular circulant plus random
/// extra edges, so factorability holds by construction.
pub fn random_factorable(seed: u64, max_n: usize, max_k: usize) -> (DegreeSequence, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(1..=max_k);
    let n = loop {
        let n = rng.random_range(k + 1..=max_n);
        if n * k % 2 == 0 {
            break n;
        }
    };
    let mut g: SimpleGraph = circulant_regular(n, k).unwrap();
    let density: f64 = rng.random_range(0.0..0.6);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    (DegreeSequence::new(g.degree_sequence()).unwrap(), k)
}

/// Random member of `K(a, b)` with even sum and length in `[min_len, min_len + spread]`.
/// Parity is fixed by nudging one entry, or by appending `b` when `a == b`.
pub fn random_kab(rng: &mut ChaCha8Rng, a: usize, b: usize, min_len: usize, spread: usize) -> Vec<usize> {
    let n = rng.random_range(min_len..=min_len + spread);
    let mut d: Vec<usize> = (0..n).map(|_| rng.random_range(b..=a)).collect();
    if d.iter().sum::<usize>() % 2 == 1 {
        if let Some(e) = d.iter_mut().find(|e| **e < a) {
            *e += 1;
        } else if let Some(e) = d.iter_mut().find(|e| **e > b) {
            *e -= 1;
        } else {
            d.push(b);
        }
    }
    d.sort_unstable_by(|x, y| y.cmp(x));
    d
}

//! Constructing simple graphs with prescribed degrees.

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::generate::{packing_demo_sequence, FamilyParams};
use crate::graph::SimpleGraph;
use crate::seq::{is_graphic, DegreeSequence};

/// Realizes a graphic sequence; vertex `i` receives degree `d_i`.
pub fn realize(seq: &DegreeSequence) -> Result<SimpleGraph> {
    realize_degrees(seq.degrees())
}

/// Havel–Hakimi on a labeled degree list (any order): repeatedly take the
/// vertex with the largest residual degree and join it to the next-largest
/// ones, breaking ties by lowest index. Deterministic.
pub fn realize_degrees(degrees: &[usize]) -> Result<SimpleGraph> {
    let sorted = DegreeSequence::from_unsorted(degrees.to_vec())?;
    if !is_graphic(&sorted) {
        return Err(Error::NotGraphic);
    }
    let n = degrees.len();
    let mut g = SimpleGraph::empty(n);
    let mut residual = degrees.to_vec();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (Reverse(residual[v]), v));
    while let Some(&v) = order.first() {
        let r = residual[v];
        if r == 0 {
            break;
        }
        order.remove(0);
        residual[v] = 0;
        if r > order.len() {
            return Err(Error::NotGraphic);
        }
        for &w in &order[..r] {
            if residual[w] == 0 {
                return Err(Error::NotGraphic);
            }
            residual[w] -= 1;
            g.add_edge(v, w);
        }
        // Decrementing a sorted prefix leaves two sorted runs, so this merge is linear.
        order.sort_by_key(|&w| (Reverse(residual[w]), w));
    }
    Ok(g)
}

/// `r`-regular circulant on `Z_n`: offsets `1..=r/2`, plus `n/2` when `r` is odd.
pub fn circulant_regular(n: usize, r: usize) -> Result<SimpleGraph> {
    let mut g = SimpleGraph::empty(n);
    add_circulant(&mut g, &(0..n).collect::<Vec<_>>(), r)?;
    Ok(g)
}

/// Places a circulant `r`-regular graph on the listed vertices of `g`.
fn add_circulant(g: &mut SimpleGraph, vertices: &[usize], r: usize) -> Result<()> {
    let n = vertices.len();
    if (n == 0 && r > 0) || (n > 0 && r > n - 1) || (n * r) % 2 == 1 {
        return Err(Error::InfeasibleRegular { n, r });
    }
    for i in 0..n {
        for offset in 1..=r / 2 {
            g.add_edge(vertices[i], vertices[(i + offset) % n]);
        }
        if r % 2 == 1 {
            g.add_edge(vertices[i], vertices[(i + n / 2) % n]);
        }
    }
    Ok(())
}

/// Joins the first `k` vertices to each other and to every vertex in `0..reach`.
fn saturate_prefix(g: &mut SimpleGraph, k: usize, reach: usize) {
    for u in 0..k {
        for v in 0..reach {
            g.add_edge(u, v);
        }
    }
}

/// Realization of the family sequence `(n-1)^k x^(n-2k) k^k`: the first `k`
/// vertices are universal, which also saturates the last `k`, and the middle
/// block carries an `(x - k)`-regular circulant.
pub fn realize_family(fp: &FamilyParams) -> Result<SimpleGraph> {
    let FamilyParams { n, k, x } = *fp;
    let mut g = SimpleGraph::empty(n);
    saturate_prefix(&mut g, k, n);
    let middle: Vec<usize> = (k..n - k).collect();
    add_circulant(&mut g, &middle, x - k)?;
    debug_assert_eq!(g.degrees(), fp.sequence().degrees());
    Ok(g)
}

/// Realization of `d - k` for the family sequence on all `n` vertices: the
/// first `k` vertices are joined to each other and the middle block, the
/// middle block carries an `(x - 2k)`-regular circulant, and the last `k`
/// vertices stay isolated.
pub fn realize_family_minus_k(fp: &FamilyParams) -> Result<SimpleGraph> {
    let FamilyParams { n, k, x } = *fp;
    let mut g = SimpleGraph::empty(n);
    saturate_prefix(&mut g, k, n - k);
    let middle: Vec<usize> = (k..n - k).collect();
    add_circulant(&mut g, &middle, x - 2 * k)?;
    Ok(g)
}

/// Packs a perfect matching `M` on the `num_threes` degree-3 vertices with a
/// Hamiltonian cycle `F` on all vertices so that `F ∪ M` realizes
/// `3^num_threes 2^num_twos`. Returns `(F, M)`.
///
/// `M` pairs `(0,1), (2,3), ...`. `F` visits the even prefix vertices, then
/// the first suffix vertex (if any), then the odd prefix vertices, then the
/// rest of the suffix, which keeps every matched pair non-consecutive
/// whenever the sequence is graphic.
pub fn packing_demo_realize(
    num_threes: usize,
    num_twos: usize,
) -> Result<(SimpleGraph, SimpleGraph)> {
    let seq = packing_demo_sequence(num_threes, num_twos)?;
    let n = seq.len();
    let mut matching = SimpleGraph::empty(n);
    for i in (0..num_threes).step_by(2) {
        matching.add_edge(i, i + 1);
    }
    let mut tour: Vec<usize> = (0..num_threes).step_by(2).collect();
    let mut suffix = num_threes..n;
    tour.extend(suffix.next());
    tour.extend((1..num_threes).step_by(2));
    tour.extend(suffix);

    let mut cycle = SimpleGraph::empty(n);
    for i in 0..n {
        cycle.add_edge(tour[i], tour[(i + 1) % n]);
    }
    if !cycle.is_k_regular(2) || !cycle.is_edge_disjoint(&matching) {
        return Err(Error::PackingFailed);
    }
    Ok((cycle, matching))
}

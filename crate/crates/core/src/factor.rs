//! k-factor construction by superposition and edge switching.
//!
//! `A` realizes `d - k` and `B` realizes `n - 1 - d` on the same labeled
//! vertices. Every vertex then has total degree `n - 1 - k` in `A ∪ B`. While
//! some pair `{u, v}` is an edge of both, a 2-switch in `A` or `B` removes
//! it without creating a net new shared edge. Once `A` and `B` are
//! edge-disjoint, `complement(B)` realizes `d`, contains `A`, and
//! `complement(B) \ A` is k-regular.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::realize::realize_degrees;
use crate::seq::{is_graphic, is_k_factorable, DegreeSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Target {
    A,
    B,
}

/// A 2-switch in one graph: `{u,v}, {x,y}` become `{v,x}, {u,y}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwitchStep {
    pub target: Target,
    pub u: usize,
    pub v: usize,
    pub x: usize,
    pub y: usize,
}

impl SwitchStep {
    pub fn removed(&self) -> [(usize, usize); 2] {
        [(self.u, self.v), (self.x, self.y)]
    }

    pub fn added(&self) -> [(usize, usize); 2] {
        [(self.v, self.x), (self.u, self.y)]
    }

    /// The switch that undoes this one.
    pub fn reversed(&self) -> SwitchStep {
        SwitchStep {
            target: self.target,
            u: self.v,
            v: self.x,
            x: self.y,
            y: self.u,
        }
    }
}

impl Serialize for SwitchStep {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            added: [[usize; 2]; 2],
            removed: [[usize; 2]; 2],
            target: Target,
        }
        let pair = |(a, b): (usize, usize)| [a, b];
        Wire {
            added: self.added().map(pair),
            removed: self.removed().map(pair),
            target: self.target,
        }
        .serialize(s)
    }
}

/// Applies a switch in place. Degrees of `g` are unchanged.
pub fn apply_switch(g: &mut SimpleGraph, step: &SwitchStep) -> Result<()> {
    let SwitchStep { u, v, x, y, .. } = *step;
    let n = g.n();
    if [u, v, x, y].iter().any(|&w| w >= n) {
        return Err(Error::InvalidSwitch(format!("vertex out of range in {step:?}")));
    }
    let distinct = u != v && u != x && u != y && v != x && v != y && x != y;
    if !distinct {
        return Err(Error::InvalidSwitch(format!("vertices not distinct in {step:?}")));
    }
    if !step.removed().iter().all(|&(a, b)| g.has_edge(a, b)) {
        return Err(Error::InvalidSwitch(format!("removed edge absent in {step:?}")));
    }
    if step.added().iter().any(|&(a, b)| g.has_edge(a, b)) {
        return Err(Error::InvalidSwitch(format!("added edge present in {step:?}")));
    }
    for (a, b) in step.removed() {
        g.remove_edge(a, b);
    }
    for (a, b) in step.added() {
        g.add_edge(a, b);
    }
    Ok(())
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Edges present in both graphs, ascending, via a row-wise AND of the
/// adjacency matrices.
pub fn shared_edges(a: &SimpleGraph, b: &SimpleGraph) -> Result<Vec<(usize, usize)>> {
    if a.n() != b.n() {
        return Err(Error::VertexCountMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let mut out = Vec::new();
    for u in 0..a.n() {
        out.extend(
            a.row(u)
                .intersection(b.row(u))
                .filter(|&v| v > u)
                .map(|v| (u, v)),
        );
    }
    Ok(out)
}

/// Result of a switch search along with the number of vertices probed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwitchSearch {
    pub step: SwitchStep,
    pub probes: usize,
}

/// Finds a switch removing the shared edge `{u, v}`.
///
/// Picks the lowest `x` adjacent to `v` in neither graph, then the lowest `y`
/// such that, in `B` or else `A` (call it `H`, the other `O`):
/// `{x,y} ∈ H`, `{u,y} ∉ H`, and if `{u,y} ∈ O` then also `{x,y} ∈ O`.
/// The last condition makes sure the switch strictly reduces the number of
/// shared edges. Since every vertex has the same total degree in `A ∪ B`,
/// `x` has more edge multiplicity than `u` outside `{u, v, x}` and such a
/// `y` always exists.
pub fn find_switch(a: &SimpleGraph, b: &SimpleGraph, u: usize, v: usize) -> Result<SwitchSearch> {
    let n = a.n();
    if !(a.has_edge(u, v) && b.has_edge(u, v)) {
        return Err(Error::InvalidSwitch(format!(
            "{{{u}, {v}}} is not a shared edge"
        )));
    }
    let mut probes = 0;
    for x in 0..n {
        probes += 1;
        if x == u || x == v || a.has_edge(v, x) || b.has_edge(v, x) {
            continue;
        }
        for y in 0..n {
            probes += 1;
            if y == u || y == v || y == x {
                continue;
            }
            for (target, h, o) in [(Target::B, b, a), (Target::A, a, b)] {
                if h.has_edge(x, y) && !h.has_edge(u, y) && (!o.has_edge(u, y) || o.has_edge(x, y))
                {
                    return Ok(SwitchSearch {
                        step: SwitchStep { target, u, v, x, y },
                        probes,
                    });
                }
            }
        }
    }
    Err(Error::SwitchNotFound { u, v })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Counters {
    /// Shared edges before any switching (`m`).
    pub initial_shared_edges: usize,
    pub switch_count: usize,
    /// Vertices probed across all switch searches.
    pub candidate_scans: usize,
}

#[derive(Debug, Clone)]
pub struct FactorComputation {
    pub sequence: DegreeSequence,
    pub k: usize,
    /// Realization of `d - k` before switching.
    pub initial_a: SimpleGraph,
    /// Realization of `n - 1 - d` before switching.
    pub initial_b: SimpleGraph,
    pub graph_a: SimpleGraph,
    pub graph_b: SimpleGraph,
    pub trace: Vec<SwitchStep>,
    pub factor: SimpleGraph,
    pub counters: Counters,
}

impl FactorComputation {
    /// `complement(B)`, which equals `factor ∪ A` and realizes `d`.
    pub fn realization(&self) -> SimpleGraph {
        self.graph_b.complement()
    }
}

/// Computes a k-factor of some realization of `seq`.
pub fn compute_k_factor(seq: &DegreeSequence, k: usize) -> Result<FactorComputation> {
    if !is_graphic(seq) {
        return Err(Error::NotGraphic);
    }
    if !is_k_factorable(seq, k) {
        return Err(Error::NotFactorable { k });
    }
    let reduced = seq.subtract_k(k)?;
    let complement = seq.complement_degrees().ok_or(Error::NotGraphic)?;
    let mut a = realize_degrees(reduced.degrees())?;
    // Complement of any realization of d realizes n-1-d, so this cannot fail.
    let mut b = realize_degrees(&complement)?;
    let (initial_a, initial_b) = (a.clone(), b.clone());

    let mut shared: BTreeSet<(usize, usize)> = shared_edges(&a, &b)?.into_iter().collect();
    let mut counters = Counters {
        initial_shared_edges: shared.len(),
        ..Counters::default()
    };
    let mut trace = Vec::new();

    while let Some(&(lo, hi)) = shared.first() {
        let before = shared.len();
        let search = find_switch(&a, &b, hi, lo)?;
        let step = search.step;
        counters.candidate_scans += search.probes;
        let (h, o) = match step.target {
            Target::A => (&mut a, &b),
            Target::B => (&mut b, &a),
        };
        apply_switch(h, &step)?;
        for (p, q) in step.removed() {
            shared.remove(&ordered(p, q));
        }
        for (p, q) in step.added() {
            if o.has_edge(p, q) {
                shared.insert(ordered(p, q));
            }
        }
        if shared.len() >= before {
            return Err(Error::NoProgress {
                before,
                after: shared.len(),
            });
        }
        counters.switch_count += 1;
        trace.push(step);
    }

    let n = seq.len();
    let mut factor = SimpleGraph::empty(n);
    for u in 0..n {
        let mut row = a.row(u).clone();
        row.union_with(b.row(u));
        row.toggle_range(..);
        for v in row.ones().filter(|&v| v > u) {
            factor.add_edge(u, v);
        }
    }

    Ok(FactorComputation {
        sequence: seq.clone(),
        k,
        initial_a,
        initial_b,
        graph_a: a,
        graph_b: b,
        trace,
        factor,
        counters,
    })
}

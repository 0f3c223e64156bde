use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::FactorComputation;
use crate::graph::SimpleGraph;
use crate::seq::{rao_connected, DegreeSequence, RaoVerdict};

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub sequence: DegreeSequence,
    pub k: usize,
    pub rao: RaoVerdict,
    pub factor_components: Vec<Vec<usize>>,
    pub factor_connected: bool,
}

/// Summarizes a factor computation and cross-checks it against the
/// connectivity inequalities: if they fail, no realization has a connected
/// k-factor, so a connected computed factor means a bug somewhere.
pub fn report(fc: &FactorComputation) -> Result<FactorReport> {
    let rao = rao_connected(&fc.sequence);
    let factor_components = components(&fc.factor);
    let factor_connected = factor_components.len() == 1;
    if factor_connected && !rao.holds() {
        return Err(Error::InconsistentReport(format!(
            "factor of {} with k = {} is connected but the inequalities fail at s = {}; factor = {:?}",
            fc.sequence,
            fc.k,
            rao.witness().unwrap_or_default(),
            fc.factor
        )));
    }
    Ok(FactorReport {
        sequence: fc.sequence.clone(),
        k: fc.k,
        rao,
        factor_components,
        factor_connected,
    })
}

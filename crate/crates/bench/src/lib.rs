//! Fixtures shared by the criterion benches.

use kfactor::{DegreeSequence, FamilyParams, GenerationParams};

/// Family sequence with k = 2 and middle degree 8. The switching phase then
/// starts with roughly 2n shared edges.
pub fn family_fixture(n: usize) -> DegreeSequence {
    FamilyParams::new(n, 2, 8)
        .expect("n must be at least 11")
        .sequence()
}

/// Connected-bound sequence drawn from K(a, a-1) with k = 2.
pub fn kab_fixture(a: u64, seed: u64) -> DegreeSequence {
    kfactor::generate_connected(&GenerationParams::new(a, a - 1, 2, seed))
        .expect("valid parameters")
}

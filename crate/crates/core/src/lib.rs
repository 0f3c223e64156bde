//! Generation of k-factorable graphic degree sequences with (or provably
//! without) connected k-factors, simple-graph realizations, and k-factor
//! construction by superposition and edge switching.
//!
//! ```
//! use kfactor::{compute_k_factor, report, DegreeSequence};
//!
//! let d = DegreeSequence::new(vec![3, 3, 2, 2, 2, 2]).unwrap();
//! let fc = compute_k_factor(&d, 2).unwrap();
//! assert!(fc.factor.is_k_regular(2));
//! assert!(report(&fc).unwrap().rao.holds());
//! ```
//!
//! Vertices are labeled `0..n` throughout; vertex `i` carries degree `d_i`.

pub mod analyze;
pub mod api;
pub mod error;
pub mod factor;
pub mod generate;
pub mod graph;
pub mod realize;
pub mod seq;

pub use analyze::{components, report, FactorReport};
pub use error::{Error, ErrorKind, Result};
pub use factor::{
    apply_switch, compute_k_factor, find_switch, shared_edges, Counters, FactorComputation,
    SwitchStep, Target,
};
pub use generate::{
    family_sequence, generate_connected, generate_disconnected, generate_heuristic,
    packing_demo_sequence, FamilyClaim, FamilyParams, GenerationParams, RNG_ALGORITHM,
};
pub use graph::{to_dot, GraphJson, SimpleGraph};
pub use realize::{
    circulant_regular, packing_demo_realize, realize, realize_degrees, realize_family,
    realize_family_minus_k,
};
pub use seq::{
    in_kab, is_graphic, is_k_factorable, min_length, rao_connected, DegreeSequence, KabParams,
    LengthBound, RaoVerdict,
};

//! Isomorphism engines: canonical codes for forests, backtracking search for
//! small graphs, and daisy-cube isomorphisms built from τ-graph
//! isomorphisms.

mod backtrack;
mod daisy;
mod forest;

pub use backtrack::{all_isomorphisms, graphs_isomorphic, MAX_ISO_VERTICES};
pub use daisy::{
    daisy_iso_from_tau, daisy_isomorphic_via_tau, tau_correspondences, verify_lambda, ClassCorrespondence,
    LambdaCheck, ViaTau,
};
pub use forest::{forest_canonical, forests_isomorphic, ForestCode};

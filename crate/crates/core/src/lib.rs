//! Orientable `Z_N`-distance magic labelings: constructions, a certificate
//! verifier, nonexistence checks and an exhaustive search.

pub mod cli;
pub mod constructors;
pub mod gf2;
pub mod graph;
pub mod group;
pub mod io;
pub mod obstructions;
pub mod search;
pub mod table;
pub mod verify;
pub mod zero_sum;

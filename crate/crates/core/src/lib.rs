//! Exact classification of purely non-symplectic order-8 automorphisms on
//! elliptic K3 surfaces whose fourth power fixes an elliptic curve, together
//! with an analyzer for explicit Weierstrass families carrying such
//! automorphisms.

pub mod arith;
pub mod classifier;
pub mod error;
pub mod fiber;
pub mod lattice;
pub mod lefschetz;
pub mod weierstrass;

pub use error::{Error, Result};

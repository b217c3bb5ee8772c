//! Exact discrete differential geometry on finite abstract simplicial
//! complexes.
//!
//! The geodesic flow is a permutation of ordered facets ([`flow`]); bones
//! carry a sectional curvature computed from the petal numbers of the sheet
//! the flow sweeps out around them ([`sheets`]); 2-manifolds get an exact
//! second-order Gauss-Bonnet curvature ([`curvature`]); and simplex
//! energies pushed to vertices give Poincare-Hopf divisors
//! ([`poincare_hopf`]). All curvature values are exact rationals.

pub mod catalog;
pub mod cli;
pub mod complex;
pub mod curvature;
pub mod error;
pub mod flow;
pub mod graph;
pub mod io;
pub mod poincare_hopf;
pub mod rational;
pub mod sheets;
pub mod topology;

pub use complex::{whitney, FVector, Simplex, SimplicialComplex, Stratum, Vertex};
pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;

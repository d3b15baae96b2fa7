//! Symbolic engine for Hopf algebroids over ℚ(q): presentations by
//! generators and relations, structure maps, translation maps and covariant
//! first order differential calculi.

pub mod bialgebroid;
pub mod calculus;
pub mod es_backend;
pub mod smash_backend;
pub mod homogeneous;
pub mod hopfalg;
pub mod ncalg;
pub mod report;

//! Exact arithmetic in ℚ(q), noncommutative polynomials, rewriting, linear
//! algebra and the presentation language.

pub mod linalg;
pub mod parser;
pub mod poly;
pub mod presentation;
pub mod rewrite;
pub mod scalar;

pub use linalg::{kernel, solve, Solution, SparseVec, Span};
pub use parser::{parse_poly, parse_tensor, ParseError};
pub use poly::{Letter, NCPoly, Tensor, Word};
pub use presentation::{AlgebraDef, Library, PresentationError, Section};
pub use rewrite::{normalize_tensor, mul_tensors, OverlapReport, RewriteError, RewriteSystem, Rule};
pub use scalar::Scalar;
